// Copyright 2026 The silaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "silaudit/audio.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <string>

#include "silaudit/error.hpp"

namespace silaudit {
namespace audio {

namespace {

constexpr double kScale = 32768.0;

std::uint16_t read_u16le(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t read_u32le(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

void append_u16le(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
}

void append_u32le(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xff));
}

bool tag_is(const std::uint8_t* p, const char* tag) {
  return std::memcmp(p, tag, 4) == 0;
}

}  // namespace

Waveform decode_wav(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12 || !tag_is(bytes.data(), "RIFF") ||
      !tag_is(bytes.data() + 8, "WAVE")) {
    throw AudioError("not a RIFF/WAVE file");
  }

  bool have_fmt = false;
  std::uint16_t format_code = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits_per_sample = 0;

  Waveform wave;
  bool have_data = false;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint8_t* header = bytes.data() + pos;
    const std::uint32_t chunk_size = read_u32le(header + 4);
    pos += 8;
    if (pos + chunk_size > bytes.size()) {
      throw AudioError("truncated chunk '" +
                       std::string(reinterpret_cast<const char*>(header), 4) +
                       "': need " + std::to_string(chunk_size) +
                       " bytes, have " + std::to_string(bytes.size() - pos));
    }
    const std::uint8_t* payload = bytes.data() + pos;

    if (tag_is(header, "fmt ")) {
      if (chunk_size < 16) throw AudioError("fmt chunk too small");
      format_code = read_u16le(payload);
      channels = read_u16le(payload + 2);
      sample_rate = read_u32le(payload + 4);
      bits_per_sample = read_u16le(payload + 14);
      have_fmt = true;
    } else if (tag_is(header, "data")) {
      if (!have_fmt) throw AudioError("data chunk before fmt chunk");
      if (format_code != 1) {
        throw AudioError("format_code=" + std::to_string(format_code) +
                         " unsupported (linear PCM required)");
      }
      if (channels != 1) {
        throw AudioError("channels=" + std::to_string(channels) +
                         " unsupported (mono required)");
      }
      if (bits_per_sample != 16) {
        throw AudioError("bits_per_sample=" + std::to_string(bits_per_sample) +
                         " unsupported (16-bit required)");
      }
      if (sample_rate == 0) throw AudioError("sample_rate=0 in header");
      if (chunk_size % 2 != 0) {
        throw AudioError("odd data chunk size for 16-bit samples");
      }
      const std::size_t count = chunk_size / 2;
      wave.samples.resize(count);
      for (std::size_t i = 0; i < count; ++i) {
        const std::int16_t raw = static_cast<std::int16_t>(
            read_u16le(payload + 2 * i));
        wave.samples[i] = static_cast<double>(raw) / kScale;
      }
      wave.sample_rate = static_cast<int>(sample_rate);
      have_data = true;
    }
    // Chunks are word-aligned; odd sizes carry one pad byte.
    pos += chunk_size + (chunk_size % 2);
  }

  if (!have_data) throw AudioError("missing data chunk");
  return wave;
}

std::vector<std::uint8_t> encode_wav(const Waveform& w) {
  if (w.empty()) throw AudioError("zero-length audio not writable");
  if (w.sample_rate <= 0) throw AudioError("invalid sample rate");

  const std::uint32_t data_size =
      static_cast<std::uint32_t>(w.samples.size() * 2);
  std::vector<std::uint8_t> out;
  out.reserve(44 + data_size);

  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  append_u32le(out, 36 + data_size);
  out.insert(out.end(), {'W', 'A', 'V', 'E'});

  out.insert(out.end(), {'f', 'm', 't', ' '});
  append_u32le(out, 16);
  append_u16le(out, 1);  // linear PCM
  append_u16le(out, 1);  // mono
  append_u32le(out, static_cast<std::uint32_t>(w.sample_rate));
  append_u32le(out, static_cast<std::uint32_t>(w.sample_rate) * 2);
  append_u16le(out, 2);   // block align
  append_u16le(out, 16);  // bits per sample

  out.insert(out.end(), {'d', 'a', 't', 'a'});
  append_u32le(out, data_size);
  for (double x : w.samples) {
    if (!std::isfinite(x)) throw AudioError("non-finite sample");
    const long v = std::clamp(std::lround(x * kScale), -32768L, 32767L);
    append_u16le(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(v)));
  }
  return out;
}

Waveform read_wav_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  try {
    return decode_wav(bytes);
  } catch (const AudioError& e) {
    throw AudioError(path.string() + ": " + e.what());
  }
}

void write_wav_file(const std::filesystem::path& path, const Waveform& w) {
  const std::vector<std::uint8_t> bytes = encode_wav(w);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("short write to " + path.string());
}

}  // namespace audio
}  // namespace silaudit
