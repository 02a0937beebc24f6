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

#ifndef SILAUDIT_AUDIO_HPP_
#define SILAUDIT_AUDIO_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace silaudit {
namespace audio {

// Mono sample buffer. Samples are doubles in [-1, 1]; frame energies near
// the silence floor are too small for float.
struct Waveform {
  std::vector<double> samples;
  int sample_rate = 0;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  double duration_seconds() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

// Decodes a RIFF/WAVE container holding 16-bit signed mono linear PCM.
// Integer samples are scaled by 1/32768. Throws AudioError for any other
// codec, channel count, bit depth, or a truncated/odd-sized chunk.
Waveform decode_wav(std::span<const std::uint8_t> bytes);

// 16-bit mono PCM encode; samples are rounded and clamped to
// [-32768, 32767], so decode(encode(w)) is within 1 LSB of w.
// Throws AudioError for an empty waveform or non-finite samples.
std::vector<std::uint8_t> encode_wav(const Waveform& w);

Waveform read_wav_file(const std::filesystem::path& path);
void write_wav_file(const std::filesystem::path& path, const Waveform& w);

}  // namespace audio
}  // namespace silaudit

#endif  // SILAUDIT_AUDIO_HPP_
