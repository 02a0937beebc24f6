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

#include "silaudit/silence.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "silaudit/error.hpp"

namespace silaudit {
namespace silence {

namespace {

void require_nonempty(const audio::Waveform& w) {
  if (w.empty()) throw Error("empty waveform");
  if (w.sample_rate <= 0) throw Error("invalid sample rate");
}

// Frame index range [first, last] of frames above the threshold.
std::optional<std::pair<std::size_t, std::size_t>> active_span(
    const audio::Waveform& w, const TrimParams& p) {
  const std::vector<double> db = frame_rms_db(w, p);
  const double threshold = -p.top_db;

  std::size_t first = db.size();
  for (std::size_t i = 0; i < db.size(); ++i) {
    if (db[i] > threshold) {
      first = i;
      break;
    }
  }
  if (first == db.size()) return std::nullopt;

  std::size_t last = first;
  for (std::size_t i = db.size(); i-- > first;) {
    if (db[i] > threshold) {
      last = i;
      break;
    }
  }
  return std::make_pair(first, last);
}

}  // namespace

void TrimParams::validate() const {
  if (!(top_db > 0.0)) throw Error("top_db must be positive");
  if (hop_length == 0 || hop_length > frame_length) {
    throw Error("hop_length must be in (0, frame_length]");
  }
}

std::vector<double> frame_rms_db(const audio::Waveform& w,
                                 const TrimParams& p) {
  p.validate();
  require_nonempty(w);

  const std::size_t n = w.size();
  const std::size_t n_frames = (n + p.hop_length - 1) / p.hop_length;

  std::vector<double> rms(n_frames);
  for (std::size_t i = 0; i < n_frames; ++i) {
    const std::size_t begin = i * p.hop_length;
    const std::size_t end = std::min(begin + p.frame_length, n);
    double energy = 0.0;
    for (std::size_t s = begin; s < end; ++s) {
      energy += w.samples[s] * w.samples[s];
    }
    // Padding zeros contribute nothing; the mean is over the full frame.
    rms[i] = std::sqrt(energy / static_cast<double>(p.frame_length));
  }

  const double peak = *std::max_element(rms.begin(), rms.end());
  std::vector<double> db(n_frames);
  for (std::size_t i = 0; i < n_frames; ++i) {
    db[i] = (rms[i] > 0.0 && peak > 0.0)
                ? 20.0 * std::log10(rms[i] / peak)
                : kSilenceFloorDb;
  }
  return db;
}

std::pair<std::size_t, std::size_t> trim_bounds(const audio::Waveform& w,
                                                const TrimParams& p) {
  const auto span = active_span(w, p);
  if (!span) return {0, 0};
  const std::size_t start = span->first * p.hop_length;
  const std::size_t end =
      std::min(w.size(), span->second * p.hop_length + p.frame_length);
  return {start, end};
}

SilenceProfile silence_profile(const audio::Waveform& w, const TrimParams& p) {
  const auto span = active_span(w, p);
  SilenceProfile profile;
  if (span) {
    profile.nonsilent_start = span->first * p.hop_length;
    profile.nonsilent_end =
        std::min(w.size(), span->second * p.hop_length + p.frame_length);
  } else {
    // Fully silent: all duration is reported as leading silence.
    profile.nonsilent_start = w.size();
    profile.nonsilent_end = w.size();
  }
  const double rate = static_cast<double>(w.sample_rate);
  profile.leading_s = static_cast<double>(profile.nonsilent_start) / rate;
  profile.trailing_s =
      static_cast<double>(w.size() - profile.nonsilent_end) / rate;
  profile.total_s = static_cast<double>(w.size()) / rate;
  return profile;
}

audio::Waveform trim(const audio::Waveform& w, const TrimParams& p) {
  const auto [start, end] = trim_bounds(w, p);
  audio::Waveform out;
  out.sample_rate = w.sample_rate;
  out.samples.assign(w.samples.begin() + static_cast<std::ptrdiff_t>(start),
                     w.samples.begin() + static_cast<std::ptrdiff_t>(end));
  return out;
}

audio::Waveform trim_leading(const audio::Waveform& w, const TrimParams& p) {
  const auto span = active_span(w, p);
  audio::Waveform out;
  out.sample_rate = w.sample_rate;
  if (!span) return out;
  const std::size_t start = span->first * p.hop_length;
  out.samples.assign(w.samples.begin() + static_cast<std::ptrdiff_t>(start),
                     w.samples.end());
  return out;
}

}  // namespace silence
}  // namespace silaudit
