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

#ifndef SILAUDIT_SILENCE_HPP_
#define SILAUDIT_SILENCE_HPP_

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "silaudit/audio.hpp"

namespace silaudit {
namespace silence {

// dB value reported for frames with zero energy; keeps comparisons total.
inline constexpr double kSilenceFloorDb = std::numeric_limits<double>::lowest();

struct TrimParams {
  double top_db = 40.0;
  std::size_t frame_length = 2048;
  std::size_t hop_length = 512;

  // Throws Error unless top_db > 0 and 0 < hop_length <= frame_length.
  void validate() const;
};

// Leading/trailing silence of one utterance, in seconds, plus the
// non-silent sample interval [nonsilent_start, nonsilent_end).
// leading + trailing + non-silent span always equals the total, exactly
// in samples. A fully silent file reports leading_s == total_s.
struct SilenceProfile {
  double leading_s = 0.0;
  double trailing_s = 0.0;
  double total_s = 0.0;
  std::size_t nonsilent_start = 0;
  std::size_t nonsilent_end = 0;
};

// Per-frame RMS in dB relative to the loudest frame (which reads 0 dB).
// Frames start at every multiple of hop_length below the sample count and
// are zero-padded past the end, so trailing content is always covered.
// Zero-energy frames read kSilenceFloorDb. Throws Error on empty input.
std::vector<double> frame_rms_db(const audio::Waveform& w,
                                 const TrimParams& p);

// Sample interval spanned by the active frames (value > -top_db):
// [hop * first_active, min(size, hop * last_active + frame_length)).
// Returns (0, 0) when no frame is active.
std::pair<std::size_t, std::size_t> trim_bounds(const audio::Waveform& w,
                                                const TrimParams& p);

SilenceProfile silence_profile(const audio::Waveform& w, const TrimParams& p);

// Waveform restricted to its trim_bounds interval; sample rate preserved.
// A fully silent input yields an empty waveform, which callers must treat
// as a distinct outcome (empty WAVs are not writable).
audio::Waveform trim(const audio::Waveform& w, const TrimParams& p);

// Leading-only variant: keeps everything from the first active frame on.
audio::Waveform trim_leading(const audio::Waveform& w, const TrimParams& p);

}  // namespace silence
}  // namespace silaudit

#endif  // SILAUDIT_SILENCE_HPP_
