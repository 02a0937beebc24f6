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

#ifndef SILAUDIT_AUGMENT_HPP_
#define SILAUDIT_AUGMENT_HPP_

#include "silaudit/audio.hpp"
#include "silaudit/rng.hpp"

namespace silaudit {
namespace augment {

// Time-wise subselection. t_seconds <= 0 disables it (the conventional
// flag value is -1) and the audio passes through unchanged.
struct SubselectParams {
  double t_seconds = -1.0;

  bool enabled() const { return t_seconds > 0.0; }
};

// Returns a random contiguous slice of round(t_seconds * rate) samples.
// Inputs shorter than the target are tile-repeated, then cut. The caller
// owns the random source; passing a fresh per-epoch stream yields a new
// slice each epoch.
audio::Waveform subselect(const audio::Waveform& w, const SubselectParams& p,
                          Rng& epoch_rng);

}  // namespace augment
}  // namespace silaudit

#endif  // SILAUDIT_AUGMENT_HPP_
