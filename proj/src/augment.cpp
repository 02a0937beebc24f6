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

#include "silaudit/augment.hpp"

#include <cmath>

#include "silaudit/error.hpp"

namespace silaudit {
namespace augment {

audio::Waveform subselect(const audio::Waveform& w, const SubselectParams& p,
                          Rng& epoch_rng) {
  if (w.empty()) throw Error("empty waveform");
  if (!p.enabled()) return w;

  const std::size_t target = static_cast<std::size_t>(
      std::llround(p.t_seconds * w.sample_rate));
  if (target == 0) throw Error("subselect duration rounds to zero samples");

  audio::Waveform out;
  out.sample_rate = w.sample_rate;
  out.samples.resize(target);

  if (w.size() >= target) {
    const std::size_t start =
        static_cast<std::size_t>(epoch_rng.below(w.size() - target + 1));
    std::copy(w.samples.begin() + static_cast<std::ptrdiff_t>(start),
              w.samples.begin() + static_cast<std::ptrdiff_t>(start + target),
              out.samples.begin());
  } else {
    for (std::size_t k = 0; k < target; ++k) {
      out.samples[k] = w.samples[k % w.size()];
    }
  }
  return out;
}

}  // namespace augment
}  // namespace silaudit
