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

#ifndef SILAUDIT_METRICS_HPP_
#define SILAUDIT_METRICS_HPP_

#include <span>
#include <string>
#include <vector>

#include "silaudit/protocol.hpp"

namespace silaudit {
namespace metrics {

// Score polarity is fixed: higher means more spoof-like, matching the
// label encoding bonafide=0 / spoof=1.
struct ScoredTrial {
  std::string utterance_id;
  double score = 0.0;
  protocol::Key key = protocol::Key::kBonafide;
};

struct EerResult {
  double eer = 0.0;
  double threshold = 0.0;
};

// At threshold t: FRR(t) = fraction of bonafide with score >= t,
// FAR(t) = fraction of spoof with score < t.
struct RocPoint {
  double threshold = 0.0;
  double far = 0.0;
  double frr = 0.0;
};

// Equal error rate by sweeping all distinct scores (plus sentinels one
// unit outside the score range) and linearly interpolating the FRR/FAR
// crossing. Throws Error unless both classes are present.
EerResult compute_eer(std::span<const ScoredTrial> trials);

// Fraction classified correctly under the rule: score >= threshold => spoof.
double accuracy_at(std::span<const ScoredTrial> trials, double threshold);

// The (threshold, FAR, FRR) staircase in ascending threshold order; FAR is
// non-decreasing and FRR non-increasing along it.
std::vector<RocPoint> roc_points(std::span<const ScoredTrial> trials);

}  // namespace metrics
}  // namespace silaudit

#endif  // SILAUDIT_METRICS_HPP_
