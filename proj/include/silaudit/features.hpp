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

#ifndef SILAUDIT_FEATURES_HPP_
#define SILAUDIT_FEATURES_HPP_

#include <span>
#include <string>
#include <string_view>

#include "silaudit/silence.hpp"

namespace silaudit {
namespace features {

enum class DurationFeatureMode { kLeading, kLeadingPlusTrailing };

DurationFeatureMode parse_feature_mode(std::string_view name);
std::string_view feature_mode_name(DurationFeatureMode mode);

// The classifier's single scalar input: a silence duration in seconds.
double extract_duration_feature(const silence::SilenceProfile& profile,
                                DurationFeatureMode mode);

// Standard normalization. Fit on the train split only; dev/eval reuse the
// fitted statistics verbatim.
struct Normalizer {
  double mean = 0.0;
  double stddev = 1.0;

  double apply(double x) const { return (x - mean) / stddev; }
};

// Mean and population standard deviation; a near-zero deviation (constant
// feature) is replaced by 1 so normalized values stay finite.
// Throws Error for fewer than two values.
Normalizer fit_normalizer(std::span<const double> values);

}  // namespace features
}  // namespace silaudit

#endif  // SILAUDIT_FEATURES_HPP_
