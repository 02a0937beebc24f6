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

#include "silaudit/features.hpp"

#include <cmath>

#include "silaudit/error.hpp"

namespace silaudit {
namespace features {

DurationFeatureMode parse_feature_mode(std::string_view name) {
  if (name == "leading") return DurationFeatureMode::kLeading;
  if (name == "leading+trailing") {
    return DurationFeatureMode::kLeadingPlusTrailing;
  }
  throw Error("unknown feature mode '" + std::string(name) +
              "' (expected 'leading' or 'leading+trailing')");
}

std::string_view feature_mode_name(DurationFeatureMode mode) {
  return mode == DurationFeatureMode::kLeading ? "leading"
                                               : "leading+trailing";
}

double extract_duration_feature(const silence::SilenceProfile& profile,
                                DurationFeatureMode mode) {
  return mode == DurationFeatureMode::kLeading
             ? profile.leading_s
             : profile.leading_s + profile.trailing_s;
}

Normalizer fit_normalizer(std::span<const double> values) {
  if (values.size() < 2) {
    throw Error("normalizer needs at least 2 values, got " +
                std::to_string(values.size()));
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());

  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  double stddev = std::sqrt(sq / static_cast<double>(values.size()));
  if (stddev < 1e-12) stddev = 1.0;

  return Normalizer{mean, stddev};
}

}  // namespace features
}  // namespace silaudit
