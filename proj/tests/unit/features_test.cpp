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
#include <vector>

#include <doctest.h>

#include "silaudit/error.hpp"
#include "silaudit/rng.hpp"

using namespace silaudit;
using features::DurationFeatureMode;

TEST_CASE("extract_duration_feature selects the configured duration") {
  silence::SilenceProfile profile;
  profile.leading_s = 0.3;
  profile.trailing_s = 0.1;
  CHECK(features::extract_duration_feature(
            profile, DurationFeatureMode::kLeading) == doctest::Approx(0.3));
  CHECK(features::extract_duration_feature(
            profile, DurationFeatureMode::kLeadingPlusTrailing) ==
        doctest::Approx(0.4));

  // Fully silent 2 s file: the convention reports it all as leading.
  silence::SilenceProfile silent;
  silent.leading_s = 2.0;
  silent.trailing_s = 0.0;
  silent.total_s = 2.0;
  CHECK(features::extract_duration_feature(
            silent, DurationFeatureMode::kLeading) == doctest::Approx(2.0));
}

TEST_CASE("feature mode names round trip") {
  for (const char* name : {"leading", "leading+trailing"}) {
    CHECK(features::feature_mode_name(features::parse_feature_mode(name)) ==
          name);
  }
  CHECK_THROWS_AS(features::parse_feature_mode("mfcc"), Error);
}

TEST_CASE("fit_normalizer uses the population deviation") {
  const std::vector<double> two{0.0, 2.0};
  const auto n = features::fit_normalizer(two);
  CHECK(n.mean == doctest::Approx(1.0));
  CHECK(n.stddev == doctest::Approx(1.0));

  const std::vector<double> constant{5.0, 5.0, 5.0};
  const auto guarded = features::fit_normalizer(constant);
  CHECK(guarded.mean == doctest::Approx(5.0));
  CHECK(guarded.stddev == 1.0);
  CHECK(guarded.apply(5.0) == 0.0);

  CHECK_THROWS_AS(features::fit_normalizer(std::vector<double>{1.0}), Error);
}

TEST_CASE("fit_normalizer recovers generator parameters") {
  Rng rng(500);
  std::vector<double> values;
  const double mean = 0.3, sd = 0.07;
  for (int i = 0; i < 10000; ++i) values.push_back(rng.gaussian(mean, sd));
  const auto n = features::fit_normalizer(values);
  CHECK(std::abs(n.mean - mean) < 3.0 * sd / std::sqrt(10000.0));
  CHECK(std::abs(n.stddev - sd) < 3.0 * sd / std::sqrt(2.0 * 10000.0));
}

TEST_CASE("apply is the affine map (x - mean) / stddev") {
  CHECK(features::Normalizer{1.0, 1.0}.apply(1.0) == 0.0);
  CHECK(features::Normalizer{1.0, 2.0}.apply(3.0) == doctest::Approx(1.0));

  Rng rng(501);
  std::vector<double> values;
  for (int i = 0; i < 4000; ++i) values.push_back(rng.uniform(-2.0, 5.0));
  const auto n = features::fit_normalizer(values);

  double sum = 0.0, sq = 0.0;
  for (double v : values) {
    const double z = n.apply(v);
    sum += z;
    sq += z * z;
  }
  const double m = sum / values.size();
  CHECK(std::abs(m) < 1e-9);
  CHECK(std::sqrt(sq / values.size() - m * m) == doctest::Approx(1.0));

  // Affine consistency: apply(a*x + b) relates linearly to apply(x).
  const double a = 2.5, b = -0.75, x = 1.3;
  const double lhs = n.apply(a * x + b);
  const double rhs = (a * x + b - n.mean) / n.stddev;
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}
