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

#include <algorithm>
#include <unordered_set>

#include <doctest.h>

#include "silaudit/error.hpp"
#include "support/waveform_gen.hpp"

using namespace silaudit;
using augment::SubselectParams;

TEST_CASE("disabled subselection is the identity") {
  Rng rng(1);
  const auto w = test_support::tone_waveform(100, 3000, 50);
  const auto out = augment::subselect(w, SubselectParams{-1.0}, rng);
  CHECK(out.samples == w.samples);
  CHECK(out.sample_rate == w.sample_rate);
}

TEST_CASE("long input yields an exact-length slice") {
  Rng rng(2);
  const auto w = test_support::tone_waveform(0, 5 * 16000, 0);
  const auto out = augment::subselect(w, SubselectParams{2.4}, rng);
  REQUIRE(out.size() == 38400);

  // The slice is contiguous: find it back in the source.
  const auto begin = std::search(w.samples.begin(), w.samples.end(),
                                 out.samples.begin(), out.samples.end());
  CHECK(begin != w.samples.end());
}

TEST_CASE("short input is tiled then cut") {
  Rng rng(3);
  auto w = test_support::tone_waveform(0, 16000, 0);
  w.samples[123] = 0.77;  // marker to make tiling visible
  const auto out = augment::subselect(w, SubselectParams{2.4}, rng);
  REQUIRE(out.size() == 38400);
  for (std::size_t k = 0; k < out.size(); ++k) {
    CHECK(out.samples[k] == w.samples[k % w.size()]);
  }
}

TEST_CASE("slices are reproducible per seed and vary per epoch stream") {
  Rng gen(4);
  const auto w = test_support::random_waveform(gen);

  Rng a(99), b(99);
  const SubselectParams p{0.05};
  const auto out_a = augment::subselect(w, p, a);
  const auto out_b = augment::subselect(w, p, b);
  CHECK(out_a.samples == out_b.samples);

  // Fresh draws from the same stream give new slices (epochs).
  std::unordered_set<double> firsts;
  Rng epochs(5);
  for (int e = 0; e < 32; ++e) {
    firsts.insert(augment::subselect(w, p, epochs).samples[0]);
  }
  CHECK(firsts.size() > 1);
}

TEST_CASE("every output sample value exists in the input") {
  Rng gen(6);
  Rng rng(7);
  for (int round = 0; round < 50; ++round) {
    const auto w = test_support::random_waveform(gen);
    const double t = rng.uniform(0.01, 2.0);
    const auto out = augment::subselect(w, SubselectParams{t}, rng);
    std::unordered_set<double> pool(w.samples.begin(), w.samples.end());
    for (double v : out.samples) CHECK(pool.count(v) == 1);
  }
}

TEST_CASE("degenerate inputs") {
  Rng rng(8);
  audio::Waveform empty;
  empty.sample_rate = 16000;
  CHECK_THROWS_AS(augment::subselect(empty, SubselectParams{1.0}, rng), Error);

  const auto w = test_support::tone_waveform(0, 100, 0);
  CHECK_THROWS_AS(augment::subselect(w, SubselectParams{1e-9}, rng), Error);
}
