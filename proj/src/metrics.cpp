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

#include "silaudit/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "silaudit/error.hpp"

namespace silaudit {
namespace metrics {

namespace {

struct SplitScores {
  std::vector<double> bonafide;  // sorted
  std::vector<double> spoof;     // sorted
};

SplitScores split_scores(std::span<const ScoredTrial> trials) {
  SplitScores s;
  for (const ScoredTrial& t : trials) {
    if (!std::isfinite(t.score)) {
      throw Error("non-finite score for '" + t.utterance_id + "'");
    }
    (t.key == protocol::Key::kBonafide ? s.bonafide : s.spoof)
        .push_back(t.score);
  }
  if (s.bonafide.empty() || s.spoof.empty()) {
    throw Error("need at least one bonafide and one spoof trial");
  }
  std::sort(s.bonafide.begin(), s.bonafide.end());
  std::sort(s.spoof.begin(), s.spoof.end());
  return s;
}

// Ascending sweep thresholds: every distinct score plus one sentinel on
// each side, so both (FAR 0, FRR 1) and (FAR 1, FRR 0) endpoints appear.
std::vector<double> sweep_thresholds(const SplitScores& s) {
  std::vector<double> t;
  t.reserve(s.bonafide.size() + s.spoof.size() + 2);
  t.insert(t.end(), s.bonafide.begin(), s.bonafide.end());
  t.insert(t.end(), s.spoof.begin(), s.spoof.end());
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  t.insert(t.begin(), t.front() - 1.0);
  t.push_back(t.back() + 1.0);
  return t;
}

double frr_at(const SplitScores& s, double threshold) {
  const auto it =
      std::lower_bound(s.bonafide.begin(), s.bonafide.end(), threshold);
  return static_cast<double>(s.bonafide.end() - it) /
         static_cast<double>(s.bonafide.size());
}

double far_at(const SplitScores& s, double threshold) {
  const auto it = std::lower_bound(s.spoof.begin(), s.spoof.end(), threshold);
  return static_cast<double>(it - s.spoof.begin()) /
         static_cast<double>(s.spoof.size());
}

}  // namespace

EerResult compute_eer(std::span<const ScoredTrial> trials) {
  const SplitScores s = split_scores(trials);
  const std::vector<double> thresholds = sweep_thresholds(s);

  // FRR - FAR is non-increasing along the sweep: 1 at the low sentinel,
  // -1 at the high one, so a sign change always exists.
  double prev_t = thresholds.front();
  double prev_frr = 1.0;
  double prev_far = 0.0;
  for (double t : thresholds) {
    const double frr = frr_at(s, t);
    const double far = far_at(s, t);
    const double diff = frr - far;
    if (diff <= 0.0) {
      if (diff == 0.0) return {frr, t};
      const double prev_diff = prev_frr - prev_far;
      const double w = prev_diff / (prev_diff - diff);
      return {prev_far + w * (far - prev_far), prev_t + w * (t - prev_t)};
    }
    prev_t = t;
    prev_frr = frr;
    prev_far = far;
  }
  // Unreachable: the high sentinel has diff == -1.
  return {prev_far, prev_t};
}

double accuracy_at(std::span<const ScoredTrial> trials, double threshold) {
  if (trials.empty()) throw Error("no trials");
  std::size_t correct = 0;
  for (const ScoredTrial& t : trials) {
    const protocol::Key predicted = t.score >= threshold
                                        ? protocol::Key::kSpoof
                                        : protocol::Key::kBonafide;
    if (predicted == t.key) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(trials.size());
}

std::vector<RocPoint> roc_points(std::span<const ScoredTrial> trials) {
  const SplitScores s = split_scores(trials);
  const std::vector<double> thresholds = sweep_thresholds(s);
  std::vector<RocPoint> points;
  points.reserve(thresholds.size());
  for (double t : thresholds) {
    points.push_back({t, far_at(s, t), frr_at(s, t)});
  }
  return points;
}

}  // namespace metrics
}  // namespace silaudit
