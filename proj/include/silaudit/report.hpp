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

#ifndef SILAUDIT_REPORT_HPP_
#define SILAUDIT_REPORT_HPP_

#include <filesystem>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "silaudit/features.hpp"
#include "silaudit/model.hpp"
#include "silaudit/protocol.hpp"
#include "silaudit/silence.hpp"

namespace silaudit {
namespace report {

// One trial's metadata joined with its measured silence profile.
struct UtteranceProfile {
  protocol::TrialRecord record;
  silence::SilenceProfile profile;
};

// Joins records with profiles keyed by utterance id. Throws DataError
// listing every record without a profile.
std::vector<UtteranceProfile> join_profiles(
    std::span<const protocol::TrialRecord> records,
    const std::unordered_map<std::string, silence::SilenceProfile>& profiles);

// Silence-duration statistics for one group of trials. "group" is the
// attack system id, "BONAFIDE" for the bonafide pool, or "SPOOF_POOLED"
// for all spoof trials together. silence_* covers leading + trailing;
// the leading-only columns are reported alongside. Deviations are
// population standard deviations.
struct AttackStats {
  std::string group;
  std::size_t n = 0;
  double silence_mean_s = 0.0;
  double silence_std_s = 0.0;
  double leading_mean_s = 0.0;
  double leading_std_s = 0.0;
};

// Per-group stats: BONAFIDE first (when present), then attacks in
// lexicographic order. Throws Error on empty input.
std::vector<AttackStats> per_attack_stats(
    std::span<const UtteranceProfile> rows);

// The all-spoof pooled group. Throws Error when no spoof trial exists.
AttackStats pooled_spoof_stats(std::span<const UtteranceProfile> rows);

struct SplitStats {
  std::string split;
  std::vector<AttackStats> groups;
  AttackStats spoof_pooled;
};

struct EvalSummary {
  std::string split;
  std::size_t n_bonafide = 0;
  std::size_t n_spoof = 0;
  double eer = 0.0;
  double threshold = 0.0;
  double accuracy_at_eer = 0.0;
};

struct ReportConfig {
  silence::TrimParams trim;
  features::DurationFeatureMode feature =
      features::DurationFeatureMode::kLeading;
  double subselect_seconds = -1.0;
  std::uint64_t seed = 0;
  model::TrainConfig train;
};

// The audit's primary output: the per-attack silence tables plus the
// duration-only classifier and random-baseline results per split.
struct AuditReport {
  ReportConfig config;
  std::vector<SplitStats> splits;
  std::vector<EvalSummary> classifier;
  std::vector<EvalSummary> random_baseline;
};

// Deterministic serializations: fixed field order, reals with exactly six
// decimal places. The emitters reject a report with an empty group table.
std::string report_to_json(const AuditReport& report);
std::string report_to_csv(const AuditReport& report);
void write_report_json(const AuditReport& report,
                       const std::filesystem::path& path);
void write_report_csv(const AuditReport& report,
                      const std::filesystem::path& path);

}  // namespace report
}  // namespace silaudit

#endif  // SILAUDIT_REPORT_HPP_
