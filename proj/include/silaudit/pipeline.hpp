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

#ifndef SILAUDIT_PIPELINE_HPP_
#define SILAUDIT_PIPELINE_HPP_

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "silaudit/features.hpp"
#include "silaudit/metrics.hpp"
#include "silaudit/model.hpp"
#include "silaudit/protocol.hpp"
#include "silaudit/report.hpp"
#include "silaudit/silence.hpp"

namespace silaudit {
namespace pipeline {

// Settings for turning one protocol + audio directory into per-utterance
// silence profiles and duration features. Audio files are discovered as
// <audio_dir>/<utterance_id>.wav.
struct LoadOptions {
  std::filesystem::path protocol_path;
  std::filesystem::path audio_dir;
  silence::TrimParams trim;
  features::DurationFeatureMode feature =
      features::DurationFeatureMode::kLeading;
  double subselect_seconds = -1.0;  // > 0 applies time-wise subselection
  bool trim_audio_first = false;    // trim silence before measuring
  bool skip_missing = false;        // downgrade missing audio to a warning
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = hardware default
};

struct LoadedSplit {
  std::vector<protocol::TrialRecord> records;
  std::vector<silence::SilenceProfile> profiles;  // parallel to records
  std::vector<double> features;                   // parallel to records
  std::vector<std::string> warnings;
};

// Decodes and profiles every protocol entry; file-parallel with a bounded
// worker pool, results in protocol order. Throws DataError for a missing
// or undecodable file unless skip_missing is set.
LoadedSplit load_split(const LoadOptions& options);

void write_profiles_csv(const LoadedSplit& split,
                        const std::filesystem::path& path);

// Trained duration classifier plus everything needed to reproduce its
// input preprocessing on a new split.
struct Checkpoint {
  model::FcnnParams params;
  features::Normalizer normalizer;
  features::DurationFeatureMode feature =
      features::DurationFeatureMode::kLeading;
  silence::TrimParams trim;
  model::TrainConfig train_config;
};

// Versioned JSON with layer shapes and row-major weights, byte-stable for
// identical contents.
void save_checkpoint(const Checkpoint& checkpoint,
                     const std::filesystem::path& path);
Checkpoint load_checkpoint(const std::filesystem::path& path);

// Challenge-style score files: one "utterance_id score" line per trial.
void write_score_file(std::span<const metrics::ScoredTrial> trials,
                      const std::filesystem::path& path);
std::vector<std::pair<std::string, double>> read_score_file(
    const std::filesystem::path& path);

// Fits the normalizer on the given (train) split and trains the FCNN on
// its normalized features.
Checkpoint train_on_split(const LoadedSplit& split,
                          const silence::TrimParams& trim,
                          features::DurationFeatureMode feature,
                          const model::TrainConfig& cfg);

struct EvalResult {
  metrics::EerResult eer;
  double accuracy_at_eer = 0.0;
  std::size_t n_bonafide = 0;
  std::size_t n_spoof = 0;
  std::vector<metrics::ScoredTrial> scores;
};

// Scores a loaded split with a checkpoint (normalizer applied verbatim,
// never re-fit) and computes EER and accuracy at the EER threshold.
EvalResult evaluate_split(const LoadedSplit& split,
                          const Checkpoint& checkpoint);

// Challenge-style scoring: joins an existing score file with the protocol
// keys and computes EER. Every protocol trial must be scored unless
// skip_missing is set; scores without a protocol entry are an error.
EvalResult evaluate_score_file(const std::filesystem::path& protocol_path,
                               const std::filesystem::path& scores_path,
                               bool skip_missing = false);

struct SplitInput {
  std::string name;
  std::filesystem::path protocol_path;
  std::filesystem::path audio_dir;
};

struct AuditOptions {
  SplitInput train;
  SplitInput dev;
  SplitInput eval;
  silence::TrimParams trim;
  features::DurationFeatureMode feature =
      features::DurationFeatureMode::kLeading;
  double subselect_seconds = -1.0;  // applied to the train split only
  bool skip_missing = false;
  std::uint64_t seed = 0;
  int threads = 0;
  model::TrainConfig train_config;
};

struct AuditResult {
  report::AuditReport report;
  Checkpoint checkpoint;
  LoadedSplit train_split;
  LoadedSplit dev_split;
  LoadedSplit eval_split;
  std::vector<metrics::ScoredTrial> train_scores;
  std::vector<metrics::ScoredTrial> dev_scores;
  std::vector<metrics::ScoredTrial> eval_scores;
};

// The full audit: profile all three splits, train on train, score every
// split, and assemble the report with per-attack silence statistics and
// the random baseline.
AuditResult run_audit(const AuditOptions& options);

struct TrimExportOptions {
  std::filesystem::path protocol_path;
  std::filesystem::path audio_dir;
  std::filesystem::path out_dir;
  silence::TrimParams trim;
  bool leading_only = false;
  bool skip_missing = false;
  int threads = 0;
};

struct TrimExportResult {
  std::size_t written = 0;
  std::size_t skipped = 0;
  std::vector<std::string> warnings;
};

// Writes a trimmed copy of the corpus: <out>/audio/*.wav plus a protocol
// covering the exported files. Fully silent inputs are skipped and listed
// in <out>/skipped.txt with a warning record.
TrimExportResult trim_export(const TrimExportOptions& options);

}  // namespace pipeline
}  // namespace silaudit

#endif  // SILAUDIT_PIPELINE_HPP_
