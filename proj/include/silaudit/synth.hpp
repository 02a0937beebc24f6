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

#ifndef SILAUDIT_SYNTH_HPP_
#define SILAUDIT_SYNTH_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "silaudit/protocol.hpp"

namespace silaudit {
namespace synth {

struct GaussianSpec {
  double mean = 0.0;
  double stddev = 0.0;
};

enum class SpeechKind { kTone, kNoise };

// One synthetic class: either the bonafide pool (attack_id empty) or one
// spoofing system. Each trial is exact-zero leading silence, a speech
// segment, and exact-zero trailing silence.
struct ClassSpec {
  std::optional<std::string> attack_id;
  std::size_t count = 0;
  GaussianSpec leading_s;            // truncated at 0
  GaussianSpec trailing_s;           // truncated at 0
  GaussianSpec speech_s{1.0, 0.0};   // truncated at 0.2
  SpeechKind speech_kind = SpeechKind::kTone;
  double tone_hz = 440.0;
  double noise_amplitude = 0.5;
};

struct CorpusSpec {
  int sample_rate = 16000;
  std::uint64_t seed = 0;
  std::vector<ClassSpec> classes;

  // Throws Error unless there is at least one bonafide and one spoof
  // class and all counts/deviations are admissible.
  void validate() const;
};

// Ground truth for one generated trial; durations are the realized values
// after rounding to whole samples.
struct ManifestRow {
  std::string utterance_id;
  std::optional<std::string> attack_id;
  protocol::Key key = protocol::Key::kBonafide;
  double leading_s = 0.0;
  double trailing_s = 0.0;
  double total_s = 0.0;
};

struct GeneratedCorpus {
  std::filesystem::path protocol_path;
  std::filesystem::path audio_dir;
  std::filesystem::path manifest_path;
  std::vector<ManifestRow> manifest;
};

// Writes <out>/protocol.txt, <out>/audio/<utt>.wav and <out>/manifest.csv.
// Trial RNG streams are split per (class, trial) index, so the corpus is
// byte-identical for equal seeds regardless of generation order.
GeneratedCorpus generate_corpus(const CorpusSpec& spec,
                                const std::filesystem::path& out_dir);

std::vector<ManifestRow> read_manifest(const std::filesystem::path& path);

CorpusSpec corpus_spec_from_json(const std::string& text);
CorpusSpec load_corpus_spec(const std::filesystem::path& path);
std::string corpus_spec_to_json(const CorpusSpec& spec);

// A full experiment: one corpus spec per split.
struct ExperimentSpec {
  CorpusSpec train;
  CorpusSpec dev;
  CorpusSpec eval;
};

// Bundled presets =  separable | null-leak | devgap | paper-like.
//  separable:  bonafide leading 0.35s (sd 0.05) vs spoof 0.05s (sd 0.02).
//  null-leak:  identical silence distributions for both classes.
//  devgap:     dev attacks overlap bonafide silence, eval attacks do not.
//  paper-like: one bonafide pool and six (train/dev) or six (eval) attack
//              systems with mostly short silences and some overlapping.
ExperimentSpec preset(const std::string& name, std::uint64_t seed);
std::vector<std::string> preset_names();

}  // namespace synth
}  // namespace silaudit

#endif  // SILAUDIT_SYNTH_HPP_
