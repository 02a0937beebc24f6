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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "silaudit/error.hpp"
#include "silaudit/pipeline.hpp"
#include "silaudit/synth.hpp"

namespace {

namespace fs = std::filesystem;
using silaudit::features::parse_feature_mode;

struct CommonOptions {
  double top_db = 40.0;
  std::size_t frame_length = 2048;
  std::size_t hop_length = 512;
  std::string feature = "leading";
  double subselect_seconds = -1.0;
  int epochs = 50;
  double learning_rate = 1e-3;
  double weight_decay = 1e-6;
  double dropout = 0.10;
  int batch_size = 64;
  std::uint64_t seed = 42;
  bool skip_missing = false;
  int threads = 0;

  silaudit::silence::TrimParams trim_params() const {
    return {top_db, frame_length, hop_length};
  }

  silaudit::model::TrainConfig train_config() const {
    silaudit::model::TrainConfig cfg;
    cfg.epochs = epochs;
    cfg.learning_rate = learning_rate;
    cfg.weight_decay = weight_decay;
    cfg.dropout = dropout;
    cfg.batch_size = batch_size;
    cfg.seed = seed;
    return cfg;
  }
};

void add_trim_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--top-db", opt.top_db,
                  "Silence threshold in dB below the peak frame")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--frame-length", opt.frame_length, "Frame length, samples")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--hop-length", opt.hop_length, "Hop length, samples")
      ->check(CLI::PositiveNumber);
}

void add_feature_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--feature", opt.feature, "Duration feature")
      ->check(CLI::IsMember({"leading", "leading+trailing"}));
  cmd->add_option("--subselect-seconds", opt.subselect_seconds,
                  "Random time-wise subselection length; -1 disables");
}

void add_train_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--epochs", opt.epochs)->check(CLI::NonNegativeNumber);
  cmd->add_option("--lr", opt.learning_rate)->check(CLI::PositiveNumber);
  cmd->add_option("--weight-decay", opt.weight_decay)
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--dropout", opt.dropout)->check(CLI::Range(0.0, 0.999));
  cmd->add_option("--batch-size", opt.batch_size)->check(CLI::PositiveNumber);
}

void add_misc_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--seed", opt.seed, "Master RNG seed");
  cmd->add_flag("--skip-missing", opt.skip_missing,
                "Warn instead of failing on missing audio files");
  cmd->add_option("--threads", opt.threads,
                  "Decode/profile worker count; 0 = hardware default");
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) {
    std::fprintf(stderr, "warning: %s\n", w.c_str());
  }
}

int run_synth(const std::string& spec_path, const std::string& preset_name,
              const std::string& out_dir, std::uint64_t seed,
              bool seed_given) {
  if (spec_path.empty() == preset_name.empty()) {
    throw CLI::ValidationError("synth",
                               "exactly one of --spec/--preset is required");
  }
  if (!spec_path.empty()) {
    silaudit::synth::CorpusSpec spec =
        silaudit::synth::load_corpus_spec(spec_path);
    if (seed_given) spec.seed = seed;
    const auto corpus = silaudit::synth::generate_corpus(spec, out_dir);
    std::printf("synth: %zu files -> %s\n", corpus.manifest.size(), out_dir.c_str());
    return 0;
  }
  const silaudit::synth::ExperimentSpec exp =
      silaudit::synth::preset(preset_name, seed);
  const struct {
    const char* name;
    const silaudit::synth::CorpusSpec* spec;
  } splits[] = {{"train", &exp.train}, {"dev", &exp.dev}, {"eval", &exp.eval}};
  for (const auto& s : splits) {
    const auto corpus = silaudit::synth::generate_corpus(
        *s.spec, fs::path(out_dir) / s.name);
    std::printf("synth: %s/%s: %zu files\n", out_dir.c_str(), s.name,
                corpus.manifest.size());
  }
  return 0;
}

silaudit::pipeline::LoadOptions make_load_options(const CommonOptions& opt,
                                                  const std::string& protocol,
                                                  const std::string& audio_dir,
                                                  bool trim_audio_first) {
  silaudit::pipeline::LoadOptions lo;
  lo.protocol_path = protocol;
  lo.audio_dir = audio_dir;
  lo.trim = opt.trim_params();
  lo.feature = parse_feature_mode(opt.feature);
  lo.subselect_seconds = opt.subselect_seconds;
  lo.trim_audio_first = trim_audio_first;
  lo.skip_missing = opt.skip_missing;
  lo.seed = opt.seed;
  lo.threads = opt.threads;
  return lo;
}

int run_stats(const CommonOptions& opt, const std::string& protocol,
              const std::string& audio_dir, const std::string& out_dir,
              const std::string& split_name) {
  fs::create_directories(out_dir);
  silaudit::pipeline::LoadOptions lo =
      make_load_options(opt, protocol, audio_dir, false);
  lo.subselect_seconds = -1.0;  // stats always measure the full file
  const auto split = silaudit::pipeline::load_split(lo);
  print_warnings(split.warnings);

  silaudit::pipeline::write_profiles_csv(split,
                                         fs::path(out_dir) / "profiles.csv");

  std::vector<silaudit::report::UtteranceProfile> rows(split.records.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i] = {split.records[i], split.profiles[i]};
  }
  silaudit::report::AuditReport stats_report;
  stats_report.config.trim = opt.trim_params();
  stats_report.config.feature = parse_feature_mode(opt.feature);
  stats_report.config.subselect_seconds = -1.0;
  stats_report.config.seed = opt.seed;
  stats_report.config.train = opt.train_config();
  silaudit::report::SplitStats stats;
  stats.split = split_name;
  stats.groups = silaudit::report::per_attack_stats(rows);
  stats.spoof_pooled = silaudit::report::pooled_spoof_stats(rows);
  stats_report.splits.push_back(std::move(stats));
  silaudit::report::write_report_csv(stats_report,
                                     fs::path(out_dir) / "attack_stats.csv");
  std::printf("stats: %zu trials -> %s\n", split.records.size(),
              out_dir.c_str());
  return 0;
}

int run_audit(const CommonOptions& opt, const std::string& corpus_root,
              std::string train_protocol, std::string train_audio,
              std::string dev_protocol, std::string dev_audio,
              std::string eval_protocol, std::string eval_audio,
              const std::string& out_dir) {
  if (!corpus_root.empty()) {
    const fs::path root(corpus_root);
    train_protocol = (root / "train" / "protocol.txt").string();
    train_audio = (root / "train" / "audio").string();
    dev_protocol = (root / "dev" / "protocol.txt").string();
    dev_audio = (root / "dev" / "audio").string();
    eval_protocol = (root / "eval" / "protocol.txt").string();
    eval_audio = (root / "eval" / "audio").string();
  }
  if (train_protocol.empty() || dev_protocol.empty() ||
      eval_protocol.empty()) {
    throw CLI::ValidationError(
        "audit", "need --corpus or all per-split protocol/audio flags");
  }

  fs::create_directories(out_dir);
  silaudit::pipeline::AuditOptions options;
  options.train = {"train", train_protocol, train_audio};
  options.dev = {"dev", dev_protocol, dev_audio};
  options.eval = {"eval", eval_protocol, eval_audio};
  options.trim = opt.trim_params();
  options.feature = parse_feature_mode(opt.feature);
  options.subselect_seconds = opt.subselect_seconds;
  options.skip_missing = opt.skip_missing;
  options.seed = opt.seed;
  options.threads = opt.threads;
  options.train_config = opt.train_config();

  const auto result = silaudit::pipeline::run_audit(options);
  print_warnings(result.train_split.warnings);
  print_warnings(result.dev_split.warnings);
  print_warnings(result.eval_split.warnings);

  const fs::path out(out_dir);
  silaudit::pipeline::write_profiles_csv(result.train_split,
                                         out / "profiles_train.csv");
  silaudit::pipeline::write_profiles_csv(result.dev_split,
                                         out / "profiles_dev.csv");
  silaudit::pipeline::write_profiles_csv(result.eval_split,
                                         out / "profiles_eval.csv");
  silaudit::pipeline::write_score_file(result.train_scores,
                                       out / "scores_train.txt");
  silaudit::pipeline::write_score_file(result.dev_scores,
                                       out / "scores_dev.txt");
  silaudit::pipeline::write_score_file(result.eval_scores,
                                       out / "scores_eval.txt");
  silaudit::pipeline::save_checkpoint(result.checkpoint,
                                      out / "checkpoint.json");
  silaudit::report::write_report_csv(result.report, out / "report.csv");
  silaudit::report::write_report_json(result.report, out / "report.json");

  for (const auto& e : result.report.classifier) {
    std::printf("audit: %s EER %.4f (threshold %.6f, accuracy %.4f)\n",
                e.split.c_str(), e.eer, e.threshold, e.accuracy_at_eer);
  }
  std::printf("audit: report -> %s\n", (out / "report.json").c_str());
  return 0;
}

int run_train(const CommonOptions& opt, const std::string& protocol,
              const std::string& audio_dir, const std::string& out_dir) {
  fs::create_directories(out_dir);
  const auto split = silaudit::pipeline::load_split(
      make_load_options(opt, protocol, audio_dir, false));
  print_warnings(split.warnings);

  const auto checkpoint = silaudit::pipeline::train_on_split(
      split, opt.trim_params(), parse_feature_mode(opt.feature),
      opt.train_config());
  silaudit::pipeline::save_checkpoint(checkpoint,
                                      fs::path(out_dir) / "checkpoint.json");
  std::printf("train: %zu trials -> %s/checkpoint.json\n",
              split.records.size(), out_dir.c_str());
  return 0;
}

int run_eval(const CommonOptions& opt, const std::string& protocol,
             const std::string& audio_dir, const std::string& checkpoint_path,
             const std::string& scores_path, const std::string& out_dir,
             bool trim_eval) {
  fs::create_directories(out_dir);

  if (!scores_path.empty()) {
    // Challenge-style: score file already exists, just meter it.
    const auto result = silaudit::pipeline::evaluate_score_file(
        protocol, scores_path, opt.skip_missing);
    char json[512];
    std::snprintf(json, sizeof(json),
                  "{\n\"n_bonafide\":%zu,\n\"n_spoof\":%zu,\n\"eer\":%.6f,\n"
                  "\"threshold\":%.6f,\n\"accuracy_at_eer\":%.6f,\n"
                  "\"trim_eval\":false\n}\n",
                  result.n_bonafide, result.n_spoof, result.eer.eer,
                  result.eer.threshold, result.accuracy_at_eer);
    std::ofstream json_out(fs::path(out_dir) / "eval.json",
                           std::ios::binary | std::ios::trunc);
    json_out << json;
    std::printf("eval: EER %.4f (threshold %.6f, accuracy %.4f)\n",
                result.eer.eer, result.eer.threshold, result.accuracy_at_eer);
    return 0;
  }

  const auto checkpoint = silaudit::pipeline::load_checkpoint(checkpoint_path);

  // Preprocessing comes from the checkpoint so scores match training.
  silaudit::pipeline::LoadOptions lo;
  lo.protocol_path = protocol;
  lo.audio_dir = audio_dir;
  lo.trim = checkpoint.trim;
  lo.feature = checkpoint.feature;
  lo.trim_audio_first = trim_eval;
  lo.skip_missing = opt.skip_missing;
  lo.seed = opt.seed;
  lo.threads = opt.threads;
  const auto split = silaudit::pipeline::load_split(lo);
  print_warnings(split.warnings);

  const auto result = silaudit::pipeline::evaluate_split(split, checkpoint);
  silaudit::pipeline::write_score_file(result.scores,
                                       fs::path(out_dir) / "scores.txt");

  char json[512];
  std::snprintf(json, sizeof(json),
                "{\n\"n_bonafide\":%zu,\n\"n_spoof\":%zu,\n\"eer\":%.6f,\n"
                "\"threshold\":%.6f,\n\"accuracy_at_eer\":%.6f,\n"
                "\"trim_eval\":%s\n}\n",
                result.n_bonafide, result.n_spoof, result.eer.eer,
                result.eer.threshold, result.accuracy_at_eer,
                trim_eval ? "true" : "false");
  std::ofstream json_out(fs::path(out_dir) / "eval.json",
                         std::ios::binary | std::ios::trunc);
  json_out << json;

  std::printf("eval: EER %.4f (threshold %.6f, accuracy %.4f)%s\n",
              result.eer.eer, result.eer.threshold, result.accuracy_at_eer,
              trim_eval ? " [eval audio trimmed]" : "");
  return 0;
}

int run_trim_export(const CommonOptions& opt, const std::string& protocol,
                    const std::string& audio_dir, const std::string& out_dir,
                    bool leading_only) {
  silaudit::pipeline::TrimExportOptions options;
  options.protocol_path = protocol;
  options.audio_dir = audio_dir;
  options.out_dir = out_dir;
  options.trim = opt.trim_params();
  options.leading_only = leading_only;
  options.skip_missing = opt.skip_missing;
  options.threads = opt.threads;

  const auto result = silaudit::pipeline::trim_export(options);
  print_warnings(result.warnings);
  std::printf("trim-export: %zu written, %zu skipped -> %s\n", result.written,
              result.skipped, out_dir.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "silaudit: quantifies how much label information leaks through\n"
      "leading/trailing silence in anti-spoofing corpora, trains the\n"
      "duration-only classifier, and re-exports corpora with silence\n"
      "trimmed."};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string protocol, audio_dir, out_dir, checkpoint_path, scores_path;
  std::string spec_path, preset_name, corpus_root, split_name = "all";
  std::string train_protocol, train_audio, dev_protocol, dev_audio;
  std::string eval_protocol, eval_audio;
  bool trim_eval = false;
  bool leading_only = false;

  CLI::App* synth = app.add_subcommand(
      "synth", "Generate a synthetic corpus with controlled silence");
  synth->add_option("--spec", spec_path, "Corpus spec JSON (single split)");
  synth->add_option("--preset", preset_name,
                    "Bundled experiment preset (writes train/dev/eval)")
      ->check(CLI::IsMember(silaudit::synth::preset_names()));
  synth->add_option("--out", out_dir)->required();
  CLI::Option* synth_seed = synth->add_option("--seed", opt.seed);

  CLI::App* stats = app.add_subcommand(
      "stats", "Measure silence profiles and per-attack statistics");
  stats->add_option("--protocol", protocol)->required();
  stats->add_option("--audio-dir", audio_dir)->required();
  stats->add_option("--out", out_dir)->required();
  stats->add_option("--split-name", split_name);
  add_trim_flags(stats, opt);
  add_misc_flags(stats, opt);

  CLI::App* audit = app.add_subcommand(
      "audit", "Full audit: profiles, stats, duration classifier, report");
  audit->add_option("--corpus", corpus_root,
                    "Corpus root with train/dev/eval subdirectories");
  audit->add_option("--train-protocol", train_protocol);
  audit->add_option("--train-audio-dir", train_audio);
  audit->add_option("--dev-protocol", dev_protocol);
  audit->add_option("--dev-audio-dir", dev_audio);
  audit->add_option("--eval-protocol", eval_protocol);
  audit->add_option("--eval-audio-dir", eval_audio);
  audit->add_option("--out", out_dir)->required();
  add_trim_flags(audit, opt);
  add_feature_flags(audit, opt);
  add_train_flags(audit, opt);
  add_misc_flags(audit, opt);

  CLI::App* train = app.add_subcommand(
      "train", "Fit the duration-only FCNN on one split");
  train->add_option("--protocol", protocol)->required();
  train->add_option("--audio-dir", audio_dir)->required();
  train->add_option("--out", out_dir)->required();
  add_trim_flags(train, opt);
  add_feature_flags(train, opt);
  add_train_flags(train, opt);
  add_misc_flags(train, opt);

  CLI::App* eval = app.add_subcommand(
      "eval", "Score a split with a checkpoint (or meter a score file)");
  eval->add_option("--protocol", protocol)->required();
  eval->add_option("--audio-dir", audio_dir);
  CLI::Option* eval_ckpt = eval->add_option("--checkpoint", checkpoint_path);
  CLI::Option* eval_scores =
      eval->add_option("--scores", scores_path,
                       "Existing challenge-style score file to meter");
  eval_ckpt->excludes(eval_scores);
  eval->add_option("--out", out_dir)->required();
  eval->add_flag("--trim-eval", trim_eval,
                 "Trim silence from the evaluation audio before scoring");
  add_misc_flags(eval, opt);

  CLI::App* trim_export = app.add_subcommand(
      "trim-export", "Write a corpus copy with silence trimmed");
  trim_export->add_option("--protocol", protocol)->required();
  trim_export->add_option("--audio-dir", audio_dir)->required();
  trim_export->add_option("--out", out_dir)->required();
  trim_export->add_flag("--leading-only", leading_only,
                        "Remove leading silence only");
  add_trim_flags(trim_export, opt);
  add_misc_flags(trim_export, opt);

  try {
    app.parse(argc, argv);
    if (synth->parsed()) {
      return run_synth(spec_path, preset_name, out_dir, opt.seed,
                       synth_seed->count() > 0);
    }
    if (stats->parsed()) {
      return run_stats(opt, protocol, audio_dir, out_dir, split_name);
    }
    if (audit->parsed()) {
      return run_audit(opt, corpus_root, train_protocol, train_audio,
                       dev_protocol, dev_audio, eval_protocol, eval_audio,
                       out_dir);
    }
    if (train->parsed()) {
      return run_train(opt, protocol, audio_dir, out_dir);
    }
    if (eval->parsed()) {
      if (checkpoint_path.empty() == scores_path.empty()) {
        throw CLI::ValidationError(
            "eval", "exactly one of --checkpoint/--scores is required");
      }
      if (!checkpoint_path.empty() && audio_dir.empty()) {
        throw CLI::ValidationError("eval",
                                   "--audio-dir is required with --checkpoint");
      }
      return run_eval(opt, protocol, audio_dir, checkpoint_path, scores_path,
                      out_dir, trim_eval);
    }
    if (trim_export->parsed()) {
      return run_trim_export(opt, protocol, audio_dir, out_dir, leading_only);
    }
    return 1;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const silaudit::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
