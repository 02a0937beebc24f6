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

#include "silaudit/pipeline.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "silaudit/augment.hpp"
#include "silaudit/error.hpp"
#include "silaudit/rng.hpp"

namespace silaudit {
namespace pipeline {

namespace {

// RNG stream tags so subsystems never share a sequence.
constexpr std::uint64_t kSubselectStream = 0x5e1ec7;
constexpr std::uint64_t kBaselineStream = 0xba5e11;

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("short write to " + path.string());
}

std::size_t worker_count(int requested, std::size_t jobs) {
  std::size_t n = requested > 0
                      ? static_cast<std::size_t>(requested)
                      : std::max(1u, std::thread::hardware_concurrency());
  return std::min(n, std::max<std::size_t>(jobs, 1));
}

// Runs fn(i) for i in [0, jobs) on a bounded pool. Exceptions are
// captured per index; the lowest-index failure is rethrown.
template <typename Fn>
void parallel_for(std::size_t jobs, int threads, Fn&& fn) {
  const std::size_t pool = worker_count(threads, jobs);
  std::vector<std::string> errors(jobs);
  std::atomic<std::size_t> next{0};

  auto body = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs;) {
      try {
        fn(i);
      } catch (const std::exception& e) {
        errors[i] = e.what();
        if (errors[i].empty()) errors[i] = "unknown error";
      }
    }
  };

  if (pool <= 1) {
    body();
  } else {
    std::vector<std::thread> workers;
    workers.reserve(pool);
    for (std::size_t t = 0; t < pool; ++t) workers.emplace_back(body);
    for (std::thread& t : workers) t.join();
  }

  for (const std::string& err : errors) {
    if (!err.empty()) throw DataError(err);
  }
}

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

int label_of(protocol::Key key) {
  return key == protocol::Key::kBonafide ? 0 : 1;
}

nlohmann::ordered_json layer_json(const char* name, std::size_t rows,
                                  std::size_t cols,
                                  const std::vector<double>& weights,
                                  const std::vector<double>& bias) {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["rows"] = rows;
  j["cols"] = cols;
  j["weights"] = weights;
  j["bias"] = bias;
  return j;
}

void load_layer(const nlohmann::json& j, const char* name, std::size_t rows,
                std::size_t cols, std::vector<double>& weights,
                std::vector<double>& bias) {
  if (j.value("name", "") != name || j.value("rows", std::size_t{0}) != rows ||
      j.value("cols", std::size_t{0}) != cols) {
    throw DataError("checkpoint layer mismatch: expected " +
                    std::string(name) + " " + std::to_string(rows) + "x" +
                    std::to_string(cols));
  }
  weights = j.at("weights").get<std::vector<double>>();
  bias = j.at("bias").get<std::vector<double>>();
  if (weights.size() != rows * cols || bias.size() != rows) {
    throw DataError("checkpoint layer '" + std::string(name) +
                    "' has wrong element count");
  }
}

std::vector<metrics::ScoredTrial> scored_trials(
    const LoadedSplit& split, const std::vector<double>& scores) {
  std::vector<metrics::ScoredTrial> trials(split.records.size());
  for (std::size_t i = 0; i < split.records.size(); ++i) {
    trials[i] = {split.records[i].utterance_id, scores[i],
                 split.records[i].key};
  }
  return trials;
}

EvalResult summarize_scores(std::vector<metrics::ScoredTrial> trials) {
  EvalResult result;
  result.eer = metrics::compute_eer(trials);
  result.accuracy_at_eer = metrics::accuracy_at(trials, result.eer.threshold);
  for (const metrics::ScoredTrial& t : trials) {
    (t.key == protocol::Key::kBonafide ? result.n_bonafide : result.n_spoof)++;
  }
  result.scores = std::move(trials);
  return result;
}

report::EvalSummary eval_summary(const std::string& split,
                                 const EvalResult& r) {
  return {split,        r.n_bonafide,      r.n_spoof,
          r.eer.eer,    r.eer.threshold,   r.accuracy_at_eer};
}

}  // namespace

LoadedSplit load_split(const LoadOptions& options) {
  options.trim.validate();
  const std::vector<protocol::TrialRecord> records =
      protocol::parse_protocol(read_text_file(options.protocol_path));

  const std::size_t n = records.size();
  std::vector<silence::SilenceProfile> profiles(n);
  std::vector<double> feature_values(n, 0.0);
  std::vector<char> present(n, 1);
  std::vector<std::string> slot_warnings(n);

  const augment::SubselectParams subselect{options.subselect_seconds};

  parallel_for(n, options.threads, [&](std::size_t i) {
    const protocol::TrialRecord& record = records[i];
    const std::filesystem::path path =
        options.audio_dir / (record.utterance_id + ".wav");

    if (!std::filesystem::exists(path)) {
      if (options.skip_missing) {
        present[i] = 0;
        slot_warnings[i] =
            "skipped '" + record.utterance_id + "': missing audio file";
        return;
      }
      throw DataError("missing audio file for '" + record.utterance_id +
                      "': " + path.string());
    }

    audio::Waveform w = audio::read_wav_file(path);
    if (subselect.enabled()) {
      Rng rng(derive_seed(derive_seed(options.seed, kSubselectStream), i));
      w = augment::subselect(w, subselect, rng);
    }
    if (options.trim_audio_first) {
      w = silence::trim(w, options.trim);
      if (w.empty()) {
        // Fully silent file: nothing left to measure after trimming.
        profiles[i] = silence::SilenceProfile{};
        slot_warnings[i] = "'" + record.utterance_id +
                           "': fully silent, empty after trimming";
        return;
      }
    }
    profiles[i] = silence::silence_profile(w, options.trim);
    feature_values[i] =
        features::extract_duration_feature(profiles[i], options.feature);
  });

  LoadedSplit split;
  for (std::size_t i = 0; i < n; ++i) {
    if (!slot_warnings[i].empty()) split.warnings.push_back(slot_warnings[i]);
    if (!present[i]) continue;
    split.records.push_back(records[i]);
    split.profiles.push_back(profiles[i]);
    split.features.push_back(feature_values[i]);
  }
  return split;
}

void write_profiles_csv(const LoadedSplit& split,
                        const std::filesystem::path& path) {
  std::string out = "utterance_id,attack_id,key,leading_s,trailing_s,total_s\n";
  for (std::size_t i = 0; i < split.records.size(); ++i) {
    const protocol::TrialRecord& r = split.records[i];
    const silence::SilenceProfile& p = split.profiles[i];
    out += r.utterance_id + ',' + protocol::attack_label(r) + ',' +
           std::string(protocol::key_name(r.key)) + ',' + fmt6(p.leading_s) +
           ',' + fmt6(p.trailing_s) + ',' + fmt6(p.total_s) + '\n';
  }
  write_text_file(path, out);
}

void save_checkpoint(const Checkpoint& checkpoint,
                     const std::filesystem::path& path) {
  const model::FcnnParams& p = checkpoint.params;
  constexpr std::size_t kH = model::FcnnParams::kHidden;

  nlohmann::ordered_json j;
  j["format"] = "silaudit-fcnn";
  j["version"] = 1;
  j["feature"] = features::feature_mode_name(checkpoint.feature);
  j["trim"] = {{"top_db", checkpoint.trim.top_db},
               {"frame_length", checkpoint.trim.frame_length},
               {"hop_length", checkpoint.trim.hop_length}};
  j["normalizer"] = {{"mean", checkpoint.normalizer.mean},
                     {"stddev", checkpoint.normalizer.stddev}};
  const model::TrainConfig& cfg = checkpoint.train_config;
  j["train_config"] = {{"epochs", cfg.epochs},
                       {"learning_rate", cfg.learning_rate},
                       {"weight_decay", cfg.weight_decay},
                       {"dropout", cfg.dropout},
                       {"batch_size", cfg.batch_size},
                       {"seed", cfg.seed}};
  j["layers"] = nlohmann::ordered_json::array();
  j["layers"].push_back(layer_json("fc1", kH, 1, p.w1, p.b1));
  j["layers"].push_back(layer_json("fc2", kH, kH, p.w2, p.b2));
  j["layers"].push_back(
      layer_json("fc3", 1, kH, p.w3, std::vector<double>{p.b3}));

  write_text_file(path, j.dump(1) + "\n");
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError("checkpoint " + path.string() + ": " + e.what());
  }
  if (j.value("format", "") != "silaudit-fcnn" || j.value("version", 0) != 1) {
    throw DataError("checkpoint " + path.string() +
                    ": unknown format or version");
  }

  Checkpoint checkpoint;
  checkpoint.feature = features::parse_feature_mode(
      j.at("feature").get<std::string>());
  const auto& jt = j.at("trim");
  checkpoint.trim.top_db = jt.at("top_db").get<double>();
  checkpoint.trim.frame_length = jt.at("frame_length").get<std::size_t>();
  checkpoint.trim.hop_length = jt.at("hop_length").get<std::size_t>();
  checkpoint.trim.validate();
  checkpoint.normalizer.mean = j.at("normalizer").at("mean").get<double>();
  checkpoint.normalizer.stddev =
      j.at("normalizer").at("stddev").get<double>();
  const auto& jc = j.at("train_config");
  checkpoint.train_config.epochs = jc.at("epochs").get<int>();
  checkpoint.train_config.learning_rate =
      jc.at("learning_rate").get<double>();
  checkpoint.train_config.weight_decay = jc.at("weight_decay").get<double>();
  checkpoint.train_config.dropout = jc.at("dropout").get<double>();
  checkpoint.train_config.batch_size = jc.at("batch_size").get<int>();
  checkpoint.train_config.seed = jc.at("seed").get<std::uint64_t>();

  constexpr std::size_t kH = model::FcnnParams::kHidden;
  const auto& layers = j.at("layers");
  if (!layers.is_array() || layers.size() != 3) {
    throw DataError("checkpoint " + path.string() + ": expected 3 layers");
  }
  model::FcnnParams& p = checkpoint.params;
  load_layer(layers[0], "fc1", kH, 1, p.w1, p.b1);
  load_layer(layers[1], "fc2", kH, kH, p.w2, p.b2);
  std::vector<double> b3;
  load_layer(layers[2], "fc3", 1, kH, p.w3, b3);
  p.b3 = b3.at(0);
  return checkpoint;
}

void write_score_file(std::span<const metrics::ScoredTrial> trials,
                      const std::filesystem::path& path) {
  std::string out;
  for (const metrics::ScoredTrial& t : trials) {
    out += t.utterance_id + ' ' + fmt6(t.score) + '\n';
  }
  write_text_file(path, out);
}

std::vector<std::pair<std::string, double>> read_score_file(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::pair<std::string, double>> scores;
  std::string id;
  double value = 0.0;
  while (in >> id >> value) scores.emplace_back(id, value);
  return scores;
}

Checkpoint train_on_split(const LoadedSplit& split,
                          const silence::TrimParams& trim,
                          features::DurationFeatureMode feature,
                          const model::TrainConfig& cfg) {
  Checkpoint checkpoint;
  checkpoint.trim = trim;
  checkpoint.feature = feature;
  checkpoint.train_config = cfg;
  checkpoint.normalizer = features::fit_normalizer(split.features);

  std::vector<model::Example> examples(split.records.size());
  for (std::size_t i = 0; i < split.records.size(); ++i) {
    examples[i] = {checkpoint.normalizer.apply(split.features[i]),
                   label_of(split.records[i].key)};
  }
  checkpoint.params = model::train(examples, cfg).params;
  return checkpoint;
}

EvalResult evaluate_split(const LoadedSplit& split,
                          const Checkpoint& checkpoint) {
  std::vector<double> normalized(split.features.size());
  for (std::size_t i = 0; i < split.features.size(); ++i) {
    normalized[i] = checkpoint.normalizer.apply(split.features[i]);
  }
  return summarize_scores(
      scored_trials(split, model::score(checkpoint.params, normalized)));
}

EvalResult evaluate_score_file(const std::filesystem::path& protocol_path,
                               const std::filesystem::path& scores_path,
                               bool skip_missing) {
  const std::vector<protocol::TrialRecord> records =
      protocol::parse_protocol(read_text_file(protocol_path));
  const auto scores = read_score_file(scores_path);

  std::unordered_map<std::string, double> by_id;
  by_id.reserve(scores.size());
  for (const auto& [id, score] : scores) {
    if (!by_id.emplace(id, score).second) {
      throw DataError("duplicate score for '" + id + "'");
    }
  }

  std::unordered_map<std::string, protocol::Key> keys;
  std::vector<metrics::ScoredTrial> trials;
  trials.reserve(records.size());
  for (const protocol::TrialRecord& record : records) {
    keys.emplace(record.utterance_id, record.key);
    const auto it = by_id.find(record.utterance_id);
    if (it == by_id.end()) {
      if (skip_missing) continue;
      throw DataError("no score for '" + record.utterance_id + "' in " +
                      scores_path.string());
    }
    trials.push_back({record.utterance_id, it->second, record.key});
  }
  for (const auto& [id, score] : scores) {
    if (!keys.contains(id)) {
      throw DataError("score for unknown utterance '" + id + "'");
    }
  }
  return summarize_scores(std::move(trials));
}

AuditResult run_audit(const AuditOptions& options) {
  auto load_options = [&](const SplitInput& input, bool is_train) {
    LoadOptions lo;
    lo.protocol_path = input.protocol_path;
    lo.audio_dir = input.audio_dir;
    lo.trim = options.trim;
    lo.feature = options.feature;
    lo.subselect_seconds = is_train ? options.subselect_seconds : -1.0;
    lo.skip_missing = options.skip_missing;
    lo.seed = options.seed;
    lo.threads = options.threads;
    return lo;
  };

  AuditResult result;
  result.train_split = load_split(load_options(options.train, true));
  result.dev_split = load_split(load_options(options.dev, false));
  result.eval_split = load_split(load_options(options.eval, false));

  result.checkpoint = train_on_split(result.train_split, options.trim,
                                     options.feature, options.train_config);

  report::AuditReport& rep = result.report;
  rep.config.trim = options.trim;
  rep.config.feature = options.feature;
  rep.config.subselect_seconds = options.subselect_seconds;
  rep.config.seed = options.seed;
  rep.config.train = options.train_config;

  struct Bound {
    const SplitInput* input;
    LoadedSplit* split;
    std::vector<metrics::ScoredTrial>* scores;
  };
  const Bound bound[] = {
      {&options.train, &result.train_split, &result.train_scores},
      {&options.dev, &result.dev_split, &result.dev_scores},
      {&options.eval, &result.eval_split, &result.eval_scores}};

  std::uint64_t baseline_stream = 0;
  for (const Bound& b : bound) {
    std::vector<report::UtteranceProfile> rows(b.split->records.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      rows[i] = {b.split->records[i], b.split->profiles[i]};
    }
    report::SplitStats stats;
    stats.split = b.input->name;
    stats.groups = report::per_attack_stats(rows);
    stats.spoof_pooled = report::pooled_spoof_stats(rows);
    rep.splits.push_back(std::move(stats));

    EvalResult eval = evaluate_split(*b.split, result.checkpoint);
    rep.classifier.push_back(eval_summary(b.input->name, eval));
    *b.scores = std::move(eval.scores);

    Rng rng(derive_seed(derive_seed(options.seed, kBaselineStream),
                        baseline_stream++));
    const std::vector<double> random_scores =
        model::random_baseline(b.split->records.size(), rng);
    rep.random_baseline.push_back(eval_summary(
        b.input->name, summarize_scores(scored_trials(*b.split,
                                                      random_scores))));
  }
  return result;
}

TrimExportResult trim_export(const TrimExportOptions& options) {
  options.trim.validate();
  const std::vector<protocol::TrialRecord> records =
      protocol::parse_protocol(read_text_file(options.protocol_path));

  const std::filesystem::path audio_out = options.out_dir / "audio";
  std::filesystem::create_directories(audio_out);

  const std::size_t n = records.size();
  std::vector<char> written(n, 0);
  std::vector<std::string> slot_warnings(n);

  parallel_for(n, options.threads, [&](std::size_t i) {
    const protocol::TrialRecord& record = records[i];
    const std::filesystem::path path =
        options.audio_dir / (record.utterance_id + ".wav");
    if (!std::filesystem::exists(path)) {
      if (options.skip_missing) {
        slot_warnings[i] =
            "skipped '" + record.utterance_id + "': missing audio file";
        return;
      }
      throw DataError("missing audio file for '" + record.utterance_id +
                      "': " + path.string());
    }
    const audio::Waveform w = audio::read_wav_file(path);
    const audio::Waveform trimmed = options.leading_only
                                        ? silence::trim_leading(w, options.trim)
                                        : silence::trim(w, options.trim);
    if (trimmed.empty()) {
      slot_warnings[i] = "skipped '" + record.utterance_id +
                         "': fully silent, nothing left after trimming";
      return;
    }
    audio::write_wav_file(audio_out / (record.utterance_id + ".wav"),
                          trimmed);
    written[i] = 1;
  });

  TrimExportResult result;
  std::vector<protocol::TrialRecord> kept;
  std::string warning_text;
  for (std::size_t i = 0; i < n; ++i) {
    if (written[i]) {
      kept.push_back(records[i]);
      ++result.written;
    } else {
      ++result.skipped;
      result.warnings.push_back(slot_warnings[i]);
      warning_text += slot_warnings[i] + '\n';
    }
  }
  write_text_file(options.out_dir / "protocol.txt",
                  protocol::format_protocol(kept));
  write_text_file(options.out_dir / "skipped.txt", warning_text);
  return result;
}

}  // namespace pipeline
}  // namespace silaudit
