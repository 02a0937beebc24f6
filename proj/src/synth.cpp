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

#include "silaudit/synth.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "silaudit/audio.hpp"
#include "silaudit/error.hpp"
#include "silaudit/rng.hpp"

namespace silaudit {
namespace synth {

namespace {

constexpr double kSpeechAmplitude = 0.5;
constexpr double kMinSpeechSeconds = 0.2;
constexpr double kPi = 3.14159265358979323846;

double draw_truncated(Rng& rng, const GaussianSpec& g, double lo) {
  if (g.stddev == 0.0) return std::max(g.mean, lo);
  for (int tries = 0; tries < 1000; ++tries) {
    const double v = rng.gaussian(g.mean, g.stddev);
    if (v >= lo) return v;
  }
  return lo;
}

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", s);
  return buf;
}

void check_gaussian(const GaussianSpec& g, const char* what) {
  if (g.stddev < 0.0) {
    throw Error(std::string(what) + ": stddev must be non-negative");
  }
  if (!std::isfinite(g.mean) || !std::isfinite(g.stddev)) {
    throw Error(std::string(what) + ": non-finite parameter");
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

GaussianSpec gaussian_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_object() || !j.contains("mean") || !j.contains("stddev")) {
    throw Error(std::string(what) + ": expected {\"mean\", \"stddev\"}");
  }
  return {j["mean"].get<double>(), j["stddev"].get<double>()};
}

nlohmann::json gaussian_to_json(const GaussianSpec& g) {
  return {{"mean", g.mean}, {"stddev", g.stddev}};
}

ClassSpec make_class(std::optional<std::string> attack, std::size_t count,
                     GaussianSpec leading, GaussianSpec trailing,
                     SpeechKind kind, double tone_hz) {
  ClassSpec c;
  c.attack_id = std::move(attack);
  c.count = count;
  c.leading_s = leading;
  c.trailing_s = trailing;
  c.speech_s = {0.5, 0.1};
  c.speech_kind = kind;
  c.tone_hz = tone_hz;
  c.noise_amplitude = 0.5;
  return c;
}

CorpusSpec separable_split(std::size_t n_per_class, std::uint64_t seed) {
  CorpusSpec spec;
  spec.sample_rate = 16000;
  spec.seed = seed;
  spec.classes.push_back(make_class(std::nullopt, n_per_class, {0.35, 0.05},
                                    {0.10, 0.03}, SpeechKind::kTone, 500.0));
  spec.classes.push_back(make_class("A01", n_per_class, {0.05, 0.02},
                                    {0.10, 0.03}, SpeechKind::kNoise, 0.0));
  return spec;
}

CorpusSpec null_leak_split(std::size_t n_per_class, std::uint64_t seed) {
  CorpusSpec spec;
  spec.sample_rate = 16000;
  spec.seed = seed;
  spec.classes.push_back(make_class(std::nullopt, n_per_class, {0.20, 0.05},
                                    {0.10, 0.03}, SpeechKind::kTone, 500.0));
  spec.classes.push_back(make_class("A01", n_per_class, {0.20, 0.05},
                                    {0.10, 0.03}, SpeechKind::kNoise, 0.0));
  return spec;
}

CorpusSpec overlap_split(std::size_t n_per_class, std::uint64_t seed) {
  CorpusSpec spec;
  spec.sample_rate = 16000;
  spec.seed = seed;
  spec.classes.push_back(make_class(std::nullopt, n_per_class, {0.35, 0.05},
                                    {0.10, 0.03}, SpeechKind::kTone, 500.0));
  spec.classes.push_back(make_class("A01", n_per_class, {0.35, 0.05},
                                    {0.10, 0.03}, SpeechKind::kNoise, 0.0));
  return spec;
}

CorpusSpec paper_like_split(bool eval_attacks, std::uint64_t seed) {
  CorpusSpec spec;
  spec.sample_rate = 16000;
  spec.seed = seed;
  spec.classes.push_back(make_class(std::nullopt, 600, {0.35, 0.08},
                                    {0.15, 0.05}, SpeechKind::kTone, 500.0));
  struct AttackDef {
    const char* id;
    double lead_mean, lead_sd;
  };
  // Train/dev systems include two with bonafide-like silence; the eval
  // systems are mostly well separated.
  static const AttackDef kTrainDev[] = {
      {"A01", 0.02, 0.01}, {"A02", 0.05, 0.02}, {"A03", 0.08, 0.03},
      {"A04", 0.12, 0.04}, {"A05", 0.30, 0.08}, {"A06", 0.35, 0.08}};
  static const AttackDef kEval[] = {
      {"A07", 0.02, 0.01}, {"A08", 0.03, 0.02}, {"A09", 0.05, 0.02},
      {"A10", 0.06, 0.03}, {"A11", 0.30, 0.08}, {"A12", 0.10, 0.04}};
  int i = 0;
  for (const AttackDef& a : eval_attacks ? std::span(kEval)
                                         : std::span(kTrainDev)) {
    const bool overlapping = a.lead_mean >= 0.25;
    spec.classes.push_back(make_class(
        a.id, 100, {a.lead_mean, a.lead_sd},
        overlapping ? GaussianSpec{0.15, 0.05} : GaussianSpec{0.05, 0.02},
        i % 2 == 0 ? SpeechKind::kNoise : SpeechKind::kTone,
        300.0 + 60.0 * i));
    ++i;
  }
  return spec;
}

}  // namespace

void CorpusSpec::validate() const {
  if (sample_rate <= 0) throw Error("sample_rate must be positive");
  bool has_bonafide = false;
  bool has_spoof = false;
  for (const ClassSpec& c : classes) {
    if (c.count < 1) throw Error("class count must be at least 1");
    check_gaussian(c.leading_s, "leading_s");
    check_gaussian(c.trailing_s, "trailing_s");
    check_gaussian(c.speech_s, "speech_s");
    if (c.speech_kind == SpeechKind::kTone && !(c.tone_hz > 0.0)) {
      throw Error("tone_hz must be positive");
    }
    if (c.speech_kind == SpeechKind::kNoise &&
        (c.noise_amplitude <= 0.0 || c.noise_amplitude > 1.0)) {
      throw Error("noise_amplitude must be in (0, 1]");
    }
    (c.attack_id ? has_spoof : has_bonafide) = true;
  }
  if (!has_bonafide || !has_spoof) {
    throw Error("corpus spec needs at least one bonafide and one spoof class");
  }
}

GeneratedCorpus generate_corpus(const CorpusSpec& spec,
                                const std::filesystem::path& out_dir) {
  spec.validate();

  GeneratedCorpus corpus;
  corpus.audio_dir = out_dir / "audio";
  corpus.protocol_path = out_dir / "protocol.txt";
  corpus.manifest_path = out_dir / "manifest.csv";
  std::filesystem::create_directories(corpus.audio_dir);

  std::vector<protocol::TrialRecord> records;
  std::size_t global_index = 0;

  for (std::size_t ci = 0; ci < spec.classes.size(); ++ci) {
    const ClassSpec& cls = spec.classes[ci];
    const std::string label = cls.attack_id ? *cls.attack_id : "BONAFIDE";
    const std::uint64_t class_seed = derive_seed(spec.seed, ci);

    for (std::size_t ti = 0; ti < cls.count; ++ti, ++global_index) {
      Rng rng(derive_seed(class_seed, ti));

      const double rate = static_cast<double>(spec.sample_rate);
      const std::size_t lead = static_cast<std::size_t>(
          std::llround(draw_truncated(rng, cls.leading_s, 0.0) * rate));
      const std::size_t trail = static_cast<std::size_t>(
          std::llround(draw_truncated(rng, cls.trailing_s, 0.0) * rate));
      const std::size_t speech = static_cast<std::size_t>(std::llround(
          draw_truncated(rng, cls.speech_s, kMinSpeechSeconds) * rate));

      audio::Waveform w;
      w.sample_rate = spec.sample_rate;
      w.samples.assign(lead + speech + trail, 0.0);
      if (cls.speech_kind == SpeechKind::kTone) {
        const double step = 2.0 * kPi * cls.tone_hz / rate;
        for (std::size_t k = 0; k < speech; ++k) {
          w.samples[lead + k] =
              kSpeechAmplitude * std::sin(step * static_cast<double>(k));
        }
      } else {
        for (std::size_t k = 0; k < speech; ++k) {
          w.samples[lead + k] =
              rng.uniform(-cls.noise_amplitude, cls.noise_amplitude);
        }
      }

      char utt[64];
      std::snprintf(utt, sizeof(utt), "SYN_%s_%06zu", label.c_str(),
                    global_index);
      char spk[32];
      std::snprintf(spk, sizeof(spk), "SYNSPK%02zu", ci);

      audio::write_wav_file(corpus.audio_dir / (std::string(utt) + ".wav"), w);

      protocol::TrialRecord record;
      record.speaker_id = spk;
      record.utterance_id = utt;
      record.attack_id = cls.attack_id;
      record.key = cls.attack_id ? protocol::Key::kSpoof
                                 : protocol::Key::kBonafide;
      records.push_back(record);

      ManifestRow row;
      row.utterance_id = utt;
      row.attack_id = cls.attack_id;
      row.key = record.key;
      row.leading_s = static_cast<double>(lead) / rate;
      row.trailing_s = static_cast<double>(trail) / rate;
      row.total_s = static_cast<double>(lead + speech + trail) / rate;
      corpus.manifest.push_back(std::move(row));
    }
  }

  {
    std::ofstream out(corpus.protocol_path, std::ios::trunc);
    if (!out) throw IoError("cannot write " + corpus.protocol_path.string());
    out << protocol::format_protocol(records);
  }
  {
    std::ofstream out(corpus.manifest_path, std::ios::trunc);
    if (!out) throw IoError("cannot write " + corpus.manifest_path.string());
    out << "utterance_id,attack_id,key,leading_s,trailing_s,total_s\n";
    for (const ManifestRow& row : corpus.manifest) {
      out << row.utterance_id << ','
          << (row.attack_id ? *row.attack_id : "-") << ','
          << protocol::key_name(row.key) << ','
          << format_seconds(row.leading_s) << ','
          << format_seconds(row.trailing_s) << ','
          << format_seconds(row.total_s) << '\n';
    }
  }
  {
    std::ofstream out(out_dir / "spec.json", std::ios::trunc);
    out << corpus_spec_to_json(spec) << '\n';
  }
  return corpus;
}

std::vector<ManifestRow> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());

  std::vector<ManifestRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line_no == 1) continue;  // header
    const auto fields = split_csv_line(line);
    if (fields.size() != 6) {
      throw ParseError("manifest row needs 6 fields", line_no);
    }
    ManifestRow row;
    row.utterance_id = fields[0];
    if (fields[1] != "-") row.attack_id = fields[1];
    row.key = protocol::parse_key(fields[2], line_no);
    row.leading_s = std::stod(fields[3]);
    row.trailing_s = std::stod(fields[4]);
    row.total_s = std::stod(fields[5]);
    rows.push_back(std::move(row));
  }
  return rows;
}

CorpusSpec corpus_spec_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("corpus spec: ") + e.what());
  }

  CorpusSpec spec;
  spec.sample_rate = j.value("sample_rate", 16000);
  spec.seed = j.value("seed", std::uint64_t{0});
  if (!j.contains("classes") || !j["classes"].is_array()) {
    throw Error("corpus spec: missing 'classes' array");
  }
  for (const auto& jc : j["classes"]) {
    ClassSpec c;
    if (jc.contains("attack_id") && !jc["attack_id"].is_null()) {
      c.attack_id = jc["attack_id"].get<std::string>();
    }
    c.count = jc.value("count", std::size_t{0});
    c.leading_s = gaussian_from_json(jc.at("leading_s"), "leading_s");
    c.trailing_s = gaussian_from_json(jc.at("trailing_s"), "trailing_s");
    if (jc.contains("speech_s")) {
      c.speech_s = gaussian_from_json(jc["speech_s"], "speech_s");
    }
    const std::string kind = jc.value("speech_kind", "tone");
    if (kind == "tone") {
      c.speech_kind = SpeechKind::kTone;
      c.tone_hz = jc.value("tone_hz", 440.0);
    } else if (kind == "noise") {
      c.speech_kind = SpeechKind::kNoise;
      c.noise_amplitude = jc.value("noise_amplitude", 0.5);
    } else {
      throw Error("corpus spec: unknown speech_kind '" + kind + "'");
    }
    spec.classes.push_back(std::move(c));
  }
  spec.validate();
  return spec;
}

CorpusSpec load_corpus_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return corpus_spec_from_json(ss.str());
}

std::string corpus_spec_to_json(const CorpusSpec& spec) {
  nlohmann::ordered_json j;
  j["sample_rate"] = spec.sample_rate;
  j["seed"] = spec.seed;
  j["classes"] = nlohmann::ordered_json::array();
  for (const ClassSpec& c : spec.classes) {
    nlohmann::ordered_json jc;
    if (c.attack_id) {
      jc["attack_id"] = *c.attack_id;
    } else {
      jc["attack_id"] = nullptr;
    }
    jc["count"] = c.count;
    jc["leading_s"] = gaussian_to_json(c.leading_s);
    jc["trailing_s"] = gaussian_to_json(c.trailing_s);
    jc["speech_s"] = gaussian_to_json(c.speech_s);
    if (c.speech_kind == SpeechKind::kTone) {
      jc["speech_kind"] = "tone";
      jc["tone_hz"] = c.tone_hz;
    } else {
      jc["speech_kind"] = "noise";
      jc["noise_amplitude"] = c.noise_amplitude;
    }
    j["classes"].push_back(std::move(jc));
  }
  return j.dump(2);
}

ExperimentSpec preset(const std::string& name, std::uint64_t seed) {
  const std::uint64_t train_seed = derive_seed(seed, 101);
  const std::uint64_t dev_seed = derive_seed(seed, 102);
  const std::uint64_t eval_seed = derive_seed(seed, 103);

  if (name == "separable") {
    return {separable_split(1000, train_seed), separable_split(1000, dev_seed),
            separable_split(1000, eval_seed)};
  }
  if (name == "null-leak") {
    return {null_leak_split(1000, train_seed), null_leak_split(1000, dev_seed),
            null_leak_split(1000, eval_seed)};
  }
  if (name == "devgap") {
    return {separable_split(1000, train_seed), overlap_split(1000, dev_seed),
            separable_split(1000, eval_seed)};
  }
  if (name == "paper-like") {
    return {paper_like_split(false, train_seed),
            paper_like_split(false, dev_seed),
            paper_like_split(true, eval_seed)};
  }
  throw Error("unknown preset '" + name +
              "' (expected separable, null-leak, devgap or paper-like)");
}

std::vector<std::string> preset_names() {
  return {"separable", "null-leak", "devgap", "paper-like"};
}

}  // namespace synth
}  // namespace silaudit
