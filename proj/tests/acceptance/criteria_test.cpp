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
//
// Acceptance suite. Every criterion prints one line:
//   [acceptance] A<n> <name>: PASS|FAIL|SKIP | <detail>
// A1-A4 exercise the scaled synthetic experiments, A5-A9 the property
// and determinism suites, and A10 optionally checks the real corpus.

#include <unistd.h>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "silaudit/error.hpp"
#include "silaudit/metrics.hpp"
#include "silaudit/model.hpp"
#include "silaudit/pipeline.hpp"
#include "silaudit/protocol.hpp"
#include "silaudit/rng.hpp"
#include "silaudit/silence.hpp"
#include "silaudit/synth.hpp"
#include "support/oracles.hpp"
#include "support/waveform_gen.hpp"

namespace fs = std::filesystem;
using namespace silaudit;

namespace {

void report_line(const char* id, const char* name, const char* verdict,
                 const std::string& detail) {
  std::printf("[acceptance] %s %s: %s%s%s\n", id, name, verdict,
              detail.empty() ? "" : " | ", detail.c_str());
  std::fflush(stdout);
}

void criterion(const char* id, const char* name, bool pass,
               const std::string& detail) {
  report_line(id, name, pass ? "PASS" : "FAIL", detail);
  CHECK_MESSAGE(pass, id, " ", name, ": ", detail);
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

class Workspace {
 public:
  Workspace() {
    root_ = fs::temp_directory_path() /
            ("silaudit_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(root_);
  }
  ~Workspace() {
    std::error_code ec;
    fs::remove_all(root_, ec);
  }
  const fs::path& root() const { return root_; }

 private:
  fs::path root_;
};

Workspace& workspace() {
  static Workspace ws;
  return ws;
}

int run_cli(const std::string& args) {
  const std::string log = (workspace().root() / "cli.log").string();
  const std::string cmd = std::string(SILAUDIT_CLI_PATH) + " " + args +
                          " >>" + log + " 2>&1";
  return std::system(cmd.c_str());
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(bool(in), "cannot open ", path.string());
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

nlohmann::json parse_json_file(const fs::path& path) {
  return nlohmann::json::parse(slurp(path));
}

double classifier_eer(const nlohmann::json& report, const std::string& split,
                      double* accuracy = nullptr) {
  for (const auto& row : report.at("classifier")) {
    if (row.at("split") == split) {
      if (accuracy) *accuracy = row.at("accuracy_at_eer").get<double>();
      return row.at("eer").get<double>();
    }
  }
  REQUIRE_MESSAGE(false, "split not found in report: ", split);
  return 1.0;
}

// Artifacts of the A1 separable experiment, shared with A4.
struct SeparableArtifacts {
  fs::path corpus;
  fs::path checkpoint;
  double audit_eval_eer = 1.0;
  double audit_eval_accuracy = 0.0;
  double cli_eval_eer = 1.0;
  double audit_seconds = 0.0;
  bool ok = false;
};

const SeparableArtifacts& separable_artifacts() {
  static SeparableArtifacts a = [] {
    SeparableArtifacts art;
    const fs::path root = workspace().root();
    art.corpus = root / "separable";
    const fs::path audit_out = root / "separable_audit";
    const fs::path train_out = root / "separable_train";
    const fs::path eval_out = root / "separable_eval_plain";

    if (run_cli("synth --preset separable --out " + art.corpus.string() +
                " --seed 42") != 0) {
      return art;
    }

    const auto started = std::chrono::steady_clock::now();
    if (run_cli("audit --corpus " + art.corpus.string() + " --out " +
                audit_out.string() + " --seed 42") != 0) {
      return art;
    }
    art.audit_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      started)
            .count();

    const auto report = parse_json_file(audit_out / "report.json");
    art.audit_eval_eer =
        classifier_eer(report, "eval", &art.audit_eval_accuracy);

    if (run_cli("train --protocol " +
                (art.corpus / "train" / "protocol.txt").string() +
                " --audio-dir " + (art.corpus / "train" / "audio").string() +
                " --out " + train_out.string() + " --seed 42") != 0) {
      return art;
    }
    art.checkpoint = train_out / "checkpoint.json";

    if (run_cli("eval --protocol " +
                (art.corpus / "eval" / "protocol.txt").string() +
                " --audio-dir " + (art.corpus / "eval" / "audio").string() +
                " --checkpoint " + art.checkpoint.string() + " --out " +
                eval_out.string()) != 0) {
      return art;
    }
    art.cli_eval_eer =
        parse_json_file(eval_out / "eval.json").at("eer").get<double>();
    art.ok = true;
    return art;
  }();
  return a;
}

pipeline::LoadOptions corpus_load_options(const synth::GeneratedCorpus& c) {
  pipeline::LoadOptions lo;
  lo.protocol_path = c.protocol_path;
  lo.audio_dir = c.audio_dir;
  return lo;
}

double api_eval_eer(const pipeline::LoadedSplit& split,
                    const pipeline::Checkpoint& checkpoint) {
  return pipeline::evaluate_split(split, checkpoint).eer.eer;
}

std::vector<metrics::ScoredTrial> random_trial_set(Rng& rng, std::size_t n) {
  std::vector<metrics::ScoredTrial> trials;
  const int style = static_cast<int>(rng.below(4));
  for (std::size_t i = 0; i < n; ++i) {
    double score = 0.0;
    switch (style) {
      case 0:
        score = rng.uniform01();
        break;
      case 1:
        score = rng.gaussian(0.0, 3.0);
        break;
      case 2:
        score = static_cast<double>(rng.below(7)) / 6.0;  // heavy ties
        break;
      default:
        score = 0.25;  // fully tied
    }
    const protocol::Key key =
        i == 0   ? protocol::Key::kBonafide
        : i == 1 ? protocol::Key::kSpoof
                 : (rng.uniform01() < 0.5 ? protocol::Key::kBonafide
                                          : protocol::Key::kSpoof);
    trials.push_back({"T" + std::to_string(i), score, key});
  }
  return trials;
}

}  // namespace

TEST_CASE("A1 separable synthetic audit") {
  const SeparableArtifacts& art = separable_artifacts();
  REQUIRE_MESSAGE(art.ok, "pipeline commands failed; see cli.log");

  const bool pass = art.audit_eval_eer < 0.05 &&
                    art.audit_eval_accuracy > 0.95 &&
                    art.audit_seconds < 120.0;
  criterion("A1", "separable synthetic audit", pass,
            "eval EER " + fmt("%.4f", art.audit_eval_eer) + " (< 0.05), " +
                "accuracy " + fmt("%.4f", art.audit_eval_accuracy) +
                " (> 0.95), audit " + fmt("%.1f", art.audit_seconds) +
                " s (< 120)");
}

TEST_CASE("A2 null-leak control") {
  const fs::path root = workspace().root() / "null_leak";
  const auto exp = synth::preset("null-leak", 7);
  const auto train_corpus = synth::generate_corpus(exp.train, root / "train");
  const auto eval_corpus = synth::generate_corpus(exp.eval, root / "eval");

  const auto train_split =
      pipeline::load_split(corpus_load_options(train_corpus));
  const auto eval_split =
      pipeline::load_split(corpus_load_options(eval_corpus));

  bool pass = true;
  std::string detail = "eval EER per seed:";
  for (std::uint64_t seed : {1, 2, 3, 4}) {
    model::TrainConfig cfg;
    cfg.seed = seed;
    const auto checkpoint = pipeline::train_on_split(
        train_split, silence::TrimParams{},
        features::DurationFeatureMode::kLeading, cfg);
    const double eer = api_eval_eer(eval_split, checkpoint);
    detail += " " + fmt("%.3f", eer);
    pass = pass && eer >= 0.45 && eer <= 0.55;
  }
  detail += " (all in [0.45, 0.55])";
  std::error_code ec;
  fs::remove_all(root, ec);
  criterion("A2", "null-leak control", pass, detail);
}

TEST_CASE("A3 dev/eval gap demonstration") {
  const fs::path root = workspace().root() / "devgap";
  const auto exp = synth::preset("devgap", 11);
  const auto train_corpus = synth::generate_corpus(exp.train, root / "train");
  const auto dev_corpus = synth::generate_corpus(exp.dev, root / "dev");
  const auto eval_corpus = synth::generate_corpus(exp.eval, root / "eval");

  const auto train_split =
      pipeline::load_split(corpus_load_options(train_corpus));
  const auto dev_split = pipeline::load_split(corpus_load_options(dev_corpus));
  const auto eval_split =
      pipeline::load_split(corpus_load_options(eval_corpus));

  model::TrainConfig cfg;
  cfg.seed = 11;
  const auto checkpoint = pipeline::train_on_split(
      train_split, silence::TrimParams{},
      features::DurationFeatureMode::kLeading, cfg);
  const double dev_eer = api_eval_eer(dev_split, checkpoint);
  const double eval_eer = api_eval_eer(eval_split, checkpoint);

  std::error_code ec;
  fs::remove_all(root, ec);
  criterion("A3", "dev/eval gap demonstration",
            dev_eer - eval_eer >= 0.10,
            "dev EER " + fmt("%.4f", dev_eer) + ", eval EER " +
                fmt("%.4f", eval_eer) + ", gap " +
                fmt("%.4f", dev_eer - eval_eer) + " (>= 0.10)");
}

TEST_CASE("A4 trim-eval degradation") {
  const SeparableArtifacts& art = separable_artifacts();
  REQUIRE_MESSAGE(art.ok, "pipeline commands failed; see cli.log");

  const fs::path out = workspace().root() / "separable_eval_trimmed";
  REQUIRE(run_cli("eval --protocol " +
                  (art.corpus / "eval" / "protocol.txt").string() +
                  " --audio-dir " + (art.corpus / "eval" / "audio").string() +
                  " --checkpoint " + art.checkpoint.string() + " --out " +
                  out.string() + " --trim-eval") == 0);
  const double trimmed_eer =
      parse_json_file(out / "eval.json").at("eer").get<double>();

  criterion("A4", "trim-eval degradation",
            trimmed_eer >= 0.40 && art.cli_eval_eer < 0.05,
            "untrimmed EER " + fmt("%.4f", art.cli_eval_eer) +
                " (< 0.05), trimmed EER " + fmt("%.4f", trimmed_eer) +
                " (>= 0.40)");

  // A1 + A4 are done with the separable corpus; reclaim the disk.
  std::error_code ec;
  fs::remove_all(art.corpus, ec);
}

TEST_CASE("A5 EER oracle equivalence") {
  Rng rng(50005);
  double worst = 0.0;
  for (int round = 0; round < 1000; ++round) {
    const std::size_t n = 2 + rng.below(999);
    const auto trials = random_trial_set(rng, n);
    const double got = metrics::compute_eer(trials).eer;
    const double want = test_support::brute_force_eer(trials).eer;
    worst = std::max(worst, std::abs(got - want));
  }
  criterion("A5", "EER oracle equivalence", worst <= 1e-9,
            "1000 trial sets, max |delta| " + fmt("%.2e", worst) +
                " (<= 1e-9)");
}

TEST_CASE("A6 gradient correctness") {
  constexpr int kTriples = 100;
  constexpr double kH = 1e-5;

  struct Triple {
    model::FcnnParams params;
    double x;
    int label;
    model::DropoutMasks masks;
  };
  std::vector<Triple> triples;
  Rng rng(60006);
  while (triples.size() < kTriples) {
    Triple t;
    t.params = model::init_params(rng.next_u64());
    for (double& b : t.params.b1) b = rng.uniform(-0.3, 0.3);
    for (double& b : t.params.b2) b = rng.uniform(-0.3, 0.3);
    t.params.b3 = rng.uniform(-0.3, 0.3);
    t.x = rng.uniform(-2.0, 2.0);
    t.label = static_cast<int>(rng.below(2));
    if (triples.size() % 2 == 1) t.masks = model::sample_masks(0.10, rng);
    if (test_support::near_relu_kink(t.params, t.x, t.masks, 1e-4)) continue;
    triples.push_back(std::move(t));
  }

  // The sweep covers every coordinate of every triple; split across a
  // couple of workers. doctest assertions happen after the join.
  std::atomic<std::size_t> bad{0};
  std::atomic<std::uint64_t> worst_bits{0};
  const std::size_t pool =
      std::min<std::size_t>(4, std::max(1u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    double local_worst = 0.0;
    for (std::size_t t; (t = next.fetch_add(1)) < triples.size();) {
      const Triple& triple = triples[t];
      const model::FcnnParams analytic = model::backward(
          triple.params, triple.x, triple.label, triple.masks);
      const std::vector<double> flat = test_support::flatten(analytic);
      for (std::size_t c = 0; c < flat.size(); ++c) {
        const double fd = test_support::fd_gradient_at(
            triple.params, triple.x, triple.label, triple.masks, c, kH);
        const double denom = std::max({std::abs(fd), std::abs(flat[c]), 1e-6});
        const double rel = std::abs(fd - flat[c]) / denom;
        local_worst = std::max(local_worst, rel);
        if (rel >= 1e-4) bad.fetch_add(1);
      }
    }
    // Merge the worst relative error via bit tricks (doubles are
    // non-negative here, so bit order matches value order).
    std::uint64_t bits;
    std::memcpy(&bits, &local_worst, sizeof(bits));
    std::uint64_t seen = worst_bits.load();
    while (bits > seen && !worst_bits.compare_exchange_weak(seen, bits)) {
    }
  };
  std::vector<std::thread> workers;
  for (std::size_t i = 0; i < pool; ++i) workers.emplace_back(body);
  for (auto& w : workers) w.join();

  double worst;
  std::uint64_t bits = worst_bits.load();
  std::memcpy(&worst, &bits, sizeof(worst));
  criterion("A6", "gradient correctness", bad.load() == 0,
            "100 triples, every coordinate, worst rel err " +
                fmt("%.2e", worst) + " (< 1e-4)");
}

TEST_CASE("A7 trimming invariants") {
  Rng rng(70007);
  std::size_t idempotence = 0, conservation = 0, monotonicity = 0,
              translation = 0;

  // Idempotence + conservation on arbitrary waveforms.
  while (idempotence < 1000 || conservation < 1000) {
    const auto w = test_support::random_waveform(rng);
    silence::TrimParams p;
    p.hop_length = 128u << rng.below(3);
    p.frame_length = p.hop_length * (1 + rng.below(4));
    p.top_db = rng.uniform(10.0, 70.0);

    const auto profile = silence::silence_profile(w, p);
    const std::size_t total = profile.nonsilent_start +
                              (profile.nonsilent_end - profile.nonsilent_start) +
                              (w.size() - profile.nonsilent_end);
    if (total != w.size()) break;
    ++conservation;

    const auto once = silence::trim(w, p);
    if (once.empty()) continue;
    const auto twice = silence::trim(once, p);
    if (twice.samples != once.samples) break;
    ++idempotence;
  }

  // Monotonicity in top_db.
  for (int round = 0; round < 1000; ++round) {
    const auto w = test_support::random_waveform(rng);
    silence::TrimParams lo_p, hi_p;
    lo_p.top_db = rng.uniform(5.0, 40.0);
    hi_p.top_db = lo_p.top_db + rng.uniform(1.0, 40.0);
    const auto lo = silence::trim_bounds(w, lo_p);
    const auto hi = silence::trim_bounds(w, hi_p);
    if (hi.first > lo.first || hi.second < lo.second) break;
    ++monotonicity;
  }

  // Translation by whole hops.
  for (int round = 0; round < 1000; ++round) {
    silence::TrimParams p;
    p.hop_length = 128u << rng.below(3);
    p.frame_length = p.hop_length * (1 + rng.below(4));

    audio::Waveform w;
    w.sample_rate = 16000;
    w.samples.assign(p.frame_length - p.hop_length, 0.0);
    const std::size_t body = p.frame_length + rng.below(8000);
    for (std::size_t k = 0; k < body; ++k) {
      w.samples.push_back(rng.uniform(0.3, 1.0) *
                          (rng.uniform01() < 0.5 ? -1.0 : 1.0));
    }
    const auto base = silence::trim_bounds(w, p);
    if (base.first != 0) break;

    const std::size_t k = rng.below(16);
    audio::Waveform shifted;
    shifted.sample_rate = w.sample_rate;
    shifted.samples.assign(k * p.hop_length, 0.0);
    shifted.samples.insert(shifted.samples.end(), w.samples.begin(),
                           w.samples.end());
    if (silence::trim_bounds(shifted, p).first !=
        base.first + k * p.hop_length) {
      break;
    }
    ++translation;
  }

  const bool pass = idempotence >= 1000 && conservation >= 1000 &&
                    monotonicity >= 1000 && translation >= 1000;
  criterion("A7", "trimming invariants", pass,
            "idempotence " + std::to_string(idempotence) +
                "/1000, conservation " + std::to_string(conservation) +
                "/1000, monotonicity " + std::to_string(monotonicity) +
                "/1000, translation " + std::to_string(translation) +
                "/1000");
}

TEST_CASE("A8 measurement consistency") {
  const fs::path root = workspace().root() / "consistency";
  synth::CorpusSpec spec;
  spec.sample_rate = 16000;
  spec.seed = 808;

  // 500 files across tone and noise classes with varied silence.
  const struct {
    const char* attack;
    double lead_mean, lead_sd, trail_mean, trail_sd;
    synth::SpeechKind kind;
  } defs[] = {
      {nullptr, 0.40, 0.10, 0.20, 0.08, synth::SpeechKind::kTone},
      {"A01", 0.08, 0.05, 0.05, 0.03, synth::SpeechKind::kNoise},
      {"A02", 0.25, 0.10, 0.15, 0.06, synth::SpeechKind::kTone},
      {"A03", 0.02, 0.01, 0.30, 0.10, synth::SpeechKind::kNoise},
  };
  for (const auto& d : defs) {
    synth::ClassSpec c;
    if (d.attack) c.attack_id = d.attack;
    c.count = 125;
    c.leading_s = {d.lead_mean, d.lead_sd};
    c.trailing_s = {d.trail_mean, d.trail_sd};
    c.speech_s = {0.5, 0.1};
    c.speech_kind = d.kind;
    c.tone_hz = 500.0;
    spec.classes.push_back(c);
  }
  const auto corpus = synth::generate_corpus(spec, root);
  const auto split = pipeline::load_split(corpus_load_options(corpus));

  const silence::TrimParams params;
  const double tolerance =
      static_cast<double>(params.frame_length + params.hop_length) / 16000.0;
  std::size_t within = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < split.records.size(); ++i) {
    const auto& truth = corpus.manifest[i];
    const auto& measured = split.profiles[i];
    const double lead_err = std::abs(measured.leading_s - truth.leading_s);
    const double trail_err = std::abs(measured.trailing_s - truth.trailing_s);
    worst = std::max({worst, lead_err, trail_err});
    if (lead_err <= tolerance && trail_err <= tolerance) ++within;
  }
  std::error_code ec;
  fs::remove_all(root, ec);
  criterion("A8", "measurement consistency", within == 500,
            std::to_string(within) + "/500 within " + fmt("%.3f", tolerance) +
                " s, worst err " + fmt("%.3f", worst) + " s");
}

TEST_CASE("A9 pipeline determinism") {
  const fs::path root = workspace().root() / "determinism";
  const fs::path spec_path = root / "spec.json";
  fs::create_directories(root);

  synth::CorpusSpec spec;
  spec.sample_rate = 16000;
  spec.seed = 909;
  synth::ClassSpec bona;
  bona.count = 40;
  bona.leading_s = {0.35, 0.05};
  bona.trailing_s = {0.10, 0.03};
  bona.speech_s = {0.4, 0.05};
  bona.tone_hz = 500.0;
  spec.classes.push_back(bona);
  synth::ClassSpec spoof = bona;
  spoof.attack_id = "A01";
  spoof.leading_s = {0.05, 0.02};
  spoof.speech_kind = synth::SpeechKind::kNoise;
  spec.classes.push_back(spoof);
  {
    std::ofstream out(spec_path);
    out << synth::corpus_spec_to_json(spec);
  }

  auto run_chain = [&](const fs::path& dir) {
    REQUIRE(run_cli("synth --spec " + spec_path.string() + " --out " +
                    (dir / "corpus").string()) == 0);
    // One tiny corpus serves as all three audit splits.
    const std::string corpus_flags =
        " --protocol " + (dir / "corpus" / "protocol.txt").string() +
        " --audio-dir " + (dir / "corpus" / "audio").string();
    const std::string split_flags =
        " --train-protocol " + (dir / "corpus" / "protocol.txt").string() +
        " --train-audio-dir " + (dir / "corpus" / "audio").string() +
        " --dev-protocol " + (dir / "corpus" / "protocol.txt").string() +
        " --dev-audio-dir " + (dir / "corpus" / "audio").string() +
        " --eval-protocol " + (dir / "corpus" / "protocol.txt").string() +
        " --eval-audio-dir " + (dir / "corpus" / "audio").string();
    REQUIRE(run_cli("audit" + split_flags + " --out " +
                    (dir / "audit").string() + " --seed 5 --epochs 10") == 0);
    REQUIRE(run_cli("train" + corpus_flags + " --out " +
                    (dir / "train").string() + " --seed 5 --epochs 10") == 0);
    REQUIRE(run_cli("eval" + corpus_flags + " --checkpoint " +
                    (dir / "train" / "checkpoint.json").string() + " --out " +
                    (dir / "eval").string()) == 0);
  };

  run_chain(root / "run1");
  run_chain(root / "run2");

  const char* artifacts[] = {"audit/report.json", "audit/report.csv",
                             "audit/checkpoint.json", "audit/scores_eval.txt",
                             "train/checkpoint.json", "eval/scores.txt",
                             "eval/eval.json"};
  bool pass = true;
  std::string first_diff;
  for (const char* artifact : artifacts) {
    if (slurp(root / "run1" / artifact) != slurp(root / "run2" / artifact)) {
      pass = false;
      if (first_diff.empty()) first_diff = artifact;
    }
  }
  std::error_code ec;
  fs::remove_all(root, ec);
  criterion("A9", "pipeline determinism", pass,
            pass ? "synth->audit->train->eval byte-identical across two runs"
                 : "first differing artifact: " + first_diff);
}

TEST_CASE("A10 real-corpus reproduction (optional)") {
  const char* env = std::getenv("SILAUDIT_ASVSPOOF_LA_ROOT");
  if (env == nullptr || std::string(env).empty()) {
    report_line("A10", "real-corpus reproduction", "SKIP",
                "set SILAUDIT_ASVSPOOF_LA_ROOT to run (WAV-converted "
                "ASVspoof 2019 LA)");
    return;
  }
  const fs::path root(env);
  const fs::path protocols = root / "ASVspoof2019_LA_cm_protocols";
  const struct {
    const char* name;
    fs::path protocol;
    fs::path audio;
  } splits[] = {
      {"train", protocols / "ASVspoof2019.LA.cm.train.trn.txt",
       root / "ASVspoof2019_LA_train" / "wav"},
      {"dev", protocols / "ASVspoof2019.LA.cm.dev.trl.txt",
       root / "ASVspoof2019_LA_dev" / "wav"},
      {"eval", protocols / "ASVspoof2019.LA.cm.eval.trl.txt",
       root / "ASVspoof2019_LA_eval" / "wav"},
  };
  for (const auto& s : splits) {
    if (!fs::exists(s.protocol) || !fs::exists(s.audio)) {
      report_line("A10", "real-corpus reproduction", "SKIP",
                  "missing " + s.protocol.string() + " or " +
                      s.audio.string());
      return;
    }
  }

  pipeline::AuditOptions options;
  options.train = {"train", splits[0].protocol, splits[0].audio};
  options.dev = {"dev", splits[1].protocol, splits[1].audio};
  options.eval = {"eval", splits[2].protocol, splits[2].audio};
  options.seed = 42;
  options.train_config.seed = 42;
  options.skip_missing = true;

  const auto result = pipeline::run_audit(options);
  double dev_eer = 1.0, eval_eer = 1.0;
  for (const auto& e : result.report.classifier) {
    if (e.split == "dev") dev_eer = e.eer;
    if (e.split == "eval") eval_eer = e.eer;
  }
  const bool pass = std::abs(eval_eer - 0.1512) <= 0.02 &&
                    std::abs(dev_eer - 0.3109) <= 0.05;
  criterion("A10", "real-corpus reproduction", pass,
            "dev EER " + fmt("%.4f", dev_eer) + " (31.09 +/- 5.0 pp), eval EER " +
                fmt("%.4f", eval_eer) + " (15.12 +/- 2.0 pp)");
}
