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

#include "silaudit/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

#include "silaudit/error.hpp"

namespace silaudit {
namespace report {

namespace {

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

struct DurationAccumulator {
  std::size_t n = 0;
  double silence_sum = 0.0;
  double silence_sq = 0.0;
  double leading_sum = 0.0;
  double leading_sq = 0.0;

  void add(const silence::SilenceProfile& p) {
    const double total_silence = p.leading_s + p.trailing_s;
    ++n;
    silence_sum += total_silence;
    silence_sq += total_silence * total_silence;
    leading_sum += p.leading_s;
    leading_sq += p.leading_s * p.leading_s;
  }

  AttackStats finish(std::string group) const {
    AttackStats stats;
    stats.group = std::move(group);
    stats.n = n;
    const double dn = static_cast<double>(n);
    stats.silence_mean_s = silence_sum / dn;
    stats.leading_mean_s = leading_sum / dn;
    const double silence_var =
        std::max(0.0, silence_sq / dn - stats.silence_mean_s * stats.silence_mean_s);
    const double leading_var =
        std::max(0.0, leading_sq / dn - stats.leading_mean_s * stats.leading_mean_s);
    stats.silence_std_s = std::sqrt(silence_var);
    stats.leading_std_s = std::sqrt(leading_var);
    return stats;
  }
};

void append_stats_json(std::string& out, const AttackStats& s) {
  out += "{\"group\":\"" + json_escape(s.group) + "\",";
  out += "\"n\":" + std::to_string(s.n) + ",";
  out += "\"silence_mean_s\":" + fmt6(s.silence_mean_s) + ",";
  out += "\"silence_std_s\":" + fmt6(s.silence_std_s) + ",";
  out += "\"leading_mean_s\":" + fmt6(s.leading_mean_s) + ",";
  out += "\"leading_std_s\":" + fmt6(s.leading_std_s) + "}";
}

void append_eval_json(std::string& out, const EvalSummary& e) {
  out += "{\"split\":\"" + json_escape(e.split) + "\",";
  out += "\"n_bonafide\":" + std::to_string(e.n_bonafide) + ",";
  out += "\"n_spoof\":" + std::to_string(e.n_spoof) + ",";
  out += "\"eer\":" + fmt6(e.eer) + ",";
  out += "\"threshold\":" + fmt6(e.threshold) + ",";
  out += "\"accuracy_at_eer\":" + fmt6(e.accuracy_at_eer) + "}";
}

void check_emittable(const AuditReport& report) {
  for (const SplitStats& split : report.splits) {
    if (split.groups.empty()) {
      throw Error("split '" + split.split + "' has an empty group table");
    }
  }
}

}  // namespace

std::vector<UtteranceProfile> join_profiles(
    std::span<const protocol::TrialRecord> records,
    const std::unordered_map<std::string, silence::SilenceProfile>& profiles) {
  std::vector<UtteranceProfile> rows;
  rows.reserve(records.size());
  std::string missing;
  std::size_t missing_count = 0;
  for (const protocol::TrialRecord& record : records) {
    const auto it = profiles.find(record.utterance_id);
    if (it == profiles.end()) {
      ++missing_count;
      if (missing_count <= 10) {
        if (!missing.empty()) missing += ", ";
        missing += record.utterance_id;
      }
      continue;
    }
    rows.push_back({record, it->second});
  }
  if (missing_count > 0) {
    throw DataError("no profile for " + std::to_string(missing_count) +
                    " utterance(s): " + missing +
                    (missing_count > 10 ? ", ..." : ""));
  }
  return rows;
}

std::vector<AttackStats> per_attack_stats(
    std::span<const UtteranceProfile> rows) {
  if (rows.empty()) throw Error("no profiles to aggregate");

  DurationAccumulator bonafide;
  std::map<std::string, DurationAccumulator> attacks;
  for (const UtteranceProfile& row : rows) {
    if (row.record.key == protocol::Key::kBonafide) {
      bonafide.add(row.profile);
    } else {
      attacks[*row.record.attack_id].add(row.profile);
    }
  }

  std::vector<AttackStats> stats;
  if (bonafide.n > 0) stats.push_back(bonafide.finish("BONAFIDE"));
  for (const auto& [attack, acc] : attacks) {
    stats.push_back(acc.finish(attack));
  }
  return stats;
}

AttackStats pooled_spoof_stats(std::span<const UtteranceProfile> rows) {
  DurationAccumulator pooled;
  for (const UtteranceProfile& row : rows) {
    if (row.record.key == protocol::Key::kSpoof) pooled.add(row.profile);
  }
  if (pooled.n == 0) throw Error("no spoof trials to pool");
  return pooled.finish("SPOOF_POOLED");
}

std::string report_to_json(const AuditReport& report) {
  check_emittable(report);
  const ReportConfig& cfg = report.config;

  std::string out = "{\n";
  out += "\"tool\":\"silaudit\",\n";
  out += "\"schema_version\":1,\n";
  out += "\"config\":{";
  out += "\"top_db\":" + fmt6(cfg.trim.top_db) + ",";
  out += "\"frame_length\":" + std::to_string(cfg.trim.frame_length) + ",";
  out += "\"hop_length\":" + std::to_string(cfg.trim.hop_length) + ",";
  out += "\"feature\":\"" + std::string(features::feature_mode_name(cfg.feature)) + "\",";
  out += "\"subselect_seconds\":" + fmt6(cfg.subselect_seconds) + ",";
  out += "\"seed\":" + std::to_string(cfg.seed) + ",";
  out += "\"epochs\":" + std::to_string(cfg.train.epochs) + ",";
  out += "\"learning_rate\":" + fmt6(cfg.train.learning_rate) + ",";
  out += "\"weight_decay\":" + fmt6(cfg.train.weight_decay) + ",";
  out += "\"dropout\":" + fmt6(cfg.train.dropout) + ",";
  out += "\"batch_size\":" + std::to_string(cfg.train.batch_size);
  out += "},\n";

  out += "\"splits\":[\n";
  for (std::size_t i = 0; i < report.splits.size(); ++i) {
    const SplitStats& split = report.splits[i];
    out += "{\"split\":\"" + json_escape(split.split) + "\",\"groups\":[";
    for (std::size_t g = 0; g < split.groups.size(); ++g) {
      if (g > 0) out += ",";
      append_stats_json(out, split.groups[g]);
    }
    out += "],\"spoof_pooled\":";
    append_stats_json(out, split.spoof_pooled);
    out += "}";
    if (i + 1 < report.splits.size()) out += ",";
    out += "\n";
  }
  out += "],\n";

  out += "\"classifier\":[";
  for (std::size_t i = 0; i < report.classifier.size(); ++i) {
    if (i > 0) out += ",";
    append_eval_json(out, report.classifier[i]);
  }
  out += "],\n";

  out += "\"random_baseline\":[";
  for (std::size_t i = 0; i < report.random_baseline.size(); ++i) {
    if (i > 0) out += ",";
    append_eval_json(out, report.random_baseline[i]);
  }
  out += "]\n}\n";
  return out;
}

std::string report_to_csv(const AuditReport& report) {
  check_emittable(report);
  std::string out =
      "split,group,n,silence_mean_s,silence_std_s,leading_mean_s,"
      "leading_std_s\n";
  for (const SplitStats& split : report.splits) {
    std::vector<AttackStats> rows = split.groups;
    rows.push_back(split.spoof_pooled);
    for (const AttackStats& s : rows) {
      out += split.split + ',' + s.group + ',' + std::to_string(s.n) + ',' +
             fmt6(s.silence_mean_s) + ',' + fmt6(s.silence_std_s) + ',' +
             fmt6(s.leading_mean_s) + ',' + fmt6(s.leading_std_s) + '\n';
    }
  }
  return out;
}

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("short write to " + path.string());
}

}  // namespace

void write_report_json(const AuditReport& report,
                       const std::filesystem::path& path) {
  write_text(path, report_to_json(report));
}

void write_report_csv(const AuditReport& report,
                      const std::filesystem::path& path) {
  write_text(path, report_to_csv(report));
}

}  // namespace report
}  // namespace silaudit
