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

#include "silaudit/protocol.hpp"

#include <unordered_set>

#include "silaudit/error.hpp"

namespace silaudit {
namespace protocol {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

}  // namespace

Key parse_key(std::string_view token, std::size_t line) {
  if (token == "bonafide") return Key::kBonafide;
  if (token == "spoof") return Key::kSpoof;
  throw ParseError("unknown key token '" + std::string(token) + "'", line);
}

std::string_view key_name(Key key) {
  return key == Key::kBonafide ? "bonafide" : "spoof";
}

std::string attack_label(const TrialRecord& record) {
  return record.attack_id ? *record.attack_id : "-";
}

std::vector<TrialRecord> parse_protocol(std::string_view text) {
  std::vector<TrialRecord> records;
  std::unordered_set<std::string> seen_ids;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = eol == std::string_view::npos
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.size() != 5) {
      throw ParseError("expected 5 fields, got " +
                           std::to_string(fields.size()),
                       line_no);
    }

    TrialRecord record;
    record.speaker_id = std::string(fields[0]);
    record.utterance_id = std::string(fields[1]);
    // fields[2] is a dataset placeholder column, ignored.
    if (fields[3] != "-") record.attack_id = std::string(fields[3]);
    record.key = parse_key(fields[4], line_no);

    const bool is_bonafide = record.key == Key::kBonafide;
    if (is_bonafide == record.attack_id.has_value()) {
      throw ParseError("key/attack inconsistency: key '" +
                           std::string(fields[4]) + "' with attack '" +
                           std::string(fields[3]) + "'",
                       line_no);
    }
    if (!seen_ids.insert(record.utterance_id).second) {
      throw DataError("duplicate utterance_id '" + record.utterance_id +
                      "' at line " + std::to_string(line_no));
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::string format_protocol(std::span<const TrialRecord> records) {
  std::string out;
  for (const TrialRecord& record : records) {
    out += record.speaker_id;
    out += ' ';
    out += record.utterance_id;
    out += " - ";
    out += attack_label(record);
    out += ' ';
    out += key_name(record.key);
    out += '\n';
  }
  return out;
}

SplitSummary summarize(std::span<const TrialRecord> records) {
  SplitSummary summary;
  for (const TrialRecord& record : records) {
    if (record.key == Key::kBonafide) {
      ++summary.bonafide_count;
    } else {
      ++summary.spoof_count;
      ++summary.attack_counts[*record.attack_id];
    }
  }
  return summary;
}

}  // namespace protocol
}  // namespace silaudit
