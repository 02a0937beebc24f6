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

#ifndef SILAUDIT_PROTOCOL_HPP_
#define SILAUDIT_PROTOCOL_HPP_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace silaudit {
namespace protocol {

enum class Key { kBonafide, kSpoof };

Key parse_key(std::string_view token, std::size_t line);
std::string_view key_name(Key key);

// One corpus trial from a cm-protocol file:
//   SPEAKER UTT_ID - SYSTEM_ID KEY
// attack_id is empty (nullopt) for bonafide trials, written as "-" on disk.
struct TrialRecord {
  std::string speaker_id;
  std::string utterance_id;
  std::optional<std::string> attack_id;
  Key key = Key::kBonafide;

  bool operator==(const TrialRecord&) const = default;
};

// "-" for bonafide, the attack system id otherwise.
std::string attack_label(const TrialRecord& record);

struct SplitSummary {
  std::map<std::string, std::size_t> attack_counts;
  std::size_t bonafide_count = 0;
  std::size_t spoof_count = 0;

  std::size_t total() const { return bonafide_count + spoof_count; }
};

// Parses whitespace-separated 5-field lines; blank lines are skipped.
// Throws ParseError for a malformed line (wrong field count, unknown key,
// key/attack inconsistency) and DataError for duplicate utterance ids.
std::vector<TrialRecord> parse_protocol(std::string_view text);

// Inverse of parse_protocol, one record per line, single-space separated.
std::string format_protocol(std::span<const TrialRecord> records);

SplitSummary summarize(std::span<const TrialRecord> records);

}  // namespace protocol
}  // namespace silaudit

#endif  // SILAUDIT_PROTOCOL_HPP_
