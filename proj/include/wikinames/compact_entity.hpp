// Copyright 2026 The Wikinames Authors
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

#ifndef WIKINAMES_COMPACT_ENTITY_HPP_
#define WIKINAMES_COMPACT_ENTITY_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace wikinames {

// The reduced form of a Wikidata entity kept by the pipeline: identifier,
// per-language labels and aliases, and the instance-of / subclass-of claim
// targets. Everything else from the raw record is dropped at ingest time.
//
// The canonical JSON line format (stable field order, used by store export
// and the equivalence tests) is:
//
//   {"qid":..., "english_label":...,   // english_label omitted when absent
//    "labels":{...}, "aliases":{...},  // keys sorted
//    "instance_of":[...], "subclass_of":[...],
//    "languages":[...]}                // sorted; always equals label keys
struct CompactEntity {
  std::string qid;
  std::map<std::string, std::string> labels;               // language -> label
  std::map<std::string, std::vector<std::string>> aliases; // language -> names
  std::vector<std::string> instance_of;                    // P31 targets
  std::vector<std::string> subclass_of;                    // P279 targets

  // Derived views; kept as functions so the invariants hold by construction.
  std::optional<std::string_view> english_label() const;
  std::vector<std::string> languages() const;
  bool has_label_in(std::string_view language) const;

  // Numeric part of the QID, for stable store ordering.
  std::int64_t qid_number() const;  // numeric part of the qid

  nlohmann::ordered_json to_json() const;
  std::string to_json_line() const;

  // Throws DataError when the document violates the schema (bad qid,
  // languages field inconsistent with label keys, english_label mismatch).
  static CompactEntity from_json(const nlohmann::json& doc);
  static CompactEntity from_json_line(std::string_view line);

  bool operator==(const CompactEntity&) const = default;
};

// "Q" followed by one or more digits.
bool is_valid_qid(std::string_view qid);

// Numeric part of a qid; throws DataError when malformed.
std::int64_t qid_number(std::string_view qid);

}  // namespace wikinames

#endif  // WIKINAMES_COMPACT_ENTITY_HPP_
