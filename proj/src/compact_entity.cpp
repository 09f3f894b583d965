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

#include "wikinames/compact_entity.hpp"

#include <algorithm>
#include <charconv>

#include "wikinames/errors.hpp"

namespace wikinames {

using nlohmann::json;
using nlohmann::ordered_json;

bool is_valid_qid(std::string_view qid) {
  if (qid.size() < 2 || qid[0] != 'Q') return false;
  for (char c : qid.substr(1)) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::optional<std::string_view> CompactEntity::english_label() const {
  const auto it = labels.find("en");
  if (it == labels.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> CompactEntity::languages() const {
  std::vector<std::string> out;
  out.reserve(labels.size());
  for (const auto& [lang, _] : labels) out.push_back(lang);
  return out;  // std::map keys are already sorted
}

bool CompactEntity::has_label_in(std::string_view language) const {
  return labels.find(std::string(language)) != labels.end();
}

std::int64_t qid_number(std::string_view qid) {
  std::int64_t value = 0;
  const auto digits = qid.size() >= 1 ? qid.substr(1) : qid;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (qid.empty() || qid[0] != 'Q' || ec != std::errc() ||
      ptr != digits.data() + digits.size()) {
    throw DataError("invalid entity id: " + std::string(qid));
  }
  return value;
}

std::int64_t CompactEntity::qid_number() const {
  return wikinames::qid_number(qid);
}

ordered_json CompactEntity::to_json() const {
  ordered_json doc;
  doc["qid"] = qid;
  if (const auto en = english_label()) doc["english_label"] = *en;
  doc["labels"] = labels;
  doc["aliases"] = aliases;
  doc["instance_of"] = instance_of;
  doc["subclass_of"] = subclass_of;
  doc["languages"] = languages();
  return doc;
}

std::string CompactEntity::to_json_line() const { return to_json().dump(); }

CompactEntity CompactEntity::from_json(const json& doc) {
  CompactEntity e;
  if (!doc.is_object() || !doc.contains("qid") || !doc["qid"].is_string()) {
    throw DataError("entity document has no qid");
  }
  e.qid = doc["qid"].get<std::string>();
  if (!is_valid_qid(e.qid)) throw DataError("invalid entity id: " + e.qid);
  if (doc.contains("labels")) {
    e.labels = doc["labels"].get<std::map<std::string, std::string>>();
  }
  if (doc.contains("aliases")) {
    e.aliases =
        doc["aliases"]
            .get<std::map<std::string, std::vector<std::string>>>();
  }
  if (doc.contains("instance_of")) {
    e.instance_of = doc["instance_of"].get<std::vector<std::string>>();
  }
  if (doc.contains("subclass_of")) {
    e.subclass_of = doc["subclass_of"].get<std::vector<std::string>>();
  }
  if (doc.contains("languages")) {
    auto stated = doc["languages"].get<std::vector<std::string>>();
    std::sort(stated.begin(), stated.end());
    if (stated != e.languages()) {
      throw DataError(e.qid + ": languages field does not match label keys");
    }
  }
  if (doc.contains("english_label")) {
    const auto en = e.english_label();
    if (!en || *en != doc["english_label"].get<std::string>()) {
      throw DataError(e.qid + ": english_label does not match labels[\"en\"]");
    }
  }
  return e;
}

CompactEntity CompactEntity::from_json_line(std::string_view line) {
  json doc = json::parse(line, nullptr, false);
  if (doc.is_discarded()) throw DataError("malformed entity JSON line");
  return from_json(doc);
}

}  // namespace wikinames
