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

#include "wikinames/entity_reduce.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace wikinames {
namespace {

using nlohmann::json;

// Extracts the target item id from one claim. Dumps carry either
// value.id ("Q42") or value["numeric-id"] (42); both are accepted.
std::string claim_target(const json& claim) {
  const auto snak = claim.find("mainsnak");
  if (snak == claim.end() || !snak->is_object()) return {};
  const auto snaktype = snak->find("snaktype");
  if (snaktype == snak->end() || *snaktype != "value") return {};
  const auto dv = snak->find("datavalue");
  if (dv == snak->end() || !dv->is_object()) return {};
  const auto type = dv->find("type");
  if (type == dv->end() || *type != "wikibase-entityid") return {};
  const auto value = dv->find("value");
  if (value == dv->end() || !value->is_object()) return {};
  if (const auto id = value->find("id");
      id != value->end() && id->is_string()) {
    return id->get<std::string>();
  }
  if (const auto num = value->find("numeric-id");
      num != value->end() && num->is_number_unsigned()) {
    return "Q" + std::to_string(num->get<std::uint64_t>());
  }
  return {};
}

std::vector<std::string> claim_targets(const json& claims,
                                       const char* property) {
  std::vector<std::string> out;
  const auto it = claims.find(property);
  if (it == claims.end() || !it->is_array()) return out;
  for (const json& claim : *it) {
    if (!claim.is_object()) continue;
    std::string target = claim_target(claim);
    if (!is_valid_qid(target)) continue;
    if (std::find(out.begin(), out.end(), target) == out.end()) {
      out.push_back(std::move(target));
    }
  }
  return out;
}

}  // namespace

ReduceOutcome reduce_entity(const json& raw) {
  ReduceOutcome outcome;
  const auto id = raw.find("id");
  if (id == raw.end() || !id->is_string()) {
    outcome.status = ReduceStatus::kMissingId;
    return outcome;
  }
  std::string qid = id->get<std::string>();
  if (!is_valid_qid(qid)) {
    outcome.status = ReduceStatus::kNotAnItem;
    return outcome;
  }

  CompactEntity& e = outcome.entity;
  e.qid = std::move(qid);

  if (const auto labels = raw.find("labels");
      labels != raw.end() && labels->is_object()) {
    for (const auto& [lang, entry] : labels->items()) {
      if (!entry.is_object()) continue;
      const auto value = entry.find("value");
      if (value == entry.end() || !value->is_string()) continue;
      e.labels.emplace(lang, value->get<std::string>());
    }
  }

  if (const auto aliases = raw.find("aliases");
      aliases != raw.end() && aliases->is_object()) {
    for (const auto& [lang, entries] : aliases->items()) {
      if (!entries.is_array()) continue;
      std::vector<std::string> values;
      for (const json& entry : entries) {
        if (!entry.is_object()) continue;
        const auto value = entry.find("value");
        if (value == entry.end() || !value->is_string()) continue;
        values.push_back(value->get<std::string>());
      }
      if (!values.empty()) e.aliases.emplace(lang, std::move(values));
    }
  }

  if (const auto claims = raw.find("claims");
      claims != raw.end() && claims->is_object()) {
    e.instance_of = claim_targets(*claims, "P31");
    e.subclass_of = claim_targets(*claims, "P279");
  }

  outcome.status = ReduceStatus::kOk;
  return outcome;
}

}  // namespace wikinames
