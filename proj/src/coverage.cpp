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

#include "wikinames/coverage.hpp"

#include <set>
#include <utility>

#include "wikinames/errors.hpp"
#include "wikinames/stats.hpp"
#include "wikinames/unicode/normalize.hpp"
#include "wikinames/unicode/utf8.hpp"

namespace wikinames {
namespace {

EntityType entity_type_of(MentionType type) {
  switch (type) {
    case MentionType::kPer: return EntityType::kPer;
    case MentionType::kLoc: return EntityType::kLoc;
    case MentionType::kOrg: return EntityType::kOrg;
    case MentionType::kMisc: break;
  }
  throw std::logic_error("MISC mentions carry no entity type");
}

}  // namespace

NameIndex NameIndex::build(const std::vector<NameRecord>& records) {
  NameIndex index;
  for (const NameRecord& record : records) {
    index.names_.insert(unicode::nfc(record.name));
  }
  return index;
}

NameIndex NameIndex::from_names(const std::vector<std::string>& names) {
  NameIndex index;
  for (const std::string& name : names) {
    index.names_.insert(unicode::nfc(name));
  }
  return index;
}

bool match_mention(std::string_view mention, const NameIndex& names,
                   int max_prefix) {
  const std::string normalized = unicode::nfc(mention);
  if (normalized.empty()) return false;
  if (names.contains_nfc(normalized)) return true;
  for (int strip = 1; strip <= max_prefix; ++strip) {
    const std::string_view rest =
        unicode::drop_code_points(normalized, static_cast<std::size_t>(strip));
    if (rest.empty()) break;
    if (names.contains_nfc(std::string(rest))) return true;
  }
  return false;
}

std::optional<double> CoverageCounts::pct() const {
  if (total == 0) return std::nullopt;
  return round_half_up(
      100.0 * static_cast<double>(matched) / static_cast<double>(total), 1);
}

CoverageReport evaluate_coverage(const ConllDocument& doc,
                                 const NameIndex& names,
                                 const CoverageOptions& options) {
  if (options.max_prefix < 0) {
    throw ConfigError("coverage: max_prefix must be >= 0");
  }
  CoverageReport report;
  report.max_prefix = options.max_prefix;
  report.unique_mentions = options.unique_mentions;
  report.prefix_mode = options.max_prefix > 0;
  report.repairs = doc.repairs;

  std::set<std::pair<std::string, MentionType>> seen;
  for (const Mention& mention : doc.mentions) {
    if (mention.type == MentionType::kMisc) {
      ++report.misc_excluded;
      continue;
    }
    if (options.unique_mentions &&
        !seen.emplace(mention.text, mention.type).second) {
      continue;
    }
    const bool matched = match_mention(mention.text, names, options.max_prefix);
    CoverageCounts& counts =
        report.by_type[static_cast<std::size_t>(entity_type_of(mention.type))];
    ++counts.total;
    ++report.overall.total;
    if (matched) {
      ++counts.matched;
      ++report.overall.matched;
    }
  }
  return report;
}

nlohmann::ordered_json CoverageReport::to_json() const {
  const auto counts_json = [](const CoverageCounts& counts) {
    nlohmann::ordered_json entry;
    entry["total"] = counts.total;
    entry["matched"] = counts.matched;
    const auto p = counts.pct();
    entry["pct"] = p.has_value() ? nlohmann::ordered_json(*p)
                                 : nlohmann::ordered_json(nullptr);
    return entry;
  };
  nlohmann::ordered_json out;
  out["overall"] = counts_json(overall);
  nlohmann::ordered_json by_type_json;
  for (const EntityType type : {EntityType::kLoc, EntityType::kOrg,
                                EntityType::kPer}) {
    by_type_json[std::string(to_string(type))] =
        counts_json(by_type[static_cast<std::size_t>(type)]);
  }
  out["by_type"] = std::move(by_type_json);
  out["misc_excluded"] = misc_excluded;
  out["repairs"] = repairs;
  out["max_prefix"] = max_prefix;
  out["unique_mentions"] = unique_mentions;
  out["modes"]["exact"] = exact_mode;
  out["modes"]["prefix"] = prefix_mode;
  return out;
}

}  // namespace wikinames
