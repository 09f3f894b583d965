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

#ifndef WIKINAMES_EXTRACT_HPP_
#define WIKINAMES_EXTRACT_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wikinames/closure.hpp"
#include "wikinames/compact_entity.hpp"
#include "wikinames/entity_store.hpp"
#include "wikinames/entity_type.hpp"
#include "wikinames/language_config.hpp"

namespace wikinames {

// One extracted name. (qid, language) is unique within a run: one type,
// one name per entity per language.
struct NameRecord {
  std::string qid;
  std::string language;  // wikimedia code
  EntityType type = EntityType::kPer;
  std::string name;
  bool english_match = false;

  bool operator==(const NameRecord&) const = default;
};

// True iff the entity has an English label code-point-identical to `name`
// (case-sensitive, no normalization).
bool compute_english_match(const CompactEntity& entity, std::string_view name);

struct LanguageCounters {
  std::array<std::int64_t, 3> records{};     // emitted, indexed by EntityType
  std::array<std::int64_t, 3> candidates{};  // labels seen before filtering
  std::array<std::int64_t, 3> latin_only{};  // candidates that are Latin-only
  std::int64_t excluded_by_script = 0;
  std::int64_t dropped_empty = 0;   // empty/whitespace-only labels
  std::int64_t tabs_replaced = 0;   // labels that contained tab characters

  std::int64_t records_total() const {
    return records[0] + records[1] + records[2];
  }
};

struct ExtractionSummary {
  std::map<std::string, LanguageCounters> per_language;  // by wikimedia code
  std::vector<std::string> empty_languages;  // configured, zero records
  std::int64_t entities_classified = 0;      // classify() non-empty
  std::int64_t loc_per_conflicts = 0;        // {LOC,PER} resolutions seen
  std::int64_t multi_type_entities = 0;      // |classify()| > 1

  nlohmann::ordered_json to_json() const;
  static ExtractionSummary from_json(const nlohmann::json& doc);
};

struct ExtractOptions {
  bool include_aliases = false;
};

struct ExtractionResult {
  // Sorted by (language, type string, numeric qid); ready for TSV output.
  std::vector<NameRecord> records;
  // Alias rows, same ordering; filled only with include_aliases.
  std::vector<NameRecord> alias_records;
  ExtractionSummary summary;
};

// Runs classification + resolution + label extraction over every stored
// entity. Throws ConfigError if the closure table is empty.
ExtractionResult extract(const EntityStore& store, const ClosureTable& closure,
                         const RootConfig& roots, const LanguageConfig& config,
                         const ExtractOptions& options = {});

// Writes one `<code>.tsv` per configured language (header always present,
// even for empty languages) plus `<code>.aliases.tsv` when alias records
// exist. Returns the list of files written.
std::vector<std::filesystem::path> write_name_lists(
    const ExtractionResult& result, const LanguageConfig& config,
    const std::filesystem::path& out_dir);

// Reads one name-list TSV back; `language` is normally the file stem.
std::vector<NameRecord> read_name_list(const std::filesystem::path& file,
                                       std::string_view language);

}  // namespace wikinames

#endif  // WIKINAMES_EXTRACT_HPP_
