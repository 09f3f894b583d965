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

#ifndef WIKINAMES_STATS_HPP_
#define WIKINAMES_STATS_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wikinames/extract.hpp"
#include "wikinames/language_config.hpp"

namespace wikinames {

// Rounds half away from zero at `decimals` places (2.5 -> 3, not 2).
double round_half_up(double value, int decimals);

// One populated language: the name-list sizes and the share of names
// identical to the English label.
struct LanguageStatsRow {
  std::string display_name;
  std::string code;
  std::array<std::int64_t, 3> counts{};  // indexed by EntityType
  // 100 * matches / total, half-up to 2 decimals; absent only when the
  // row has no records at all (0/0).
  std::optional<double> english_match_pct;

  std::int64_t count(EntityType type) const {
    return counts[static_cast<int>(type)];
  }
  std::int64_t total() const { return counts[0] + counts[1] + counts[2]; }
};

// Column-wise aggregate over the populated rows. Count cells are rounded
// half-up to integers (means) or taken as the upper median; the
// english-match cell is additionally rounded to a whole percent, the
// precision at which the source table reports it.
struct AggregateStatsRow {
  std::array<std::int64_t, 3> counts{};
  std::int64_t total = 0;
  std::optional<double> english_match_pct;
};

AggregateStatsRow compute_mean(const std::vector<LanguageStatsRow>& rows);
AggregateStatsRow compute_median(const std::vector<LanguageStatsRow>& rows);

// Latin-contamination report for one script-filtered language: how many
// candidate labels per type were Latin-only, and how many entries the
// filter excluded.
struct FilteredLanguageRow {
  std::string display_name;
  std::string code;
  // 100 * latin_only / candidates per type, half-up to 1 decimal; absent
  // when a type had no candidates.
  std::array<std::optional<double>, 3> latin_only_pct{};
  std::int64_t excluded = 0;
};

// Per-type share data for one language (the log-scale bar chart data).
struct TypeShareRow {
  std::string code;
  std::array<std::int64_t, 3> counts{};
  std::array<std::optional<double>, 3> share_pct{};    // 2-decimal
  std::array<std::optional<double>, 3> log10_count{};  // absent when 0
};

struct EmptyLanguageRow {
  std::string display_name;
  std::string code;
  std::string iso639_3;
};

struct StatsReport {
  std::vector<LanguageStatsRow> rows;  // populated languages, by display name
  AggregateStatsRow mean;
  AggregateStatsRow median;
  std::vector<FilteredLanguageRow> filtered;   // require-script languages
  std::vector<TypeShareRow> shares;            // same order as rows
  std::vector<EmptyLanguageRow> empty_languages;

  nlohmann::ordered_json to_json() const;
  // stats.tsv (Table-1 layout), latin_filter.tsv, type_shares.tsv,
  // empty_languages.tsv. Returns the files written.
  std::vector<std::filesystem::path> write_tsv(
      const std::filesystem::path& out_dir) const;
  std::filesystem::path write_json(const std::filesystem::path& out_dir) const;
};

// Builds the report from one extraction run: records give the counts and
// english-match tallies; the summary supplies the filter counters that the
// TSVs alone cannot reconstruct.
StatsReport compute_stats(const std::vector<NameRecord>& records,
                          const ExtractionSummary& summary,
                          const LanguageConfig& config);

}  // namespace wikinames

#endif  // WIKINAMES_STATS_HPP_
