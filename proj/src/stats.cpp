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

#include "wikinames/stats.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "wikinames/errors.hpp"

namespace wikinames {
namespace {

constexpr int kTypeCount = 3;

int type_index(EntityType type) { return static_cast<int>(type); }

// Upper median: for even n the larger of the two middle values. This is
// the convention under which the published median row is reproducible.
std::int64_t upper_median(std::vector<std::int64_t> values) {
  std::sort(values.begin(), values.end());
  return values[values.size() / 2];
}

double upper_median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return values[values.size() / 2];
}

std::string format_fixed(double value, int decimals) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(decimals);
  out << value;
  return out.str();
}

std::string format_opt_pct(const std::optional<double>& value, int decimals) {
  return value.has_value() ? format_fixed(*value, decimals) : std::string();
}

nlohmann::ordered_json opt_json(const std::optional<double>& value) {
  if (!value.has_value()) return nullptr;
  return *value;
}

void write_file(const std::filesystem::path& file, const std::string& body) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw IoError("cannot write " + file.string());
  out << body;
  if (!out.good()) throw IoError("write failure on " + file.string());
}

nlohmann::ordered_json counts_json(const std::array<std::int64_t, 3>& counts) {
  nlohmann::ordered_json out;
  out["LOC"] = counts[type_index(EntityType::kLoc)];
  out["ORG"] = counts[type_index(EntityType::kOrg)];
  out["PER"] = counts[type_index(EntityType::kPer)];
  return out;
}

}  // namespace

double round_half_up(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  if (value >= 0) return std::floor(value * scale + 0.5) / scale;
  return -std::floor(-value * scale + 0.5) / scale;
}

AggregateStatsRow compute_mean(const std::vector<LanguageStatsRow>& rows) {
  AggregateStatsRow out;
  if (rows.empty()) return out;
  std::array<double, kTypeCount> sums{};
  double total = 0;
  double pct_sum = 0;
  std::int64_t pct_n = 0;
  for (const LanguageStatsRow& row : rows) {
    for (int t = 0; t < kTypeCount; ++t) {
      sums[static_cast<std::size_t>(t)] += static_cast<double>(row.counts[static_cast<std::size_t>(t)]);
    }
    total += static_cast<double>(row.total());
    if (row.english_match_pct.has_value()) {
      pct_sum += *row.english_match_pct;
      ++pct_n;
    }
  }
  const double n = static_cast<double>(rows.size());
  for (int t = 0; t < kTypeCount; ++t) {
    out.counts[static_cast<std::size_t>(t)] = static_cast<std::int64_t>(
        round_half_up(sums[static_cast<std::size_t>(t)] / n, 0));
  }
  out.total = static_cast<std::int64_t>(round_half_up(total / n, 0));
  if (pct_n > 0) out.english_match_pct = round_half_up(pct_sum / static_cast<double>(pct_n), 0);
  return out;
}

AggregateStatsRow compute_median(const std::vector<LanguageStatsRow>& rows) {
  AggregateStatsRow out;
  if (rows.empty()) return out;
  for (int t = 0; t < kTypeCount; ++t) {
    std::vector<std::int64_t> column;
    column.reserve(rows.size());
    for (const LanguageStatsRow& row : rows) {
      column.push_back(row.counts[static_cast<std::size_t>(t)]);
    }
    out.counts[static_cast<std::size_t>(t)] = upper_median(std::move(column));
  }
  std::vector<std::int64_t> totals;
  std::vector<double> pcts;
  for (const LanguageStatsRow& row : rows) {
    totals.push_back(row.total());
    if (row.english_match_pct.has_value()) pcts.push_back(*row.english_match_pct);
  }
  out.total = upper_median(std::move(totals));
  if (!pcts.empty()) {
    out.english_match_pct = round_half_up(upper_median(std::move(pcts)), 0);
  }
  return out;
}

StatsReport compute_stats(const std::vector<NameRecord>& records,
                          const ExtractionSummary& summary,
                          const LanguageConfig& config) {
  struct Tally {
    std::array<std::int64_t, 3> counts{};
    std::int64_t matches = 0;
  };
  std::map<std::string, Tally> tallies;
  for (const NameRecord& record : records) {
    Tally& tally = tallies[record.language];
    ++tally.counts[static_cast<std::size_t>(type_index(record.type))];
    if (record.english_match) ++tally.matches;
  }

  StatsReport report;
  for (const LanguageSpec& spec : config.languages()) {
    const auto it = tallies.find(spec.wikimedia_code);
    const bool populated = it != tallies.end() &&
                           (it->second.counts[0] + it->second.counts[1] +
                            it->second.counts[2]) > 0;
    if (!populated) {
      report.empty_languages.push_back(
          {spec.display_name, spec.wikimedia_code, spec.iso639_3});
      continue;
    }
    LanguageStatsRow row;
    row.display_name = spec.display_name;
    row.code = spec.wikimedia_code;
    row.counts = it->second.counts;
    row.english_match_pct = round_half_up(
        100.0 * static_cast<double>(it->second.matches) /
            static_cast<double>(row.total()),
        2);
    report.rows.push_back(std::move(row));
  }
  std::sort(report.rows.begin(), report.rows.end(),
            [](const LanguageStatsRow& a, const LanguageStatsRow& b) {
              return a.display_name != b.display_name
                         ? a.display_name < b.display_name
                         : a.code < b.code;
            });

  report.mean = compute_mean(report.rows);
  report.median = compute_median(report.rows);

  for (const LanguageSpec& spec : config.languages()) {
    if (spec.policy.kind != ScriptPolicy::Kind::kRequireScript) continue;
    const auto it = summary.per_language.find(spec.wikimedia_code);
    if (it == summary.per_language.end()) continue;
    FilteredLanguageRow row;
    row.display_name = spec.display_name;
    row.code = spec.wikimedia_code;
    for (int t = 0; t < kTypeCount; ++t) {
      const std::int64_t candidates = it->second.candidates[static_cast<std::size_t>(t)];
      if (candidates > 0) {
        row.latin_only_pct[static_cast<std::size_t>(t)] = round_half_up(
            100.0 * static_cast<double>(it->second.latin_only[static_cast<std::size_t>(t)]) /
                static_cast<double>(candidates),
            1);
      }
    }
    row.excluded = it->second.excluded_by_script;
    report.filtered.push_back(std::move(row));
  }

  for (const LanguageStatsRow& row : report.rows) {
    TypeShareRow share;
    share.code = row.code;
    share.counts = row.counts;
    const double total = static_cast<double>(row.total());
    for (int t = 0; t < kTypeCount; ++t) {
      const std::int64_t count = row.counts[static_cast<std::size_t>(t)];
      share.share_pct[static_cast<std::size_t>(t)] =
          round_half_up(100.0 * static_cast<double>(count) / total, 2);
      if (count > 0) {
        share.log10_count[static_cast<std::size_t>(t)] =
            std::log10(static_cast<double>(count));
      }
    }
    report.shares.push_back(std::move(share));
  }
  return report;
}

nlohmann::ordered_json StatsReport::to_json() const {
  nlohmann::ordered_json out;
  nlohmann::ordered_json languages = nlohmann::ordered_json::array();
  for (const LanguageStatsRow& row : rows) {
    nlohmann::ordered_json entry;
    entry["language"] = row.display_name;
    entry["code"] = row.code;
    entry["counts"] = counts_json(row.counts);
    entry["total"] = row.total();
    entry["english_match_pct"] = opt_json(row.english_match_pct);
    languages.push_back(std::move(entry));
  }
  out["languages"] = std::move(languages);

  const auto aggregate_json = [](const AggregateStatsRow& row) {
    nlohmann::ordered_json entry;
    entry["counts"] = counts_json(row.counts);
    entry["total"] = row.total;
    entry["english_match_pct"] = opt_json(row.english_match_pct);
    return entry;
  };
  out["mean"] = aggregate_json(mean);
  out["median"] = aggregate_json(median);

  nlohmann::ordered_json filtered_json = nlohmann::ordered_json::array();
  for (const FilteredLanguageRow& row : filtered) {
    nlohmann::ordered_json entry;
    entry["language"] = row.display_name;
    entry["code"] = row.code;
    entry["latin_only_pct"]["LOC"] =
        opt_json(row.latin_only_pct[type_index(EntityType::kLoc)]);
    entry["latin_only_pct"]["ORG"] =
        opt_json(row.latin_only_pct[type_index(EntityType::kOrg)]);
    entry["latin_only_pct"]["PER"] =
        opt_json(row.latin_only_pct[type_index(EntityType::kPer)]);
    entry["excluded"] = row.excluded;
    filtered_json.push_back(std::move(entry));
  }
  out["latin_filter"] = std::move(filtered_json);

  nlohmann::ordered_json shares_json = nlohmann::ordered_json::array();
  for (const TypeShareRow& row : shares) {
    nlohmann::ordered_json entry;
    entry["code"] = row.code;
    entry["counts"] = counts_json(row.counts);
    entry["share_pct"]["LOC"] = opt_json(row.share_pct[type_index(EntityType::kLoc)]);
    entry["share_pct"]["ORG"] = opt_json(row.share_pct[type_index(EntityType::kOrg)]);
    entry["share_pct"]["PER"] = opt_json(row.share_pct[type_index(EntityType::kPer)]);
    entry["log10"]["LOC"] = opt_json(row.log10_count[type_index(EntityType::kLoc)]);
    entry["log10"]["ORG"] = opt_json(row.log10_count[type_index(EntityType::kOrg)]);
    entry["log10"]["PER"] = opt_json(row.log10_count[type_index(EntityType::kPer)]);
    shares_json.push_back(std::move(entry));
  }
  out["type_shares"] = std::move(shares_json);

  nlohmann::ordered_json empty_json = nlohmann::ordered_json::array();
  for (const EmptyLanguageRow& row : empty_languages) {
    nlohmann::ordered_json entry;
    entry["language"] = row.display_name;
    entry["code"] = row.code;
    entry["iso639_3"] = row.iso639_3;
    empty_json.push_back(std::move(entry));
  }
  out["empty_languages"] = std::move(empty_json);
  return out;
}

std::vector<std::filesystem::path> StatsReport::write_tsv(
    const std::filesystem::path& out_dir) const {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + out_dir.string());
  std::vector<std::filesystem::path> written;

  {
    std::ostringstream body;
    body << "language\tcode\tLOC\tORG\tPER\ttotal\tenglish_match_pct\n";
    for (const LanguageStatsRow& row : rows) {
      body << row.display_name << '\t' << row.code << '\t'
           << row.count(EntityType::kLoc) << '\t'
           << row.count(EntityType::kOrg) << '\t'
           << row.count(EntityType::kPer) << '\t' << row.total() << '\t'
           << format_opt_pct(row.english_match_pct, 2) << '\n';
    }
    const auto aggregate_line = [&body](const char* label,
                                        const AggregateStatsRow& row) {
      body << label << "\t-\t"
           << row.counts[type_index(EntityType::kLoc)] << '\t'
           << row.counts[type_index(EntityType::kOrg)] << '\t'
           << row.counts[type_index(EntityType::kPer)] << '\t' << row.total
           << '\t' << format_opt_pct(row.english_match_pct, 2) << '\n';
    };
    aggregate_line("Mean", mean);
    aggregate_line("Median", median);
    const std::filesystem::path file = out_dir / "stats.tsv";
    write_file(file, body.str());
    written.push_back(file);
  }
  {
    std::ostringstream body;
    body << "language\tcode\tloc_latin_pct\torg_latin_pct\tper_latin_pct\texcluded\n";
    for (const FilteredLanguageRow& row : filtered) {
      body << row.display_name << '\t' << row.code << '\t'
           << format_opt_pct(row.latin_only_pct[type_index(EntityType::kLoc)], 1)
           << '\t'
           << format_opt_pct(row.latin_only_pct[type_index(EntityType::kOrg)], 1)
           << '\t'
           << format_opt_pct(row.latin_only_pct[type_index(EntityType::kPer)], 1)
           << '\t' << row.excluded << '\n';
    }
    const std::filesystem::path file = out_dir / "latin_filter.tsv";
    write_file(file, body.str());
    written.push_back(file);
  }
  {
    std::ostringstream body;
    body << "code\tLOC\tORG\tPER\tloc_share\torg_share\tper_share\t"
            "loc_log10\torg_log10\tper_log10\n";
    for (const TypeShareRow& row : shares) {
      body << row.code << '\t' << row.counts[type_index(EntityType::kLoc)]
           << '\t' << row.counts[type_index(EntityType::kOrg)] << '\t'
           << row.counts[type_index(EntityType::kPer)] << '\t'
           << format_opt_pct(row.share_pct[type_index(EntityType::kLoc)], 2)
           << '\t'
           << format_opt_pct(row.share_pct[type_index(EntityType::kOrg)], 2)
           << '\t'
           << format_opt_pct(row.share_pct[type_index(EntityType::kPer)], 2)
           << '\t'
           << format_opt_pct(row.log10_count[type_index(EntityType::kLoc)], 4)
           << '\t'
           << format_opt_pct(row.log10_count[type_index(EntityType::kOrg)], 4)
           << '\t'
           << format_opt_pct(row.log10_count[type_index(EntityType::kPer)], 4)
           << '\n';
    }
    const std::filesystem::path file = out_dir / "type_shares.tsv";
    write_file(file, body.str());
    written.push_back(file);
  }
  {
    std::ostringstream body;
    body << "language\tcode\tiso639_3\n";
    for (const EmptyLanguageRow& row : empty_languages) {
      body << row.display_name << '\t' << row.code << '\t' << row.iso639_3
           << '\n';
    }
    const std::filesystem::path file = out_dir / "empty_languages.tsv";
    write_file(file, body.str());
    written.push_back(file);
  }
  return written;
}

std::filesystem::path StatsReport::write_json(
    const std::filesystem::path& out_dir) const {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + out_dir.string());
  const std::filesystem::path file = out_dir / "stats.json";
  write_file(file, to_json().dump(2) + "\n");
  return file;
}

}  // namespace wikinames
