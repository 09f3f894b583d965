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

#include <doctest.h>

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "test_util.hpp"
#include "wikinames/stats.hpp"

using namespace wikinames;

namespace {

std::size_t idx(EntityType type) { return static_cast<std::size_t>(type); }

NameRecord record(std::string qid, std::string language, EntityType type,
                  std::string name, bool english_match) {
  return {std::move(qid), std::move(language), type, std::move(name),
          english_match};
}

LanguageConfig three_language_config() {
  LanguageConfig config;
  config.add({"am", "amh", "Amharic",
              ScriptPolicy::require(unicode::kEthiopicScript)});
  config.add({"sw", "swa", "Swahili", ScriptPolicy::any()});
  config.add({"zu", "zul", "Zulu", ScriptPolicy::any()});
  return config;
}

// The fixture behind most cases below: one Amharic LOC name, four Swahili
// records of which three match the English label.
struct Fixture {
  std::vector<NameRecord> records;
  ExtractionSummary summary;
  LanguageConfig config = three_language_config();

  Fixture() {
    records.push_back(record("Q33", "am", EntityType::kLoc,
                             "\xE1\x8D\x8A\xE1\x8A\x95\xE1\x88\x8B\xE1\x8A\x95"
                             "\xE1\x8B\xB5",
                             false));
    records.push_back(record("Q33", "sw", EntityType::kLoc, "Ufini", false));
    records.push_back(
        record("Q2", "sw", EntityType::kOrg, "African Union", true));
    records.push_back(
        record("Q7186", "sw", EntityType::kPer, "Marie Curie", true));
    records.push_back(
        record("Q937", "sw", EntityType::kPer, "Albert Einstein", true));

    LanguageCounters& am = summary.per_language["am"];
    am.records[idx(EntityType::kLoc)] = 1;
    am.candidates[idx(EntityType::kLoc)] = 4;
    am.latin_only[idx(EntityType::kLoc)] = 1;
    am.excluded_by_script = 3;
    LanguageCounters& sw = summary.per_language["sw"];
    sw.records[idx(EntityType::kLoc)] = 1;
    sw.records[idx(EntityType::kOrg)] = 1;
    sw.records[idx(EntityType::kPer)] = 2;
    sw.candidates = sw.records;
    summary.empty_languages = {"zu"};
    summary.entities_classified = 4;
  }
};

TEST_SUITE("stats") {

TEST_CASE("round_half_up rounds halves away from zero") {
  CHECK(round_half_up(2.5, 0) == 3.0);
  CHECK(round_half_up(3.5, 0) == 4.0);
  CHECK(round_half_up(-2.5, 0) == -3.0);
  CHECK(round_half_up(2.4, 0) == 2.0);
  CHECK(round_half_up(16.665, 0) == 17.0);
  // 0.375 and 0.125 are exact in binary, so the half case is genuine.
  CHECK(round_half_up(0.375, 2) == doctest::Approx(0.38));
  CHECK(round_half_up(0.125, 2) == doctest::Approx(0.13));
  CHECK(round_half_up(-0.125, 2) == doctest::Approx(-0.13));
  CHECK(round_half_up(33.333333, 1) == doctest::Approx(33.3));
}

TEST_CASE("per-language rows: counts, english match, sort order") {
  const Fixture fx;
  const StatsReport report = compute_stats(fx.records, fx.summary, fx.config);

  REQUIRE(report.rows.size() == 2);
  // Sorted by display name: Amharic before Swahili.
  const LanguageStatsRow& am = report.rows[0];
  CHECK(am.display_name == "Amharic");
  CHECK(am.code == "am");
  CHECK(am.count(EntityType::kLoc) == 1);
  CHECK(am.count(EntityType::kOrg) == 0);
  CHECK(am.count(EntityType::kPer) == 0);
  CHECK(am.total() == 1);
  REQUIRE(am.english_match_pct.has_value());
  CHECK(*am.english_match_pct == 0.0);

  const LanguageStatsRow& sw = report.rows[1];
  CHECK(sw.code == "sw");
  CHECK(sw.count(EntityType::kLoc) == 1);
  CHECK(sw.count(EntityType::kOrg) == 1);
  CHECK(sw.count(EntityType::kPer) == 2);
  CHECK(sw.total() == 4);
  REQUIRE(sw.english_match_pct.has_value());
  CHECK(*sw.english_match_pct == 75.0);  // 3 of 4

  REQUIRE(report.empty_languages.size() == 1);
  CHECK(report.empty_languages[0].display_name == "Zulu");
  CHECK(report.empty_languages[0].code == "zu");
  CHECK(report.empty_languages[0].iso639_3 == "zul");
}

TEST_CASE("rows recount exactly from the records") {
  const Fixture fx;
  const StatsReport report = compute_stats(fx.records, fx.summary, fx.config);
  for (const LanguageStatsRow& row : report.rows) {
    std::array<std::int64_t, 3> recount{};
    std::int64_t matches = 0;
    for (const NameRecord& rec : fx.records) {
      if (rec.language != row.code) continue;
      ++recount[idx(rec.type)];
      if (rec.english_match) ++matches;
    }
    CHECK(row.counts == recount);
    REQUIRE(row.english_match_pct.has_value());
    CHECK(*row.english_match_pct ==
          round_half_up(100.0 * static_cast<double>(matches) /
                            static_cast<double>(row.total()),
                        2));
  }
}

TEST_CASE("filtered rows cover require-script languages only") {
  const Fixture fx;
  const StatsReport report = compute_stats(fx.records, fx.summary, fx.config);
  REQUIRE(report.filtered.size() == 1);
  const FilteredLanguageRow& row = report.filtered[0];
  CHECK(row.code == "am");
  CHECK(row.display_name == "Amharic");
  // 1 Latin-only of 4 LOC candidates; no ORG/PER candidates at all.
  REQUIRE(row.latin_only_pct[idx(EntityType::kLoc)].has_value());
  CHECK(*row.latin_only_pct[idx(EntityType::kLoc)] == 25.0);
  CHECK(!row.latin_only_pct[idx(EntityType::kOrg)].has_value());
  CHECK(!row.latin_only_pct[idx(EntityType::kPer)].has_value());
  CHECK(row.excluded == 3);
}

TEST_CASE("type shares and log10 columns") {
  const Fixture fx;
  const StatsReport report = compute_stats(fx.records, fx.summary, fx.config);
  REQUIRE(report.shares.size() == 2);
  CHECK(report.shares[0].code == "am");
  CHECK(report.shares[1].code == "sw");
  const TypeShareRow& sw = report.shares[1];
  CHECK(sw.counts == report.rows[1].counts);
  CHECK(*sw.share_pct[idx(EntityType::kLoc)] == 25.0);
  CHECK(*sw.share_pct[idx(EntityType::kOrg)] == 25.0);
  CHECK(*sw.share_pct[idx(EntityType::kPer)] == 50.0);
  CHECK(*sw.log10_count[idx(EntityType::kLoc)] == doctest::Approx(0.0));
  CHECK(*sw.log10_count[idx(EntityType::kPer)] ==
        doctest::Approx(0.30103).epsilon(1e-6));
  // Zero counts have no log entry.
  const TypeShareRow& am = report.shares[0];
  CHECK(!am.log10_count[idx(EntityType::kOrg)].has_value());
  CHECK(!am.log10_count[idx(EntityType::kPer)].has_value());
}

TEST_CASE("mean is half-up per column") {
  std::vector<LanguageStatsRow> rows(4);
  const std::array<std::int64_t, 3> counts[] = {
      {2, 10, 1}, {3, 20, 1}, {4, 31, 1}, {5, 40, 3}};
  const double pcts[] = {10.0, 25.0, 25.5, 80.0};
  for (std::size_t i = 0; i < 4; ++i) {
    rows[i].counts = counts[i];
    rows[i].english_match_pct = pcts[i];
  }
  const AggregateStatsRow mean = compute_mean(rows);
  CHECK(mean.counts[0] == 4);   // 14/4 = 3.5 -> 4
  CHECK(mean.counts[1] == 25);  // 101/4 = 25.25 -> 25
  CHECK(mean.counts[2] == 2);   // 6/4 = 1.5 -> 2
  CHECK(mean.total == 30);      // 121/4 = 30.25 -> 30
  REQUIRE(mean.english_match_pct.has_value());
  CHECK(*mean.english_match_pct == 35.0);  // 140.5/4 = 35.125 -> 35
}

TEST_CASE("median takes the upper middle value") {
  std::vector<LanguageStatsRow> rows(4);
  const std::array<std::int64_t, 3> counts[] = {
      {2, 10, 1}, {3, 20, 1}, {4, 31, 1}, {5, 40, 3}};
  const double pcts[] = {10.0, 25.0, 25.5, 80.0};
  for (std::size_t i = 0; i < 4; ++i) {
    rows[i].counts = counts[i];
    rows[i].english_match_pct = pcts[i];
  }
  const AggregateStatsRow median = compute_median(rows);
  CHECK(median.counts[0] == 4);   // upper of {3,4}
  CHECK(median.counts[1] == 31);  // upper of {20,31}
  CHECK(median.counts[2] == 1);
  CHECK(median.total == 36);  // totals {13,24,36,48}: upper of {24,36}
  REQUIRE(median.english_match_pct.has_value());
  CHECK(*median.english_match_pct == 26.0);  // upper 25.5, whole percent

  // Odd count: the plain middle element.
  rows.resize(3);
  CHECK(compute_median(rows).counts[0] == 3);
  CHECK(compute_median(rows).total == 24);
}

TEST_CASE("aggregates skip rows without an english-match value") {
  std::vector<LanguageStatsRow> rows(3);
  rows[0].counts = {1, 0, 0};
  rows[1].counts = {2, 0, 0};
  rows[1].english_match_pct = 10.0;
  rows[2].counts = {3, 0, 0};
  rows[2].english_match_pct = 30.0;
  const AggregateStatsRow mean = compute_mean(rows);
  CHECK(mean.counts[0] == 2);
  REQUIRE(mean.english_match_pct.has_value());
  CHECK(*mean.english_match_pct == 20.0);

  rows[1].english_match_pct.reset();
  rows[2].english_match_pct.reset();
  CHECK(!compute_mean(rows).english_match_pct.has_value());
  CHECK(!compute_median(rows).english_match_pct.has_value());
}

TEST_CASE("empty input yields the zero aggregate") {
  const AggregateStatsRow mean = compute_mean({});
  CHECK(mean.total == 0);
  CHECK(mean.counts == std::array<std::int64_t, 3>{});
  CHECK(!mean.english_match_pct.has_value());
  const AggregateStatsRow median = compute_median({});
  CHECK(median.total == 0);
  CHECK(!median.english_match_pct.has_value());
}

TEST_CASE("stats.tsv layout") {
  const Fixture fx;
  const StatsReport report = compute_stats(fx.records, fx.summary, fx.config);
  test::TempDir dir;
  const auto files = report.write_tsv(dir.path());
  REQUIRE(files.size() == 4);

  const std::string stats = test::read_file(dir / "stats.tsv");
  REQUIRE(!stats.empty());
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < stats.size()) {
    const std::size_t end = stats.find('\n', start);
    lines.push_back(stats.substr(start, end - start));
    start = end + 1;
  }
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "language\tcode\tLOC\tORG\tPER\ttotal\tenglish_match_pct");
  CHECK(lines[1] == "Amharic\tam\t1\t0\t0\t1\t0.00");
  CHECK(lines[2] == "Swahili\tsw\t1\t1\t2\t4\t75.00");
  // Mean of LOC {1,1}=1, ORG {0,1} = 0.5 -> 1, PER {0,2}=1, totals {1,4}=2.5
  // -> 3; english match mean (0+75)/2 = 37.5 -> 38.
  CHECK(lines[3] == "Mean\t-\t1\t1\t1\t3\t38.00");
  // Upper medians of the same columns.
  CHECK(lines[4] == "Median\t-\t1\t1\t2\t4\t75.00");
}

TEST_CASE("auxiliary tsv files") {
  const Fixture fx;
  const StatsReport report = compute_stats(fx.records, fx.summary, fx.config);
  test::TempDir dir;
  report.write_tsv(dir.path());

  CHECK(test::read_file(dir / "latin_filter.tsv") ==
        "language\tcode\tloc_latin_pct\torg_latin_pct\tper_latin_pct\t"
        "excluded\n"
        "Amharic\tam\t25.0\t\t\t3\n");
  CHECK(test::read_file(dir / "empty_languages.tsv") ==
        "language\tcode\tiso639_3\nZulu\tzu\tzul\n");

  const std::string shares = test::read_file(dir / "type_shares.tsv");
  CHECK(shares.find("code\tLOC\tORG\tPER\tloc_share\torg_share\tper_share\t"
                    "loc_log10\torg_log10\tper_log10\n") == 0);
  CHECK(shares.find("am\t1\t0\t0\t100.00\t0.00\t0.00\t0.0000\t\t\n") !=
        std::string::npos);
  CHECK(shares.find("sw\t1\t1\t2\t25.00\t25.00\t50.00\t0.0000\t0.0000\t"
                    "0.3010\n") != std::string::npos);
}

TEST_CASE("stats.json mirrors the report") {
  const Fixture fx;
  const StatsReport report = compute_stats(fx.records, fx.summary, fx.config);
  test::TempDir dir;
  const std::filesystem::path file = report.write_json(dir.path());
  const std::string body = test::read_file(file);
  REQUIRE(!body.empty());
  CHECK(body.back() == '\n');

  const nlohmann::json doc = nlohmann::json::parse(body);
  REQUIRE(doc["languages"].size() == 2);
  CHECK(doc["languages"][0]["code"] == "am");
  CHECK(doc["languages"][1]["code"] == "sw");
  CHECK(doc["languages"][1]["counts"]["PER"] == 2);
  CHECK(doc["languages"][1]["total"] == 4);
  CHECK(doc["languages"][1]["english_match_pct"] == 75.0);
  CHECK(doc["mean"]["total"] == 3);
  CHECK(doc["median"]["total"] == 4);
  CHECK(doc["median"]["english_match_pct"] == 75.0);
  REQUIRE(doc["latin_filter"].size() == 1);
  CHECK(doc["latin_filter"][0]["code"] == "am");
  CHECK(doc["latin_filter"][0]["latin_only_pct"]["LOC"] == 25.0);
  CHECK(doc["latin_filter"][0]["latin_only_pct"]["ORG"].is_null());
  CHECK(doc["latin_filter"][0]["excluded"] == 3);
  REQUIRE(doc["type_shares"].size() == 2);
  CHECK(doc["type_shares"][1]["share_pct"]["PER"] == 50.0);
  CHECK(doc["type_shares"][0]["log10"]["ORG"].is_null());
  REQUIRE(doc["empty_languages"].size() == 1);
  CHECK(doc["empty_languages"][0]["iso639_3"] == "zul");
}

TEST_CASE("languages with zero-count tallies are reported empty") {
  Fixture fx;
  // A tally whose counts are all zero must land in empty_languages, not in
  // the populated rows.
  std::vector<NameRecord> records = fx.records;
  const StatsReport before = compute_stats(records, fx.summary, fx.config);
  CHECK(before.rows.size() == 2);

  records.erase(records.begin());  // drop the only Amharic record
  const StatsReport after = compute_stats(records, fx.summary, fx.config);
  REQUIRE(after.rows.size() == 1);
  CHECK(after.rows[0].code == "sw");
  REQUIRE(after.empty_languages.size() == 2);
  CHECK(after.empty_languages[0].code == "am");  // config order
  CHECK(after.empty_languages[1].code == "zu");
}

}  // TEST_SUITE

}  // namespace
