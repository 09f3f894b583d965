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

#include "wikinames/coverage.hpp"
#include "wikinames/errors.hpp"

using namespace wikinames;

namespace {

std::size_t idx(EntityType type) { return static_cast<std::size_t>(type); }

NameIndex index_of(std::vector<std::string> names) {
  return NameIndex::from_names(names);
}

ConllDocument doc_of(std::vector<Mention> mentions) {
  ConllDocument doc;
  doc.mentions = std::move(mentions);
  return doc;
}

TEST_SUITE("coverage") {

TEST_CASE("name index normalizes to NFC") {
  // "é" precomposed vs "e" + combining acute.
  const NameIndex index = index_of({"Caf\x65\xCC\x81"});
  CHECK(index.size() == 1);
  CHECK(index.contains_nfc("Caf\xC3\xA9"));
  CHECK(!index.contains_nfc("Caf\x65\xCC\x81"));  // raw decomposed form
}

TEST_CASE("build() indexes record names, duplicates collapse") {
  std::vector<NameRecord> records;
  records.push_back({"Q1", "sw", EntityType::kLoc, "Nairobi", false});
  records.push_back({"Q2", "sw", EntityType::kPer, "Nairobi", false});
  records.push_back({"Q3", "sw", EntityType::kOrg, "Benki Kuu", false});
  const NameIndex index = NameIndex::build(records);
  CHECK(index.size() == 2);
  CHECK(index.contains_nfc("Nairobi"));
  CHECK(index.contains_nfc("Benki Kuu"));
}

TEST_CASE("match_mention: exact, then prefix strips") {
  const NameIndex index = index_of({"Goli", "Nairobi"});
  CHECK(match_mention("Nairobi", index, 0));
  CHECK(!match_mention("eGoli", index, 0));
  CHECK(match_mention("eGoli", index, 1));   // strip the class prefix
  CHECK(match_mention("kwaGoli", index, 3)); // three code points stripped
  CHECK(!match_mention("kwaGoli", index, 2));
  CHECK(!match_mention("", index, 3));
  CHECK(!match_mention("xyzw", index, 10));  // stripping to empty is no match
}

TEST_CASE("match_mention normalizes the query") {
  const NameIndex index = index_of({"Caf\xC3\xA9 Moto"});
  CHECK(match_mention("Caf\x65\xCC\x81 Moto", index, 0));
}

TEST_CASE("prefix stripping counts code points, not bytes") {
  // Mention is the Amharic for Finland with one extra leading letter.
  const std::string finland =
      "\xE1\x8D\x8A\xE1\x8A\x95\xE1\x88\x8B\xE1\x8A\x95\xE1\x8B\xB5";
  const NameIndex index = index_of({finland});
  const std::string prefixed = "\xE1\x8A\xA0" + finland;
  CHECK(!match_mention(prefixed, index, 0));
  CHECK(match_mention(prefixed, index, 1));
}

TEST_CASE("coverage over a small document") {
  const NameIndex index = index_of({"Nairobi", "Marie Curie", "Goli"});
  const ConllDocument doc = doc_of({
      {"Nairobi", MentionType::kLoc},
      {"eGoli", MentionType::kLoc},
      {"Marie Curie", MentionType::kPer},
      {"Benki Kuu", MentionType::kOrg},
      {"leo", MentionType::kMisc},
  });

  const CoverageReport exact = evaluate_coverage(doc, index, {0, false});
  CHECK(exact.overall.total == 4);
  CHECK(exact.overall.matched == 2);
  CHECK(exact.misc_excluded == 1);
  CHECK(exact.by_type[idx(EntityType::kLoc)].total == 2);
  CHECK(exact.by_type[idx(EntityType::kLoc)].matched == 1);
  CHECK(exact.by_type[idx(EntityType::kPer)].matched == 1);
  CHECK(exact.by_type[idx(EntityType::kOrg)].matched == 0);
  CHECK(!exact.prefix_mode);
  CHECK(exact.exact_mode);

  const CoverageReport prefixed = evaluate_coverage(doc, index, {1, false});
  CHECK(prefixed.overall.matched == 3);  // eGoli now matches
  CHECK(prefixed.by_type[idx(EntityType::kLoc)].matched == 2);
  CHECK(prefixed.prefix_mode);
}

TEST_CASE("matched counts are monotone in max_prefix") {
  const NameIndex index = index_of({"Goli", "Curie", "Afrika"});
  const ConllDocument doc = doc_of({
      {"eGoli", MentionType::kLoc},
      {"kwaGoli", MentionType::kLoc},
      {"Curie", MentionType::kPer},
      {"Umoja wa Afrika", MentionType::kOrg},
  });
  std::int64_t last = -1;
  for (int prefix = 0; prefix <= 5; ++prefix) {
    const CoverageReport report =
        evaluate_coverage(doc, index, {prefix, false});
    CHECK(report.overall.matched >= last);
    CHECK(report.overall.total == 4);
    last = report.overall.matched;
  }
  CHECK(last == 3);  // the multi-word ORG never matches
}

TEST_CASE("unique mode counts each (text, type) once") {
  const NameIndex index = index_of({"Nairobi"});
  const ConllDocument doc = doc_of({
      {"Nairobi", MentionType::kLoc},
      {"Nairobi", MentionType::kLoc},
      {"Nairobi", MentionType::kOrg},  // same text, different type: kept
      {"Mombasa", MentionType::kLoc},
  });
  const CoverageReport spans = evaluate_coverage(doc, index, {0, false});
  CHECK(spans.overall.total == 4);
  CHECK(spans.overall.matched == 3);

  const CoverageReport unique = evaluate_coverage(doc, index, {0, true});
  CHECK(unique.overall.total == 3);
  CHECK(unique.overall.matched == 2);
  CHECK(unique.by_type[idx(EntityType::kLoc)].total == 2);
  CHECK(unique.by_type[idx(EntityType::kOrg)].total == 1);
  CHECK(unique.unique_mentions);
}

TEST_CASE("empty name list matches nothing but keeps totals") {
  const NameIndex index = index_of({});
  const ConllDocument doc = doc_of({
      {"Nairobi", MentionType::kLoc},
      {"Curie", MentionType::kPer},
  });
  const CoverageReport report = evaluate_coverage(doc, index, {3, false});
  CHECK(report.overall.total == 2);
  CHECK(report.overall.matched == 0);
  REQUIRE(report.overall.pct().has_value());
  CHECK(*report.overall.pct() == 0.0);
}

TEST_CASE("percentages are half-up to one decimal") {
  CoverageCounts counts;
  counts.total = 3;
  counts.matched = 1;
  REQUIRE(counts.pct().has_value());
  CHECK(*counts.pct() == 33.3);
  counts.total = 8;
  counts.matched = 1;
  CHECK(*counts.pct() == 12.5);
  counts.total = 0;
  counts.matched = 0;
  CHECK(!counts.pct().has_value());
}

TEST_CASE("negative max_prefix is a configuration error") {
  const NameIndex index = index_of({"Nairobi"});
  const ConllDocument doc = doc_of({{"Nairobi", MentionType::kLoc}});
  CHECK_THROWS_AS(evaluate_coverage(doc, index, {-1, false}), ConfigError);
}

TEST_CASE("repairs are carried through from the document") {
  ConllDocument doc = doc_of({{"Nairobi", MentionType::kLoc}});
  doc.repairs = 7;
  const CoverageReport report =
      evaluate_coverage(doc, index_of({"Nairobi"}), {0, false});
  CHECK(report.repairs == 7);
}

TEST_CASE("report JSON shape") {
  const NameIndex index = index_of({"Nairobi"});
  const ConllDocument doc = doc_of({
      {"Nairobi", MentionType::kLoc},
      {"Mombasa", MentionType::kLoc},
      {"leo", MentionType::kMisc},
  });
  const CoverageReport report = evaluate_coverage(doc, index, {2, true});
  const nlohmann::ordered_json json = report.to_json();
  CHECK(json["overall"]["total"] == 2);
  CHECK(json["overall"]["matched"] == 1);
  CHECK(json["overall"]["pct"] == 50.0);
  CHECK(json["by_type"]["LOC"]["total"] == 2);
  CHECK(json["by_type"]["PER"]["total"] == 0);
  CHECK(json["by_type"]["PER"]["pct"].is_null());
  CHECK(json["misc_excluded"] == 1);
  CHECK(json["max_prefix"] == 2);
  CHECK(json["unique_mentions"] == true);
  CHECK(json["modes"]["exact"] == true);
  CHECK(json["modes"]["prefix"] == true);
}

}  // TEST_SUITE

}  // namespace
