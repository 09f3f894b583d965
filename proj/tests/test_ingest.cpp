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

#include <sstream>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "wikinames/ingest.hpp"

using namespace wikinames;

namespace {

IngestSummary ingest_file(const std::filesystem::path& dump,
                          EntityStore& store, const IngestOptions& options = {}) {
  DumpReader reader = DumpReader::open(dump);
  return ingest(reader, store, options);
}

std::string export_of(const EntityStore& store) {
  std::ostringstream out;
  store.export_jsonl(out);
  return out.str();
}

TEST_SUITE("ingest") {

TEST_CASE("line conservation on the mini dump") {
  test::TempDir tmp;
  EntityStore store(tmp.path());
  const IngestSummary s =
      ingest_file(test::data_dir() / "mini_dump.json", store);
  CHECK(s.lines_total == 11);  // the blank line is not a logical line
  CHECK(s.delimiters == 2);
  CHECK(s.entities == 7);
  CHECK(s.skipped == 2);
  CHECK(s.malformed_json == 1);
  CHECK(s.missing_id == 0);
  CHECK(s.non_item == 1);  // the P31 property document
  CHECK(s.entities + s.skipped + s.delimiters == s.lines_total);
  CHECK(store.entity_count() == 7);
}

TEST_CASE("stored entities carry labels, claims, and aliases") {
  test::TempDir tmp;
  EntityStore store(tmp.path());
  ingest_file(test::data_dir() / "mini_dump.json", store);

  const auto curie = store.get("Q7186");
  REQUIRE(curie.has_value());
  CHECK(curie->labels.at("sw") == "Marie Curie");
  CHECK(curie->english_label() == "Marie Curie");
  CHECK(curie->instance_of == std::vector<std::string>{"Q5"});
  CHECK(curie->aliases.at("sw") ==
        std::vector<std::string>{"Maria Sklodowska"});

  // The instance-of claim on Q2 uses the numeric-id form.
  const auto union_ = store.get("Q2");
  REQUIRE(union_.has_value());
  CHECK(union_->instance_of == std::vector<std::string>{"Q43229"});

  const auto country = store.get("Q6256");
  REQUIRE(country.has_value());
  CHECK(country->subclass_of == std::vector<std::string>{"Q82794"});
  CHECK(country->instance_of.empty());

  CHECK(!store.get("P31").has_value());
}

TEST_CASE("bz2 and plain dumps ingest identically") {
  test::TempDir plain_dir;
  test::TempDir bz2_dir;
  EntityStore plain_store(plain_dir.path());
  EntityStore bz2_store(bz2_dir.path());
  const IngestSummary plain =
      ingest_file(test::data_dir() / "mini_dump.json", plain_store);
  const IngestSummary bz2 =
      ingest_file(test::data_dir() / "mini_dump.json.bz2", bz2_store);
  CHECK(plain.to_json(false) == bz2.to_json(false));
  CHECK(export_of(plain_store) == export_of(bz2_store));
  CHECK(bz2_store.entity_count() == 7);
}

TEST_CASE("thread count does not change the stored result") {
  test::TempDir one_dir;
  test::TempDir four_dir;
  EntityStore one_store(one_dir.path());
  EntityStore four_store(four_dir.path());
  IngestOptions one;
  one.threads = 1;
  one.batch_size = 3;  // force several commits
  IngestOptions four;
  four.threads = 4;
  four.batch_size = 3;
  const IngestSummary a =
      ingest_file(test::data_dir() / "mini_dump.json", one_store, one);
  const IngestSummary b =
      ingest_file(test::data_dir() / "mini_dump.json", four_store, four);
  CHECK(a.to_json(false) == b.to_json(false));
  CHECK(export_of(one_store) == export_of(four_store));
}

TEST_CASE("re-ingesting replaces instead of duplicating") {
  test::TempDir tmp;
  EntityStore store(tmp.path());
  ingest_file(test::data_dir() / "mini_dump.json", store);
  const std::string first = export_of(store);
  ingest_file(test::data_dir() / "mini_dump.json", store);
  CHECK(store.entity_count() == 7);
  CHECK(export_of(store) == first);
}

TEST_CASE("summary JSON includes the duration only on request") {
  IngestSummary s;
  s.lines_total = 11;
  s.delimiters = 2;
  s.entities = 7;
  s.skipped = 2;
  s.malformed_json = 1;
  s.non_item = 1;
  s.duration_ms = 1234;

  const nlohmann::ordered_json with = s.to_json(true);
  CHECK(with["duration_ms"] == 1234);
  CHECK(with["entities"] == 7);
  CHECK(with["skipped_breakdown"]["malformed_json"] == 1);
  CHECK(with["skipped_breakdown"]["missing_id"] == 0);
  CHECK(with["skipped_breakdown"]["non_item"] == 1);

  const nlohmann::ordered_json without = s.to_json(false);
  CHECK(!without.contains("duration_ms"));
  CHECK(without["lines_total"] == 11);
}

}  // TEST_SUITE

}  // namespace
