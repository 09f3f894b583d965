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

#include "test_util.hpp"
#include "wikinames/compact_entity.hpp"
#include "wikinames/errors.hpp"

using namespace wikinames;

TEST_SUITE("compact_entity") {

TEST_CASE("qid validation") {
  CHECK(is_valid_qid("Q1"));
  CHECK(is_valid_qid("Q82794"));
  CHECK(!is_valid_qid("P31"));
  CHECK(!is_valid_qid("Q"));
  CHECK(!is_valid_qid("Q12x"));
  CHECK(!is_valid_qid("q5"));
  CHECK(!is_valid_qid(""));
}

TEST_CASE("qid_number parses and rejects") {
  CHECK(qid_number("Q5") == 5);
  CHECK(qid_number("Q82794") == 82794);
  CHECK_THROWS_AS(qid_number("L123"), DataError);
  CHECK_THROWS_AS(qid_number("Q12 "), DataError);
}

TEST_CASE("json line round-trip preserves everything") {
  CompactEntity e = test::make_entity(
      "Q33", {{"en", "Finland"}, {"sw", "Ufini"}}, {"Q6256"}, {});
  e.aliases["sw"] = {"Suomi", "Finland"};

  const CompactEntity back = CompactEntity::from_json_line(e.to_json_line());
  CHECK(back == e);
  CHECK(back.english_label() == "Finland");
  CHECK(back.languages() == std::vector<std::string>{"en", "sw"});
  CHECK(back.qid_number() == 33);
}

TEST_CASE("english_label absent when no en label") {
  const CompactEntity e = test::make_entity("Q1", {{"sw", "Dunia"}});
  CHECK(!e.english_label().has_value());
  CHECK(e.has_label_in("sw"));
  CHECK(!e.has_label_in("en"));
}

TEST_CASE("json field order is stable") {
  CompactEntity e = test::make_entity("Q2", {{"en", "Earth"}});
  const std::string line = e.to_json_line();
  CHECK(line.find("\"qid\"") < line.find("\"english_label\""));
  CHECK(line.find("\"english_label\"") < line.find("\"labels\""));
  CHECK(line.find("\"labels\"") < line.find("\"aliases\""));
  CHECK(line.find("\"aliases\"") < line.find("\"instance_of\""));
  CHECK(line.find("\"instance_of\"") < line.find("\"subclass_of\""));
  CHECK(line.find("\"subclass_of\"") < line.find("\"languages\""));
}

TEST_CASE("from_json rejects malformed documents") {
  CHECK_THROWS_AS(CompactEntity::from_json_line("{}"), DataError);
  CHECK_THROWS_AS(CompactEntity::from_json_line("not json"), DataError);
  CHECK_THROWS_AS(CompactEntity::from_json_line(R"({"qid":"P31"})"), DataError);
  // languages must equal the label keys
  CHECK_THROWS_AS(CompactEntity::from_json_line(
                      R"({"qid":"Q1","labels":{"en":"x"},"aliases":{},)"
                      R"("instance_of":[],"subclass_of":[],"languages":["sw"]})"),
                  DataError);
}

}  // TEST_SUITE
