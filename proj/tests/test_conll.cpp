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

#include "test_util.hpp"
#include "wikinames/conll.hpp"
#include "wikinames/errors.hpp"

using namespace wikinames;

namespace {

ConllDocument parse(const std::string& text) {
  std::istringstream in(text);
  return read_conll(in);
}

TEST_SUITE("conll") {

TEST_CASE("joins BIO spans into space-separated mentions") {
  const ConllDocument doc = parse(
      "Umoja B-ORG\n"
      "wa I-ORG\n"
      "Afrika I-ORG\n"
      "ulianzishwa O\n"
      "mwaka O\n"
      "1999 O\n"
      "\n"
      "Marie B-PER\n"
      "Curie I-PER\n");
  REQUIRE(doc.mentions.size() == 2);
  CHECK(doc.mentions[0] == Mention{"Umoja wa Afrika", MentionType::kOrg});
  CHECK(doc.mentions[1] == Mention{"Marie Curie", MentionType::kPer});
  CHECK(doc.token_lines == 8);
  CHECK(doc.outside_tokens == 3);
  CHECK(doc.mention_tokens == 5);
  CHECK(doc.blank_lines == 1);
  CHECK(doc.repairs == 0);
}

TEST_CASE("all-O input has no mentions") {
  const ConllDocument doc = parse("hii O\nni O\nsentensi O\n");
  CHECK(doc.mentions.empty());
  CHECK(doc.token_lines == 3);
  CHECK(doc.outside_tokens == 3);
  CHECK(doc.mention_tokens == 0);
}

TEST_CASE("adjacent B- tags close the previous span") {
  const ConllDocument doc = parse(
      "Nairobi B-LOC\n"
      "Kenya B-LOC\n");
  REQUIRE(doc.mentions.size() == 2);
  CHECK(doc.mentions[0].text == "Nairobi");
  CHECK(doc.mentions[1].text == "Kenya");
}

TEST_CASE("I- without an open span repairs into a new mention") {
  const ConllDocument doc = parse(
      "Curie I-PER\n"
      "alizaliwa O\n"
      "Poland I-LOC\n");
  REQUIRE(doc.mentions.size() == 2);
  CHECK(doc.mentions[0] == Mention{"Curie", MentionType::kPer});
  CHECK(doc.mentions[1] == Mention{"Poland", MentionType::kLoc});
  CHECK(doc.repairs == 2);
}

TEST_CASE("I- with a different open type also counts as a repair") {
  const ConllDocument doc = parse(
      "Benki B-ORG\n"
      "Kuu I-ORG\n"
      "Afrika I-LOC\n");
  REQUIRE(doc.mentions.size() == 2);
  CHECK(doc.mentions[0] == Mention{"Benki Kuu", MentionType::kOrg});
  CHECK(doc.mentions[1] == Mention{"Afrika", MentionType::kLoc});
  CHECK(doc.repairs == 1);
}

TEST_CASE("PERS is an accepted spelling of PER") {
  const ConllDocument doc = parse(
      "Asha B-PERS\n"
      "Binti I-PERS\n");
  REQUIRE(doc.mentions.size() == 1);
  CHECK(doc.mentions[0] == Mention{"Asha Binti", MentionType::kPer});
}

TEST_CASE("unknown mention types fall back to MISC") {
  const ConllDocument doc = parse(
      "Jumanne B-DATE\n"
      "Intel B-GPE\n");
  REQUIRE(doc.mentions.size() == 2);
  CHECK(doc.mentions[0].type == MentionType::kMisc);
  CHECK(doc.mentions[1].type == MentionType::kMisc);
}

TEST_CASE("OUT is a synonym for O") {
  const ConllDocument doc = parse(
      "neno OUT\n"
      "Kenya B-LOC\n"
      "lingine OUT\n");
  REQUIRE(doc.mentions.size() == 1);
  CHECK(doc.outside_tokens == 2);
  CHECK(doc.mention_tokens == 1);
}

TEST_CASE("middle columns are ignored, last column is the tag") {
  const ConllDocument doc = parse(
      "Marie NNP lemma1 B-PER\n"
      "Curie NNP lemma2 I-PER\n");
  REQUIRE(doc.mentions.size() == 1);
  CHECK(doc.mentions[0].text == "Marie Curie");
}

TEST_CASE("one-column lines count as outside tokens") {
  const ConllDocument doc = parse(
      "neno\n"
      "Kenya B-LOC\n"
      "jingine\n");
  REQUIRE(doc.mentions.size() == 1);
  CHECK(doc.token_lines == 3);
  CHECK(doc.outside_tokens == 2);
  CHECK(doc.mention_tokens == 1);
}

TEST_CASE("span left open at end of input is closed") {
  const ConllDocument doc = parse("Kenya B-LOC");
  REQUIRE(doc.mentions.size() == 1);
  CHECK(doc.mentions[0] == Mention{"Kenya", MentionType::kLoc});
}

TEST_CASE("token lines split exactly into outside and mention tokens") {
  const std::string text =
      "Rais O\n"
      "wa O\n"
      "Benki B-ORG\n"
      "Kuu I-ORG\n"
      "ya I-ORG\n"
      "Kenya I-LOC\n"
      "\n"
      "alisema O\n"
      "Nairobi B-LOC\n"
      "\r\n"
      "mwisho OUT\n";
  const ConllDocument doc = parse(text);
  CHECK(doc.token_lines == 9);
  CHECK(doc.blank_lines == 2);
  CHECK(doc.outside_tokens + doc.mention_tokens == doc.token_lines);
  CHECK(doc.outside_tokens == 4);
  CHECK(doc.mention_tokens == 5);
  CHECK(doc.repairs == 1);  // Kenya I-LOC under an ORG span
}

TEST_CASE("malformed tags are rejected") {
  CHECK_THROWS_AS(parse("Kenya X-LOC\n"), DataError);
  CHECK_THROWS_AS(parse("Kenya BLOC\n"), DataError);
  CHECK_THROWS_AS(parse("Kenya B-\n"), DataError);
  CHECK_THROWS_AS(parse("Kenya b-LOC\n"), DataError);
}

TEST_CASE("windows line endings and stray spaces are trimmed") {
  const ConllDocument doc = parse("Kenya B-LOC\r\n  \r\nCurie B-PER  \r\n");
  REQUIRE(doc.mentions.size() == 2);
  CHECK(doc.mentions[0].text == "Kenya");
  CHECK(doc.mentions[1].text == "Curie");
  CHECK(doc.blank_lines == 1);
}

TEST_CASE("file reader matches the stream reader") {
  test::TempDir dir;
  const std::string text = "Umoja B-ORG\nwa I-ORG\nAfrika I-ORG\n";
  test::write_file(dir / "sample.conll", text);
  const ConllDocument from_file = read_conll_file(dir / "sample.conll");
  const ConllDocument from_stream = parse(text);
  CHECK(from_file.mentions == from_stream.mentions);
  CHECK(from_file.token_lines == from_stream.token_lines);

  CHECK_THROWS_AS(read_conll_file(dir / "absent.conll"), IoError);
}

TEST_CASE("to_string covers every mention type") {
  CHECK(to_string(MentionType::kPer) == "PER");
  CHECK(to_string(MentionType::kLoc) == "LOC");
  CHECK(to_string(MentionType::kOrg) == "ORG");
  CHECK(to_string(MentionType::kMisc) == "MISC");
}

}  // TEST_SUITE

}  // namespace
