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

#include "wikinames/errors.hpp"
#include "wikinames/toml_lite.hpp"

using namespace wikinames;
using namespace wikinames::toml_lite;

TEST_SUITE("toml_lite") {

TEST_CASE("parses the supported value kinds") {
  const Document doc = parse(R"(
# leading comment
title = "names"        # trailing comment
threads = 4
enabled = true
disabled = false
roots = ["Q5", "Q82794", "Q43229"]
escaped = "tab\there \"quoted\" é"

[section]
key = "value"

[[entry]]
code = "sw"

[[entry]]
code = "am"
)");

  CHECK(get_string(doc.root, "title") == "names");
  CHECK(get_int(doc.root, "threads") == 4);
  CHECK(get_bool(doc.root, "enabled"));
  CHECK(!get_bool(doc.root, "disabled"));
  CHECK(get_string_array(doc.root, "roots") ==
        std::vector<std::string>{"Q5", "Q82794", "Q43229"});
  CHECK(get_string(doc.root, "escaped") == "tab\there \"quoted\" \xC3\xA9");

  REQUIRE(doc.table("section") != nullptr);
  CHECK(get_string(*doc.table("section"), "key") == "value");
  CHECK(doc.table("missing") == nullptr);

  REQUIRE(doc.table_arrays.size() == 2);
  CHECK(doc.table_arrays[0].first == "entry");
  CHECK(get_string(doc.table_arrays[0].second, "code") == "sw");
  CHECK(get_string(doc.table_arrays[1].second, "code") == "am");
}

TEST_CASE("serialize-parse round trip") {
  Document doc;
  doc.root["zeta"] = std::string("z");
  doc.root["alpha"] = std::int64_t{-12};
  doc.root["flag"] = true;
  doc.root["list"] = std::vector<std::string>{"a \"b\"", "c\td"};
  doc.tables["t"]["k"] = std::string("v");
  doc.table_arrays.push_back({"arr", {{"x", std::string("1")}}});
  doc.table_arrays.push_back({"arr", {{"x", std::string("2")}}});

  const std::string text = serialize(doc);
  const Document back = parse(text);
  CHECK(back.root == doc.root);
  CHECK(back.tables == doc.tables);
  CHECK(back.table_arrays == doc.table_arrays);
  // Serialization itself is deterministic.
  CHECK(serialize(back) == text);
}

TEST_CASE("errors carry line numbers") {
  const auto message = [](const auto& callable) {
    try {
      callable();
    } catch (const ConfigError& err) {
      return std::string(err.what());
    }
    return std::string("no error");
  };

  CHECK(message([] { parse("key = "); }).find("line 1") != std::string::npos);
  CHECK(message([] { parse("\n\nkey ~ 3"); }).find("line 3") != std::string::npos);
  CHECK_THROWS_AS(parse("[unclosed"), ConfigError);
  CHECK_THROWS_AS(parse("key = \"unterminated"), ConfigError);
  CHECK_THROWS_AS(parse("a = 1\na = 2"), ConfigError);  // duplicate key
  CHECK_THROWS_AS(parse("a = [1, 2]"), ConfigError);    // non-string array
}

TEST_CASE("typed accessors name the offending key") {
  const Document doc = parse("a = \"s\"");
  CHECK_THROWS_AS(get_int(doc.root, "a"), ConfigError);
  CHECK_THROWS_AS(get_string(doc.root, "missing"), ConfigError);
  CHECK(get_string_or(doc.root, "missing", "fallback") == "fallback");
  CHECK(get_int_or(doc.root, "missing", 7) == 7);
  CHECK(get_bool_or(doc.root, "missing", true));
}

}  // TEST_SUITE
