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

#ifndef WIKINAMES_TOML_LITE_HPP_
#define WIKINAMES_TOML_LITE_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace wikinames::toml_lite {

// The subset of TOML the config files need: top-level key/value pairs,
// [section] tables, repeatable [[section]] tables, and values that are
// strings, integers, booleans, or single-line string arrays. Comments
// start with '#' outside of quotes. Nested tables and dotted keys are
// out of scope.

using Value =
    std::variant<std::string, std::int64_t, bool, std::vector<std::string>>;
using Table = std::map<std::string, Value>;

struct Document {
  Table root;
  std::map<std::string, Table> tables;                       // [name]
  std::vector<std::pair<std::string, Table>> table_arrays;   // [[name]]

  const Table* table(std::string_view name) const;
};

// Parses `text`; throws ConfigError with a line number on any syntax the
// subset does not cover.
Document parse(std::string_view text);
Document parse_file(const std::filesystem::path& path);

// Serializes deterministically: root keys sorted, then [tables] sorted by
// name, then [[table arrays]] in insertion order.
std::string serialize(const Document& doc);

// Accessors that throw ConfigError naming the key when missing/mistyped.
const std::string& get_string(const Table& table, const std::string& key);
std::int64_t get_int(const Table& table, const std::string& key);
bool get_bool(const Table& table, const std::string& key);
const std::vector<std::string>& get_string_array(const Table& table,
                                                 const std::string& key);
// Optional variants returning a fallback.
std::string get_string_or(const Table& table, const std::string& key,
                          std::string_view fallback);
std::int64_t get_int_or(const Table& table, const std::string& key,
                        std::int64_t fallback);
bool get_bool_or(const Table& table, const std::string& key, bool fallback);

}  // namespace wikinames::toml_lite

#endif  // WIKINAMES_TOML_LITE_HPP_
