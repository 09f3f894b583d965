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

#include "wikinames/unicode/script.hpp"

#include <cctype>
#include <string>

#include "ucd_data.hpp"
#include "wikinames/unicode/utf8.hpp"

namespace wikinames::unicode {
namespace {

std::string fold_name(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  for (char c : name) {
    if (c == '_' || c == '-' || c == ' ') continue;
    out.push_back(
        static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

}  // namespace

Script script_of(char32_t cp) { return ucd::script_id(cp); }

std::string_view script_name(Script s) { return ucd::script_name(s); }

std::size_t script_count() { return ucd::script_name_count(); }

std::optional<Script> find_script(std::string_view name) {
  const std::string needle = fold_name(name);
  if (needle.empty()) return std::nullopt;
  for (std::size_t i = 0; i < ucd::script_name_count(); ++i) {
    if (fold_name(ucd::script_name(static_cast<Script>(i))) == needle) {
      return static_cast<Script>(i);
    }
  }
  return std::nullopt;
}

bool is_latin_only(std::string_view utf8) {
  bool saw_latin = false;
  std::size_t i = 0;
  while (i < utf8.size()) {
    const Script s = script_of(decode_next(utf8, i));
    if (s == kCommonScript || s == kInheritedScript) continue;
    if (s != kLatinScript) return false;
    saw_latin = true;
  }
  return saw_latin;
}

bool contains_script_and_no_latin(std::string_view utf8, Script script) {
  bool saw_wanted = false;
  std::size_t i = 0;
  while (i < utf8.size()) {
    const Script s = script_of(decode_next(utf8, i));
    if (s == kLatinScript) return false;
    if (s == script) saw_wanted = true;
  }
  return saw_wanted;
}

}  // namespace wikinames::unicode
