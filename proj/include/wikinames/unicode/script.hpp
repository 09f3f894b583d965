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

#ifndef WIKINAMES_UNICODE_SCRIPT_HPP_
#define WIKINAMES_UNICODE_SCRIPT_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

namespace wikinames::unicode {

// Index into the generated script name table (see ucd_tables.inc).
using Script = std::uint16_t;

// The generator pins these ids; everything else is positional.
inline constexpr Script kUnknownScript = 0;
inline constexpr Script kCommonScript = 1;
inline constexpr Script kInheritedScript = 2;
inline constexpr Script kLatinScript = 3;
inline constexpr Script kEthiopicScript = 4;

Script script_of(char32_t cp);
std::string_view script_name(Script s);
std::size_t script_count();

// Loose lookup of a UCD script value: case-insensitive, ignoring
// '_', '-', and spaces ("tai le" finds Tai_Le).
std::optional<Script> find_script(std::string_view name);

// True when at least one script-bearing character remains after dropping
// Common/Inherited characters (spaces, digits, punctuation, combining
// marks) and every remaining character is Latin.
bool is_latin_only(std::string_view utf8);

// True when the string contains at least one character of `script` and no
// Latin character.
bool contains_script_and_no_latin(std::string_view utf8, Script script);

}  // namespace wikinames::unicode

#endif  // WIKINAMES_UNICODE_SCRIPT_HPP_
