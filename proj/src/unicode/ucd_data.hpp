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

// Internal accessors over the generated Unicode tables. Not installed.

#ifndef WIKINAMES_SRC_UNICODE_UCD_DATA_HPP_
#define WIKINAMES_SRC_UNICODE_UCD_DATA_HPP_

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace wikinames::unicode::ucd {

std::uint16_t script_id(char32_t cp);
std::string_view script_name(std::uint16_t id);
std::size_t script_name_count();

std::uint8_t combining_class(char32_t cp);

// Full canonical decomposition (already recursively expanded), or nullptr
// when the code point decomposes to itself. Hangul syllables are not in the
// table; callers handle them algorithmically.
const char32_t* decomposition(char32_t cp, std::size_t& length);

// Primary canonical composite of the pair, if any (composition exclusions
// and Hangul are absent from the table).
bool compose_pair(char32_t a, char32_t b, char32_t& out);

}  // namespace wikinames::unicode::ucd

#endif  // WIKINAMES_SRC_UNICODE_UCD_DATA_HPP_
