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

#ifndef WIKINAMES_UNICODE_NORMALIZE_HPP_
#define WIKINAMES_UNICODE_NORMALIZE_HPP_

#include <cstdint>
#include <string>
#include <string_view>

namespace wikinames::unicode {

// Canonical composition (NFC) of a UTF-8 string. Invalid byte sequences are
// replaced with U+FFFD before normalizing.
std::string nfc(std::string_view utf8);

// Canonical decomposition with canonical reordering, on code points.
std::u32string nfd(std::u32string_view s);

std::uint8_t combining_class(char32_t cp);

}  // namespace wikinames::unicode

#endif  // WIKINAMES_UNICODE_NORMALIZE_HPP_
