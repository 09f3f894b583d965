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

#include "ucd_data.hpp"

#include <algorithm>
#include <iterator>

namespace wikinames::unicode::ucd {
namespace {

struct CodePointRange {
  char32_t first;
  char32_t last;
  std::uint16_t script;
};

struct CombiningClassEntry {
  char32_t cp;
  std::uint8_t ccc;
};

struct DecompositionEntry {
  char32_t cp;
  std::uint32_t offset;
  std::uint8_t length;
};

struct CompositionEntry {
  std::uint64_t key;  // (first << 21) | second
  char32_t composed;
};

#include "wikinames/unicode/ucd_tables.inc"

}  // namespace

std::uint16_t script_id(char32_t cp) {
  const auto* end = std::end(kScriptRanges);
  const auto* it = std::upper_bound(
      std::begin(kScriptRanges), end, cp,
      [](char32_t v, const CodePointRange& r) { return v < r.first; });
  if (it == std::begin(kScriptRanges)) return 0;
  --it;
  return cp <= it->last ? it->script : 0;
}

std::string_view script_name(std::uint16_t id) {
  if (id >= std::size(kScriptNames)) return "Unknown";
  return kScriptNames[id];
}

std::size_t script_name_count() { return std::size(kScriptNames); }

std::uint8_t combining_class(char32_t cp) {
  const auto* end = std::end(kCombiningClasses);
  const auto* it = std::lower_bound(
      std::begin(kCombiningClasses), end, cp,
      [](const CombiningClassEntry& e, char32_t v) { return e.cp < v; });
  return (it != end && it->cp == cp) ? it->ccc : 0;
}

const char32_t* decomposition(char32_t cp, std::size_t& length) {
  const auto* end = std::end(kDecompositions);
  const auto* it = std::lower_bound(
      std::begin(kDecompositions), end, cp,
      [](const DecompositionEntry& e, char32_t v) { return e.cp < v; });
  if (it == end || it->cp != cp) {
    length = 0;
    return nullptr;
  }
  length = it->length;
  return &kDecompositionData[it->offset];
}

bool compose_pair(char32_t a, char32_t b, char32_t& out) {
  const std::uint64_t key =
      (static_cast<std::uint64_t>(a) << 21) | static_cast<std::uint64_t>(b);
  const auto* end = std::end(kCompositions);
  const auto* it = std::lower_bound(
      std::begin(kCompositions), end, key,
      [](const CompositionEntry& e, std::uint64_t v) { return e.key < v; });
  if (it == end || it->key != key) return false;
  out = it->composed;
  return true;
}

}  // namespace wikinames::unicode::ucd
