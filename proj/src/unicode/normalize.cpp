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

#include "wikinames/unicode/normalize.hpp"

#include <utility>

#include "ucd_data.hpp"
#include "wikinames/unicode/utf8.hpp"

namespace wikinames::unicode {
namespace {

// Hangul syllable composition constants (UAX #15 §3.12).
constexpr char32_t kSBase = 0xAC00;
constexpr char32_t kLBase = 0x1100;
constexpr char32_t kVBase = 0x1161;
constexpr char32_t kTBase = 0x11A7;
constexpr int kLCount = 19;
constexpr int kVCount = 21;
constexpr int kTCount = 28;
constexpr int kNCount = kVCount * kTCount;
constexpr int kSCount = kLCount * kNCount;

bool is_hangul_syllable(char32_t cp) {
  return cp >= kSBase && cp < kSBase + kSCount;
}

void decompose_hangul(char32_t cp, std::u32string& out) {
  const int index = static_cast<int>(cp - kSBase);
  out.push_back(kLBase + index / kNCount);
  out.push_back(kVBase + (index % kNCount) / kTCount);
  const int t = index % kTCount;
  if (t != 0) out.push_back(kTBase + t);
}

bool compose_hangul(char32_t a, char32_t b, char32_t& out) {
  if (a >= kLBase && a < kLBase + kLCount && b >= kVBase &&
      b < kVBase + kVCount) {
    out = kSBase + ((a - kLBase) * kVCount + (b - kVBase)) * kTCount;
    return true;
  }
  if (is_hangul_syllable(a) && (a - kSBase) % kTCount == 0 && b > kTBase &&
      b < kTBase + kTCount) {
    out = a + (b - kTBase);
    return true;
  }
  return false;
}

bool compose_pair(char32_t a, char32_t b, char32_t& out) {
  if (compose_hangul(a, b, out)) return true;
  return ucd::compose_pair(a, b, out);
}

// Canonical ordering: stable-sort runs of nonzero-ccc characters by ccc
// using adjacent swaps only.
void canonical_order(std::u32string& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    const std::uint8_t ccc = ucd::combining_class(s[i]);
    if (ccc == 0) continue;
    std::size_t j = i;
    while (j > 0 && ucd::combining_class(s[j - 1]) > ccc) {
      std::swap(s[j - 1], s[j]);
      --j;
    }
  }
}

std::u32string compose(std::u32string_view s) {
  std::u32string out;
  out.reserve(s.size());
  // Index of the last starter in `out`, or npos before any starter is seen.
  std::size_t starter = std::u32string::npos;
  int last_ccc = -1;  // ccc of the last uncombined char after the starter
  for (char32_t cp : s) {
    const int ccc = ucd::combining_class(cp);
    if (starter != std::u32string::npos && last_ccc < ccc) {
      char32_t composed;
      if (compose_pair(out[starter], cp, composed)) {
        out[starter] = composed;
        continue;
      }
    }
    if (ccc == 0) {
      starter = out.size();
      last_ccc = -1;
    } else {
      last_ccc = ccc;
    }
    out.push_back(cp);
  }
  return out;
}

}  // namespace

std::u32string nfd(std::u32string_view s) {
  std::u32string out;
  out.reserve(s.size());
  for (char32_t cp : s) {
    if (is_hangul_syllable(cp)) {
      decompose_hangul(cp, out);
      continue;
    }
    std::size_t len;
    if (const char32_t* d = ucd::decomposition(cp, len)) {
      out.append(d, len);
    } else {
      out.push_back(cp);
    }
  }
  canonical_order(out);
  return out;
}

std::string nfc(std::string_view utf8) {
  return encode(compose(nfd(decode(utf8))));
}

std::uint8_t combining_class(char32_t cp) { return ucd::combining_class(cp); }

}  // namespace wikinames::unicode
