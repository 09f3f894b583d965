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

#ifndef WIKINAMES_CONLL_HPP_
#define WIKINAMES_CONLL_HPP_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

namespace wikinames {

// Mention types in the annotations; MISC exists only to be excluded from
// coverage numbers.
enum class MentionType : std::uint8_t { kPer, kLoc, kOrg, kMisc };

std::string_view to_string(MentionType type);

struct Mention {
  std::string text;  // space-joined tokens
  MentionType type = MentionType::kMisc;

  bool operator==(const Mention&) const = default;
};

struct ConllDocument {
  std::vector<Mention> mentions;

  // Loss accounting: token_lines == outside_tokens + mention_tokens.
  std::int64_t token_lines = 0;
  std::int64_t outside_tokens = 0;
  std::int64_t mention_tokens = 0;
  std::int64_t blank_lines = 0;
  std::int64_t repairs = 0;  // I- without a matching open span
};

// Reads token-per-line BIO data: first column is the token, last column
// the tag (O / B-TYPE / I-TYPE), blank lines separate sentences. An I-
// tag without an open span of its type starts a new mention and bumps the
// repair counter. Unknown tag types are treated as MISC. Tags "O" and
// "OUT" both mean outside.
ConllDocument read_conll(std::istream& in);
ConllDocument read_conll_file(const std::filesystem::path& path);

}  // namespace wikinames

#endif  // WIKINAMES_CONLL_HPP_
