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

#include "wikinames/conll.hpp"

#include <fstream>

#include "wikinames/errors.hpp"

namespace wikinames {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

MentionType parse_mention_type(std::string_view name) {
  // NCHLT-style data writes PERS for persons; accept both spellings.
  if (name == "PER" || name == "PERS") return MentionType::kPer;
  if (name == "LOC") return MentionType::kLoc;
  if (name == "ORG") return MentionType::kOrg;
  return MentionType::kMisc;
}

struct OpenSpan {
  std::string text;
  MentionType type = MentionType::kMisc;
  bool active = false;
};

}  // namespace

std::string_view to_string(MentionType type) {
  switch (type) {
    case MentionType::kPer: return "PER";
    case MentionType::kLoc: return "LOC";
    case MentionType::kOrg: return "ORG";
    case MentionType::kMisc: return "MISC";
  }
  return "?";
}

ConllDocument read_conll(std::istream& in) {
  ConllDocument doc;
  OpenSpan span;
  const auto close_span = [&] {
    if (!span.active) return;
    doc.mentions.push_back({std::move(span.text), span.type});
    span = OpenSpan{};
  };

  std::string raw;
  while (std::getline(in, raw)) {
    const std::string_view line = trim(raw);
    if (line.empty()) {
      ++doc.blank_lines;
      close_span();
      continue;
    }
    ++doc.token_lines;

    // First column is the token, last column the tag; middle columns
    // (lemma, POS, ...) are ignored.
    const std::size_t first_ws = line.find_first_of(" \t");
    const std::string_view token =
        first_ws == std::string_view::npos ? line : line.substr(0, first_ws);
    std::string_view tag = line;
    if (const std::size_t last_ws = line.find_last_of(" \t");
        last_ws != std::string_view::npos) {
      tag = line.substr(last_ws + 1);
    }

    if (tag == "O" || tag == "OUT" || tag == token) {
      // A one-column line has no tag; treat it as outside.
      ++doc.outside_tokens;
      close_span();
      continue;
    }
    if (tag.size() < 3 || (tag[0] != 'B' && tag[0] != 'I') || tag[1] != '-') {
      throw DataError("conll: unrecognized tag '" + std::string(tag) + "'");
    }
    const MentionType type = parse_mention_type(tag.substr(2));
    ++doc.mention_tokens;
    if (tag[0] == 'B') {
      close_span();
      span.active = true;
      span.type = type;
      span.text = std::string(token);
      continue;
    }
    // I- tag: continue a span of the same type, otherwise repair by
    // starting a new span here.
    if (span.active && span.type == type) {
      span.text += ' ';
      span.text += token;
      continue;
    }
    close_span();
    ++doc.repairs;
    span.active = true;
    span.type = type;
    span.text = std::string(token);
  }
  close_span();
  return doc;
}

ConllDocument read_conll_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open conll file: " + path.string());
  return read_conll(in);
}

}  // namespace wikinames
