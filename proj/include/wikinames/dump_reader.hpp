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

#ifndef WIKINAMES_DUMP_READER_HPP_
#define WIKINAMES_DUMP_READER_HPP_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "wikinames/byte_source.hpp"

namespace wikinames {

enum class Compression {
  kAuto,   // sniff the file header
  kNone,   // plain text
  kBzip2,  // bzip2 stream
};

// Parses a --compression flag value ("auto" | "none" | "bz2-style").
Compression parse_compression(std::string_view name);
std::string_view to_string(Compression compression);

// Reads a dump file line by line, decompressing transparently.
//
// The expected layout is one JSON entity document per line wrapped in a
// top-level JSON array: an opening "[" line, entity lines each optionally
// ending in a comma, and a closing "]" line. DumpReader itself only splits
// lines; classification happens in parse_dump_line().
class DumpReader {
 public:
  static DumpReader open(const std::filesystem::path& path,
                         Compression compression = Compression::kAuto);

  // Fetches the next line (without its terminator) into `line`.
  // Returns false at end of input. Lines may be arbitrarily long; memory
  // use is proportional to the longest single line, not the file.
  bool next_line(std::string& line);

  // 1-based number of the line most recently returned.
  std::uint64_t line_number() const { return line_number_; }

 private:
  explicit DumpReader(std::unique_ptr<ByteSource> source);

  std::unique_ptr<ByteSource> source_;
  std::string buffer_;
  std::size_t buffer_pos_ = 0;
  bool eof_ = false;
  std::uint64_t line_number_ = 0;
};

// Classification of a single dump line.
enum class DumpLineKind {
  kEntity,     // a JSON object (one entity document)
  kDelimiter,  // the "[" or "]" array wrapper line
  kBlank,      // whitespace only; not counted as a logical line
  kMalformed,  // anything else
};

struct DumpLine {
  DumpLineKind kind = DumpLineKind::kBlank;
  nlohmann::json doc;  // populated only for kEntity
};

// Trims whitespace and at most one trailing comma, then classifies the
// line. Entity lines are parsed into a JSON document; lines that fail to
// parse or do not hold a JSON object are kMalformed.
DumpLine parse_dump_line(std::string_view line);

}  // namespace wikinames

#endif  // WIKINAMES_DUMP_READER_HPP_
