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

#include "wikinames/dump_reader.hpp"

#include <cctype>
#include <fstream>

#include "wikinames/bzip2_stream.hpp"
#include "wikinames/errors.hpp"

namespace wikinames {
namespace {

constexpr std::size_t kChunkSize = 256 * 1024;

Compression sniff(const std::filesystem::path& path) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) throw IoError("cannot open dump: " + path.string());
  char head[4] = {0, 0, 0, 0};
  probe.read(head, sizeof(head));
  const std::size_t got = static_cast<std::size_t>(probe.gcount());
  if (looks_like_bzip2(head, got)) return Compression::kBzip2;
  if (got == 0) return Compression::kNone;  // empty file: framing will complain
  // Plain dumps start with printable text (normally the "[" wrapper).
  const unsigned char first = static_cast<unsigned char>(head[0]);
  if (first == '\t' || first == '\n' || first == '\r' || (first >= 0x20 && first != 0x7F)) {
    return Compression::kNone;
  }
  throw DataError("unrecognized compression header in " + path.string());
}

}  // namespace

Compression parse_compression(std::string_view name) {
  if (name == "auto") return Compression::kAuto;
  if (name == "none") return Compression::kNone;
  if (name == "bz2-style") return Compression::kBzip2;
  throw ConfigError("unknown compression mode: " + std::string(name));
}

std::string_view to_string(Compression compression) {
  switch (compression) {
    case Compression::kAuto: return "auto";
    case Compression::kNone: return "none";
    case Compression::kBzip2: return "bz2-style";
  }
  return "auto";
}

DumpReader::DumpReader(std::unique_ptr<ByteSource> source)
    : source_(std::move(source)) {
  buffer_.reserve(kChunkSize * 2);
}

DumpReader DumpReader::open(const std::filesystem::path& path,
                            Compression compression) {
  if (!std::filesystem::exists(path)) {
    throw IoError("dump file not found: " + path.string());
  }
  Compression mode = compression;
  if (mode == Compression::kAuto) mode = sniff(path);
  auto file = std::make_unique<FileByteSource>(path);
  if (mode == Compression::kBzip2) {
    return DumpReader(std::make_unique<Bzip2Source>(std::move(file)));
  }
  return DumpReader(std::move(file));
}

bool DumpReader::next_line(std::string& line) {
  line.clear();
  while (true) {
    const std::size_t nl = buffer_.find('\n', buffer_pos_);
    if (nl != std::string::npos) {
      line.append(buffer_, buffer_pos_, nl - buffer_pos_);
      buffer_pos_ = nl + 1;
      break;
    }
    line.append(buffer_, buffer_pos_, buffer_.size() - buffer_pos_);
    buffer_.clear();
    buffer_pos_ = 0;
    if (eof_) {
      if (line.empty()) return false;
      break;  // final line without a terminator
    }
    buffer_.resize(kChunkSize);
    const std::size_t n = source_->read(buffer_.data(), kChunkSize);
    buffer_.resize(n);
    if (n == 0) eof_ = true;
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  ++line_number_;
  return true;
}

DumpLine parse_dump_line(std::string_view line) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
  };
  std::size_t begin = 0, end = line.size();
  while (begin < end && is_space(line[begin])) ++begin;
  while (end > begin && is_space(line[end - 1])) --end;
  std::string_view body = line.substr(begin, end - begin);

  DumpLine result;
  if (body.empty()) {
    result.kind = DumpLineKind::kBlank;
    return result;
  }
  if (body == "[" || body == "]") {
    result.kind = DumpLineKind::kDelimiter;
    return result;
  }
  // Entity lines inside the array wrapper end with a separating comma.
  if (body.back() == ',') {
    body.remove_suffix(1);
    while (!body.empty() && is_space(body.back())) body.remove_suffix(1);
  }
  nlohmann::json doc = nlohmann::json::parse(body, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    result.kind = DumpLineKind::kMalformed;
    return result;
  }
  result.kind = DumpLineKind::kEntity;
  result.doc = std::move(doc);
  return result;
}

}  // namespace wikinames
