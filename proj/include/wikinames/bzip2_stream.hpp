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

#ifndef WIKINAMES_BZIP2_STREAM_HPP_
#define WIKINAMES_BZIP2_STREAM_HPP_

#include <cstddef>
#include <memory>
#include <string>

#include "wikinames/byte_source.hpp"

namespace wikinames {

// Returns true if the first bytes look like a bzip2 stream header
// ("BZh" followed by a block-size digit '1'..'9').
bool looks_like_bzip2(const char* data, std::size_t size);

// Streaming bzip2 decompressor over an arbitrary byte source.
//
// Decompression only. Handles multi-stream files (concatenated streams,
// as produced by pbzip2 or plain file concatenation) and verifies both
// per-block and combined stream CRCs. Memory use is bounded by the block
// size declared in the stream header (at most 900k of BWT state plus the
// decoded block), independent of total input size.
//
// Throws DataError on malformed or truncated input and on CRC mismatch.
// The long-deprecated "randomized" block format is rejected.
class Bzip2Source : public ByteSource {
 public:
  explicit Bzip2Source(std::unique_ptr<ByteSource> input);
  ~Bzip2Source() override;
  Bzip2Source(const Bzip2Source&) = delete;
  Bzip2Source& operator=(const Bzip2Source&) = delete;

  std::size_t read(char* out, std::size_t size) override;

  // Convenience: decompress an entire in-memory buffer.
  static std::string decompress(std::string compressed);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace wikinames

#endif  // WIKINAMES_BZIP2_STREAM_HPP_
