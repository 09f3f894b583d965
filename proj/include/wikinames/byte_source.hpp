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

#ifndef WIKINAMES_BYTE_SOURCE_HPP_
#define WIKINAMES_BYTE_SOURCE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

#include "wikinames/errors.hpp"

namespace wikinames {

// Pull interface for sequential byte input.
class ByteSource {
 public:
  virtual ~ByteSource() = default;
  // Reads up to `size` bytes into `out`; returns the number of bytes read.
  // Zero means end of input.
  virtual std::size_t read(char* out, std::size_t size) = 0;
};

class FileByteSource : public ByteSource {
 public:
  explicit FileByteSource(const std::filesystem::path& path)
      : file_(std::fopen(path.string().c_str(), "rb")), path_(path.string()) {
    if (file_ == nullptr) {
      throw IoError("cannot open file: " + path_);
    }
  }
  ~FileByteSource() override {
    if (file_ != nullptr) std::fclose(file_);
  }
  FileByteSource(const FileByteSource&) = delete;
  FileByteSource& operator=(const FileByteSource&) = delete;

  std::size_t read(char* out, std::size_t size) override {
    const std::size_t n = std::fread(out, 1, size, file_);
    if (n < size && std::ferror(file_)) {
      throw IoError("read error on " + path_);
    }
    return n;
  }

 private:
  std::FILE* file_;
  std::string path_;
};

class MemoryByteSource : public ByteSource {
 public:
  explicit MemoryByteSource(std::string data) : data_(std::move(data)) {}

  std::size_t read(char* out, std::size_t size) override {
    const std::size_t n = std::min(size, data_.size() - pos_);
    std::memcpy(out, data_.data() + pos_, n);
    pos_ += n;
    return n;
  }

 private:
  std::string data_;
  std::size_t pos_ = 0;
};

}  // namespace wikinames

#endif  // WIKINAMES_BYTE_SOURCE_HPP_
