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

#ifndef WIKINAMES_TESTS_TEST_UTIL_HPP_
#define WIKINAMES_TESTS_TEST_UTIL_HPP_

#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wikinames/compact_entity.hpp"

namespace wikinames::test {

inline std::filesystem::path data_dir() {
  return std::filesystem::path(WIKINAMES_TEST_DATA_DIR);
}

// Self-deleting scratch directory.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    const auto base = std::filesystem::temp_directory_path();
    path_ = base / ("wikinames-test-" + std::to_string(counter++) + "-" +
                    std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& leaf) const {
    return path_ / leaf;
  }

 private:
  std::filesystem::path path_;
};

inline CompactEntity make_entity(
    std::string qid, std::map<std::string, std::string> labels,
    std::vector<std::string> instance_of = {},
    std::vector<std::string> subclass_of = {}) {
  CompactEntity e;
  e.qid = std::move(qid);
  e.labels = std::move(labels);
  e.instance_of = std::move(instance_of);
  e.subclass_of = std::move(subclass_of);
  return e;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

inline void write_file(const std::filesystem::path& path,
                       const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out.good()) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace wikinames::test

#endif  // WIKINAMES_TESTS_TEST_UTIL_HPP_
