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

#ifndef WIKINAMES_COVERAGE_HPP_
#define WIKINAMES_COVERAGE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "wikinames/conll.hpp"
#include "wikinames/extract.hpp"

namespace wikinames {

// Name lookup set for one language. All members are stored in Unicode
// canonical composition (NFC); queries must normalize the same way, which
// match_mention() does.
class NameIndex {
 public:
  static NameIndex build(const std::vector<NameRecord>& records);
  static NameIndex from_names(const std::vector<std::string>& names);

  bool contains_nfc(const std::string& nfc_name) const {
    return names_.count(nfc_name) > 0;
  }
  std::size_t size() const { return names_.size(); }

 private:
  std::unordered_set<std::string> names_;
};

// Exact NFC match, else retry with 1..max_prefix leading code points
// stripped (the noun-class prefix heuristic). Never matches the empty
// string.
bool match_mention(std::string_view mention, const NameIndex& names,
                   int max_prefix);

struct CoverageCounts {
  std::int64_t total = 0;
  std::int64_t matched = 0;
  // 100 * matched / total, half-up to 1 decimal; absent when total == 0.
  std::optional<double> pct() const;
};

struct CoverageReport {
  std::array<CoverageCounts, 3> by_type{};  // indexed by EntityType
  CoverageCounts overall;                   // all non-MISC mentions
  std::int64_t misc_excluded = 0;
  std::int64_t repairs = 0;
  int max_prefix = 0;
  bool unique_mentions = false;
  // Matching modes in effect: exact always; prefix when max_prefix > 0.
  bool exact_mode = true;
  bool prefix_mode = false;

  nlohmann::ordered_json to_json() const;
};

struct CoverageOptions {
  int max_prefix = 3;
  // Count distinct (text, type) mentions once instead of per occurrence.
  bool unique_mentions = false;
};

CoverageReport evaluate_coverage(const ConllDocument& doc,
                                 const NameIndex& names,
                                 const CoverageOptions& options = {});

}  // namespace wikinames

#endif  // WIKINAMES_COVERAGE_HPP_
