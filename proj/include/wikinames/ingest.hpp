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

#ifndef WIKINAMES_INGEST_HPP_
#define WIKINAMES_INGEST_HPP_

#include <cstdint>

#include <nlohmann/json.hpp>

#include "wikinames/dump_reader.hpp"
#include "wikinames/entity_store.hpp"

namespace wikinames {

struct IngestOptions {
  int threads = 1;              // parse/reduce workers
  std::size_t batch_size = 10000;  // lines per store transaction
};

struct IngestSummary {
  std::uint64_t lines_total = 0;  // logical (non-blank) lines
  std::uint64_t delimiters = 0;   // the "[" and "]" wrapper lines
  std::uint64_t entities = 0;
  std::uint64_t skipped = 0;      // sum of the three buckets below
  std::uint64_t malformed_json = 0;
  std::uint64_t missing_id = 0;
  std::uint64_t non_item = 0;     // properties, lexemes, other namespaces
  std::uint64_t duration_ms = 0;

  // Durations are reporting-only; deterministic artifacts exclude them.
  nlohmann::ordered_json to_json(bool include_duration) const;
};

// Streams the dump into the store. Lines are read sequentially and handed
// to `threads` parse/reduce workers batch by batch; results are committed
// in input order, so the stored state is identical for any thread count.
IngestSummary ingest(DumpReader& reader, EntityStore& store,
                     const IngestOptions& options = {});

}  // namespace wikinames

#endif  // WIKINAMES_INGEST_HPP_
