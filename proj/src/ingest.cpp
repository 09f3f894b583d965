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

#include "wikinames/ingest.hpp"

#include <chrono>
#include <thread>
#include <vector>

#include <spdlog/spdlog.h>

#include "wikinames/entity_reduce.hpp"

namespace wikinames {
namespace {

// Outcome of reducing one slice of a batch; merged in slice order.
struct SliceResult {
  std::vector<CompactEntity> entities;
  std::uint64_t blank = 0;
  std::uint64_t delimiters = 0;
  std::uint64_t malformed_json = 0;
  std::uint64_t missing_id = 0;
  std::uint64_t non_item = 0;
};

void reduce_lines(const std::string* lines, std::size_t count,
                  SliceResult& out) {
  for (std::size_t i = 0; i < count; ++i) {
    DumpLine parsed = parse_dump_line(lines[i]);
    switch (parsed.kind) {
      case DumpLineKind::kBlank:
        ++out.blank;
        continue;
      case DumpLineKind::kDelimiter:
        ++out.delimiters;
        continue;
      case DumpLineKind::kMalformed:
        ++out.malformed_json;
        continue;
      case DumpLineKind::kEntity:
        break;
    }
    ReduceOutcome outcome = reduce_entity(parsed.doc);
    switch (outcome.status) {
      case ReduceStatus::kMissingId:
        ++out.missing_id;
        break;
      case ReduceStatus::kNotAnItem:
        ++out.non_item;
        break;
      case ReduceStatus::kOk:
        out.entities.push_back(std::move(outcome.entity));
        break;
    }
  }
}

}  // namespace

nlohmann::ordered_json IngestSummary::to_json(bool include_duration) const {
  nlohmann::ordered_json out;
  out["lines_total"] = lines_total;
  out["delimiters"] = delimiters;
  out["entities"] = entities;
  out["skipped"] = skipped;
  out["skipped_breakdown"]["malformed_json"] = malformed_json;
  out["skipped_breakdown"]["missing_id"] = missing_id;
  out["skipped_breakdown"]["non_item"] = non_item;
  if (include_duration) out["duration_ms"] = duration_ms;
  return out;
}

IngestSummary ingest(DumpReader& reader, EntityStore& store,
                     const IngestOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const int threads = options.threads > 0 ? options.threads : 1;
  const std::size_t batch_size =
      options.batch_size > 0 ? options.batch_size : 10000;

  IngestSummary summary;
  std::vector<std::string> batch;
  batch.reserve(batch_size);
  std::vector<CompactEntity> to_store;

  const auto commit = [&](std::vector<SliceResult>& slices) {
    to_store.clear();
    SliceResult merged;
    for (SliceResult& slice : slices) {
      merged.blank += slice.blank;
      merged.delimiters += slice.delimiters;
      merged.malformed_json += slice.malformed_json;
      merged.missing_id += slice.missing_id;
      merged.non_item += slice.non_item;
      for (CompactEntity& entity : slice.entities) {
        to_store.push_back(std::move(entity));
      }
    }
    if (!to_store.empty()) {
      try {
        store.put_batch(to_store);
      } catch (...) {
        spdlog::error("ingest aborted; {} entities committed before failure",
                      summary.entities);
        throw;
      }
    }
    summary.delimiters += merged.delimiters;
    summary.malformed_json += merged.malformed_json;
    summary.missing_id += merged.missing_id;
    summary.non_item += merged.non_item;
    summary.lines_total -= merged.blank;  // blanks are not logical lines
    summary.entities += to_store.size();
  };

  const auto process_batch = [&] {
    if (batch.empty()) return;
    summary.lines_total += batch.size();
    std::vector<SliceResult> slices;
    if (threads == 1 || batch.size() < 2 * static_cast<std::size_t>(threads)) {
      slices.resize(1);
      reduce_lines(batch.data(), batch.size(), slices[0]);
    } else {
      const std::size_t n = static_cast<std::size_t>(threads);
      slices.resize(n);
      std::vector<std::thread> workers;
      workers.reserve(n);
      const std::size_t stride = (batch.size() + n - 1) / n;
      for (std::size_t w = 0; w < n; ++w) {
        const std::size_t begin = w * stride;
        if (begin >= batch.size()) break;
        const std::size_t count = std::min(stride, batch.size() - begin);
        workers.emplace_back(reduce_lines, batch.data() + begin, count,
                             std::ref(slices[w]));
      }
      for (std::thread& worker : workers) worker.join();
    }
    commit(slices);
    batch.clear();
  };

  std::string line;
  while (reader.next_line(line)) {
    batch.push_back(std::move(line));
    if (batch.size() >= batch_size) process_batch();
  }
  process_batch();

  summary.skipped =
      summary.malformed_json + summary.missing_id + summary.non_item;
  summary.duration_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start)
          .count());
  spdlog::info("ingest: {} entities, {} skipped, {} logical lines in {} ms",
               summary.entities, summary.skipped, summary.lines_total,
               summary.duration_ms);
  return summary;
}

}  // namespace wikinames
