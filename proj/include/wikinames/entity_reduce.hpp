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

#ifndef WIKINAMES_ENTITY_REDUCE_HPP_
#define WIKINAMES_ENTITY_REDUCE_HPP_

#include <nlohmann/json.hpp>

#include "wikinames/compact_entity.hpp"

namespace wikinames {

enum class ReduceStatus {
  kOk,
  kMissingId,  // no usable "id" field
  kNotAnItem,  // id present but not a Q-item (property, lexeme, ...)
};

struct ReduceOutcome {
  ReduceStatus status = ReduceStatus::kMissingId;
  CompactEntity entity;  // valid only when status == kOk
};

// Reduces a raw dump document to the compact form: qid, labels, aliases,
// and the P31/P279 target lists (deduplicated, first occurrence wins).
// Label and alias entries with unexpected shapes are skipped silently;
// only a missing or non-item id rejects the document as a whole.
ReduceOutcome reduce_entity(const nlohmann::json& raw);

}  // namespace wikinames

#endif  // WIKINAMES_ENTITY_REDUCE_HPP_
