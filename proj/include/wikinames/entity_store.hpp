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

#ifndef WIKINAMES_ENTITY_STORE_HPP_
#define WIKINAMES_ENTITY_STORE_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wikinames/compact_entity.hpp"

namespace wikinames {

// Persistent, indexed store of compact entities, embedded in a directory.
//
// Backed by a single SQLite database file inside the store directory.
// Entities are indexed by qid, by label language, and by instance-of
// class; a separate collection persists the computed subclass closures.
// All scans iterate in ascending numeric qid order, so results are
// deterministic and independent of insertion order.
//
// Concurrency contract: one writer at a time; readers may share a store
// directory between processes once the writer has closed it.
class EntityStore {
 public:
  enum class OpenMode { kReadWrite, kReadOnly };

  // Opens (creating if needed in kReadWrite mode) the store in `dir`.
  explicit EntityStore(const std::filesystem::path& dir,
                       OpenMode mode = OpenMode::kReadWrite);
  ~EntityStore();
  EntityStore(EntityStore&&) noexcept;
  EntityStore& operator=(EntityStore&&) noexcept;
  EntityStore(const EntityStore&) = delete;
  EntityStore& operator=(const EntityStore&) = delete;

  // True if `dir` already holds a store database.
  static bool exists(const std::filesystem::path& dir);

  // Inserts or replaces one entity. Replacement repairs the language and
  // class indexes, so stale index rows never survive an overwrite.
  void put(const CompactEntity& entity);

  // Inserts a batch atomically; much faster than repeated put().
  void put_batch(const std::vector<CompactEntity>& batch);

  std::optional<CompactEntity> get(std::string_view qid) const;
  std::uint64_t entity_count() const;

  // Visitors receive entities in ascending numeric qid order and return
  // true to continue, false to stop.
  using Visitor = std::function<bool(const CompactEntity&)>;
  void for_each(const Visitor& visit) const;
  void for_each_in_language(std::string_view lang, const Visitor& visit) const;
  // Entities whose instance-of list intersects `classes`, each visited once.
  void for_each_instance_of(const std::set<std::string>& classes,
                            const Visitor& visit) const;

  // Writes every entity as one JSON document per line, ordered by qid.
  void export_jsonl(std::ostream& out) const;

  // Closure collection: root qid -> members (the root itself included).
  void replace_closure(
      const std::map<std::string, std::vector<std::string>>& closure);
  std::map<std::string, std::vector<std::string>> load_closure() const;
  bool has_closure() const;

  void set_meta(std::string_view key, std::string_view value);
  std::optional<std::string> get_meta(std::string_view key) const;

  const std::filesystem::path& directory() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace wikinames

#endif  // WIKINAMES_ENTITY_STORE_HPP_
