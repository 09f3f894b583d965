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

#ifndef WIKINAMES_CLOSURE_HPP_
#define WIKINAMES_CLOSURE_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "wikinames/compact_entity.hpp"
#include "wikinames/entity_store.hpp"
#include "wikinames/entity_type.hpp"

namespace wikinames {

// The root classes anchoring each entity type, in PER, LOC, ORG order.
// Defaults: human (Q5), geographic location (Q82794), organization (Q43229).
struct RootConfig {
  std::string per_root = "Q5";
  std::string loc_root = "Q82794";
  std::string org_root = "Q43229";

  const std::string& root_for(EntityType type) const {
    switch (type) {
      case EntityType::kPer: return per_root;
      case EntityType::kLoc: return loc_root;
      case EntityType::kOrg: return org_root;
    }
    return org_root;
  }

  // Parses a comma-separated "Qper,Qloc,Qorg" triple (the --roots flag).
  static RootConfig from_flag(std::string_view csv);

  std::vector<std::string> roots() const {
    return {per_root, loc_root, org_root};
  }
  bool operator==(const RootConfig&) const = default;
};

// Directed subclass-of graph over item qids, edges child -> parent.
class SubclassGraph {
 public:
  // Adds one subclass edge; duplicate edges collapse to one.
  void add_edge(std::string_view child, std::string_view parent);
  // Registers a node without edges (roots must exist even when isolated).
  void add_node(std::string_view qid);

  std::size_t node_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  // Collects the P279 edges of every stored entity.
  static SubclassGraph from_store(const EntityStore& store);

  // Members of the subclass closure of `root`: root plus every class from
  // which `root` is reachable along child -> parent edges. Cycle-safe.
  // A root absent from the graph yields just {root}.
  std::vector<std::string> descendants(std::string_view root) const;

 private:
  int intern(std::string_view qid);
  int find(std::string_view qid) const;

  std::map<std::string, int, std::less<>> index_;
  std::vector<std::string> ids_;
  std::vector<std::vector<int>> parents_;   // forward edges
  std::vector<std::vector<int>> children_;  // reverse edges, used by BFS
  std::size_t edge_count_ = 0;
};

// Root qid -> sorted closure members (each set contains its root).
struct ClosureTable {
  std::map<std::string, std::set<std::string>> members;

  bool contains(const std::string& root, const std::string& qid) const {
    const auto it = members.find(root);
    return it != members.end() && it->second.count(qid) > 0;
  }
  std::size_t total_members() const;

  void save(EntityStore& store) const;
  static ClosureTable load(const EntityStore& store);

  nlohmann::ordered_json summary_json() const;
};

// Computes the closure of each root over the graph.
ClosureTable compute_closure(const SubclassGraph& graph,
                             const std::vector<std::string>& roots);

// All types whose root closure contains one of the entity's instance-of
// classes. Empty when the entity matches no root.
TypeSet classify(const CompactEntity& entity, const ClosureTable& closure,
                 const RootConfig& roots);

}  // namespace wikinames

#endif  // WIKINAMES_CLOSURE_HPP_
