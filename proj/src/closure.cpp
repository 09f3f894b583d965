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

#include "wikinames/closure.hpp"

#include <algorithm>
#include <deque>

#include "wikinames/errors.hpp"

namespace wikinames {

RootConfig RootConfig::from_flag(std::string_view csv) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = csv.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? csv.size() : comma;
    std::string part(csv.substr(start, end - start));
    // Trim surrounding spaces.
    while (!part.empty() && part.front() == ' ') part.erase(part.begin());
    while (!part.empty() && part.back() == ' ') part.pop_back();
    parts.push_back(std::move(part));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3) {
    throw ConfigError("--roots expects three comma-separated qids "
                      "(PER,LOC,ORG order)");
  }
  for (const std::string& part : parts) {
    if (!is_valid_qid(part)) {
      throw ConfigError("--roots: not a valid qid: " + part);
    }
  }
  RootConfig config;
  config.per_root = parts[0];
  config.loc_root = parts[1];
  config.org_root = parts[2];
  return config;
}

int SubclassGraph::intern(std::string_view qid) {
  const auto it = index_.find(qid);
  if (it != index_.end()) return it->second;
  const int id = static_cast<int>(ids_.size());
  ids_.emplace_back(qid);
  parents_.emplace_back();
  children_.emplace_back();
  index_.emplace(ids_.back(), id);
  return id;
}

int SubclassGraph::find(std::string_view qid) const {
  const auto it = index_.find(qid);
  return it == index_.end() ? -1 : it->second;
}

void SubclassGraph::add_node(std::string_view qid) { intern(qid); }

void SubclassGraph::add_edge(std::string_view child, std::string_view parent) {
  const int c = intern(child);
  const int p = intern(parent);
  std::vector<int>& up = parents_[static_cast<std::size_t>(c)];
  if (std::find(up.begin(), up.end(), p) != up.end()) return;
  up.push_back(p);
  children_[static_cast<std::size_t>(p)].push_back(c);
  ++edge_count_;
}

SubclassGraph SubclassGraph::from_store(const EntityStore& store) {
  SubclassGraph graph;
  store.for_each([&graph](const CompactEntity& entity) {
    for (const std::string& parent : entity.subclass_of) {
      graph.add_edge(entity.qid, parent);
    }
    return true;
  });
  return graph;
}

std::vector<std::string> SubclassGraph::descendants(std::string_view root) const {
  std::vector<std::string> out;
  out.emplace_back(root);
  const int start = find(root);
  if (start < 0) return out;

  std::vector<char> visited(ids_.size(), 0);
  visited[static_cast<std::size_t>(start)] = 1;
  std::deque<int> queue{start};
  while (!queue.empty()) {
    const int node = queue.front();
    queue.pop_front();
    for (const int child : children_[static_cast<std::size_t>(node)]) {
      if (visited[static_cast<std::size_t>(child)] != 0) continue;
      visited[static_cast<std::size_t>(child)] = 1;
      out.push_back(ids_[static_cast<std::size_t>(child)]);
      queue.push_back(child);
    }
  }
  return out;
}

std::size_t ClosureTable::total_members() const {
  std::size_t n = 0;
  for (const auto& [root, set] : members) n += set.size();
  return n;
}

void ClosureTable::save(EntityStore& store) const {
  std::map<std::string, std::vector<std::string>> rows;
  for (const auto& [root, set] : members) {
    rows.emplace(root, std::vector<std::string>(set.begin(), set.end()));
  }
  store.replace_closure(rows);
}

ClosureTable ClosureTable::load(const EntityStore& store) {
  ClosureTable table;
  for (auto& [root, members] : store.load_closure()) {
    table.members.emplace(root,
                          std::set<std::string>(members.begin(), members.end()));
  }
  return table;
}

nlohmann::ordered_json ClosureTable::summary_json() const {
  nlohmann::ordered_json roots = nlohmann::ordered_json::object();
  for (const auto& [root, set] : members) {
    roots[root] = set.size();
  }
  nlohmann::ordered_json out;
  out["roots"] = std::move(roots);
  out["total_members"] = total_members();
  return out;
}

ClosureTable compute_closure(const SubclassGraph& graph,
                             const std::vector<std::string>& roots) {
  ClosureTable table;
  for (const std::string& root : roots) {
    if (!is_valid_qid(root)) throw ConfigError("closure root is not a qid: " + root);
    std::vector<std::string> members = graph.descendants(root);
    table.members[root] = std::set<std::string>(
        std::make_move_iterator(members.begin()),
        std::make_move_iterator(members.end()));
  }
  return table;
}

TypeSet classify(const CompactEntity& entity, const ClosureTable& closure,
                 const RootConfig& roots) {
  TypeSet types;
  for (const EntityType type : kAllEntityTypes) {
    const std::string& root = roots.root_for(type);
    for (const std::string& cls : entity.instance_of) {
      if (closure.contains(root, cls)) {
        types.add(type);
        break;
      }
    }
  }
  return types;
}

}  // namespace wikinames
