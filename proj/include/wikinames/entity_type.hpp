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

#ifndef WIKINAMES_ENTITY_TYPE_HPP_
#define WIKINAMES_ENTITY_TYPE_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace wikinames {

enum class EntityType : std::uint8_t { kPer = 0, kLoc = 1, kOrg = 2 };

constexpr EntityType kAllEntityTypes[] = {EntityType::kPer, EntityType::kLoc,
                                          EntityType::kOrg};

constexpr std::string_view to_string(EntityType type) {
  switch (type) {
    case EntityType::kPer: return "PER";
    case EntityType::kLoc: return "LOC";
    case EntityType::kOrg: return "ORG";
  }
  return "?";
}

constexpr std::optional<EntityType> parse_entity_type(std::string_view s) {
  if (s == "PER") return EntityType::kPer;
  if (s == "LOC") return EntityType::kLoc;
  if (s == "ORG") return EntityType::kOrg;
  return std::nullopt;
}

// A set of entity types, as produced by classification against the three
// root classes. An entity reachable from several roots carries several
// types until resolve_type() picks the final one.
class TypeSet {
 public:
  constexpr TypeSet() = default;
  constexpr explicit TypeSet(EntityType t) { add(t); }

  constexpr void add(EntityType t) { mask_ |= bit(t); }
  constexpr bool contains(EntityType t) const { return (mask_ & bit(t)) != 0; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const {
    int n = 0;
    for (EntityType t : kAllEntityTypes) n += contains(t) ? 1 : 0;
    return n;
  }
  constexpr bool operator==(const TypeSet&) const = default;

 private:
  constexpr static std::uint8_t bit(EntityType t) {
    return static_cast<std::uint8_t>(1U << static_cast<std::uint8_t>(t));
  }
  std::uint8_t mask_ = 0;
};

// Collapses a multi-type classification to a single type:
//   {PER}            -> PER    {LOC}           -> LOC    {ORG} -> ORG
//   {PER, LOC, ORG}  -> ORG    {ORG, PER}      -> ORG
//   {ORG, LOC}       -> LOC    {LOC, PER}      -> PER
// Total over all non-empty sets; throws std::logic_error on an empty set
// (callers must only resolve entities that matched at least one root).
constexpr EntityType resolve_type(TypeSet types) {
  if (types.empty()) throw std::logic_error("resolve_type: empty type set");
  if (types.size() == 1) {
    for (EntityType t : kAllEntityTypes) {
      if (types.contains(t)) return t;
    }
  }
  if (types.contains(EntityType::kOrg)) {
    // {ORG, LOC} keeps LOC; every other combination with ORG becomes ORG.
    if (types.contains(EntityType::kLoc) && !types.contains(EntityType::kPer)) {
      return EntityType::kLoc;
    }
    return EntityType::kOrg;
  }
  // {LOC, PER}: typically a person whose class chain also reaches a
  // location root (mythological figures and similar); treat as a person.
  return EntityType::kPer;
}

}  // namespace wikinames

#endif  // WIKINAMES_ENTITY_TYPE_HPP_
