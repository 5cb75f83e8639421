// Copyright 2026 The uiksn Authors
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

#ifndef UIKSN_NODE_ID_HPP
#define UIKSN_NODE_ID_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

namespace uiksn {

/// The four node layers of the super-network.
enum class NodeKind : std::uint8_t { User = 0, Post = 1, Knowledge = 2, Field = 3 };

inline constexpr NodeKind kAllNodeKinds[] = {NodeKind::User, NodeKind::Post,
                                             NodeKind::Knowledge, NodeKind::Field};

char kind_letter(NodeKind kind);
std::string_view kind_name(NodeKind kind);  // "user" / "post" / "knowledge" / "field"

/// Typed node handle: a kind plus a dense per-kind index.
/// Renders as the kind letter followed by the index, e.g. "U479", "P1613".
struct NodeId {
  NodeKind kind{NodeKind::User};
  std::uint32_t index{0};

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

std::string render(NodeId id);

/// Inverse of render(): accepts exactly <kind letter><decimal index>.
/// Returns nullopt for anything else (unknown letter, empty digits,
/// leading zeros other than "0" itself, trailing garbage, overflow).
std::optional<NodeId> parse_node_id(std::string_view text);

inline NodeId user_node(std::uint32_t i) { return {NodeKind::User, i}; }
inline NodeId post_node(std::uint32_t i) { return {NodeKind::Post, i}; }
inline NodeId knowledge_node(std::uint32_t i) { return {NodeKind::Knowledge, i}; }
inline NodeId field_node(std::uint32_t i) { return {NodeKind::Field, i}; }

/// The five relation families stored in a SuperNetwork.
enum class RelationKind : std::uint8_t {
  Authorship = 0,      // post -> user
  Containment = 1,     // post x knowledge
  Membership = 2,      // knowledge -> field
  FieldHierarchy = 3,  // child field -> parent field
  Cooccurrence = 4,    // knowledge x knowledge, weighted
};

inline constexpr RelationKind kAllRelationKinds[] = {
    RelationKind::Authorship, RelationKind::Containment, RelationKind::Membership,
    RelationKind::FieldHierarchy, RelationKind::Cooccurrence};

std::string_view relation_name(RelationKind kind);
std::optional<RelationKind> parse_relation_kind(std::string_view name);

/// Small set of relation kinds; used to restrict ego-network traversals.
class RelationSet {
 public:
  constexpr RelationSet() = default;
  constexpr RelationSet(std::initializer_list<RelationKind> kinds) {
    for (RelationKind k : kinds) insert(k);
  }

  constexpr RelationSet& insert(RelationKind k) {
    bits_ |= bit(k);
    return *this;
  }
  constexpr bool contains(RelationKind k) const { return (bits_ & bit(k)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }

  static constexpr RelationSet all() {
    RelationSet s;
    s.bits_ = 0x1f;
    return s;
  }

  friend constexpr bool operator==(RelationSet, RelationSet) = default;

 private:
  static constexpr std::uint8_t bit(RelationKind k) {
    return static_cast<std::uint8_t>(1u << static_cast<std::uint8_t>(k));
  }
  std::uint8_t bits_ = 0;
};

/// Parses a comma-separated list of relation names ("containment,cooccurrence").
/// Throws Error on an unknown name.
RelationSet parse_relation_set(std::string_view names);
std::string relation_set_to_string(RelationSet set);

}  // namespace uiksn

#endif  // UIKSN_NODE_ID_HPP
