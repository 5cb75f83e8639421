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

#ifndef UIKSN_SUPER_NETWORK_HPP
#define UIKSN_SUPER_NETWORK_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "uiksn/node_id.hpp"

namespace uiksn {

/// Key/value record carried by every persisted artifact: seeds, thresholds,
/// source descriptions. std::map keeps iteration (and serialization) ordered.
using Provenance = std::map<std::string, std::string>;

/// Endpoint pair of an unweighted relation edge. Meaning of (a, b) depends on
/// the relation: authorship (post, user), containment (post, knowledge),
/// membership (knowledge, field), hierarchy (child field, parent field).
using Link = std::pair<std::uint32_t, std::uint32_t>;

/// Symmetric weighted co-occurrence edge, stored canonically with a < b.
struct WeightedLink {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint64_t weight = 0;

  friend auto operator<=>(const WeightedLink&, const WeightedLink&) = default;
};

/// The four-layer user innovation knowledge super-network.
///
/// Node layers are dense index spaces 0..n-1 per kind; labels carry the
/// human-readable identity (author name, post external id, keyword, field
/// name). Relations are stored as sorted edge vectors; weight maps are dense
/// per-kind vectors. The structure is a plain value: immutable by convention
/// after assembly, cheap to compare and serialize. Use validate() to check
/// the invariants and NetworkView for indexed queries.
struct SuperNetwork {
  std::vector<std::string> user_labels;
  std::vector<std::string> post_labels;
  std::vector<std::string> knowledge_labels;
  std::vector<std::string> field_labels;

  std::vector<Link> authorship;           // (post, user), exactly one per post
  std::vector<Link> containment;          // (post, knowledge)
  std::vector<Link> membership;           // (knowledge, field), exactly one per knowledge
  std::vector<Link> hierarchy;            // (child field, parent field), forest
  std::vector<WeightedLink> cooccurrence; // knowledge x knowledge, a < b

  std::vector<std::uint64_t> knowledge_weight;  // q(k): # of containing posts
  std::vector<std::uint64_t> user_weight;       // q(u): # of (post, knowledge) incidences
  std::vector<std::uint64_t> field_weight;      // q(f): sum of q(k) reaching f

  Provenance provenance;

  std::size_t node_count(NodeKind kind) const {
    switch (kind) {
      case NodeKind::User: return user_labels.size();
      case NodeKind::Post: return post_labels.size();
      case NodeKind::Knowledge: return knowledge_labels.size();
      case NodeKind::Field: return field_labels.size();
    }
    return 0;
  }

  const std::string& label(NodeId id) const {
    switch (id.kind) {
      case NodeKind::User: return user_labels[id.index];
      case NodeKind::Post: return post_labels[id.index];
      case NodeKind::Knowledge: return knowledge_labels[id.index];
      case NodeKind::Field: return field_labels[id.index];
    }
    return user_labels[id.index];  // unreachable
  }

  friend bool operator==(const SuperNetwork&, const SuperNetwork&) = default;
};

/// Node of an extracted sub-network; self-contained copy of id, label and
/// node weight so exports do not need the parent network.
struct SubNode {
  NodeId id;
  std::string label;
  std::uint64_t weight = 0;

  friend auto operator<=>(const SubNode&, const SubNode&) = default;
};

/// Edge of an extracted sub-network. Unweighted relation families carry
/// weight 1.
struct SubEdge {
  RelationKind kind{RelationKind::Authorship};
  NodeId a;
  NodeId b;
  std::uint64_t weight = 1;

  friend auto operator<=>(const SubEdge&, const SubEdge&) = default;
};

/// An extracted view of a SuperNetwork: hot-knowledge KSN, core-user
/// sub-network, field KSN, self/ego network, or the whole network. Nodes are
/// sorted by (kind, index), edges by (kind, a, b); provenance records the
/// selecting query and the thresholds used.
struct SubNetwork {
  std::vector<SubNode> nodes;
  std::vector<SubEdge> edges;
  Provenance provenance;

  bool contains(NodeId id) const {
    for (const SubNode& n : nodes) {
      if (n.id == id) return true;
    }
    return false;
  }

  friend bool operator==(const SubNetwork&, const SubNetwork&) = default;
};

}  // namespace uiksn

#endif  // UIKSN_SUPER_NETWORK_HPP
