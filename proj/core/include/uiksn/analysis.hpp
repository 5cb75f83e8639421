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

#ifndef UIKSN_ANALYSIS_HPP
#define UIKSN_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uiksn/network_view.hpp"
#include "uiksn/super_network.hpp"
#include "uiksn/wkn.hpp"

namespace uiksn {

/// The thresholds a query ran with; every report records them.
struct Thresholds {
  std::uint64_t q0 = 0;  // hot/core knowledge frequency threshold
  std::uint64_t q1 = 0;  // core user/post relation-weight threshold
  std::uint64_t q2 = 0;  // hot field weight threshold
  std::optional<std::uint64_t> contribution_floor;  // display floor on relation weights

  friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

struct RankedNode {
  NodeId id;
  std::uint64_t score = 0;

  friend auto operator<=>(const RankedNode&, const RankedNode&) = default;
};

/// Uniform result shape for every sub-network query: the extracted
/// sub-network plus per-kind rankings (descending score, ties by ascending
/// node id; every ranked node is in the sub-network).
struct SubNetworkReport {
  std::string query_name;
  Thresholds thresholds;
  SubNetwork subnetwork;
  std::vector<RankedNode> user_rankings;
  std::vector<RankedNode> post_rankings;
  std::vector<RankedNode> knowledge_rankings;
  std::vector<RankedNode> field_rankings;

  friend bool operator==(const SubNetworkReport&, const SubNetworkReport&) = default;
};

// ---- hot knowledge (knowledge frequency thresholding) ----

/// K1 = {k : q(k) >= q0}, ascending knowledge ids.
std::vector<std::uint32_t> hot_knowledge(const NetworkView& view, std::uint64_t q0);

/// P(k): posts containing k. Throws Error on an out-of-range knowledge id.
std::vector<std::uint32_t> related_posts(const NetworkView& view, std::uint32_t k);

/// U(k): authors of the posts containing k.
std::vector<std::uint32_t> related_users(const NetworkView& view, std::uint32_t k);

/// Path from a knowledge point up the membership/hierarchy chain to field
/// f0: node list then edge list. Empty when f0 is not an ancestor field of k.
struct FieldPath {
  std::vector<NodeId> nodes;
  std::vector<SubEdge> edges;

  bool empty() const { return nodes.empty(); }
  friend bool operator==(const FieldPath&, const FieldPath&) = default;
};
FieldPath knowledge_field_path(const NetworkView& view, std::uint32_t k, std::uint32_t f0);

/// Ego super-network: every node whose shortest-path distance to the center
/// is <= radius, with paths restricted to the given relation kinds (unit edge
/// lengths), then the full induced sub-network over those nodes. Works for
/// centers of any kind. Radius 0 is the center alone. Throws Error on an
/// unknown center.
SubNetworkReport ego_network(const NetworkView& view, NodeId center, std::uint32_t radius,
                             RelationSet edge_kinds);

// ---- core knowledge and core users ----

/// WKN' restricted to {k : q(k) >= q0}: nodes, node weights and every
/// co-occurrence edge with both endpoints retained, weights copied.
Wkn core_knowledge_subnetwork(const NetworkView& view, std::uint64_t q0);

/// U(K'): users with user_knowledge weight >= q1 for at least one k in K'.
std::vector<std::uint32_t> core_users(const NetworkView& view,
                                      std::span<const std::uint32_t> core_k, std::uint64_t q1);

/// P(K'): posts touching K' whose relation weight |keywords(p) ∩ K'| >= q1.
std::vector<std::uint32_t> core_posts(const NetworkView& view,
                                      std::span<const std::uint32_t> core_k, std::uint64_t q1);

// ---- hot fields ----

struct HotField {
  std::uint32_t field = 0;
  std::vector<std::uint32_t> knowledge;  // K2(f): members, direct or via sub-fields
  std::vector<std::uint32_t> posts;      // P2(f): posts containing any member
  std::vector<std::uint32_t> users;      // U2(f): authors of those posts

  friend bool operator==(const HotField&, const HotField&) = default;
};

/// F1 = {f : q(f) >= q2} with per-field members, posts and users; ascending
/// field ids.
std::vector<HotField> hot_fields(const NetworkView& view, std::uint64_t q2);

/// Sub-network of one field: the field, its sub-fields, K2(f), P2(f), U2(f)
/// with all induced edges. Users are ranked by their contribution to the
/// field (user_field weight); when contribution_floor is set, users below the
/// floor are left out of the sub-network and rankings, which keeps renders of
/// busy fields readable. Throws Error on an unknown field.
SubNetworkReport field_subnetwork(const NetworkView& view, std::uint32_t field,
                                  std::optional<std::uint64_t> contribution_floor = {});

// ---- user self networks ----

/// Per-user summary counts plus the user's core knowledge under the per-user
/// frequency threshold (the smallest in-user count within the top quartile of
/// the user's knowledge, ranked by in-user frequency).
struct UserSelfReport {
  SubNetworkReport report;
  std::uint64_t post_count = 0;
  std::uint64_t knowledge_count = 0;
  std::uint64_t field_count = 0;
  std::uint64_t core_threshold = 0;             // in-user frequency cutoff applied
  std::vector<std::uint32_t> core_knowledge;    // ascending knowledge ids
  std::vector<std::uint32_t> core_fields;       // fields reached by core knowledge
};

/// Sub-network of one user: the user, their posts, those posts' knowledge and
/// the knowledge's fields (full membership chains), with all induced edges.
/// Knowledge is ranked by in-user frequency, fields by the user's field
/// contribution. Throws Error on an unknown user.
UserSelfReport user_self_network(const NetworkView& view, std::uint32_t user);

// ---- composite reports driven by the CLI ----

/// Hot-knowledge KSN: K1 plus every related post, user and membership-chain
/// field; knowledge ranked by frequency, users by contribution over K1.
SubNetworkReport hot_knowledge_report(const NetworkView& view, std::uint64_t q0);

/// Core-user sub-network: WKN' plus U(K') and P(K') at q1; users ranked by
/// total contribution over K'. contribution_floor additionally drops users
/// whose total contribution is below the floor.
SubNetworkReport core_users_report(const NetworkView& view, std::uint64_t q0, std::uint64_t q1,
                                   std::optional<std::uint64_t> contribution_floor = {});

/// Hot-fields KSN over F1 = {f : q(f) >= q2} with members, posts, users and
/// chain fields; fields ranked by weight, users by contribution over F1.
SubNetworkReport hot_fields_report(const NetworkView& view, std::uint64_t q2);

}  // namespace uiksn

#endif  // UIKSN_ANALYSIS_HPP
