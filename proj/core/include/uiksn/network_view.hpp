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

#ifndef UIKSN_NETWORK_VIEW_HPP
#define UIKSN_NETWORK_VIEW_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "uiksn/super_network.hpp"
#include "uiksn/validate.hpp"

namespace uiksn {

/// The three relation families derived by composition from the stored ones.
/// All vectors are sorted.
struct DerivedRelations {
  std::vector<Link> post_field;  // (post, field): post contains knowledge reaching field
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>>
      user_knowledge;  // (user, knowledge, #posts by user containing it)
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>>
      user_field;  // (user, field, sum of user_knowledge over chain members)

  friend bool operator==(const DerivedRelations&, const DerivedRelations&) = default;
};

/// Read-only adjacency index over a valid SuperNetwork. Construction
/// validates; queries assume the invariants and never mutate, so any number
/// of readers may share one view. The view borrows the network: keep the
/// SuperNetwork alive for the view's lifetime.
class NetworkView {
 public:
  /// Throws ValidationError (carrying the violations) if the net is invalid.
  static NetworkView open(const SuperNetwork& net);

  const SuperNetwork& net() const { return *net_; }

  std::uint32_t user_count() const { return static_cast<std::uint32_t>(net_->user_labels.size()); }
  std::uint32_t post_count() const { return static_cast<std::uint32_t>(net_->post_labels.size()); }
  std::uint32_t knowledge_count() const {
    return static_cast<std::uint32_t>(net_->knowledge_labels.size());
  }
  std::uint32_t field_count() const {
    return static_cast<std::uint32_t>(net_->field_labels.size());
  }
  bool has_node(NodeId id) const { return id.index < net_->node_count(id.kind); }

  std::uint32_t author_of(std::uint32_t post) const { return post_author_[post]; }
  std::span<const std::uint32_t> posts_of_user(std::uint32_t user) const {
    return user_posts_[user];
  }
  std::span<const std::uint32_t> knowledge_of_post(std::uint32_t post) const {
    return post_knowledge_[post];
  }
  std::span<const std::uint32_t> posts_of_knowledge(std::uint32_t k) const {
    return knowledge_posts_[k];
  }
  std::uint32_t leaf_field_of(std::uint32_t k) const { return knowledge_field_[k]; }
  std::optional<std::uint32_t> parent_of(std::uint32_t field) const {
    return field_parent_[field];
  }
  std::span<const std::uint32_t> children_of(std::uint32_t field) const {
    return field_children_[field];
  }
  /// Membership chain of a knowledge point: leaf field first, then ancestors.
  std::span<const std::uint32_t> field_chain(std::uint32_t k) const {
    return knowledge_chain_[k];
  }
  /// Knowledge points whose chain reaches the field (K2 of the analysis
  /// queries), ascending.
  std::span<const std::uint32_t> knowledge_reaching(std::uint32_t field) const {
    return field_knowledge_[field];
  }
  std::span<const std::pair<std::uint32_t, std::uint64_t>> cooccurrent(std::uint32_t k) const {
    return cooccurrence_adj_[k];
  }

  std::span<const std::pair<std::uint32_t, std::uint64_t>> knowledge_of_user(
      std::uint32_t user) const {
    return user_knowledge_[user];
  }
  std::span<const std::pair<std::uint32_t, std::uint64_t>> fields_of_user(
      std::uint32_t user) const {
    return user_field_[user];
  }
  std::span<const std::uint32_t> fields_of_post(std::uint32_t post) const {
    return post_field_[post];
  }
  std::uint64_t user_knowledge_weight(std::uint32_t user, std::uint32_t k) const;
  std::uint64_t user_field_weight(std::uint32_t user, std::uint32_t field) const;

 private:
  explicit NetworkView(const SuperNetwork& net);

  const SuperNetwork* net_;
  std::vector<std::uint32_t> post_author_;
  std::vector<std::vector<std::uint32_t>> user_posts_;
  std::vector<std::vector<std::uint32_t>> post_knowledge_;
  std::vector<std::vector<std::uint32_t>> knowledge_posts_;
  std::vector<std::uint32_t> knowledge_field_;
  std::vector<std::optional<std::uint32_t>> field_parent_;
  std::vector<std::vector<std::uint32_t>> field_children_;
  std::vector<std::vector<std::uint32_t>> knowledge_chain_;
  std::vector<std::vector<std::uint32_t>> field_knowledge_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> cooccurrence_adj_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> user_knowledge_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> user_field_;
  std::vector<std::vector<std::uint32_t>> post_field_;
};

/// Computes the derived relation families exactly (no sampling). Validates
/// the network first; throws ValidationError carrying the violations if it
/// is invalid.
DerivedRelations compose_derived(const SuperNetwork& net);

/// Same composition over an already-open view (no revalidation).
DerivedRelations compose_derived(const NetworkView& view);

/// Extracts the sub-network induced by node_subset: exactly the edges of net
/// with both endpoints in the subset, weights copied unchanged. provenance
/// records the selecting query. Throws Error on a NodeId outside the net,
/// naming it. Does not require a valid network.
SubNetwork induced_subnetwork(const SuperNetwork& net, std::span<const NodeId> node_subset,
                              Provenance provenance = {});

/// Convenience: the whole network as a sub-network.
SubNetwork full_subnetwork(const SuperNetwork& net, Provenance provenance = {});

}  // namespace uiksn

#endif  // UIKSN_NETWORK_VIEW_HPP
