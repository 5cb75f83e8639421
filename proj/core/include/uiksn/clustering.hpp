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

#ifndef UIKSN_CLUSTERING_HPP
#define UIKSN_CLUSTERING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uiksn/wkn.hpp"

namespace uiksn {

struct ClusteringConfig {
  double resolution = 1.0;
  bool two_level = true;  // re-cluster each root cluster into sub-fields
};

/// Assignment of knowledge points to fields plus the (depth <= 2) field
/// hierarchy. Field indices are canonical: sorted by descending field weight,
/// ties by ascending smallest member knowledge id, parents before children.
/// assignment[k] is the leaf field of knowledge point k; a leaf may itself be
/// a root (parent == nullopt) when its cluster did not split.
struct FieldPartition {
  std::vector<std::uint32_t> assignment;                // knowledge -> leaf field
  std::vector<std::optional<std::uint32_t>> parent;     // field -> root field
  std::vector<std::uint64_t> field_weight;              // sum of member q(k), transitive
  std::vector<std::string> labels;                      // "F0", "F1", ...

  std::uint32_t field_count() const { return static_cast<std::uint32_t>(parent.size()); }

  friend bool operator==(const FieldPartition&, const FieldPartition&) = default;
};

/// Clusters the WKN into knowledge fields by greedy weighted-modularity
/// agglomeration followed by single-node local moves until no move improves
/// modularity. Fully deterministic: merge and move ties break by ascending
/// node id, so the same wkn + config + seed always yields the same partition
/// (the seed is recorded in provenance; the algorithm itself draws nothing).
/// Knowledge points with no co-occurrence edges form their own fields. With
/// two_level on, each root cluster is re-clustered over its induced subgraph;
/// clusters that split get sub-field leaves, clusters that do not are their
/// own leaf. An empty WKN yields an empty partition.
FieldPartition cluster_wkn(const Wkn& wkn, const ClusteringConfig& config, std::uint64_t seed);

/// Weighted Newman modularity of an arbitrary assignment over the WKN's
/// nodes (positions into wkn.node_ids -> community label). Exposed for
/// reporting; tests check the clusterer against their own independent
/// implementation.
double modularity(const Wkn& wkn, const std::vector<std::uint32_t>& community,
                  double resolution = 1.0);

}  // namespace uiksn

#endif  // UIKSN_CLUSTERING_HPP
