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

#ifndef UIKSN_WKN_HPP
#define UIKSN_WKN_HPP

#include <cstdint>
#include <vector>

#include "uiksn/keywords.hpp"
#include "uiksn/super_network.hpp"

namespace uiksn {

/// Weighted knowledge network: knowledge points linked by post-level
/// co-occurrence. node_ids name the knowledge points (indices into the
/// owning keyword table or network); edges use those same ids, stored
/// canonically (a < b) and sorted. An edge exists iff at least one post
/// contains both endpoints, so every weight is >= 1 and bounded by
/// min(q(a), q(b)). No self-loops.
struct Wkn {
  std::vector<std::uint32_t> node_ids;
  std::vector<std::uint64_t> node_weight;  // q(k), aligned with node_ids
  std::vector<WeightedLink> edges;

  friend bool operator==(const Wkn&, const Wkn&) = default;
};

/// Exact co-occurrence counts over the keyword table: a post containing both
/// k_m and k_n contributes exactly 1 to w(k_m, k_n) regardless of token
/// repetitions. Edge ordering is deterministic. Throws Error on an empty
/// table.
Wkn build_wkn(const KeywordTable& table);

}  // namespace uiksn

#endif  // UIKSN_WKN_HPP
