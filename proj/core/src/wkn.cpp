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

#include "uiksn/wkn.hpp"

#include <algorithm>
#include <unordered_map>

namespace uiksn {

Wkn build_wkn(const KeywordTable& table) {
  if (table.post_count() == 0) throw Error("build_wkn: keyword table has no posts");

  Wkn wkn;
  wkn.node_ids.resize(table.keyword_count());
  for (std::uint32_t k = 0; k < table.keyword_count(); ++k) wkn.node_ids[k] = k;
  wkn.node_weight = table.frequency;

  // Pack the (a, b) pair with a < b into one 64-bit key.
  std::unordered_map<std::uint64_t, std::uint64_t> counts;
  for (const std::vector<std::uint32_t>& ids : table.per_post) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        std::uint64_t key = (static_cast<std::uint64_t>(ids[i]) << 32) | ids[j];
        ++counts[key];
      }
    }
  }
  wkn.edges.reserve(counts.size());
  for (const auto& [key, weight] : counts) {
    wkn.edges.push_back({static_cast<std::uint32_t>(key >> 32),
                         static_cast<std::uint32_t>(key & 0xffffffffu), weight});
  }
  std::sort(wkn.edges.begin(), wkn.edges.end());
  return wkn;
}

}  // namespace uiksn
