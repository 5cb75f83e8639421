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

#include "uiksn/assemble.hpp"

#include <string>

namespace uiksn {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("assemble: " + what);
}

}  // namespace

SuperNetwork assemble_uiksn(const EncodedCorpus& encoded, const KeywordTable& table,
                            const Wkn& wkn, const FieldPartition& partition,
                            Provenance provenance) {
  const std::uint32_t user_count = static_cast<std::uint32_t>(encoded.user_labels.size());
  const std::uint32_t post_count = static_cast<std::uint32_t>(encoded.post_labels.size());
  const std::uint32_t knowledge_count = table.keyword_count();

  require(encoded.post_author.size() == encoded.post_labels.size(),
          "authorship covers " + std::to_string(encoded.post_author.size()) + " posts but " +
              std::to_string(post_count) + " are encoded");
  for (std::uint32_t p = 0; p < post_count; ++p) {
    require(encoded.post_author[p] < user_count,
            "post P" + std::to_string(p) + " names unknown user index " +
                std::to_string(encoded.post_author[p]));
  }
  require(table.per_post.size() == post_count,
          "keyword table has " + std::to_string(table.per_post.size()) + " post rows but " +
              std::to_string(post_count) + " posts are encoded");
  require(table.frequency.size() == table.keywords.size(),
          "keyword table frequency map does not cover the keyword set");
  for (std::uint32_t p = 0; p < post_count; ++p) {
    for (std::uint32_t k : table.per_post[p]) {
      require(k < knowledge_count, "post P" + std::to_string(p) +
                                       " references unknown keyword index " + std::to_string(k));
    }
  }
  require(wkn.node_ids.size() == knowledge_count,
          "wkn covers " + std::to_string(wkn.node_ids.size()) + " knowledge points, table has " +
              std::to_string(knowledge_count));
  for (std::uint32_t i = 0; i < knowledge_count; ++i) {
    require(wkn.node_ids[i] == i, "wkn node ids must be the keyword table ids in order");
  }
  require(wkn.node_weight == table.frequency, "wkn node weights disagree with table frequencies");
  require(partition.assignment.size() == knowledge_count,
          "partition assigns " + std::to_string(partition.assignment.size()) +
              " knowledge points, table has " + std::to_string(knowledge_count));
  const std::uint32_t field_count = partition.field_count();
  require(partition.field_weight.size() == field_count && partition.labels.size() == field_count,
          "partition field maps are inconsistent");
  for (std::uint32_t k = 0; k < knowledge_count; ++k) {
    require(partition.assignment[k] < field_count,
            "knowledge K" + std::to_string(k) + " assigned to unknown field");
  }

  SuperNetwork net;
  net.user_labels = encoded.user_labels;
  net.post_labels = encoded.post_labels;
  net.knowledge_labels = table.keywords;
  net.field_labels = partition.labels;
  net.provenance = std::move(provenance);

  net.authorship.reserve(post_count);
  for (std::uint32_t p = 0; p < post_count; ++p) {
    net.authorship.push_back({p, encoded.post_author[p]});
  }
  for (std::uint32_t p = 0; p < post_count; ++p) {
    for (std::uint32_t k : table.per_post[p]) net.containment.push_back({p, k});
  }
  for (std::uint32_t k = 0; k < knowledge_count; ++k) {
    net.membership.push_back({k, partition.assignment[k]});
  }
  for (std::uint32_t f = 0; f < field_count; ++f) {
    if (partition.parent[f]) net.hierarchy.push_back({f, *partition.parent[f]});
  }
  net.cooccurrence = wkn.edges;

  net.knowledge_weight = table.frequency;
  net.user_weight.assign(user_count, 0);
  for (std::uint32_t p = 0; p < post_count; ++p) {
    net.user_weight[encoded.post_author[p]] += table.per_post[p].size();
  }
  net.field_weight = partition.field_weight;
  return net;
}

}  // namespace uiksn
