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

#include "uiksn/network_view.hpp"

#include <algorithm>
#include <map>

namespace uiksn {

NetworkView NetworkView::open(const SuperNetwork& net) {
  std::vector<Violation> violations = validate(net);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return NetworkView(net);
}

NetworkView::NetworkView(const SuperNetwork& net) : net_(&net) {
  const std::uint32_t users = static_cast<std::uint32_t>(net.user_labels.size());
  const std::uint32_t posts = static_cast<std::uint32_t>(net.post_labels.size());
  const std::uint32_t knowledge = static_cast<std::uint32_t>(net.knowledge_labels.size());
  const std::uint32_t fields = static_cast<std::uint32_t>(net.field_labels.size());

  post_author_.resize(posts);
  user_posts_.resize(users);
  for (const Link& e : net.authorship) {
    post_author_[e.first] = e.second;
    user_posts_[e.second].push_back(e.first);
  }

  post_knowledge_.resize(posts);
  knowledge_posts_.resize(knowledge);
  for (const Link& e : net.containment) {
    post_knowledge_[e.first].push_back(e.second);
    knowledge_posts_[e.second].push_back(e.first);
  }

  knowledge_field_.resize(knowledge);
  for (const Link& e : net.membership) knowledge_field_[e.first] = e.second;

  field_parent_.resize(fields);
  field_children_.resize(fields);
  for (const Link& e : net.hierarchy) {
    field_parent_[e.first] = e.second;
    field_children_[e.second].push_back(e.first);
  }

  knowledge_chain_.resize(knowledge);
  field_knowledge_.resize(fields);
  for (std::uint32_t k = 0; k < knowledge; ++k) {
    std::optional<std::uint32_t> f = knowledge_field_[k];
    while (f) {
      knowledge_chain_[k].push_back(*f);
      field_knowledge_[*f].push_back(k);
      f = field_parent_[*f];
    }
  }

  cooccurrence_adj_.resize(knowledge);
  for (const WeightedLink& e : net.cooccurrence) {
    cooccurrence_adj_[e.a].push_back({e.b, e.weight});
    cooccurrence_adj_[e.b].push_back({e.a, e.weight});
  }
  for (auto& adj : cooccurrence_adj_) std::sort(adj.begin(), adj.end());

  // Derived relations, computed exactly once at open time so concurrent
  // readers never coordinate.
  user_knowledge_.resize(users);
  user_field_.resize(users);
  post_field_.resize(posts);
  {
    std::vector<std::map<std::uint32_t, std::uint64_t>> uk(users);
    for (std::uint32_t p = 0; p < posts; ++p) {
      std::uint32_t author = post_author_[p];
      for (std::uint32_t k : post_knowledge_[p]) ++uk[author][k];
      std::vector<std::uint32_t>& pf = post_field_[p];
      for (std::uint32_t k : post_knowledge_[p]) {
        for (std::uint32_t f : knowledge_chain_[k]) pf.push_back(f);
      }
      std::sort(pf.begin(), pf.end());
      pf.erase(std::unique(pf.begin(), pf.end()), pf.end());
    }
    for (std::uint32_t u = 0; u < users; ++u) {
      user_knowledge_[u].assign(uk[u].begin(), uk[u].end());
      std::map<std::uint32_t, std::uint64_t> uf;
      for (const auto& [k, w] : uk[u]) {
        for (std::uint32_t f : knowledge_chain_[k]) uf[f] += w;
      }
      user_field_[u].assign(uf.begin(), uf.end());
    }
  }
}

std::uint64_t NetworkView::user_knowledge_weight(std::uint32_t user, std::uint32_t k) const {
  const auto& vec = user_knowledge_[user];
  auto it = std::lower_bound(vec.begin(), vec.end(), std::pair<std::uint32_t, std::uint64_t>{k, 0});
  if (it != vec.end() && it->first == k) return it->second;
  return 0;
}

std::uint64_t NetworkView::user_field_weight(std::uint32_t user, std::uint32_t field) const {
  const auto& vec = user_field_[user];
  auto it =
      std::lower_bound(vec.begin(), vec.end(), std::pair<std::uint32_t, std::uint64_t>{field, 0});
  if (it != vec.end() && it->first == field) return it->second;
  return 0;
}

DerivedRelations compose_derived(const NetworkView& view) {
  DerivedRelations derived;
  for (std::uint32_t p = 0; p < view.post_count(); ++p) {
    for (std::uint32_t f : view.fields_of_post(p)) derived.post_field.push_back({p, f});
  }
  for (std::uint32_t u = 0; u < view.user_count(); ++u) {
    for (const auto& [k, w] : view.knowledge_of_user(u)) {
      derived.user_knowledge.push_back({u, k, w});
    }
    for (const auto& [f, w] : view.fields_of_user(u)) {
      derived.user_field.push_back({u, f, w});
    }
  }
  return derived;
}

DerivedRelations compose_derived(const SuperNetwork& net) {
  return compose_derived(NetworkView::open(net));
}

namespace {

std::uint64_t node_weight_or_zero(const SuperNetwork& net, NodeId id) {
  switch (id.kind) {
    case NodeKind::User:
      return id.index < net.user_weight.size() ? net.user_weight[id.index] : 0;
    case NodeKind::Post:
      return 0;  // posts carry no Q weight in the model
    case NodeKind::Knowledge:
      return id.index < net.knowledge_weight.size() ? net.knowledge_weight[id.index] : 0;
    case NodeKind::Field:
      return id.index < net.field_weight.size() ? net.field_weight[id.index] : 0;
  }
  return 0;
}

}  // namespace

SubNetwork induced_subnetwork(const SuperNetwork& net, std::span<const NodeId> node_subset,
                              Provenance provenance) {
  std::vector<std::vector<char>> in_set(4);
  for (NodeKind kind : kAllNodeKinds) {
    in_set[static_cast<std::size_t>(kind)].assign(net.node_count(kind), 0);
  }
  for (NodeId id : node_subset) {
    if (id.index >= net.node_count(id.kind)) {
      throw Error("induced_subnetwork: unknown node " + render(id));
    }
    in_set[static_cast<std::size_t>(id.kind)][id.index] = 1;
  }
  auto contains = [&](NodeKind kind, std::uint32_t index) {
    return in_set[static_cast<std::size_t>(kind)][index] != 0;
  };

  SubNetwork sub;
  sub.provenance = std::move(provenance);
  for (NodeKind kind : kAllNodeKinds) {
    const std::vector<char>& mask = in_set[static_cast<std::size_t>(kind)];
    for (std::uint32_t i = 0; i < mask.size(); ++i) {
      if (!mask[i]) continue;
      NodeId id{kind, i};
      sub.nodes.push_back({id, net.label(id), node_weight_or_zero(net, id)});
    }
  }
  for (const Link& e : net.authorship) {
    if (contains(NodeKind::Post, e.first) && contains(NodeKind::User, e.second)) {
      sub.edges.push_back({RelationKind::Authorship, post_node(e.first), user_node(e.second), 1});
    }
  }
  for (const Link& e : net.containment) {
    if (contains(NodeKind::Post, e.first) && contains(NodeKind::Knowledge, e.second)) {
      sub.edges.push_back(
          {RelationKind::Containment, post_node(e.first), knowledge_node(e.second), 1});
    }
  }
  for (const Link& e : net.membership) {
    if (contains(NodeKind::Knowledge, e.first) && contains(NodeKind::Field, e.second)) {
      sub.edges.push_back(
          {RelationKind::Membership, knowledge_node(e.first), field_node(e.second), 1});
    }
  }
  for (const Link& e : net.hierarchy) {
    if (contains(NodeKind::Field, e.first) && contains(NodeKind::Field, e.second)) {
      sub.edges.push_back(
          {RelationKind::FieldHierarchy, field_node(e.first), field_node(e.second), 1});
    }
  }
  for (const WeightedLink& e : net.cooccurrence) {
    if (contains(NodeKind::Knowledge, e.a) && contains(NodeKind::Knowledge, e.b)) {
      sub.edges.push_back(
          {RelationKind::Cooccurrence, knowledge_node(e.a), knowledge_node(e.b), e.weight});
    }
  }
  return sub;
}

SubNetwork full_subnetwork(const SuperNetwork& net, Provenance provenance) {
  std::vector<NodeId> all;
  for (NodeKind kind : kAllNodeKinds) {
    for (std::uint32_t i = 0; i < net.node_count(kind); ++i) all.push_back({kind, i});
  }
  if (provenance.empty()) provenance["query"] = "full-network";
  return induced_subnetwork(net, all, std::move(provenance));
}

}  // namespace uiksn
