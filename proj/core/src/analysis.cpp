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

#include "uiksn/analysis.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace uiksn {

namespace {

void require_node(const NetworkView& view, NodeId id) {
  if (!view.has_node(id)) {
    throw Error("unknown " + std::string(kind_name(id.kind)) + " node " + render(id));
  }
}

void sort_unique(std::vector<std::uint32_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<RankedNode> rank(NodeKind kind, const std::vector<std::uint32_t>& ids,
                             const std::function<std::uint64_t(std::uint32_t)>& score) {
  std::vector<RankedNode> out;
  out.reserve(ids.size());
  for (std::uint32_t i : ids) out.push_back({{kind, i}, score(i)});
  std::sort(out.begin(), out.end(), [](const RankedNode& a, const RankedNode& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.id < b.id;
  });
  return out;
}

std::uint64_t post_degree(const NetworkView& view, std::uint32_t p) {
  return view.knowledge_of_post(p).size();
}

// Members of `core` as a mask for O(1) intersection tests.
std::vector<char> make_mask(std::span<const std::uint32_t> ids, std::uint32_t limit,
                            const NetworkView& view, NodeKind kind) {
  std::vector<char> mask(limit, 0);
  for (std::uint32_t id : ids) {
    require_node(view, {kind, id});
    mask[id] = 1;
  }
  return mask;
}

std::vector<std::uint32_t> descendants_of(const NetworkView& view, std::uint32_t field) {
  std::vector<std::uint32_t> out;
  std::deque<std::uint32_t> queue{field};
  while (!queue.empty()) {
    std::uint32_t f = queue.front();
    queue.pop_front();
    for (std::uint32_t child : view.children_of(f)) {
      out.push_back(child);
      queue.push_back(child);
    }
  }
  sort_unique(out);
  return out;
}

struct NodeSet {
  std::vector<std::uint32_t> users, posts, knowledge, fields;

  std::vector<NodeId> flatten() const {
    std::vector<NodeId> all;
    all.reserve(users.size() + posts.size() + knowledge.size() + fields.size());
    for (std::uint32_t i : users) all.push_back(user_node(i));
    for (std::uint32_t i : posts) all.push_back(post_node(i));
    for (std::uint32_t i : knowledge) all.push_back(knowledge_node(i));
    for (std::uint32_t i : fields) all.push_back(field_node(i));
    return all;
  }
};

}  // namespace

std::vector<std::uint32_t> hot_knowledge(const NetworkView& view, std::uint64_t q0) {
  std::vector<std::uint32_t> hot;
  for (std::uint32_t k = 0; k < view.knowledge_count(); ++k) {
    if (view.net().knowledge_weight[k] >= q0) hot.push_back(k);
  }
  return hot;
}

std::vector<std::uint32_t> related_posts(const NetworkView& view, std::uint32_t k) {
  require_node(view, knowledge_node(k));
  auto posts = view.posts_of_knowledge(k);
  return {posts.begin(), posts.end()};
}

std::vector<std::uint32_t> related_users(const NetworkView& view, std::uint32_t k) {
  require_node(view, knowledge_node(k));
  std::vector<std::uint32_t> users;
  for (std::uint32_t p : view.posts_of_knowledge(k)) users.push_back(view.author_of(p));
  sort_unique(users);
  return users;
}

FieldPath knowledge_field_path(const NetworkView& view, std::uint32_t k, std::uint32_t f0) {
  require_node(view, knowledge_node(k));
  require_node(view, field_node(f0));
  auto chain = view.field_chain(k);
  auto target = std::find(chain.begin(), chain.end(), f0);
  if (target == chain.end()) return {};

  FieldPath path;
  path.nodes.push_back(knowledge_node(k));
  path.edges.push_back({RelationKind::Membership, knowledge_node(k), field_node(chain[0]), 1});
  for (auto it = chain.begin();; ++it) {
    path.nodes.push_back(field_node(*it));
    if (it == target) break;
    path.edges.push_back({RelationKind::FieldHierarchy, field_node(*it), field_node(*(it + 1)), 1});
  }
  return path;
}

SubNetworkReport ego_network(const NetworkView& view, NodeId center, std::uint32_t radius,
                             RelationSet edge_kinds) {
  require_node(view, center);

  // Breadth-first over the typed adjacency, unit edge lengths, traversal
  // restricted to the requested relation kinds.
  std::vector<std::vector<std::uint32_t>> dist(4);
  for (NodeKind kind : kAllNodeKinds) {
    dist[static_cast<std::size_t>(kind)].assign(view.net().node_count(kind), UINT32_MAX);
  }
  auto& d = dist;
  auto distance = [&](NodeId id) -> std::uint32_t& {
    return d[static_cast<std::size_t>(id.kind)][id.index];
  };

  std::deque<NodeId> queue;
  distance(center) = 0;
  queue.push_back(center);
  NodeSet reached;
  while (!queue.empty()) {
    NodeId cur = queue.front();
    queue.pop_front();
    std::uint32_t cur_dist = distance(cur);
    switch (cur.kind) {
      case NodeKind::User: reached.users.push_back(cur.index); break;
      case NodeKind::Post: reached.posts.push_back(cur.index); break;
      case NodeKind::Knowledge: reached.knowledge.push_back(cur.index); break;
      case NodeKind::Field: reached.fields.push_back(cur.index); break;
    }
    if (cur_dist == radius) continue;
    auto visit = [&](NodeId next) {
      if (distance(next) != UINT32_MAX) return;
      distance(next) = cur_dist + 1;
      queue.push_back(next);
    };
    switch (cur.kind) {
      case NodeKind::User:
        if (edge_kinds.contains(RelationKind::Authorship)) {
          for (std::uint32_t p : view.posts_of_user(cur.index)) visit(post_node(p));
        }
        break;
      case NodeKind::Post:
        if (edge_kinds.contains(RelationKind::Authorship)) {
          visit(user_node(view.author_of(cur.index)));
        }
        if (edge_kinds.contains(RelationKind::Containment)) {
          for (std::uint32_t k : view.knowledge_of_post(cur.index)) visit(knowledge_node(k));
        }
        break;
      case NodeKind::Knowledge:
        if (edge_kinds.contains(RelationKind::Containment)) {
          for (std::uint32_t p : view.posts_of_knowledge(cur.index)) visit(post_node(p));
        }
        if (edge_kinds.contains(RelationKind::Cooccurrence)) {
          for (const auto& [k, w] : view.cooccurrent(cur.index)) visit(knowledge_node(k));
        }
        if (edge_kinds.contains(RelationKind::Membership)) {
          visit(field_node(view.leaf_field_of(cur.index)));
        }
        break;
      case NodeKind::Field:
        if (edge_kinds.contains(RelationKind::Membership)) {
          for (std::uint32_t k : view.knowledge_reaching(cur.index)) {
            if (view.leaf_field_of(k) == cur.index) visit(knowledge_node(k));
          }
        }
        if (edge_kinds.contains(RelationKind::FieldHierarchy)) {
          if (auto parent = view.parent_of(cur.index)) visit(field_node(*parent));
          for (std::uint32_t child : view.children_of(cur.index)) visit(field_node(child));
        }
        break;
    }
  }

  sort_unique(reached.users);
  sort_unique(reached.posts);
  sort_unique(reached.knowledge);
  sort_unique(reached.fields);

  SubNetworkReport report;
  report.query_name = "ego";
  Provenance prov = view.net().provenance;
  prov["query"] = "ego";
  prov["center"] = render(center);
  prov["radius"] = std::to_string(radius);
  prov["edge_kinds"] = relation_set_to_string(edge_kinds);
  report.subnetwork = induced_subnetwork(view.net(), reached.flatten(), std::move(prov));

  const SuperNetwork& net = view.net();
  report.user_rankings =
      rank(NodeKind::User, reached.users, [&](std::uint32_t u) { return net.user_weight[u]; });
  report.post_rankings =
      rank(NodeKind::Post, reached.posts, [&](std::uint32_t p) { return post_degree(view, p); });
  report.knowledge_rankings = rank(NodeKind::Knowledge, reached.knowledge,
                                   [&](std::uint32_t k) { return net.knowledge_weight[k]; });
  report.field_rankings =
      rank(NodeKind::Field, reached.fields, [&](std::uint32_t f) { return net.field_weight[f]; });
  return report;
}

Wkn core_knowledge_subnetwork(const NetworkView& view, std::uint64_t q0) {
  Wkn sub;
  std::vector<char> keep(view.knowledge_count(), 0);
  for (std::uint32_t k : hot_knowledge(view, q0)) {
    keep[k] = 1;
    sub.node_ids.push_back(k);
    sub.node_weight.push_back(view.net().knowledge_weight[k]);
  }
  for (const WeightedLink& e : view.net().cooccurrence) {
    if (keep[e.a] && keep[e.b]) sub.edges.push_back(e);
  }
  return sub;
}

std::vector<std::uint32_t> core_users(const NetworkView& view,
                                      std::span<const std::uint32_t> core_k, std::uint64_t q1) {
  std::vector<char> mask = make_mask(core_k, view.knowledge_count(), view, NodeKind::Knowledge);
  std::vector<std::uint32_t> users;
  for (std::uint32_t u = 0; u < view.user_count(); ++u) {
    for (const auto& [k, w] : view.knowledge_of_user(u)) {
      // Relation must exist (w >= 1) and meet the threshold.
      if (mask[k] && w >= q1) {
        users.push_back(u);
        break;
      }
    }
  }
  return users;
}

std::vector<std::uint32_t> core_posts(const NetworkView& view,
                                      std::span<const std::uint32_t> core_k, std::uint64_t q1) {
  std::vector<char> mask = make_mask(core_k, view.knowledge_count(), view, NodeKind::Knowledge);
  std::vector<std::uint32_t> posts;
  for (std::uint32_t p = 0; p < view.post_count(); ++p) {
    std::uint64_t overlap = 0;
    for (std::uint32_t k : view.knowledge_of_post(p)) overlap += mask[k];
    if (overlap >= 1 && overlap >= q1) posts.push_back(p);
  }
  return posts;
}

std::vector<HotField> hot_fields(const NetworkView& view, std::uint64_t q2) {
  std::vector<HotField> out;
  for (std::uint32_t f = 0; f < view.field_count(); ++f) {
    if (view.net().field_weight[f] < q2) continue;
    HotField hot;
    hot.field = f;
    auto members = view.knowledge_reaching(f);
    hot.knowledge.assign(members.begin(), members.end());
    for (std::uint32_t k : hot.knowledge) {
      auto posts = view.posts_of_knowledge(k);
      hot.posts.insert(hot.posts.end(), posts.begin(), posts.end());
    }
    sort_unique(hot.posts);
    for (std::uint32_t p : hot.posts) hot.users.push_back(view.author_of(p));
    sort_unique(hot.users);
    out.push_back(std::move(hot));
  }
  return out;
}

SubNetworkReport field_subnetwork(const NetworkView& view, std::uint32_t field,
                                  std::optional<std::uint64_t> contribution_floor) {
  require_node(view, field_node(field));

  NodeSet set;
  set.fields.push_back(field);
  // Sub-fields come along so the membership chains inside the extract stay
  // connected.
  for (std::uint32_t f : descendants_of(view, field)) set.fields.push_back(f);
  sort_unique(set.fields);
  auto members = view.knowledge_reaching(field);
  set.knowledge.assign(members.begin(), members.end());
  for (std::uint32_t k : set.knowledge) {
    auto posts = view.posts_of_knowledge(k);
    set.posts.insert(set.posts.end(), posts.begin(), posts.end());
  }
  sort_unique(set.posts);
  for (std::uint32_t p : set.posts) set.users.push_back(view.author_of(p));
  sort_unique(set.users);
  if (contribution_floor) {
    std::erase_if(set.users, [&](std::uint32_t u) {
      return view.user_field_weight(u, field) < *contribution_floor;
    });
  }

  SubNetworkReport report;
  report.query_name = "field";
  report.thresholds.contribution_floor = contribution_floor;
  Provenance prov = view.net().provenance;
  prov["query"] = "field";
  prov["center"] = render(field_node(field));
  if (contribution_floor) prov["contribution_floor"] = std::to_string(*contribution_floor);
  report.subnetwork = induced_subnetwork(view.net(), set.flatten(), std::move(prov));

  const SuperNetwork& net = view.net();
  report.user_rankings = rank(NodeKind::User, set.users, [&](std::uint32_t u) {
    return view.user_field_weight(u, field);
  });
  report.post_rankings =
      rank(NodeKind::Post, set.posts, [&](std::uint32_t p) { return post_degree(view, p); });
  report.knowledge_rankings = rank(NodeKind::Knowledge, set.knowledge,
                                   [&](std::uint32_t k) { return net.knowledge_weight[k]; });
  report.field_rankings =
      rank(NodeKind::Field, set.fields, [&](std::uint32_t f) { return net.field_weight[f]; });
  return report;
}

UserSelfReport user_self_network(const NetworkView& view, std::uint32_t user) {
  require_node(view, user_node(user));

  NodeSet set;
  set.users.push_back(user);
  auto posts = view.posts_of_user(user);
  set.posts.assign(posts.begin(), posts.end());
  std::sort(set.posts.begin(), set.posts.end());
  for (const auto& [k, w] : view.knowledge_of_user(user)) {
    set.knowledge.push_back(k);
    for (std::uint32_t f : view.field_chain(k)) set.fields.push_back(f);
  }
  sort_unique(set.fields);

  UserSelfReport self;
  self.post_count = set.posts.size();
  self.knowledge_count = set.knowledge.size();
  self.field_count = set.fields.size();

  // Per-user core knowledge: the top quartile of the user's knowledge ranked
  // by in-user frequency; the cutoff is the count at rank ceil(|K|/4), so
  // ties at the cutoff stay in.
  if (!set.knowledge.empty()) {
    std::vector<std::uint64_t> counts;
    for (const auto& [k, w] : view.knowledge_of_user(user)) counts.push_back(w);
    std::sort(counts.begin(), counts.end(), std::greater<>());
    std::size_t quartile = (counts.size() + 3) / 4;
    self.core_threshold = counts[quartile - 1];
    for (const auto& [k, w] : view.knowledge_of_user(user)) {
      if (w >= self.core_threshold) {
        self.core_knowledge.push_back(k);
        for (std::uint32_t f : view.field_chain(k)) self.core_fields.push_back(f);
      }
    }
    sort_unique(self.core_fields);
  }

  SubNetworkReport& report = self.report;
  report.query_name = "user";
  Provenance prov = view.net().provenance;
  prov["query"] = "user";
  prov["center"] = render(user_node(user));
  prov["core_threshold"] = std::to_string(self.core_threshold);
  prov["counts"] = "posts=" + std::to_string(self.post_count) +
                   " knowledge=" + std::to_string(self.knowledge_count) +
                   " fields=" + std::to_string(self.field_count);
  {
    std::string core;
    for (std::uint32_t k : self.core_knowledge) {
      if (!core.empty()) core += ',';
      core += view.net().knowledge_labels[k];
    }
    prov["core_knowledge"] = core;
    std::string core_f;
    for (std::uint32_t f : self.core_fields) {
      if (!core_f.empty()) core_f += ',';
      core_f += view.net().field_labels[f];
    }
    prov["core_fields"] = core_f;
  }
  report.subnetwork = induced_subnetwork(view.net(), set.flatten(), std::move(prov));

  const SuperNetwork& net = view.net();
  report.user_rankings =
      rank(NodeKind::User, set.users, [&](std::uint32_t u) { return net.user_weight[u]; });
  report.post_rankings =
      rank(NodeKind::Post, set.posts, [&](std::uint32_t p) { return post_degree(view, p); });
  report.knowledge_rankings = rank(NodeKind::Knowledge, set.knowledge, [&](std::uint32_t k) {
    return view.user_knowledge_weight(user, k);
  });
  report.field_rankings = rank(NodeKind::Field, set.fields, [&](std::uint32_t f) {
    return view.user_field_weight(user, f);
  });
  return self;
}

SubNetworkReport hot_knowledge_report(const NetworkView& view, std::uint64_t q0) {
  NodeSet set;
  set.knowledge = hot_knowledge(view, q0);
  std::vector<char> hot_mask(view.knowledge_count(), 0);
  for (std::uint32_t k : set.knowledge) {
    hot_mask[k] = 1;
    auto posts = view.posts_of_knowledge(k);
    set.posts.insert(set.posts.end(), posts.begin(), posts.end());
    for (std::uint32_t f : view.field_chain(k)) set.fields.push_back(f);
  }
  sort_unique(set.posts);
  sort_unique(set.fields);
  for (std::uint32_t p : set.posts) set.users.push_back(view.author_of(p));
  sort_unique(set.users);

  SubNetworkReport report;
  report.query_name = "hot-knowledge";
  report.thresholds.q0 = q0;
  Provenance prov = view.net().provenance;
  prov["query"] = "hot-knowledge";
  prov["q0"] = std::to_string(q0);
  report.subnetwork = induced_subnetwork(view.net(), set.flatten(), std::move(prov));

  const SuperNetwork& net = view.net();
  auto contribution = [&](std::uint32_t u) {
    std::uint64_t total = 0;
    for (const auto& [k, w] : view.knowledge_of_user(u)) {
      if (hot_mask[k]) total += w;
    }
    return total;
  };
  report.user_rankings = rank(NodeKind::User, set.users, contribution);
  report.post_rankings = rank(NodeKind::Post, set.posts, [&](std::uint32_t p) {
    std::uint64_t overlap = 0;
    for (std::uint32_t k : view.knowledge_of_post(p)) overlap += hot_mask[k];
    return overlap;
  });
  report.knowledge_rankings = rank(NodeKind::Knowledge, set.knowledge,
                                   [&](std::uint32_t k) { return net.knowledge_weight[k]; });
  report.field_rankings =
      rank(NodeKind::Field, set.fields, [&](std::uint32_t f) { return net.field_weight[f]; });
  return report;
}

SubNetworkReport core_users_report(const NetworkView& view, std::uint64_t q0, std::uint64_t q1,
                                   std::optional<std::uint64_t> contribution_floor) {
  Wkn core = core_knowledge_subnetwork(view, q0);
  std::vector<char> core_mask(view.knowledge_count(), 0);
  for (std::uint32_t k : core.node_ids) core_mask[k] = 1;

  NodeSet set;
  set.knowledge = core.node_ids;
  set.users = core_users(view, core.node_ids, q1);
  set.posts = core_posts(view, core.node_ids, q1);

  auto contribution = [&](std::uint32_t u) {
    std::uint64_t total = 0;
    for (const auto& [k, w] : view.knowledge_of_user(u)) {
      if (core_mask[k]) total += w;
    }
    return total;
  };
  if (contribution_floor) {
    std::erase_if(set.users,
                  [&](std::uint32_t u) { return contribution(u) < *contribution_floor; });
  }

  SubNetworkReport report;
  report.query_name = "core-users";
  report.thresholds.q0 = q0;
  report.thresholds.q1 = q1;
  report.thresholds.contribution_floor = contribution_floor;
  Provenance prov = view.net().provenance;
  prov["query"] = "core-users";
  prov["q0"] = std::to_string(q0);
  prov["q1"] = std::to_string(q1);
  if (contribution_floor) prov["contribution_floor"] = std::to_string(*contribution_floor);
  report.subnetwork = induced_subnetwork(view.net(), set.flatten(), std::move(prov));

  const SuperNetwork& net = view.net();
  report.user_rankings = rank(NodeKind::User, set.users, contribution);
  report.post_rankings = rank(NodeKind::Post, set.posts, [&](std::uint32_t p) {
    std::uint64_t overlap = 0;
    for (std::uint32_t k : view.knowledge_of_post(p)) overlap += core_mask[k];
    return overlap;
  });
  report.knowledge_rankings = rank(NodeKind::Knowledge, set.knowledge,
                                   [&](std::uint32_t k) { return net.knowledge_weight[k]; });
  return report;
}

SubNetworkReport hot_fields_report(const NetworkView& view, std::uint64_t q2) {
  std::vector<HotField> hot = hot_fields(view, q2);

  NodeSet set;
  std::vector<char> in_f1(view.field_count(), 0);
  for (const HotField& h : hot) {
    in_f1[h.field] = 1;
    set.fields.push_back(h.field);
    for (std::uint32_t f : descendants_of(view, h.field)) set.fields.push_back(f);
    set.knowledge.insert(set.knowledge.end(), h.knowledge.begin(), h.knowledge.end());
    set.posts.insert(set.posts.end(), h.posts.begin(), h.posts.end());
    set.users.insert(set.users.end(), h.users.begin(), h.users.end());
  }
  sort_unique(set.fields);
  sort_unique(set.knowledge);
  sort_unique(set.posts);
  sort_unique(set.users);

  SubNetworkReport report;
  report.query_name = "hot-fields";
  report.thresholds.q2 = q2;
  Provenance prov = view.net().provenance;
  prov["query"] = "hot-fields";
  prov["q2"] = std::to_string(q2);
  report.subnetwork = induced_subnetwork(view.net(), set.flatten(), std::move(prov));

  const SuperNetwork& net = view.net();
  // User score: contribution summed over the qualifying fields, counting only
  // fields whose parent did not already qualify (no double counting along
  // chains).
  auto contribution = [&](std::uint32_t u) {
    std::uint64_t total = 0;
    for (const HotField& h : hot) {
      auto parent = view.parent_of(h.field);
      if (parent && in_f1[*parent]) continue;
      total += view.user_field_weight(u, h.field);
    }
    return total;
  };
  report.user_rankings = rank(NodeKind::User, set.users, contribution);
  report.post_rankings =
      rank(NodeKind::Post, set.posts, [&](std::uint32_t p) { return post_degree(view, p); });
  report.knowledge_rankings = rank(NodeKind::Knowledge, set.knowledge,
                                   [&](std::uint32_t k) { return net.knowledge_weight[k]; });
  report.field_rankings =
      rank(NodeKind::Field, set.fields, [&](std::uint32_t f) { return net.field_weight[f]; });
  return report;
}

}  // namespace uiksn
