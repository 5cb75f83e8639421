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

#include "uiksn/validate.hpp"

#include <algorithm>
#include <optional>

namespace uiksn {

namespace {

std::string edge_str(NodeKind ak, std::uint32_t a, NodeKind bk, std::uint32_t b) {
  return "(" + render({ak, a}) + ", " + render({bk, b}) + ")";
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error([&violations] {
        std::string msg =
            "invalid network: " + std::to_string(violations.size()) + " violation(s)";
        std::size_t shown = std::min<std::size_t>(violations.size(), 5);
        for (std::size_t i = 0; i < shown; ++i) msg += "; " + violations[i].to_string();
        if (shown < violations.size()) msg += "; ...";
        return msg;
      }()),
      violations_(std::move(violations)) {}

std::vector<Violation> validate(const SuperNetwork& net) {
  std::vector<Violation> out;
  auto add = [&](const char* invariant, std::string detail) {
    out.push_back({invariant, std::move(detail)});
  };

  const std::uint32_t users = static_cast<std::uint32_t>(net.user_labels.size());
  const std::uint32_t posts = static_cast<std::uint32_t>(net.post_labels.size());
  const std::uint32_t knowledge = static_cast<std::uint32_t>(net.knowledge_labels.size());
  const std::uint32_t fields = static_cast<std::uint32_t>(net.field_labels.size());

  // Structural layer: index ranges and weight-map sizes. Everything after
  // depends on these, so bail out when they fail.
  bool structure_ok = true;
  auto check_size = [&](std::size_t have, std::uint32_t want, const char* map) {
    if (have != want) {
      add("structure.weight-map", std::string(map) + " has " + std::to_string(have) +
                                      " entries for " + std::to_string(want) + " nodes");
      structure_ok = false;
    }
  };
  check_size(net.knowledge_weight.size(), knowledge, "knowledge_weight");
  check_size(net.user_weight.size(), users, "user_weight");
  check_size(net.field_weight.size(), fields, "field_weight");

  auto check_range = [&](std::uint32_t value, std::uint32_t limit, NodeKind kind,
                         const char* relation) {
    if (value >= limit) {
      add("structure.range", std::string(relation) + " references missing " +
                                 std::string(kind_name(kind)) + " " + render({kind, value}));
      structure_ok = false;
    }
  };
  for (const Link& e : net.authorship) {
    check_range(e.first, posts, NodeKind::Post, "authorship");
    check_range(e.second, users, NodeKind::User, "authorship");
  }
  for (const Link& e : net.containment) {
    check_range(e.first, posts, NodeKind::Post, "containment");
    check_range(e.second, knowledge, NodeKind::Knowledge, "containment");
  }
  for (const Link& e : net.membership) {
    check_range(e.first, knowledge, NodeKind::Knowledge, "membership");
    check_range(e.second, fields, NodeKind::Field, "membership");
  }
  for (const Link& e : net.hierarchy) {
    check_range(e.first, fields, NodeKind::Field, "hierarchy");
    check_range(e.second, fields, NodeKind::Field, "hierarchy");
  }
  for (const WeightedLink& e : net.cooccurrence) {
    check_range(e.a, knowledge, NodeKind::Knowledge, "cooccurrence");
    check_range(e.b, knowledge, NodeKind::Knowledge, "cooccurrence");
  }
  if (!structure_ok) return out;

  auto check_sorted = [&](const std::vector<Link>& edges, const char* relation) {
    for (std::size_t i = 1; i < edges.size(); ++i) {
      if (!(edges[i - 1] < edges[i])) {
        add("relation.sorted", std::string(relation) + " is not strictly sorted at entry " +
                                   std::to_string(i));
        return;
      }
    }
  };
  check_sorted(net.authorship, "authorship");
  check_sorted(net.containment, "containment");
  check_sorted(net.membership, "membership");
  check_sorted(net.hierarchy, "hierarchy");
  for (std::size_t i = 1; i < net.cooccurrence.size(); ++i) {
    const WeightedLink& prev = net.cooccurrence[i - 1];
    const WeightedLink& cur = net.cooccurrence[i];
    if (!(std::pair(prev.a, prev.b) < std::pair(cur.a, cur.b))) {
      add("relation.sorted", "cooccurrence is not strictly sorted at entry " + std::to_string(i));
      break;
    }
  }

  // Authorship: total and functional on posts.
  bool authorship_ok = true;
  {
    std::vector<std::uint32_t> degree(posts, 0);
    for (const Link& e : net.authorship) ++degree[e.first];
    for (std::uint32_t p = 0; p < posts; ++p) {
      if (degree[p] == 0) {
        add("authorship.total", render(post_node(p)) + " has no author");
        authorship_ok = false;
      } else if (degree[p] > 1) {
        add("authorship.functional",
            render(post_node(p)) + " has " + std::to_string(degree[p]) + " authors");
        authorship_ok = false;
      }
    }
  }

  // Membership: total and functional on knowledge.
  bool membership_ok = true;
  {
    std::vector<std::uint32_t> degree(knowledge, 0);
    for (const Link& e : net.membership) ++degree[e.first];
    for (std::uint32_t k = 0; k < knowledge; ++k) {
      if (degree[k] == 0) {
        add("membership.total", render(knowledge_node(k)) + " belongs to no field");
        membership_ok = false;
      } else if (degree[k] > 1) {
        add("membership.functional",
            render(knowledge_node(k)) + " belongs to " + std::to_string(degree[k]) + " fields");
        membership_ok = false;
      }
    }
  }

  // Hierarchy: at most one parent, and the parent graph is a forest.
  bool hierarchy_ok = true;
  std::vector<std::optional<std::uint32_t>> parent(fields);
  {
    std::vector<std::uint32_t> degree(fields, 0);
    for (const Link& e : net.hierarchy) {
      ++degree[e.first];
      parent[e.first] = e.second;
    }
    for (std::uint32_t f = 0; f < fields; ++f) {
      if (degree[f] > 1) {
        add("hierarchy.single-parent",
            render(field_node(f)) + " has " + std::to_string(degree[f]) + " parents");
        hierarchy_ok = false;
      }
      if (parent[f] && *parent[f] == f) {
        add("hierarchy.acyclic", render(field_node(f)) + " is its own parent");
        hierarchy_ok = false;
      }
    }
    if (hierarchy_ok) {
      // 0 = unvisited, 1 = on current chain, 2 = known acyclic
      std::vector<std::uint8_t> state(fields, 0);
      for (std::uint32_t f = 0; f < fields && hierarchy_ok; ++f) {
        std::vector<std::uint32_t> chain;
        std::uint32_t cur = f;
        while (state[cur] == 0) {
          state[cur] = 1;
          chain.push_back(cur);
          if (!parent[cur]) break;
          cur = *parent[cur];
          if (state[cur] == 1) {
            add("hierarchy.acyclic", "cycle through " + render(field_node(cur)));
            hierarchy_ok = false;
            break;
          }
        }
        for (std::uint32_t c : chain) state[c] = 2;
      }
    }
  }

  // Cooccurrence: canonical, no self-loops, weights in [1, min(q, q)].
  for (const WeightedLink& e : net.cooccurrence) {
    if (e.a == e.b) {
      add("cooccurrence.self-loop", render(knowledge_node(e.a)));
      continue;
    }
    if (e.a > e.b) {
      add("cooccurrence.canonical",
          edge_str(NodeKind::Knowledge, e.a, NodeKind::Knowledge, e.b) + " must have a < b");
    }
    if (e.weight < 1) {
      add("cooccurrence.weight-floor",
          edge_str(NodeKind::Knowledge, e.a, NodeKind::Knowledge, e.b) + " has weight 0");
    } else if (e.weight > std::min(net.knowledge_weight[e.a], net.knowledge_weight[e.b])) {
      add("cooccurrence.weight-bound",
          edge_str(NodeKind::Knowledge, e.a, NodeKind::Knowledge, e.b) + " weight " +
              std::to_string(e.weight) + " exceeds min(q) = " +
              std::to_string(std::min(net.knowledge_weight[e.a], net.knowledge_weight[e.b])));
    }
  }

  // q(k) = number of containing posts, and every knowledge point is contained.
  {
    std::vector<std::uint64_t> degree(knowledge, 0);
    for (const Link& e : net.containment) ++degree[e.second];
    for (std::uint32_t k = 0; k < knowledge; ++k) {
      if (degree[k] == 0) {
        add("knowledge-weight.floor", render(knowledge_node(k)) + " is contained in no post");
      } else if (net.knowledge_weight[k] != degree[k]) {
        add("knowledge-weight.consistent",
            render(knowledge_node(k)) + " has q = " + std::to_string(net.knowledge_weight[k]) +
                " but " + std::to_string(degree[k]) + " containing posts");
      }
    }
  }

  // q(u) = the user's (post, knowledge) incidence count.
  if (authorship_ok) {
    std::vector<std::uint64_t> post_keywords(posts, 0);
    for (const Link& e : net.containment) ++post_keywords[e.first];
    std::vector<std::uint64_t> contribution(users, 0);
    for (const Link& e : net.authorship) contribution[e.second] += post_keywords[e.first];
    for (std::uint32_t u = 0; u < users; ++u) {
      if (net.user_weight[u] != contribution[u]) {
        add("user-weight.consistent",
            render(user_node(u)) + " has q = " + std::to_string(net.user_weight[u]) + " but " +
                std::to_string(contribution[u]) + " (post, knowledge) incidences");
      }
    }
  }

  // q(f) = sum of q(k) over knowledge whose membership chain reaches f;
  // childless fields need at least one direct member.
  if (membership_ok && hierarchy_ok) {
    std::vector<std::uint64_t> reach_weight(fields, 0);
    std::vector<std::uint32_t> direct_members(fields, 0);
    for (const Link& e : net.membership) {
      ++direct_members[e.second];
      std::optional<std::uint32_t> f = e.second;
      while (f) {
        reach_weight[*f] += net.knowledge_weight[e.first];
        f = parent[*f];
      }
    }
    std::vector<std::uint32_t> child_count(fields, 0);
    for (const Link& e : net.hierarchy) ++child_count[e.second];
    for (std::uint32_t f = 0; f < fields; ++f) {
      if (child_count[f] == 0 && direct_members[f] == 0) {
        add("field.non-empty", render(field_node(f)) + " has no members and no sub-fields");
      } else if (net.field_weight[f] != reach_weight[f]) {
        add("field-weight.consistent",
            render(field_node(f)) + " has q = " + std::to_string(net.field_weight[f]) + " but " +
                std::to_string(reach_weight[f]) + " aggregated from members");
      }
    }
  }

  return out;
}

}  // namespace uiksn
