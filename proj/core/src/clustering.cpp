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

#include "uiksn/clustering.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace uiksn {

namespace {

constexpr double kGainEps = 1e-12;

// Node-position graph with symmetric weighted adjacency.
struct LocalGraph {
  std::uint32_t n = 0;
  std::vector<std::vector<std::pair<std::uint32_t, double>>> adj;
  std::vector<double> strength;  // weighted degree
  double m = 0.0;                // total edge weight, each undirected edge once
};

LocalGraph make_graph(std::uint32_t n, const std::vector<WeightedLink>& edges) {
  LocalGraph g;
  g.n = n;
  g.adj.resize(n);
  g.strength.assign(n, 0.0);
  for (const WeightedLink& e : edges) {
    double w = static_cast<double>(e.weight);
    g.adj[e.a].push_back({e.b, w});
    g.adj[e.b].push_back({e.a, w});
    g.strength[e.a] += w;
    g.strength[e.b] += w;
    g.m += w;
  }
  return g;
}

struct HeapEntry {
  double gain;
  std::uint32_t a, b;        // community slots, rep(a) < rep(b)
  std::uint64_t va, vb;      // community versions at push time
  std::uint32_t rep_a, rep_b;

  bool operator<(const HeapEntry& other) const {
    // priority_queue is a max-heap: larger gain first, then smaller reps.
    if (gain != other.gain) return gain < other.gain;
    if (rep_a != other.rep_a) return rep_a > other.rep_a;
    return rep_b > other.rep_b;
  }
};

// Greedy modularity agglomeration: repeatedly merge the connected community
// pair with the largest positive gain, ties by ascending smallest-member
// node id. Runs in roughly O(E log E) with lazy heap deletion.
std::vector<std::uint32_t> agglomerate(const LocalGraph& g, double resolution) {
  std::vector<std::uint32_t> comm(g.n);
  for (std::uint32_t v = 0; v < g.n; ++v) comm[v] = v;
  if (g.m <= 0.0) return comm;

  const double inv_m = 1.0 / g.m;
  const double inv_2m2 = 1.0 / (2.0 * g.m * g.m);
  auto merge_gain = [&](double between, double tot_a, double tot_b) {
    return between * inv_m - resolution * tot_a * tot_b * inv_2m2;
  };

  std::vector<bool> alive(g.n, true);
  std::vector<double> tot(g.strength);
  std::vector<std::uint32_t> rep(g.n);
  std::vector<std::uint64_t> version(g.n, 0);
  std::vector<std::map<std::uint32_t, double>> nbr(g.n);
  for (std::uint32_t v = 0; v < g.n; ++v) {
    rep[v] = v;
    for (const auto& [u, w] : g.adj[v]) nbr[v][u] += w;
  }

  std::priority_queue<HeapEntry> heap;
  auto push_pair = [&](std::uint32_t a, std::uint32_t b) {
    double between = 0.0;
    auto it = nbr[a].find(b);
    if (it != nbr[a].end()) between = it->second;
    std::uint32_t ra = rep[a], rb = rep[b];
    if (ra > rb) {
      std::swap(a, b);
      std::swap(ra, rb);
    }
    heap.push({merge_gain(between, tot[a], tot[b]), a, b, version[a], version[b], ra, rb});
  };
  for (std::uint32_t v = 0; v < g.n; ++v) {
    for (const auto& [u, w] : g.adj[v]) {
      if (v < u) push_pair(v, u);
    }
  }

  // Union members via parent chain; resolved at the end.
  std::vector<std::uint32_t> merged_into(g.n);
  for (std::uint32_t v = 0; v < g.n; ++v) merged_into[v] = v;

  while (!heap.empty()) {
    HeapEntry top = heap.top();
    heap.pop();
    if (!alive[top.a] || !alive[top.b]) continue;
    if (version[top.a] != top.va || version[top.b] != top.vb) continue;
    if (top.gain <= kGainEps) break;

    // Merge the smaller neighbor map into the larger one.
    std::uint32_t keep = top.a, drop = top.b;
    if (nbr[keep].size() < nbr[drop].size()) std::swap(keep, drop);
    alive[drop] = false;
    merged_into[drop] = keep;
    rep[keep] = std::min(rep[top.a], rep[top.b]);
    tot[keep] = tot[top.a] + tot[top.b];
    ++version[keep];
    ++version[drop];

    nbr[keep].erase(drop);
    nbr[drop].erase(keep);
    for (const auto& [c, w] : nbr[drop]) {
      nbr[c].erase(drop);
      nbr[keep][c] += w;
      nbr[c][keep] = nbr[keep][c];
    }
    nbr[drop].clear();
    for (const auto& [c, w] : nbr[keep]) push_pair(keep, c);
  }

  for (std::uint32_t v = 0; v < g.n; ++v) {
    std::uint32_t c = v;
    while (merged_into[c] != c) c = merged_into[c];
    // Path compression keeps repeated lookups cheap.
    std::uint32_t walk = v;
    while (merged_into[walk] != walk) {
      std::uint32_t next = merged_into[walk];
      merged_into[walk] = c;
      walk = next;
    }
    comm[v] = c;
  }
  return comm;
}

// Single-node local moves until no move increases modularity. Guarantees the
// partition is a local optimum under node relocation.
void refine(const LocalGraph& g, double resolution, std::vector<std::uint32_t>& comm) {
  if (g.m <= 0.0) return;
  const double inv_m = 1.0 / g.m;
  const double inv_2m2 = 1.0 / (2.0 * g.m * g.m);

  std::uint32_t next_label = 0;
  for (std::uint32_t c : comm) next_label = std::max(next_label, c + 1);
  std::vector<double> tot(next_label + g.n, 0.0);
  for (std::uint32_t v = 0; v < g.n; ++v) tot[comm[v]] += g.strength[v];

  bool moved = true;
  while (moved) {
    moved = false;
    for (std::uint32_t v = 0; v < g.n; ++v) {
      std::uint32_t from = comm[v];
      std::map<std::uint32_t, double> weight_to;  // community -> edge weight from v
      for (const auto& [u, w] : g.adj[v]) weight_to[comm[u]] += w;

      double w_from = 0.0;
      if (auto it = weight_to.find(from); it != weight_to.end()) w_from = it->second;
      double remove_gain =
          -w_from * inv_m + resolution * g.strength[v] * (tot[from] - g.strength[v]) * inv_2m2;

      // Best existing target; a fresh singleton is the remove_gain baseline.
      double best_gain = remove_gain;
      std::uint32_t best_target = next_label;
      for (const auto& [c, w] : weight_to) {
        if (c == from) continue;
        double gain = remove_gain + w * inv_m - resolution * g.strength[v] * tot[c] * inv_2m2;
        if (gain > best_gain + kGainEps) {
          best_gain = gain;
          best_target = c;
        }
      }
      if (best_gain > kGainEps) {
        tot[from] -= g.strength[v];
        if (best_target == next_label) {
          ++next_label;
          if (tot.size() < next_label) tot.resize(next_label, 0.0);
        }
        tot[best_target] += g.strength[v];
        comm[v] = best_target;
        moved = true;
      }
    }
  }
}

// Cluster positions 0..n-1; labels compacted to 0..c-1 ordered by smallest
// member position.
std::vector<std::uint32_t> cluster_positions(const LocalGraph& g, double resolution) {
  std::vector<std::uint32_t> comm = agglomerate(g, resolution);
  refine(g, resolution, comm);
  // Re-key so labels follow smallest-member order.
  std::map<std::uint32_t, std::uint32_t> order;
  for (std::uint32_t v = 0; v < g.n; ++v) {
    order.emplace(comm[v], static_cast<std::uint32_t>(order.size()));
  }
  for (std::uint32_t v = 0; v < g.n; ++v) comm[v] = order[comm[v]];
  return comm;
}

}  // namespace

double modularity(const Wkn& wkn, const std::vector<std::uint32_t>& community,
                  double resolution) {
  if (community.size() != wkn.node_ids.size()) {
    throw Error("modularity: community size does not match node count");
  }
  double m = 0.0;
  std::map<std::uint32_t, double> tot, in;
  std::vector<double> strength(wkn.node_ids.size(), 0.0);
  std::map<std::uint32_t, std::uint32_t> pos;
  for (std::uint32_t i = 0; i < wkn.node_ids.size(); ++i) pos[wkn.node_ids[i]] = i;
  for (const WeightedLink& e : wkn.edges) {
    double w = static_cast<double>(e.weight);
    strength[pos[e.a]] += w;
    strength[pos[e.b]] += w;
    m += w;
    if (community[pos[e.a]] == community[pos[e.b]]) in[community[pos[e.a]]] += w;
  }
  if (m <= 0.0) return 0.0;
  for (std::uint32_t i = 0; i < wkn.node_ids.size(); ++i) tot[community[i]] += strength[i];
  double q = 0.0;
  for (const auto& [c, t] : tot) {
    double internal = in.count(c) ? in[c] : 0.0;
    q += internal / m - resolution * (t / (2.0 * m)) * (t / (2.0 * m));
  }
  return q;
}

FieldPartition cluster_wkn(const Wkn& wkn, const ClusteringConfig& config, std::uint64_t seed) {
  (void)seed;  // recorded in provenance by callers; the algorithm draws nothing
  FieldPartition partition;
  const std::uint32_t n = static_cast<std::uint32_t>(wkn.node_ids.size());
  if (n == 0) return partition;

  LocalGraph g = make_graph(n, [&] {
    // Re-index edges from node ids to positions.
    std::map<std::uint32_t, std::uint32_t> pos;
    for (std::uint32_t i = 0; i < n; ++i) pos[wkn.node_ids[i]] = i;
    std::vector<WeightedLink> edges;
    edges.reserve(wkn.edges.size());
    for (const WeightedLink& e : wkn.edges) {
      edges.push_back({pos.at(e.a), pos.at(e.b), e.weight});
    }
    return edges;
  }());

  std::vector<std::uint32_t> roots = cluster_positions(g, config.resolution);

  // Group members per root cluster, cluster label order already follows the
  // smallest member.
  std::uint32_t root_count = 0;
  for (std::uint32_t c : roots) root_count = std::max(root_count, c + 1);
  std::vector<std::vector<std::uint32_t>> root_members(root_count);
  for (std::uint32_t v = 0; v < n; ++v) root_members[roots[v]].push_back(v);

  struct ProtoField {
    std::vector<std::uint32_t> members;          // leaf members (positions)
    std::vector<std::uint32_t> children;         // proto indices of sub-fields
    std::optional<std::uint32_t> parent;         // proto index
    std::uint64_t weight = 0;
    std::uint32_t min_member = 0;
    std::uint32_t depth = 0;
  };
  std::vector<ProtoField> protos;

  for (std::uint32_t r = 0; r < root_count; ++r) {
    const std::vector<std::uint32_t>& members = root_members[r];
    std::vector<std::vector<std::uint32_t>> sub_groups;
    if (config.two_level && members.size() >= 2) {
      // Re-cluster the induced subgraph; positions are local to `members`.
      std::map<std::uint32_t, std::uint32_t> local;
      for (std::uint32_t i = 0; i < members.size(); ++i) local[members[i]] = i;
      std::vector<WeightedLink> local_edges;
      for (std::uint32_t v : members) {
        for (const auto& [u, w] : g.adj[v]) {
          if (v < u && local.count(u)) {
            local_edges.push_back({local[v], local[u], static_cast<std::uint64_t>(w)});
          }
        }
      }
      LocalGraph sub = make_graph(static_cast<std::uint32_t>(members.size()), local_edges);
      std::vector<std::uint32_t> sub_comm = cluster_positions(sub, config.resolution);
      std::uint32_t sub_count = 0;
      for (std::uint32_t c : sub_comm) sub_count = std::max(sub_count, c + 1);
      if (sub_count >= 2) {
        sub_groups.resize(sub_count);
        for (std::uint32_t i = 0; i < members.size(); ++i) {
          sub_groups[sub_comm[i]].push_back(members[i]);
        }
      }
    }

    std::uint32_t root_proto = static_cast<std::uint32_t>(protos.size());
    protos.push_back({});
    ProtoField& root_field = protos[root_proto];
    root_field.min_member = members.front();
    root_field.depth = 0;
    for (std::uint32_t v : members) root_field.weight += wkn.node_weight[v];

    if (sub_groups.empty()) {
      protos[root_proto].members = members;  // root is its own leaf
    } else {
      for (const std::vector<std::uint32_t>& group : sub_groups) {
        std::uint32_t leaf_proto = static_cast<std::uint32_t>(protos.size());
        ProtoField leaf;
        leaf.members = group;
        leaf.parent = root_proto;
        leaf.min_member = group.front();
        leaf.depth = 1;
        for (std::uint32_t v : group) leaf.weight += wkn.node_weight[v];
        protos.push_back(std::move(leaf));
        protos[root_proto].children.push_back(leaf_proto);
      }
    }
  }

  // Canonical field numbering: descending weight, ties by ascending smallest
  // member node id, parents before children.
  std::vector<std::uint32_t> order(protos.size());
  for (std::uint32_t i = 0; i < protos.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    const ProtoField& a = protos[x];
    const ProtoField& b = protos[y];
    if (a.weight != b.weight) return a.weight > b.weight;
    if (a.min_member != b.min_member) return wkn.node_ids[a.min_member] < wkn.node_ids[b.min_member];
    return a.depth < b.depth;
  });
  std::vector<std::uint32_t> field_of_proto(protos.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) field_of_proto[order[i]] = i;

  partition.assignment.resize(n);
  partition.parent.resize(protos.size());
  partition.field_weight.resize(protos.size());
  partition.labels.resize(protos.size());
  for (std::uint32_t p = 0; p < protos.size(); ++p) {
    std::uint32_t f = field_of_proto[p];
    partition.parent[f] = protos[p].parent ? std::optional<std::uint32_t>(
                                                 field_of_proto[*protos[p].parent])
                                           : std::nullopt;
    partition.field_weight[f] = protos[p].weight;
    partition.labels[f] = "F" + std::to_string(f);
    for (std::uint32_t v : protos[p].members) partition.assignment[v] = f;
  }
  return partition;
}

}  // namespace uiksn
