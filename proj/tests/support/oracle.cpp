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

#include "oracle.hpp"

#include <deque>
#include <sstream>

namespace uiksn::testing {

Truth truth_of(const Corpus& corpus) {
  Truth truth;
  for (const RawPost& post : corpus.posts) {
    std::set<std::string> words;
    std::istringstream stream(post.title + " " + post.body);
    std::string word;
    while (stream >> word) words.insert(word);
    truth.post_words.push_back(std::move(words));
    truth.post_author.push_back(post.author_name);
  }
  return truth;
}

std::map<std::string, std::uint64_t> oracle_doc_freq(const Truth& truth) {
  std::map<std::string, std::uint64_t> freq;
  for (const auto& words : truth.post_words) {
    for (const std::string& w : words) ++freq[w];
  }
  return freq;
}

std::map<std::pair<std::string, std::string>, std::uint64_t> oracle_cooccurrence(
    const Truth& truth) {
  std::map<std::pair<std::string, std::string>, std::uint64_t> counts;
  for (const auto& words : truth.post_words) {
    for (auto i = words.begin(); i != words.end(); ++i) {
      for (auto j = std::next(i); j != words.end(); ++j) {
        ++counts[{*i, *j}];  // std::set iterates sorted, so *i < *j
      }
    }
  }
  return counts;
}

std::map<std::pair<std::string, std::string>, std::uint64_t> oracle_user_knowledge(
    const Truth& truth) {
  std::map<std::pair<std::string, std::string>, std::uint64_t> counts;
  for (std::size_t p = 0; p < truth.post_words.size(); ++p) {
    for (const std::string& w : truth.post_words[p]) ++counts[{truth.post_author[p], w}];
  }
  return counts;
}

std::set<std::size_t> oracle_related_posts(const Truth& truth, const std::string& word) {
  std::set<std::size_t> posts;
  for (std::size_t p = 0; p < truth.post_words.size(); ++p) {
    if (truth.post_words[p].count(word)) posts.insert(p);
  }
  return posts;
}

std::set<std::string> oracle_related_users(const Truth& truth, const std::string& word) {
  std::set<std::string> users;
  for (std::size_t p : oracle_related_posts(truth, word)) users.insert(truth.post_author[p]);
  return users;
}

std::set<NodeId> oracle_ego(const SuperNetwork& net, NodeId center, std::uint32_t radius,
                            RelationSet kinds) {
  // Generic adjacency assembled straight from the edge vectors.
  std::map<NodeId, std::vector<NodeId>> adj;
  auto connect = [&](NodeId a, NodeId b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  if (kinds.contains(RelationKind::Authorship)) {
    for (const Link& e : net.authorship) connect(post_node(e.first), user_node(e.second));
  }
  if (kinds.contains(RelationKind::Containment)) {
    for (const Link& e : net.containment) connect(post_node(e.first), knowledge_node(e.second));
  }
  if (kinds.contains(RelationKind::Membership)) {
    for (const Link& e : net.membership) connect(knowledge_node(e.first), field_node(e.second));
  }
  if (kinds.contains(RelationKind::FieldHierarchy)) {
    for (const Link& e : net.hierarchy) connect(field_node(e.first), field_node(e.second));
  }
  if (kinds.contains(RelationKind::Cooccurrence)) {
    for (const WeightedLink& e : net.cooccurrence) {
      connect(knowledge_node(e.a), knowledge_node(e.b));
    }
  }

  std::set<NodeId> reached{center};
  std::map<NodeId, std::uint32_t> dist{{center, 0}};
  std::deque<NodeId> queue{center};
  while (!queue.empty()) {
    NodeId cur = queue.front();
    queue.pop_front();
    if (dist[cur] == radius) continue;
    for (NodeId next : adj[cur]) {
      if (dist.count(next)) continue;
      dist[next] = dist[cur] + 1;
      reached.insert(next);
      queue.push_back(next);
    }
  }
  return reached;
}

double oracle_modularity(std::uint32_t n,
                         const std::vector<std::tuple<std::uint32_t, std::uint32_t, double>>& edges,
                         const std::vector<std::uint32_t>& assignment, double resolution) {
  double m = 0.0;
  std::vector<double> degree(n, 0.0);
  for (const auto& [a, b, w] : edges) {
    m += w;
    degree[a] += w;
    degree[b] += w;
  }
  if (m == 0.0) return 0.0;
  std::map<std::uint32_t, double> tot, internal;
  for (std::uint32_t v = 0; v < n; ++v) tot[assignment[v]] += degree[v];
  for (const auto& [a, b, w] : edges) {
    if (assignment[a] == assignment[b]) internal[assignment[a]] += w;
  }
  double q = 0.0;
  for (const auto& [c, t] : tot) {
    q += internal[c] / m - resolution * (t / (2.0 * m)) * (t / (2.0 * m));
  }
  return q;
}

std::vector<std::uint32_t> oracle_best_partition(
    std::uint32_t n, const std::vector<std::tuple<std::uint32_t, std::uint32_t, double>>& edges,
    double resolution) {
  // Restricted growth strings enumerate every set partition exactly once.
  std::vector<std::uint32_t> current(n, 0), best(n, 0), max_so_far(n, 0);
  double best_q = oracle_modularity(n, edges, current, resolution);

  while (true) {
    // Advance to the next restricted growth string.
    std::int64_t i = static_cast<std::int64_t>(n) - 1;
    for (; i > 0; --i) {
      if (current[i] <= max_so_far[i - 1]) break;
    }
    if (i <= 0) break;
    ++current[i];
    max_so_far[i] = std::max(max_so_far[i - 1], current[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      current[j] = 0;
      max_so_far[j] = max_so_far[j - 1];
    }
    double q = oracle_modularity(n, edges, current, resolution);
    if (q > best_q) {
      best_q = q;
      best = current;
    }
  }
  return best;
}

}  // namespace uiksn::testing
