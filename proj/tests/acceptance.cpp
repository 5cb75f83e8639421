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
//
// Acceptance suite: one criterion per function, one pass/fail line each,
// exit status = number of failed criteria. Every expected value is either
// hand-derived for the desk corpus or recomputed by a brute-force oracle
// that shares no code with the library.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "synthetic.hpp"
#include "uiksn/analysis.hpp"
#include "uiksn/assemble.hpp"
#include "uiksn/pipeline.hpp"
#include "uiksn/serialize.hpp"
#include "uiksn/validate.hpp"

using namespace uiksn;
using namespace uiksn::testing;

namespace {

const std::string kFixtures = UIKSN_FIXTURE_DIR;

struct Check {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
  void expect(bool condition, const std::string& what) {
    if (!condition) fail(what);
  }
};

SuperNetwork pipeline_network(const Corpus& corpus) {
  KeywordTable table = extract_keywords(corpus, plain_tokenizer());
  Wkn wkn = build_wkn(table);
  FieldPartition partition = cluster_wkn(wkn, ClusteringConfig{}, 0);
  return assemble_uiksn(encode(corpus), table, wkn, partition, {});
}

// Membership chain of every knowledge point read straight off the raw edge
// vectors (independent of NetworkView).
std::vector<std::vector<std::uint32_t>> raw_chains(const SuperNetwork& net) {
  std::vector<std::optional<std::uint32_t>> leaf(net.knowledge_labels.size());
  std::vector<std::optional<std::uint32_t>> parent(net.field_labels.size());
  for (const Link& e : net.membership) leaf[e.first] = e.second;
  for (const Link& e : net.hierarchy) parent[e.first] = e.second;
  std::vector<std::vector<std::uint32_t>> chains(net.knowledge_labels.size());
  for (std::size_t k = 0; k < chains.size(); ++k) {
    std::optional<std::uint32_t> f = leaf[k];
    while (f) {
      chains[k].push_back(*f);
      f = parent[*f];
    }
  }
  return chains;
}

// ---- criterion 1 ------------------------------------------------------

bool criterion_oracle_equivalence(std::string& detail) {
  Check check;
  std::mt19937_64 rng(20150429);
  for (int trial = 0; trial < 100 && check.ok; ++trial) {
    Corpus corpus = random_corpus(rng, {.max_posts = 50, .max_keywords_per_post = 10});
    Truth truth = truth_of(corpus);
    KeywordTable table = extract_keywords(corpus, plain_tokenizer());
    Wkn wkn = build_wkn(table);
    FieldPartition partition = cluster_wkn(wkn, ClusteringConfig{}, 0);
    SuperNetwork net = assemble_uiksn(encode(corpus), table, wkn, partition, {});
    NetworkView view = NetworkView::open(net);

    // build_wkn == brute-force pair enumeration.
    std::map<std::pair<std::string, std::string>, std::uint64_t> wkn_edges;
    for (const WeightedLink& e : wkn.edges) {
      std::string a = table.keywords[e.a], b = table.keywords[e.b];
      if (b < a) std::swap(a, b);
      wkn_edges[{a, b}] = e.weight;
    }
    check.expect(wkn_edges == oracle_cooccurrence(truth),
                 "trial " + std::to_string(trial) + ": wkn differs from pair enumeration");

    // compose_derived == brute-force (author, word) counting.
    DerivedRelations derived = compose_derived(view);
    std::map<std::pair<std::string, std::string>, std::uint64_t> uk;
    for (const auto& [u, k, w] : derived.user_knowledge) {
      uk[{net.user_labels[u], net.knowledge_labels[k]}] = w;
    }
    check.expect(uk == oracle_user_knowledge(truth),
                 "trial " + std::to_string(trial) + ": user_knowledge differs");

    auto chains = raw_chains(net);
    std::set<Link> expected_post_field;
    for (std::uint32_t p = 0; p < net.post_labels.size(); ++p) {
      for (const std::string& word : truth.post_words[p]) {
        for (std::uint32_t k = 0; k < net.knowledge_labels.size(); ++k) {
          if (net.knowledge_labels[k] != word) continue;
          for (std::uint32_t f : chains[k]) expected_post_field.insert({p, f});
        }
      }
    }
    check.expect(std::set<Link>(derived.post_field.begin(), derived.post_field.end()) ==
                     expected_post_field,
                 "trial " + std::to_string(trial) + ": post_field differs");

    // related_posts / related_users for every knowledge point.
    for (std::uint32_t k = 0; k < net.knowledge_labels.size() && check.ok; ++k) {
      auto posts = related_posts(view, k);
      std::set<std::size_t> got(posts.begin(), posts.end());
      check.expect(got == oracle_related_posts(truth, net.knowledge_labels[k]),
                   "trial " + std::to_string(trial) + ": related_posts differs for " +
                       net.knowledge_labels[k]);
      std::set<std::string> users;
      for (std::uint32_t u : related_users(view, k)) users.insert(net.user_labels[u]);
      check.expect(users == oracle_related_users(truth, net.knowledge_labels[k]),
                   "trial " + std::to_string(trial) + ": related_users differs");
    }

    // core_knowledge_subnetwork == brute-force restriction at a random q0.
    std::uint64_t q0 = rng() % 8;
    Wkn core = core_knowledge_subnetwork(view, q0);
    std::set<std::uint32_t> keep;
    for (std::uint32_t k = 0; k < net.knowledge_labels.size(); ++k) {
      if (net.knowledge_weight[k] >= q0) keep.insert(k);
    }
    check.expect(std::set<std::uint32_t>(core.node_ids.begin(), core.node_ids.end()) == keep,
                 "trial " + std::to_string(trial) + ": core knowledge set differs");
    std::vector<WeightedLink> expected_edges;
    for (const WeightedLink& e : net.cooccurrence) {
      if (keep.count(e.a) && keep.count(e.b)) expected_edges.push_back(e);
    }
    check.expect(core.edges == expected_edges,
                 "trial " + std::to_string(trial) + ": core knowledge edges differ");

    // hot_fields membership triples against the chain enumeration.
    for (const HotField& hot : hot_fields(view, 0)) {
      std::set<std::uint32_t> k2, p2, u2;
      for (std::uint32_t k = 0; k < net.knowledge_labels.size(); ++k) {
        for (std::uint32_t f : chains[k]) {
          if (f == hot.field) k2.insert(k);
        }
      }
      for (std::uint32_t k : k2) {
        for (std::size_t p : oracle_related_posts(truth, net.knowledge_labels[k])) {
          p2.insert(static_cast<std::uint32_t>(p));
        }
      }
      std::vector<std::uint32_t> author(net.post_labels.size());
      for (const Link& e : net.authorship) author[e.first] = e.second;
      for (std::uint32_t p : p2) u2.insert(author[p]);

      check.expect(std::set<std::uint32_t>(hot.knowledge.begin(), hot.knowledge.end()) == k2,
                   "trial " + std::to_string(trial) + ": hot field K2 differs");
      check.expect(std::set<std::uint32_t>(hot.posts.begin(), hot.posts.end()) == p2,
                   "trial " + std::to_string(trial) + ": hot field P2 differs");
      check.expect(std::set<std::uint32_t>(hot.users.begin(), hot.users.end()) == u2,
                   "trial " + std::to_string(trial) + ": hot field U2 differs");
    }
  }
  detail = check.detail;
  return check.ok;
}

// ---- criterion 2 ------------------------------------------------------

bool criterion_desk_corpus(std::string& detail) {
  Check check;
  TempDir dir("acceptance-c0");
  PipelineConfig config = load_pipeline_config(kFixtures + "/c0.cfg");
  config.corpus_path = kFixtures + "/c0.csv";
  config.out_dir = dir.file("out");
  BuildOutputs outputs = run_build(config);
  const SuperNetwork& net = outputs.network;

  check.expect(validate(net).empty(), "pipeline output fails validation");

  std::map<std::string, std::uint64_t> freq;
  for (std::uint32_t k = 0; k < net.knowledge_labels.size(); ++k) {
    freq[net.knowledge_labels[k]] = net.knowledge_weight[k];
  }
  check.expect(freq == std::map<std::string, std::uint64_t>{
                           {"screen", 2}, {"app", 2}, {"battery", 2}, {"mode", 1}},
               "keyword frequencies differ from {2,2,2,1}");

  std::map<std::string, std::uint64_t> user_weight;
  for (std::uint32_t u = 0; u < net.user_labels.size(); ++u) {
    user_weight[net.user_labels[u]] = net.user_weight[u];
  }
  check.expect(user_weight == std::map<std::string, std::uint64_t>{{"alice", 5}, {"bob", 2}},
               "user weights differ from {alice: 5, bob: 2}");

  std::map<std::pair<std::string, std::string>, std::uint64_t> edges;
  for (const WeightedLink& e : net.cooccurrence) {
    std::string a = net.knowledge_labels[e.a], b = net.knowledge_labels[e.b];
    if (b < a) std::swap(a, b);
    edges[{a, b}] = e.weight;
  }
  check.expect(edges == std::map<std::pair<std::string, std::string>, std::uint64_t>{
                            {{"app", "screen"}, 2},
                            {{"battery", "screen"}, 1},
                            {{"app", "battery"}, 1},
                            {{"battery", "mode"}, 1}},
               "wkn edge weights differ from {2,1,1,1}");
  detail = check.detail;
  return check.ok;
}

// ---- criterion 3 ------------------------------------------------------

bool criterion_threshold_monotonicity(std::string& detail) {
  Check check;
  std::mt19937_64 rng(300);
  int trials = 0;
  while (trials < 1000 && check.ok) {
    SuperNetwork net = pipeline_network(random_corpus(rng));
    NetworkView view = NetworkView::open(net);
    for (int i = 0; i < 40 && trials < 1000; ++i, ++trials) {
      std::uint64_t q0 = rng() % 8, dq0 = rng() % 6;
      std::uint64_t q1 = rng() % 5, dq1 = rng() % 5;
      std::uint64_t q2 = rng() % 10, dq2 = rng() % 8;

      auto k_low = hot_knowledge(view, q0);
      auto k_high = hot_knowledge(view, q0 + dq0);
      check.expect(
          std::includes(k_low.begin(), k_low.end(), k_high.begin(), k_high.end()),
          "raising q0 grew the hot knowledge set (trial " + std::to_string(trials) + ")");

      auto u_low = core_users(view, k_low, q1);
      auto u_high = core_users(view, k_low, q1 + dq1);
      check.expect(
          std::includes(u_low.begin(), u_low.end(), u_high.begin(), u_high.end()),
          "raising q1 grew the core user set (trial " + std::to_string(trials) + ")");

      std::vector<std::uint32_t> f_low, f_high;
      for (const HotField& h : hot_fields(view, q2)) f_low.push_back(h.field);
      for (const HotField& h : hot_fields(view, q2 + dq2)) f_high.push_back(h.field);
      check.expect(
          std::includes(f_low.begin(), f_low.end(), f_high.begin(), f_high.end()),
          "raising q2 grew the hot field set (trial " + std::to_string(trials) + ")");
    }
  }
  detail = check.detail;
  return check.ok;
}

// ---- criterion 4 ------------------------------------------------------

bool criterion_planted_recovery(std::string& detail) {
  Check check;
  auto start = std::chrono::steady_clock::now();

  PlantedCorpus planted = planted_corpus(9024, 3824, 47, 200, 479);
  TempDir dir("acceptance-planted");
  write_file(dir.file("corpus.json"), corpus_to_json(planted.corpus));

  PipelineConfig config;
  config.corpus_path = dir.file("corpus.json");
  config.sample_rate = 0.30;  // excellent posts all survive sampling
  config.sample_seed = 1;
  config.thresholds.q0 = 200;
  config.out_dir = dir.file("out");
  BuildOutputs build = run_build(config);

  check.expect(build.network.post_labels.size() == 9024,
               "expected 9024 posts, got " + std::to_string(build.network.post_labels.size()));
  check.expect(build.network.user_labels.size() == 3824,
               "expected 3824 users, got " + std::to_string(build.network.user_labels.size()));

  AnalyzeRequest request;
  request.query = "hot-knowledge";
  request.q0 = 200;
  request.out_dir = dir.file("reports");
  AnalyzeOutputs analysis = run_analyze(build.network, request);

  std::set<std::string> got;
  for (const RankedNode& r : analysis.report.knowledge_rankings) {
    got.insert(build.network.label(r.id));
  }
  std::set<std::string> want(planted.hot_words.begin(), planted.hot_words.end());
  check.expect(got.size() == 47,
               "hot-knowledge returned " + std::to_string(got.size()) + " keywords, wanted 47");
  check.expect(got == want, "hot-knowledge set does not equal the planted keywords");

  for (const RankedNode& r : analysis.report.knowledge_rankings) {
    check.expect(r.score >= 200, "a reported hot keyword sits below frequency 200");
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
      std::chrono::steady_clock::now() - start);
  check.expect(elapsed.count() < 60,
               "build + query took " + std::to_string(elapsed.count()) + "s (budget 60s)");
  if (check.ok) {
    detail = "recovered 47/47 in " + std::to_string(elapsed.count()) + "s";
  }
  detail = check.ok ? detail : check.detail;
  return check.ok;
}

// ---- criterion 5 ------------------------------------------------------

bool criterion_determinism(std::string& detail) {
  Check check;
  TempDir dir_a("acceptance-det-a");
  TempDir dir_b("acceptance-det-b");

  for (const TempDir* dir : {&dir_a, &dir_b}) {
    PipelineConfig config = load_pipeline_config(kFixtures + "/c0.cfg");
    config.corpus_path = kFixtures + "/c0.csv";
    config.out_dir = dir->file("out");
    BuildOutputs build = run_build(config);

    AnalyzeRequest request;
    request.query = "hot-knowledge";
    request.out_dir = dir->file("reports");
    run_analyze(build.network, request);
    request.query = "core-users";
    run_analyze(build.network, request);
  }

  for (const char* file : {"out/network.json", "out/manifest.json", "out/keywords.csv",
                           "reports/hot-knowledge.json", "reports/hot-knowledge.graphml",
                           "reports/hot-knowledge.txt", "reports/core-users.json"}) {
    check.expect(read_file(dir_a.file(file)) == read_file(dir_b.file(file)),
                 std::string(file) + " differs between identical runs");
  }
  detail = check.detail;
  return check.ok;
}

// ---- criterion 6 ------------------------------------------------------

bool criterion_clustering_sanity(std::string& detail) {
  Check check;
  // Cliques {0..3} and {4..8}, unit weights, no cross edges.
  Wkn wkn;
  for (std::uint32_t v = 0; v < 9; ++v) {
    wkn.node_ids.push_back(v);
    wkn.node_weight.push_back(1);
  }
  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> oracle_edges;
  auto clique = [&](std::uint32_t lo, std::uint32_t hi) {
    for (std::uint32_t a = lo; a < hi; ++a) {
      for (std::uint32_t b = a + 1; b <= hi; ++b) {
        wkn.edges.push_back({a, b, 1});
        oracle_edges.push_back({a, b, 1.0});
      }
    }
  };
  clique(0, 3);
  clique(4, 8);
  std::sort(wkn.edges.begin(), wkn.edges.end());

  FieldPartition partition = cluster_wkn(wkn, ClusteringConfig{}, 0);

  auto same = [&](std::uint32_t a, std::uint32_t b) {
    return partition.assignment[a] == partition.assignment[b];
  };
  for (std::uint32_t v = 1; v < 4; ++v) check.expect(same(0, v), "clique one split apart");
  for (std::uint32_t v = 5; v < 9; ++v) check.expect(same(4, v), "clique two split apart");
  check.expect(!same(0, 4), "the two cliques merged");
  check.expect(partition.field_count() == 2,
               "expected 2 root fields, got " + std::to_string(partition.field_count()));
  for (std::uint32_t f = 0; f < partition.field_count(); ++f) {
    check.expect(!partition.parent[f].has_value(), "clique fields must be roots");
  }

  // Exhaustive max-modularity over all 21147 partitions of 9 nodes.
  std::vector<std::uint32_t> best = oracle_best_partition(9, oracle_edges);
  double best_q = oracle_modularity(9, oracle_edges, best);
  double got_q = oracle_modularity(9, oracle_edges, partition.assignment);
  check.expect(got_q == best_q, "clustering modularity differs from the exhaustive optimum");
  for (std::uint32_t a = 0; a < 9; ++a) {
    for (std::uint32_t b = a + 1; b < 9; ++b) {
      check.expect((best[a] == best[b]) == same(a, b),
                   "clustering disagrees with the exhaustive optimum grouping");
    }
  }
  detail = check.detail;
  return check.ok;
}

// ---- criterion 7 ------------------------------------------------------

bool criterion_ego_correctness(std::string& detail) {
  Check check;
  std::mt19937_64 rng(700);
  for (int trial = 0; trial < 50 && check.ok; ++trial) {
    SuperNetwork net = pipeline_network(random_corpus(rng));
    NetworkView view = NetworkView::open(net);

    NodeKind kind = kAllNodeKinds[rng() % 4];
    if (net.node_count(kind) == 0) kind = NodeKind::Post;
    NodeId center{kind, static_cast<std::uint32_t>(rng() % net.node_count(kind))};

    RelationSet kinds;
    for (RelationKind k : kAllRelationKinds) {
      if (rng() % 2 == 0) kinds.insert(k);
    }
    if (kinds.empty()) kinds = RelationSet::all();

    for (std::uint32_t radius = 0; radius <= 3; ++radius) {
      SubNetworkReport report = ego_network(view, center, radius, kinds);
      std::set<NodeId> got;
      for (const SubNode& n : report.subnetwork.nodes) got.insert(n.id);
      std::set<NodeId> want = oracle_ego(net, center, radius, kinds);
      check.expect(got == want, "trial " + std::to_string(trial) + ": ego(" + render(center) +
                                    ", r=" + std::to_string(radius) +
                                    ") differs from the reference BFS");
    }
  }
  detail = check.detail;
  return check.ok;
}

struct Criterion {
  int number;
  const char* description;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> criteria = {
      {1, "oracle equivalence on 100 random corpora (exact)", criterion_oracle_equivalence},
      {2, "desk corpus end-to-end hand-derived values (exact)", criterion_desk_corpus},
      {3, "threshold monotonicity, 1000 trials, zero violations",
       criterion_threshold_monotonicity},
      {4, "planted community-scale recovery of 47 hot keywords under 60s",
       criterion_planted_recovery},
      {5, "byte-identical outputs across identical runs", criterion_determinism},
      {6, "2-clique clustering equals exhaustive max-modularity (exact)",
       criterion_clustering_sanity},
      {7, "ego networks equal reference BFS for r in 0..3 (exact)", criterion_ego_correctness},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    if (!selected.empty() && !selected.count(criterion.number)) continue;
    std::string note;
    bool ok = false;
    try {
      ok = criterion.run(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    if (ok) {
      std::printf("[PASS] criterion %d: %s%s%s\n", criterion.number, criterion.description,
                  note.empty() ? "" : " — ", note.c_str());
    } else {
      ++failures;
      std::printf("[FAIL] criterion %d: %s — %s\n", criterion.number, criterion.description,
                  note.c_str());
    }
  }
  return failures;
}
