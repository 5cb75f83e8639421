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

#include <doctest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "synthetic.hpp"
#include "uiksn/assemble.hpp"
#include "uiksn/network_view.hpp"
#include "uiksn/validate.hpp"

using namespace uiksn;

namespace {

const std::string kFixtures = UIKSN_FIXTURE_DIR;

bool has_violation(const std::vector<Violation>& violations, const std::string& invariant) {
  for (const Violation& v : violations) {
    if (v.invariant == invariant) return true;
  }
  return false;
}

SuperNetwork pipeline_network(std::mt19937_64& rng) {
  Corpus corpus = testing::random_corpus(rng);
  KeywordTable table = extract_keywords(corpus, testing::plain_tokenizer());
  Wkn wkn = build_wkn(table);
  FieldPartition partition = cluster_wkn(wkn, ClusteringConfig{}, 0);
  return assemble_uiksn(encode(corpus), table, wkn, partition, {});
}

}  // namespace

TEST_CASE("an empty network is vacuously valid") { CHECK(validate(SuperNetwork{}).empty()); }

TEST_CASE("a post with two authors violates authorship functionality") {
  SuperNetwork net;
  net.user_labels = {"a", "b"};
  net.post_labels = {"p"};
  net.user_weight = {0, 0};
  net.authorship = {{0, 0}, {0, 1}};
  std::vector<Violation> violations = validate(net);
  REQUIRE_FALSE(violations.empty());
  CHECK(has_violation(violations, "authorship.functional"));
  CHECK(violations[0].detail.find("P0") != std::string::npos);
}

TEST_CASE("validate names each broken invariant") {
  testing::C0Build c0 = testing::build_c0(kFixtures);
  REQUIRE(validate(c0.net).empty());

  SUBCASE("missing author") {
    SuperNetwork net = c0.net;
    net.authorship.erase(net.authorship.begin());
    CHECK(has_violation(validate(net), "authorship.total"));
  }
  SUBCASE("knowledge in two fields") {
    SuperNetwork net = c0.net;
    net.membership.push_back({0, 1});
    std::sort(net.membership.begin(), net.membership.end());
    CHECK(has_violation(validate(net), "membership.functional"));
  }
  SUBCASE("hierarchy cycle") {
    SuperNetwork net = c0.net;
    net.hierarchy = {{0, 1}, {1, 0}};
    net.field_weight = {4, 7};  // keep aggregation from also firing first
    CHECK(has_violation(validate(net), "hierarchy.acyclic"));
  }
  SUBCASE("cooccurrence self loop") {
    SuperNetwork net = c0.net;
    net.cooccurrence.push_back({3, 3, 1});
    CHECK(has_violation(validate(net), "cooccurrence.self-loop"));
  }
  SUBCASE("cooccurrence weight above min(q, q)") {
    SuperNetwork net = c0.net;
    net.cooccurrence[0].weight = 99;
    CHECK(has_violation(validate(net), "cooccurrence.weight-bound"));
  }
  SUBCASE("knowledge weight drifting from containment degree") {
    SuperNetwork net = c0.net;
    net.knowledge_weight[0] = 7;
    std::vector<Violation> violations = validate(net);
    CHECK(has_violation(violations, "knowledge-weight.consistent"));
  }
  SUBCASE("user weight drifting from incidence count") {
    SuperNetwork net = c0.net;
    net.user_weight[0] = 1;
    CHECK(has_violation(validate(net), "user-weight.consistent"));
  }
  SUBCASE("field weight drifting from member aggregation") {
    SuperNetwork net = c0.net;
    net.field_weight[1] = 1;
    CHECK(has_violation(validate(net), "field-weight.consistent"));
  }
  SUBCASE("memberless childless field") {
    SuperNetwork net = c0.net;
    net.field_labels.push_back("F2");
    net.field_weight.push_back(0);
    CHECK(has_violation(validate(net), "field.non-empty"));
  }
  SUBCASE("edge referencing a missing node") {
    SuperNetwork net = c0.net;
    net.containment.push_back({2, 99});
    CHECK(has_violation(validate(net), "structure.range"));
  }
}

TEST_CASE("pipeline soundness: every built network validates clean") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    SuperNetwork net = pipeline_network(rng);
    CHECK(validate(net).empty());
  }
}

TEST_CASE("weight totals are conserved across the containment relation") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 25; ++trial) {
    SuperNetwork net = pipeline_network(rng);
    std::uint64_t user_total = 0, knowledge_total = 0;
    for (std::uint64_t q : net.user_weight) user_total += q;
    for (std::uint64_t q : net.knowledge_weight) {
      CHECK(q >= 1);
      knowledge_total += q;
    }
    CHECK(user_total == net.containment.size());
    CHECK(knowledge_total == net.containment.size());
    for (const WeightedLink& e : net.cooccurrence) CHECK(e.weight >= 1);
    for (std::uint64_t q : net.field_weight) CHECK(q >= 1);
  }
}

TEST_CASE("c0 derived relations match the hand oracle") {
  testing::C0Build c0 = testing::build_c0(kFixtures);
  DerivedRelations derived = compose_derived(c0.net);

  // user_knowledge(alice, screen) = 2 via posts c0-1 and c0-2.
  // Keyword ids: screen 0, battery 1, app 2, mode 3. Fields: F0 {screen,app}.
  using Entry = std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>;
  CHECK(derived.user_knowledge ==
        std::vector<Entry>{{0, 0, 2}, {0, 1, 1}, {0, 2, 2}, {1, 1, 1}, {1, 3, 1}});
  CHECK(derived.user_field == std::vector<Entry>{{0, 0, 4}, {0, 1, 1}, {1, 1, 2}});
  // post_field(c0-3, field-of(battery)) = 1 is the (2, 1) entry.
  CHECK(derived.post_field == std::vector<Link>{{0, 0}, {0, 1}, {1, 0}, {2, 1}});
}

TEST_CASE("compose_derived rejects invalid networks with the violations") {
  SuperNetwork net;
  net.post_labels = {"p"};  // post with no author
  CHECK_THROWS_AS(compose_derived(net), ValidationError);
  try {
    compose_derived(net);
  } catch (const ValidationError& e) {
    REQUIRE_FALSE(e.violations().empty());
    CHECK(e.violations()[0].invariant == "authorship.total");
  }
}

TEST_CASE("derived relations are empty without containment edges") {
  Corpus corpus;
  RawPost post;
  post.external_id = "p0";
  post.author_name = "a";
  post.posted_at = "2015-01-01";
  corpus.posts.push_back(post);
  KeywordTable table;
  table.per_post.resize(1);
  SuperNetwork net = assemble_uiksn(encode(corpus), table, build_wkn(table), FieldPartition{}, {});
  DerivedRelations derived = compose_derived(net);
  CHECK(derived.post_field.empty());
  CHECK(derived.user_knowledge.empty());
  CHECK(derived.user_field.empty());
}

TEST_CASE("derived relations equal brute-force enumeration on random corpora") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    Corpus corpus = testing::random_corpus(rng);
    KeywordTable table = extract_keywords(corpus, testing::plain_tokenizer());
    Wkn wkn = build_wkn(table);
    FieldPartition partition = cluster_wkn(wkn, ClusteringConfig{}, 0);
    SuperNetwork net = assemble_uiksn(encode(corpus), table, wkn, partition, {});
    DerivedRelations derived = compose_derived(net);

    auto expected = testing::oracle_user_knowledge(testing::truth_of(corpus));
    std::map<std::pair<std::string, std::string>, std::uint64_t> got;
    for (const auto& [u, k, w] : derived.user_knowledge) {
      got[{net.user_labels[u], net.knowledge_labels[k]}] = w;
    }
    CHECK(got == expected);
  }
}

TEST_CASE("induced subnetwork on c0") {
  testing::C0Build c0 = testing::build_c0(kFixtures);

  SUBCASE("all nodes reproduce every edge") {
    SubNetwork sub = full_subnetwork(c0.net);
    CHECK(sub.nodes.size() == 11);  // 2 users + 3 posts + 4 knowledge + 2 fields
    CHECK(sub.edges.size() == c0.net.authorship.size() + c0.net.containment.size() +
                                  c0.net.membership.size() + c0.net.hierarchy.size() +
                                  c0.net.cooccurrence.size());
  }
  SUBCASE("empty subset gives an empty subnetwork") {
    SubNetwork sub = induced_subnetwork(c0.net, {});
    CHECK(sub.nodes.empty());
    CHECK(sub.edges.empty());
  }
  SUBCASE("the {alice, c0-1, screen} triangle keeps exactly two edges") {
    std::vector<NodeId> subset = {user_node(0), post_node(0), knowledge_node(0)};
    SubNetwork sub = induced_subnetwork(c0.net, subset, {{"query", "test"}});
    REQUIRE(sub.edges.size() == 2);
    CHECK(sub.edges[0] == SubEdge{RelationKind::Authorship, post_node(0), user_node(0), 1});
    CHECK(sub.edges[1] == SubEdge{RelationKind::Containment, post_node(0), knowledge_node(0), 1});
    CHECK(sub.provenance.at("query") == "test");
  }
  SUBCASE("unknown node ids are named") {
    std::vector<NodeId> subset = {user_node(9)};
    CHECK_THROWS_WITH_AS(induced_subnetwork(c0.net, subset), doctest::Contains("U9"), Error);
  }
}

TEST_CASE("induced subnetwork is monotone in the node subset") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    SuperNetwork net = pipeline_network(rng);
    std::vector<NodeId> small, large;
    for (NodeKind kind : kAllNodeKinds) {
      for (std::uint32_t i = 0; i < net.node_count(kind); ++i) {
        std::uint64_t roll = rng() % 4;
        if (roll == 0) small.push_back({kind, i});
        if (roll <= 1) large.push_back({kind, i});  // small is not forced inside large
      }
    }
    // Make the inclusion S1 subseteq S2 real.
    large.insert(large.end(), small.begin(), small.end());
    SubNetwork s1 = induced_subnetwork(net, small);
    SubNetwork s2 = induced_subnetwork(net, large);
    std::set<SubEdge> edges2(s2.edges.begin(), s2.edges.end());
    for (const SubEdge& e : s1.edges) CHECK(edges2.count(e) == 1);
  }
}

TEST_CASE("rebuilding from the same inputs is bit-stable") {
  std::mt19937_64 rng_a(71), rng_b(71);
  SuperNetwork a = pipeline_network(rng_a);
  SuperNetwork b = pipeline_network(rng_b);
  CHECK(a == b);
}
