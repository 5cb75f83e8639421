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
// Microbenchmarks for the batch construction stages, sized around the
// community-scale corpus (thousands of posts, hundreds of keywords).

#include <benchmark/benchmark.h>

#include "synthetic.hpp"
#include "uiksn/analysis.hpp"
#include "uiksn/assemble.hpp"
#include "uiksn/network_view.hpp"
#include "uiksn/pipeline.hpp"
#include "uiksn/serialize.hpp"

using namespace uiksn;

namespace {

testing::PlantedCorpus& corpus_of(std::int64_t posts) {
  static std::map<std::int64_t, testing::PlantedCorpus> cache;
  auto it = cache.find(posts);
  if (it == cache.end()) {
    std::uint32_t authors = static_cast<std::uint32_t>(posts * 424 / 1000 + 1);
    std::uint64_t hot_floor = std::max<std::int64_t>(posts / 45, 4);
    it = cache.emplace(posts, testing::planted_corpus(static_cast<std::uint32_t>(posts), authors,
                                                      47, hot_floor, 7)).first;
  }
  return it->second;
}

SuperNetwork build_network(const Corpus& corpus) {
  KeywordTable table = extract_keywords(corpus, testing::plain_tokenizer());
  Wkn wkn = build_wkn(table);
  FieldPartition partition = cluster_wkn(wkn, ClusteringConfig{}, 0);
  return assemble_uiksn(encode(corpus), table, wkn, partition, {});
}

void BM_ExtractKeywords(benchmark::State& state) {
  const Corpus& corpus = corpus_of(state.range(0)).corpus;
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_keywords(corpus, testing::plain_tokenizer()));
  }
  state.SetItemsProcessed(state.iterations() * corpus.posts.size());
}
BENCHMARK(BM_ExtractKeywords)->Arg(1024)->Arg(4096)->Arg(9024);

void BM_BuildWkn(benchmark::State& state) {
  const Corpus& corpus = corpus_of(state.range(0)).corpus;
  KeywordTable table = extract_keywords(corpus, testing::plain_tokenizer());
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_wkn(table));
  }
  state.SetItemsProcessed(state.iterations() * corpus.posts.size());
}
BENCHMARK(BM_BuildWkn)->Arg(1024)->Arg(4096)->Arg(9024);

void BM_ClusterWkn(benchmark::State& state) {
  const Corpus& corpus = corpus_of(state.range(0)).corpus;
  Wkn wkn = build_wkn(extract_keywords(corpus, testing::plain_tokenizer()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cluster_wkn(wkn, ClusteringConfig{}, 0));
  }
  state.SetItemsProcessed(state.iterations() * wkn.edges.size());
}
BENCHMARK(BM_ClusterWkn)->Arg(1024)->Arg(4096)->Arg(9024);

void BM_FullAssembly(benchmark::State& state) {
  const Corpus& corpus = corpus_of(state.range(0)).corpus;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_network(corpus));
  }
  state.SetItemsProcessed(state.iterations() * corpus.posts.size());
}
BENCHMARK(BM_FullAssembly)->Arg(1024)->Arg(9024);

void BM_OpenView(benchmark::State& state) {
  SuperNetwork net = build_network(corpus_of(state.range(0)).corpus);
  for (auto _ : state) {
    benchmark::DoNotOptimize(NetworkView::open(net));
  }
}
BENCHMARK(BM_OpenView)->Arg(1024)->Arg(9024);

void BM_EgoRadius2(benchmark::State& state) {
  SuperNetwork net = build_network(corpus_of(9024).corpus);
  NetworkView view = NetworkView::open(net);
  RelationSet kinds = default_ego_kinds(NodeKind::Knowledge);
  std::uint32_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ego_network(view, knowledge_node(k), 2, kinds));
    k = (k + 1) % view.knowledge_count();
  }
}
BENCHMARK(BM_EgoRadius2);

void BM_HotKnowledgeReport(benchmark::State& state) {
  SuperNetwork net = build_network(corpus_of(9024).corpus);
  NetworkView view = NetworkView::open(net);
  std::uint64_t q0 = 9024 / 45;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hot_knowledge_report(view, q0));
  }
}
BENCHMARK(BM_HotKnowledgeReport);

void BM_SerializeNetwork(benchmark::State& state) {
  SuperNetwork net = build_network(corpus_of(state.range(0)).corpus);
  for (auto _ : state) {
    benchmark::DoNotOptimize(network_to_json(net));
  }
}
BENCHMARK(BM_SerializeNetwork)->Arg(1024)->Arg(9024);

}  // namespace

BENCHMARK_MAIN();
