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

#ifndef UIKSN_TESTS_SYNTHETIC_HPP
#define UIKSN_TESTS_SYNTHETIC_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "uiksn/clustering.hpp"
#include "uiksn/corpus.hpp"
#include "uiksn/keywords.hpp"
#include "uiksn/super_network.hpp"
#include "uiksn/tokenizer.hpp"
#include "uiksn/wkn.hpp"

namespace uiksn::testing {

/// Deterministic RAII scratch directory under the system temp dir.
class TempDir {
 public:
  explicit TempDir(const std::string& tag);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::string& path() const { return path_; }
  std::string file(const std::string& name) const;

 private:
  std::string path_;
};

struct RandomCorpusOptions {
  std::uint32_t max_posts = 50;
  std::uint32_t max_keywords_per_post = 10;
  std::uint32_t vocabulary = 20;
  std::uint32_t authors = 8;
};

/// Random corpus whose bodies are space-joined lowercase keywords, so tests
/// can recover the ground truth by splitting on spaces.
Corpus random_corpus(std::mt19937_64& rng, const RandomCorpusOptions& options = {});

/// Tokenizer matching the random/planted corpora: no stopwords, cap 10,
/// tokens at least one character.
TokenizerConfig plain_tokenizer();

struct PlantedCorpus {
  Corpus corpus;
  std::vector<std::string> hot_words;  // exactly the words with doc freq >= threshold
};

/// Community-scale synthetic corpus: `posts` posts over `authors` authors
/// with exactly `hot_words` planted keywords of document frequency >=
/// `hot_floor` while every other word stays strictly below it.
PlantedCorpus planted_corpus(std::uint32_t posts, std::uint32_t authors, std::uint32_t hot_words,
                             std::uint64_t hot_floor, std::uint64_t seed);

/// The desk corpus built through every pipeline stage. Frozen expectations:
///   keywords screen/battery/app/mode with frequencies 2/2/2/1,
///   WKN weights {(screen,app):2, (screen,battery):1, (app,battery):1,
///   (battery,mode):1}, user weights alice 5 / bob 2, two fields
///   F0 = {screen, app}, F1 = {battery, mode}.
struct C0Build {
  Corpus corpus;
  KeywordTable table;
  Wkn wkn;
  FieldPartition partition;
  SuperNetwork net;
};

TokenizerConfig c0_tokenizer();
C0Build build_c0(const std::string& fixture_dir);

/// Corpus rendered in the ingest module's JSON schema.
std::string corpus_to_json(const Corpus& corpus);

}  // namespace uiksn::testing

#endif  // UIKSN_TESTS_SYNTHETIC_HPP
