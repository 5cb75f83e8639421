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

#include "synthetic.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <set>

#include "uiksn/assemble.hpp"
#include "uiksn/errors.hpp"

namespace uiksn::testing {

namespace fs = std::filesystem;

TempDir::TempDir(const std::string& tag) {
  static std::atomic<std::uint64_t> counter{0};
  fs::path base = fs::temp_directory_path() / "uiksn-tests";
  fs::path dir = base / (tag + "-" + std::to_string(::getpid()) + "-" +
                         std::to_string(counter.fetch_add(1)));
  fs::create_directories(dir);
  path_ = dir.string();
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

std::string TempDir::file(const std::string& name) const {
  return (fs::path(path_) / name).string();
}

namespace {

std::string two_digits(std::uint32_t value) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%02u", value);
  return buf;
}

// Uniform integer in [0, bound) from the raw 64-bit stream; deterministic
// across standard libraries (std::uniform_int_distribution is not).
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

TokenizerConfig plain_tokenizer() {
  TokenizerConfig config;
  config.min_token_length = 1;
  config.lowercase = true;
  config.min_keywords_per_post = 5;
  config.max_keywords_per_post = 10;
  return config;
}

Corpus random_corpus(std::mt19937_64& rng, const RandomCorpusOptions& options) {
  std::vector<std::string> vocab;
  for (std::uint32_t w = 0; w < options.vocabulary; ++w) vocab.push_back("kw" + two_digits(w));

  Corpus corpus;
  std::uint32_t posts = 1 + static_cast<std::uint32_t>(draw(rng, options.max_posts));
  for (std::uint32_t p = 0; p < posts; ++p) {
    RawPost post;
    post.external_id = "p" + std::to_string(p);
    post.author_name = "a" + std::to_string(draw(rng, options.authors));
    post.posted_at = "2015-04-01T00:00:00Z";
    post.is_excellent = draw(rng, 2) == 0;
    post.review_count = static_cast<std::uint32_t>(draw(rng, 20));
    post.reply_count = static_cast<std::uint32_t>(draw(rng, 20));

    std::uint32_t count =
        static_cast<std::uint32_t>(draw(rng, options.max_keywords_per_post + 1));
    std::set<std::string> words;
    while (words.size() < count) words.insert(vocab[draw(rng, vocab.size())]);
    std::string body;
    for (const std::string& w : words) {
      if (!body.empty()) body += ' ';
      body += w;
      if (draw(rng, 4) == 0) body += ' ' + w;  // repeats exercise in-post ranking
    }
    post.body = body;
    corpus.posts.push_back(std::move(post));
  }
  return corpus;
}

PlantedCorpus planted_corpus(std::uint32_t posts, std::uint32_t authors, std::uint32_t hot_words,
                             std::uint64_t hot_floor, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PlantedCorpus out;

  // Per-post keyword slot counts cycle 5..10.
  std::vector<std::uint32_t> slots(posts);
  std::uint64_t total_slots = 0;
  for (std::uint32_t p = 0; p < posts; ++p) {
    slots[p] = 5 + (p % 6);
    total_slots += slots[p];
  }

  // Hot words get document-frequency targets comfortably above the floor
  // (the dealing step below may drop a handful of instances near the end of
  // the deck); everything else stays strictly below it.
  std::vector<std::string> words;
  std::vector<std::uint64_t> target;
  std::uint64_t hot_total = 0;
  for (std::uint32_t i = 0; i < hot_words; ++i) {
    words.push_back("hotword" + std::to_string(i));
    std::uint64_t t = hot_floor + 5 + (i * 37) % (hot_floor * 3);
    target.push_back(t);
    hot_total += t;
  }
  out.hot_words = words;
  if (hot_total > total_slots) throw Error("planted_corpus: too many hot instances");

  if (hot_floor < 2) throw Error("planted_corpus: hot_floor must be >= 2");
  std::uint64_t filler_total = total_slots - hot_total;
  std::uint64_t filler_cap = std::max<std::uint64_t>(1, hot_floor * 4 / 5);
  std::uint64_t filler_count = (filler_total + filler_cap - 1) / filler_cap;
  for (std::uint64_t j = 0; j < filler_count; ++j) {
    words.push_back("filler" + std::to_string(j));
    std::uint64_t base = filler_total / filler_count + (j < filler_total % filler_count ? 1 : 0);
    target.push_back(base);
  }

  // Deck of word instances, one per (word, target) unit, shuffled with an
  // explicit Fisher-Yates so the deal replays on any platform.
  std::vector<std::uint32_t> deck;
  deck.reserve(total_slots);
  for (std::uint32_t w = 0; w < words.size(); ++w) {
    for (std::uint64_t t = 0; t < target[w]; ++t) deck.push_back(w);
  }
  for (std::size_t i = deck.size(); i > 1; --i) {
    std::swap(deck[i - 1], deck[draw(rng, i)]);
  }

  std::size_t idx = 0;
  for (std::uint32_t p = 0; p < posts; ++p) {
    RawPost post;
    post.external_id = "post" + std::to_string(p);
    post.author_name =
        "author" + std::to_string(p < authors ? p : draw(rng, authors));
    post.posted_at = "2015-04-29T00:00:00Z";
    post.is_excellent = true;

    std::set<std::uint32_t> hand;
    std::string body;
    for (std::uint32_t s = 0; s < slots[p] && idx < deck.size(); ++s) {
      // Skip forward past duplicates of words already in this post.
      std::size_t probe = idx;
      while (probe < deck.size() && hand.count(deck[probe])) ++probe;
      if (probe == deck.size()) break;  // tail is all duplicates; post stays short
      std::swap(deck[idx], deck[probe]);
      hand.insert(deck[idx]);
      if (!body.empty()) body += ' ';
      body += words[deck[idx]];
      ++idx;
    }
    post.body = body;
    out.corpus.posts.push_back(std::move(post));
  }
  return out;
}

TokenizerConfig c0_tokenizer() {
  TokenizerConfig config;
  config.lowercase = true;
  config.min_token_length = 2;
  return config;
}

std::string corpus_to_json(const Corpus& corpus) {
  auto escape = [](const std::string& text) {
    std::string out;
    for (char c : text) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out;
  };
  std::string out = "[\n";
  bool first = true;
  for (const RawPost& post : corpus.posts) {
    if (!first) out += ",\n";
    first = false;
    out += "{\"id\":\"" + escape(post.external_id) + "\",\"author\":\"" +
           escape(post.author_name) + "\",\"title\":\"" + escape(post.title) + "\",\"body\":\"" +
           escape(post.body) + "\",\"posted_at\":\"" + escape(post.posted_at) +
           "\",\"excellent\":" + (post.is_excellent ? "true" : "false") +
           ",\"reviews\":" + std::to_string(post.review_count) +
           ",\"replies\":" + std::to_string(post.reply_count) + "}";
  }
  out += "\n]\n";
  return out;
}

C0Build build_c0(const std::string& fixture_dir) {
  C0Build c0;
  c0.corpus = load_corpus(fixture_dir + "/c0.csv", CorpusFormat::Csv).corpus;
  c0.table = extract_keywords(c0.corpus, c0_tokenizer());
  c0.wkn = build_wkn(c0.table);
  c0.partition = cluster_wkn(c0.wkn, ClusteringConfig{}, 7);
  c0.net = assemble_uiksn(encode(c0.corpus), c0.table, c0.wkn, c0.partition,
                          {{"corpus", "c0"}, {"q0", "2"}, {"q1", "2"}, {"q2", "0"}});
  return c0;
}

}  // namespace uiksn::testing
