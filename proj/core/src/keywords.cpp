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

#include "uiksn/keywords.hpp"

#include <algorithm>
#include <unordered_map>

namespace uiksn {

KeywordTable extract_keywords(const Corpus& corpus, const TokenizerConfig& config) {
  if (corpus.posts.empty()) throw Error("extract_keywords: corpus has no posts");
  check_config(config);

  KeywordTable table;
  table.per_post.resize(corpus.posts.size());
  std::unordered_map<std::string, std::uint32_t> intern;

  struct Candidate {
    std::string token;
    std::uint32_t count;
    std::uint32_t first_seen;
  };
  std::vector<Candidate> ranked;

  for (std::size_t p = 0; p < corpus.posts.size(); ++p) {
    std::vector<std::string> tokens = tokenize(corpus.posts[p], config);

    // Rank distinct tokens by in-post count, ties by first occurrence.
    ranked.clear();
    std::unordered_map<std::string, std::uint32_t> position;
    for (std::string& token : tokens) {
      auto [it, inserted] = position.emplace(std::move(token),
                                             static_cast<std::uint32_t>(ranked.size()));
      if (inserted) {
        ranked.push_back({it->first, 1, it->second});
      } else {
        ++ranked[it->second].count;
      }
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const Candidate& a, const Candidate& b) {
      if (a.count != b.count) return a.count > b.count;
      return a.first_seen < b.first_seen;
    });
    std::size_t keep = std::min<std::size_t>(ranked.size(), config.keyword_cap());

    std::vector<std::uint32_t>& ids = table.per_post[p];
    ids.reserve(keep);
    for (std::size_t i = 0; i < keep; ++i) {
      auto [it, inserted] =
          intern.emplace(ranked[i].token, static_cast<std::uint32_t>(intern.size()));
      if (inserted) {
        table.keywords.push_back(ranked[i].token);
        table.frequency.push_back(0);
      }
      ids.push_back(it->second);
    }
    std::sort(ids.begin(), ids.end());
    for (std::uint32_t id : ids) ++table.frequency[id];
  }
  return table;
}

std::vector<std::uint32_t> select_high_frequency(const KeywordTable& table, std::uint64_t q0) {
  if (q0 < 1) throw Error("select_high_frequency: q0 must be >= 1");
  std::vector<std::uint32_t> hot;
  for (std::uint32_t k = 0; k < table.keyword_count(); ++k) {
    if (table.frequency[k] >= q0) hot.push_back(k);
  }
  std::sort(hot.begin(), hot.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (table.frequency[a] != table.frequency[b]) return table.frequency[a] > table.frequency[b];
    return table.keywords[a] < table.keywords[b];
  });
  return hot;
}

std::string keyword_table_csv(const KeywordTable& table) {
  std::string out = "keyword,frequency\n";
  std::vector<std::uint32_t> order;
  if (table.keyword_count() > 0) order = select_high_frequency(table, 1);
  for (std::uint32_t k : order) {
    // Keywords never contain commas or quotes (tokenizer output), written raw.
    out += table.keywords[k];
    out += ',';
    out += std::to_string(table.frequency[k]);
    out += '\n';
  }
  return out;
}

}  // namespace uiksn
