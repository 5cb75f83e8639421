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

#ifndef UIKSN_KEYWORDS_HPP
#define UIKSN_KEYWORDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "uiksn/corpus.hpp"
#include "uiksn/tokenizer.hpp"

namespace uiksn {

/// Per-post keyword sets plus document frequencies. Keywords are interned:
/// keyword id -> surface string in `keywords`, ids assigned in first-
/// appearance order over the corpus scan. per_post holds sorted, duplicate-
/// free id lists (containment is binary); frequency[k] counts the posts whose
/// set contains k, so every interned keyword has frequency >= 1.
struct KeywordTable {
  std::vector<std::string> keywords;
  std::vector<std::vector<std::uint32_t>> per_post;
  std::vector<std::uint64_t> frequency;

  std::uint32_t keyword_count() const { return static_cast<std::uint32_t>(keywords.size()); }
  std::uint32_t post_count() const { return static_cast<std::uint32_t>(per_post.size()); }

  friend bool operator==(const KeywordTable&, const KeywordTable&) = default;
};

/// Mines keywords for every post: distinct tokens ranked by in-post count
/// (ties by first occurrence), truncated to the configured cap; posts with
/// fewer distinct tokens keep them all. Frequencies are document frequencies.
/// Throws Error on an empty corpus.
KeywordTable extract_keywords(const Corpus& corpus, const TokenizerConfig& config);

/// The hot keyword set {k : frequency(k) >= q0}, sorted by descending
/// frequency then ascending keyword string. q0 must be >= 1; an empty result
/// is fine.
std::vector<std::uint32_t> select_high_frequency(const KeywordTable& table, std::uint64_t q0);

/// CSV export of the frequency table (keyword, frequency), same ordering as
/// select_high_frequency over the whole table.
std::string keyword_table_csv(const KeywordTable& table);

}  // namespace uiksn

#endif  // UIKSN_KEYWORDS_HPP
