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

#ifndef UIKSN_TOKENIZER_HPP
#define UIKSN_TOKENIZER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "uiksn/corpus.hpp"

namespace uiksn {

enum class TokenizerMode {
  UnicodeWord,   // tokens are maximal runs of alphanumerics / non-ASCII bytes
  DelimiterSet,  // tokens split on an explicit delimiter character set
};

/// Pluggable tokenizer configuration. The default is a plain surface-word
/// splitter; anything smarter (segmentation, stemming) plugs in behind the
/// same token-list contract.
struct TokenizerConfig {
  TokenizerMode mode = TokenizerMode::UnicodeWord;
  std::string delimiters = " \t\r\n";  // DelimiterSet mode only
  std::unordered_set<std::string> stopwords;
  std::uint32_t min_token_length = 1;  // in code points, not bytes
  bool lowercase = true;               // ASCII case folding
  std::uint32_t min_keywords_per_post = 5;
  std::uint32_t max_keywords_per_post = 10;

  /// Per-post keyword cap actually applied: a post keeps at most
  /// max(min_keywords_per_post, max_keywords_per_post) distinct tokens,
  /// fewer only when it does not have that many.
  std::uint32_t keyword_cap() const {
    return std::max(min_keywords_per_post, max_keywords_per_post);
  }
};

/// Throws Error when min_keywords_per_post or min_token_length is zero.
void check_config(const TokenizerConfig& config);

/// Tokenizes title + body: split per mode, normalize case, drop stopwords and
/// tokens shorter than min_token_length. Order and repetitions preserved.
std::vector<std::string> tokenize(const RawPost& post, const TokenizerConfig& config);

std::vector<std::string> tokenize_text(std::string_view text, const TokenizerConfig& config);

/// Loads a stopword list: plain text, one word per line, '#' comments and
/// blank lines ignored. Words are normalized the same way tokens are.
std::unordered_set<std::string> load_stopwords(const std::string& path, bool lowercase = true);

}  // namespace uiksn

#endif  // UIKSN_TOKENIZER_HPP
