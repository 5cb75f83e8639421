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

#include "uiksn/tokenizer.hpp"

#include <fstream>

namespace uiksn {

namespace {

bool is_ascii_alnum(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

// Word characters: ASCII alphanumerics plus every non-ASCII byte, so UTF-8
// sequences stay inside one token without a Unicode table.
bool is_word_byte(unsigned char c) { return is_ascii_alnum(c) || c >= 0x80; }

std::string normalize(std::string_view raw, bool lowercase) {
  std::string out(raw);
  if (lowercase) {
    for (char& c : out) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
  }
  return out;
}

std::size_t codepoint_length(std::string_view token) {
  std::size_t count = 0;
  for (unsigned char c : token) {
    if ((c & 0xc0) != 0x80) ++count;  // count non-continuation bytes
  }
  return count;
}

void split_into(std::string_view text, const TokenizerConfig& config,
                std::vector<std::string>& out) {
  std::size_t start = std::string_view::npos;
  auto is_boundary = [&](unsigned char c) {
    if (config.mode == TokenizerMode::UnicodeWord) return !is_word_byte(c);
    return config.delimiters.find(static_cast<char>(c)) != std::string::npos;
  };
  auto flush = [&](std::size_t end) {
    if (start == std::string_view::npos) return;
    std::string token = normalize(text.substr(start, end - start), config.lowercase);
    start = std::string_view::npos;
    if (codepoint_length(token) < config.min_token_length) return;
    if (config.stopwords.count(token)) return;
    out.push_back(std::move(token));
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (is_boundary(static_cast<unsigned char>(text[i]))) {
      flush(i);
    } else if (start == std::string_view::npos) {
      start = i;
    }
  }
  flush(text.size());
}

}  // namespace

void check_config(const TokenizerConfig& config) {
  if (config.min_keywords_per_post < 1) throw Error("tokenizer: min_keywords_per_post must be >= 1");
  if (config.min_token_length < 1) throw Error("tokenizer: min_token_length must be >= 1");
}

std::vector<std::string> tokenize_text(std::string_view text, const TokenizerConfig& config) {
  check_config(config);
  std::vector<std::string> tokens;
  split_into(text, config, tokens);
  return tokens;
}

std::vector<std::string> tokenize(const RawPost& post, const TokenizerConfig& config) {
  check_config(config);
  std::vector<std::string> tokens;
  split_into(post.title, config, tokens);
  split_into(post.body, config, tokens);
  return tokens;
}

std::unordered_set<std::string> load_stopwords(const std::string& path, bool lowercase) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read stopword file: " + path);
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos || line[begin] == '#') continue;
    std::size_t end = line.find_last_not_of(" \t");
    words.insert(normalize(line.substr(begin, end - begin + 1), lowercase));
  }
  return words;
}

}  // namespace uiksn
