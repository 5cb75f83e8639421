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

#include "uiksn/corpus.hpp"

#include <charconv>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace uiksn {

namespace {

using nlohmann::json;

constexpr const char* kColumns[] = {"id",        "author",    "title",  "body",
                                    "posted_at", "excellent", "reviews", "replies"};

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Accepts YYYY-MM-DD optionally followed by "T" HH:MM[:SS[.frac]] and an
// optional "Z" or +-HH:MM offset. Field ranges are checked, leap rules not.
bool valid_timestamp(std::string_view s) {
  auto two = [&](std::size_t pos, int lo, int hi) {
    if (pos + 2 > s.size() || !is_digits(s.substr(pos, 2))) return false;
    int v = (s[pos] - '0') * 10 + (s[pos + 1] - '0');
    return v >= lo && v <= hi;
  };
  if (s.size() < 10) return false;
  if (!is_digits(s.substr(0, 4))) return false;
  if (s[4] != '-' || s[7] != '-') return false;
  if (!two(5, 1, 12) || !two(8, 1, 31)) return false;
  if (s.size() == 10) return true;
  if (s[10] != 'T' && s[10] != ' ') return false;
  std::size_t p = 11;
  if (!two(p, 0, 23) || p + 2 >= s.size() || s[p + 2] != ':') return false;
  p += 3;
  if (!two(p, 0, 59)) return false;
  p += 2;
  if (p < s.size() && s[p] == ':') {
    ++p;
    if (!two(p, 0, 60)) return false;
    p += 2;
    if (p < s.size() && s[p] == '.') {
      ++p;
      std::size_t start = p;
      while (p < s.size() && s[p] >= '0' && s[p] <= '9') ++p;
      if (p == start) return false;
    }
  }
  if (p == s.size()) return true;
  if (s[p] == 'Z') return p + 1 == s.size();
  if (s[p] != '+' && s[p] != '-') return false;
  ++p;
  return p + 5 == s.size() && two(p, 0, 23) && s[p + 2] == ':' && two(p + 3, 0, 59);
}

bool parse_count(std::string_view text, std::uint32_t& out) {
  if (!is_digits(text)) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

bool parse_bool(std::string_view text, bool& out) {
  if (text == "true" || text == "1") {
    out = true;
    return true;
  }
  if (text == "false" || text == "0") {
    out = false;
    return true;
  }
  return false;
}

// Returns empty string on success, otherwise the reason.
std::string check_post(RawPost& post, std::unordered_set<std::string>& seen_ids) {
  if (post.external_id.empty()) return "empty 'id'";
  if (post.author_name.empty()) return "empty 'author'";
  if (!valid_timestamp(post.posted_at)) return "unparseable 'posted_at': " + post.posted_at;
  if (!seen_ids.insert(post.external_id).second) return "duplicate 'id': " + post.external_id;
  return {};
}

LoadResult finish(LoadResult result, std::uint64_t total_rows) {
  if (total_rows > 0 && result.corpus.posts.empty()) {
    throw NoParsableRowsError(
        "zero parsable rows: all " + std::to_string(total_rows) + " rows were rejected",
        result.rejects);
  }
  return result;
}

// ---- RFC-4180 CSV reading ----

struct CsvReader {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }

  // Reads one record; supports quoted fields with "" escapes and embedded
  // newlines. Returns false at end of input.
  bool next(std::vector<std::string>& fields, std::string& error) {
    fields.clear();
    error.clear();
    if (done()) return false;
    std::string field;
    bool in_quotes = false;
    bool quoted_field = false;
    while (true) {
      if (pos >= text.size()) {
        if (in_quotes) {
          error = "unterminated quoted field";
          return true;
        }
        fields.push_back(std::move(field));
        return true;
      }
      char c = text[pos];
      if (in_quotes) {
        if (c == '"') {
          if (pos + 1 < text.size() && text[pos + 1] == '"') {
            field += '"';
            pos += 2;
          } else {
            in_quotes = false;
            ++pos;
          }
        } else {
          field += c;
          ++pos;
        }
        continue;
      }
      if (c == '"' && field.empty() && !quoted_field) {
        in_quotes = true;
        quoted_field = true;
        ++pos;
      } else if (c == ',') {
        fields.push_back(std::move(field));
        field.clear();
        quoted_field = false;
        ++pos;
      } else if (c == '\r' && pos + 1 < text.size() && text[pos + 1] == '\n') {
        fields.push_back(std::move(field));
        pos += 2;
        return true;
      } else if (c == '\n') {
        fields.push_back(std::move(field));
        ++pos;
        return true;
      } else {
        field += c;
        ++pos;
      }
    }
  }
};

}  // namespace

LoadResult parse_corpus_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("corpus json: ") + e.what());
  }
  if (!doc.is_array()) throw Error("corpus json: top-level value must be an array of posts");

  LoadResult result;
  result.corpus.source_meta["format"] = "json";
  std::unordered_set<std::string> seen_ids;
  std::uint64_t row = 0;
  for (const json& item : doc) {
    ++row;
    auto reject = [&](const std::string& reason) {
      result.rejects.push_back({row, reason});
    };
    if (!item.is_object()) {
      reject("row is not an object");
      continue;
    }
    std::string missing;
    for (const char* key : kColumns) {
      if (!item.contains(key)) {
        missing = key;
        break;
      }
    }
    if (!missing.empty()) {
      reject("missing key '" + missing + "'");
      continue;
    }
    RawPost post;
    try {
      post.external_id = item.at("id").get<std::string>();
      post.author_name = item.at("author").get<std::string>();
      post.title = item.at("title").get<std::string>();
      post.body = item.at("body").get<std::string>();
      post.posted_at = item.at("posted_at").get<std::string>();
      post.is_excellent = item.at("excellent").get<bool>();
      if (!item.at("reviews").is_number_unsigned() || !item.at("replies").is_number_unsigned()) {
        reject("'reviews'/'replies' must be non-negative integers");
        continue;
      }
      post.review_count = item.at("reviews").get<std::uint32_t>();
      post.reply_count = item.at("replies").get<std::uint32_t>();
    } catch (const json::exception& e) {
      reject(std::string("bad value type: ") + e.what());
      continue;
    }
    if (std::string reason = check_post(post, seen_ids); !reason.empty()) {
      reject(reason);
      continue;
    }
    result.corpus.posts.push_back(std::move(post));
  }
  return finish(std::move(result), row);
}

LoadResult parse_corpus_csv(const std::string& text) {
  CsvReader reader{text};
  std::vector<std::string> fields;
  std::string error;

  if (!reader.next(fields, error) || (fields.size() == 1 && fields[0].empty())) {
    // No header at all: treat as empty-but-valid only when the file is empty.
    if (text.empty()) return {};
    throw Error("corpus csv: missing header row");
  }
  if (!error.empty()) throw Error("corpus csv: " + error + " in header");

  std::unordered_map<std::string, std::size_t> column;
  for (std::size_t i = 0; i < fields.size(); ++i) column.emplace(fields[i], i);
  for (const char* name : kColumns) {
    if (!column.count(name)) throw Error(std::string("corpus csv: missing column '") + name + "'");
  }

  LoadResult result;
  result.corpus.source_meta["format"] = "csv";
  std::unordered_set<std::string> seen_ids;
  std::uint64_t row = 0;
  while (reader.next(fields, error)) {
    if (fields.size() == 1 && fields[0].empty()) continue;  // trailing blank line
    ++row;
    auto reject = [&](const std::string& reason) {
      result.rejects.push_back({row, reason});
    };
    if (!error.empty()) {
      reject(error);
      continue;
    }
    if (fields.size() < column.size()) {
      reject("expected " + std::to_string(column.size()) + " fields, got " +
             std::to_string(fields.size()));
      continue;
    }
    RawPost post;
    post.external_id = fields[column["id"]];
    post.author_name = fields[column["author"]];
    post.title = fields[column["title"]];
    post.body = fields[column["body"]];
    post.posted_at = fields[column["posted_at"]];
    if (!parse_bool(fields[column["excellent"]], post.is_excellent)) {
      reject("bad 'excellent' value: " + fields[column["excellent"]]);
      continue;
    }
    if (!parse_count(fields[column["reviews"]], post.review_count)) {
      reject("bad 'reviews' value: " + fields[column["reviews"]]);
      continue;
    }
    if (!parse_count(fields[column["replies"]], post.reply_count)) {
      reject("bad 'replies' value: " + fields[column["replies"]]);
      continue;
    }
    if (std::string reason = check_post(post, seen_ids); !reason.empty()) {
      reject(reason);
      continue;
    }
    result.corpus.posts.push_back(std::move(post));
  }
  return finish(std::move(result), row);
}

LoadResult load_corpus(const std::string& path, CorpusFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read corpus file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  LoadResult result = format == CorpusFormat::Json ? parse_corpus_json(buffer.str())
                                                   : parse_corpus_csv(buffer.str());
  result.corpus.source_meta["source"] = path;
  return result;
}

std::string rejects_to_jsonl(const std::vector<RejectedRow>& rejects) {
  std::string out;
  for (const RejectedRow& r : rejects) {
    json line = {{"row", r.row}, {"reason", r.reason}};
    out += line.dump();
    out += '\n';
  }
  return out;
}

Corpus sample_by_quality(const Corpus& corpus, double non_excellent_rate, std::uint64_t seed) {
  if (!(non_excellent_rate >= 0.0 && non_excellent_rate <= 1.0)) {
    throw Error("sample rate must be in [0, 1], got " + std::to_string(non_excellent_rate));
  }
  std::mt19937_64 rng(seed);
  Corpus out;
  out.source_meta = corpus.source_meta;
  out.source_meta["sample_rate"] = std::to_string(non_excellent_rate);
  out.source_meta["sample_seed"] = std::to_string(seed);
  for (const RawPost& post : corpus.posts) {
    if (post.is_excellent) {
      out.posts.push_back(post);
      continue;
    }
    // Top 53 bits -> uniform double in [0, 1); independent of any library
    // distribution so selections replay across standard libraries.
    double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (draw < non_excellent_rate) out.posts.push_back(post);
  }
  return out;
}

EncodedCorpus encode(const Corpus& corpus) {
  if (corpus.posts.empty()) throw Error("encode: corpus has no posts");
  EncodedCorpus encoded;
  std::unordered_map<std::string, std::uint32_t> user_index;
  encoded.post_labels.reserve(corpus.posts.size());
  encoded.post_author.reserve(corpus.posts.size());
  for (const RawPost& post : corpus.posts) {
    auto [it, inserted] =
        user_index.emplace(post.author_name, static_cast<std::uint32_t>(user_index.size()));
    if (inserted) encoded.user_labels.push_back(post.author_name);
    encoded.post_labels.push_back(post.external_id);
    encoded.post_author.push_back(it->second);
  }
  return encoded;
}

}  // namespace uiksn
