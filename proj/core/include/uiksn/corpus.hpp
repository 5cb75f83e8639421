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

#ifndef UIKSN_CORPUS_HPP
#define UIKSN_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "uiksn/errors.hpp"
#include "uiksn/super_network.hpp"

namespace uiksn {

/// One forum post as ingested: external identity, author, text, timestamp,
/// the community's quality flag and the engagement counters.
struct RawPost {
  std::string external_id;
  std::string author_name;
  std::string title;
  std::string body;
  std::string posted_at;  // ISO-8601, validated on load, kept verbatim
  bool is_excellent = false;
  std::uint32_t review_count = 0;
  std::uint32_t reply_count = 0;

  friend bool operator==(const RawPost&, const RawPost&) = default;
};

struct Corpus {
  std::vector<RawPost> posts;
  Provenance source_meta;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

enum class CorpusFormat { Json, Csv };

/// A row the loader could not accept, with its 1-based position in the input
/// and the reason. Rejected rows are reported, never silently dropped.
struct RejectedRow {
  std::uint64_t row = 0;
  std::string reason;

  friend bool operator==(const RejectedRow&, const RejectedRow&) = default;
};

struct LoadResult {
  Corpus corpus;
  std::vector<RejectedRow> rejects;
};

/// Thrown when a file yields rows but not a single one parses; carries the
/// per-row reasons so callers can still persist the rejects report.
class NoParsableRowsError : public Error {
 public:
  NoParsableRowsError(const std::string& what, std::vector<RejectedRow> rejects)
      : Error(what), rejects_(std::move(rejects)) {}
  const std::vector<RejectedRow>& rejects() const { return rejects_; }

 private:
  std::vector<RejectedRow> rejects_;
};

/// Loads a post corpus from a JSON array or an RFC-4180 CSV file.
///
/// JSON rows are objects with keys id, author, title, body, posted_at,
/// excellent, reviews, replies; the CSV header carries the same names.
/// Malformed rows land in the rejects list. Throws Error for an unreadable
/// file or a file-level schema mismatch (naming the missing column/key) and
/// NoParsableRowsError when rows exist but none parse. An empty-but-valid
/// file is a corpus with zero posts.
LoadResult load_corpus(const std::string& path, CorpusFormat format);

/// Same parse over in-memory text (the file loaders call these).
LoadResult parse_corpus_json(const std::string& text);
LoadResult parse_corpus_csv(const std::string& text);

/// Serializes the rejects report as JSON lines, one object per rejected row.
std::string rejects_to_jsonl(const std::vector<RejectedRow>& rejects);

/// Quality-based sampling: keeps every excellent post and each non-excellent
/// post independently with probability non_excellent_rate.
///
/// The generator is fixed and documented so runs are replayable: an
/// std::mt19937_64 seeded with `seed`, one draw per non-excellent post in
/// input order, mapped to [0, 1) by taking the top 53 bits; the post is kept
/// when the draw is < rate. Same (corpus, rate, seed) -> identical selection.
/// Throws Error when rate is outside [0, 1].
Corpus sample_by_quality(const Corpus& corpus, double non_excellent_rate, std::uint64_t seed);

/// The encoded user/post layers: one User per distinct author_name in first-
/// appearance order, one Post per post in input order, and the authorship
/// relation (post -> user).
struct EncodedCorpus {
  std::vector<std::string> user_labels;  // author names
  std::vector<std::string> post_labels;  // external ids
  std::vector<std::uint32_t> post_author;

  friend bool operator==(const EncodedCorpus&, const EncodedCorpus&) = default;
};

/// Throws Error on an empty corpus.
EncodedCorpus encode(const Corpus& corpus);

}  // namespace uiksn

#endif  // UIKSN_CORPUS_HPP
