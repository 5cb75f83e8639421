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

#include "uiksn/pipeline.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>

#include "uiksn/assemble.hpp"
#include "uiksn/export.hpp"
#include "uiksn/keywords.hpp"
#include "uiksn/serialize.hpp"
#include "uiksn/wkn.hpp"

namespace uiksn {

namespace {

namespace fs = std::filesystem;

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw Error("config: bad integer for '" + key + "': " + value);
  }
  return out;
}

std::uint32_t parse_u32(const std::string& key, const std::string& value) {
  std::uint64_t v = parse_u64(key, value);
  if (v > UINT32_MAX) throw Error("config: value too large for '" + key + "': " + value);
  return static_cast<std::uint32_t>(v);
}

double parse_f64(const std::string& key, const std::string& value) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw Error("config: bad number for '" + key + "': " + value);
  }
  return out;
}

bool parse_config_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw Error("config: bad boolean for '" + key + "': " + value);
}

std::string fmt_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", value);
  return buf;
}

CorpusFormat resolve_format(const PipelineConfig& config) {
  if (config.corpus_format) return *config.corpus_format;
  if (config.corpus_path.ends_with(".json")) return CorpusFormat::Json;
  if (config.corpus_path.ends_with(".csv")) return CorpusFormat::Csv;
  throw Error("cannot infer corpus format from '" + config.corpus_path +
              "'; set format = json|csv");
}

std::string sanitize_stem(std::string stem) {
  for (char& c : stem) {
    if (!((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
          c == '-' || c == '_')) {
      c = '_';
    }
  }
  return stem;
}

}  // namespace

void apply_config_override(PipelineConfig& config, const std::string& key,
                           const std::string& value) {
  if (key == "corpus") {
    config.corpus_path = value;
  } else if (key == "format") {
    if (value == "json") config.corpus_format = CorpusFormat::Json;
    else if (value == "csv") config.corpus_format = CorpusFormat::Csv;
    else throw Error("config: format must be json or csv, got " + value);
  } else if (key == "sample_rate") {
    config.sample_rate = parse_f64(key, value);
  } else if (key == "sample_seed") {
    config.sample_seed = parse_u64(key, value);
  } else if (key == "stopwords") {
    config.stopwords_path = value;
  } else if (key == "tokenizer_mode") {
    if (value == "unicode-word") config.tokenizer.mode = TokenizerMode::UnicodeWord;
    else if (value == "delimiter-set") config.tokenizer.mode = TokenizerMode::DelimiterSet;
    else throw Error("config: tokenizer_mode must be unicode-word or delimiter-set, got " + value);
  } else if (key == "delimiters") {
    config.tokenizer.delimiters = value;
  } else if (key == "lowercase") {
    config.tokenizer.lowercase = parse_config_bool(key, value);
  } else if (key == "min_token_length") {
    config.tokenizer.min_token_length = parse_u32(key, value);
  } else if (key == "min_keywords_per_post") {
    config.tokenizer.min_keywords_per_post = parse_u32(key, value);
  } else if (key == "max_keywords_per_post") {
    config.tokenizer.max_keywords_per_post = parse_u32(key, value);
  } else if (key == "q0") {
    config.thresholds.q0 = parse_u64(key, value);
  } else if (key == "q1") {
    config.thresholds.q1 = parse_u64(key, value);
  } else if (key == "q2") {
    config.thresholds.q2 = parse_u64(key, value);
  } else if (key == "contribution_floor") {
    config.thresholds.contribution_floor = parse_u64(key, value);
  } else if (key == "resolution") {
    config.clustering.resolution = parse_f64(key, value);
  } else if (key == "two_level") {
    config.clustering.two_level = parse_config_bool(key, value);
  } else if (key == "cluster_seed") {
    config.cluster_seed = parse_u64(key, value);
  } else if (key == "out_dir") {
    config.out_dir = value;
  } else if (key == "write_wkn") {
    config.write_wkn = parse_config_bool(key, value);
  } else if (key == "write_partition") {
    config.write_partition = parse_config_bool(key, value);
  } else {
    throw Error("config: unknown key '" + key + "'");
  }
}

PipelineConfig load_pipeline_config(const std::string& path) {
  std::string text = read_file(path);
  PipelineConfig config;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string line = text.substr(
        start, end == std::string::npos ? std::string::npos : end - start);
    ++line_no;
    start = end == std::string::npos ? text.size() + 1 : end + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos || line[begin] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error("config: line " + std::to_string(line_no) + " is not key = value");
    }
    auto trim = [](std::string s) {
      std::size_t b = s.find_first_not_of(" \t");
      if (b == std::string::npos) return std::string();
      std::size_t e = s.find_last_not_of(" \t");
      return s.substr(b, e - b + 1);
    };
    apply_config_override(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return config;
}

Provenance build_provenance(const PipelineConfig& config) {
  Provenance prov;
  prov["corpus"] = config.corpus_path;
  prov["format"] = resolve_format(config) == CorpusFormat::Json ? "json" : "csv";
  prov["sample_rate"] = fmt_double(config.sample_rate);
  prov["sample_seed"] = std::to_string(config.sample_seed);
  prov["stopwords"] = config.stopwords_path;
  prov["tokenizer_mode"] =
      config.tokenizer.mode == TokenizerMode::UnicodeWord ? "unicode-word" : "delimiter-set";
  prov["lowercase"] = config.tokenizer.lowercase ? "true" : "false";
  prov["min_token_length"] = std::to_string(config.tokenizer.min_token_length);
  prov["min_keywords_per_post"] = std::to_string(config.tokenizer.min_keywords_per_post);
  prov["max_keywords_per_post"] = std::to_string(config.tokenizer.max_keywords_per_post);
  prov["q0"] = std::to_string(config.thresholds.q0);
  prov["q1"] = std::to_string(config.thresholds.q1);
  prov["q2"] = std::to_string(config.thresholds.q2);
  prov["resolution"] = fmt_double(config.clustering.resolution);
  prov["two_level"] = config.clustering.two_level ? "true" : "false";
  prov["cluster_seed"] = std::to_string(config.cluster_seed);
  return prov;
}

BuildOutputs run_build(const PipelineConfig& config) {
  auto wrap = [](const char* name, const Error& e) {
    return Error(std::string("[") + name + "] " + e.what());
  };

  if (config.corpus_path.empty()) throw Error("[ingest] no corpus configured");
  CorpusFormat format = resolve_format(config);

  fs::create_directories(config.out_dir);
  auto out_path = [&](const char* file) { return (fs::path(config.out_dir) / file).string(); };

  // Ingest. Rejects are persisted even when nothing parses.
  LoadResult loaded;
  try {
    loaded = load_corpus(config.corpus_path, format);
  } catch (const NoParsableRowsError& e) {
    write_file(out_path("rejects.jsonl"), rejects_to_jsonl(e.rejects()));
    throw wrap("ingest", e);
  } catch (const Error& e) {
    throw wrap("ingest", e);
  }

  Corpus sampled;
  try {
    sampled = sample_by_quality(loaded.corpus, config.sample_rate, config.sample_seed);
  } catch (const Error& e) {
    throw wrap("sampling", e);
  }

  EncodedCorpus encoded;
  KeywordTable table;
  try {
    TokenizerConfig tokenizer = config.tokenizer;
    if (!config.stopwords_path.empty()) {
      auto words = load_stopwords(config.stopwords_path, tokenizer.lowercase);
      tokenizer.stopwords.insert(words.begin(), words.end());
    }
    encoded = encode(sampled);
    table = extract_keywords(sampled, tokenizer);
  } catch (const Error& e) {
    throw wrap("mining", e);
  }

  Wkn wkn;
  try {
    wkn = build_wkn(table);
  } catch (const Error& e) {
    throw wrap("wkn", e);
  }

  FieldPartition partition;
  try {
    partition = cluster_wkn(wkn, config.clustering, config.cluster_seed);
  } catch (const Error& e) {
    throw wrap("clustering", e);
  }

  BuildOutputs outputs;
  try {
    outputs.network = assemble_uiksn(encoded, table, wkn, partition, build_provenance(config));
    std::vector<Violation> violations = validate(outputs.network);
    if (!violations.empty()) throw ValidationError(std::move(violations));
  } catch (const Error& e) {
    throw wrap("assembly", e);
  }

  outputs.rejects = loaded.rejects;
  outputs.network_path = out_path("network.json");
  outputs.manifest_path = out_path("manifest.json");

  std::string network_json = network_to_json(outputs.network);
  write_file(outputs.network_path, network_json);
  write_file(out_path("keywords.csv"), keyword_table_csv(table));
  if (!loaded.rejects.empty()) {
    write_file(out_path("rejects.jsonl"), rejects_to_jsonl(loaded.rejects));
  }
  if (config.write_wkn) {
    write_file(out_path("wkn.graphml"), wkn_to_graphml(wkn, table));
    write_file(out_path("wkn.csv"), wkn_to_csv(wkn, table));
  }
  if (config.write_partition) {
    write_file(out_path("fields.graphml"), partition_to_graphml(partition, table));
    write_file(out_path("fields.csv"), partition_to_csv(partition, table));
  }

  // Manifest: counts, parameters and the content hash of the network file.
  {
    std::string manifest = "{\n  \"format\": \"uiksn-manifest\",\n  \"version\": 1,\n";
    manifest += "  \"network_file\": \"network.json\",\n";
    manifest += "  \"content_hash\": \"fnv1a64:" + fnv1a64_hex(network_json) + "\",\n";
    manifest += "  \"counts\": {\n";
    manifest += "    \"users\": " + std::to_string(outputs.network.user_labels.size()) + ",\n";
    manifest += "    \"posts\": " + std::to_string(outputs.network.post_labels.size()) + ",\n";
    manifest +=
        "    \"knowledge\": " + std::to_string(outputs.network.knowledge_labels.size()) + ",\n";
    manifest += "    \"fields\": " + std::to_string(outputs.network.field_labels.size()) + ",\n";
    manifest +=
        "    \"containment\": " + std::to_string(outputs.network.containment.size()) + ",\n";
    manifest +=
        "    \"cooccurrence\": " + std::to_string(outputs.network.cooccurrence.size()) + ",\n";
    manifest += "    \"rejects\": " + std::to_string(outputs.rejects.size()) + "\n  },\n";
    manifest += "  \"parameters\": {\n";
    bool first = true;
    for (const auto& [key, value] : outputs.network.provenance) {
      if (!first) manifest += ",\n";
      first = false;
      manifest += "    \"" + key + "\": \"" + value + "\"";
    }
    manifest += "\n  }\n}\n";
    outputs.manifest_json = manifest;
    write_file(outputs.manifest_path, manifest);
  }
  return outputs;
}

RelationSet default_ego_kinds(NodeKind center_kind) {
  switch (center_kind) {
    case NodeKind::Knowledge:
      return {RelationKind::Containment, RelationKind::Cooccurrence, RelationKind::Membership,
              RelationKind::Authorship};
    case NodeKind::Field:
      return {RelationKind::Membership, RelationKind::FieldHierarchy, RelationKind::Containment,
              RelationKind::Authorship};
    case NodeKind::Post:
    case NodeKind::User:
      return {RelationKind::Authorship, RelationKind::Containment, RelationKind::Membership};
  }
  return RelationSet::all();
}

namespace {

// Accepts a rendered node id ("U479") of the wanted kind, or an exact label.
std::uint32_t resolve_node(const SuperNetwork& net, NodeKind kind, const std::string& text) {
  if (auto id = parse_node_id(text)) {
    if (id->kind == kind && id->index < net.node_count(kind)) return id->index;
    if (id->kind == kind) {
      throw Error("unknown " + std::string(kind_name(kind)) + " node " + text);
    }
  }
  const std::vector<std::string>* labels = nullptr;
  switch (kind) {
    case NodeKind::User: labels = &net.user_labels; break;
    case NodeKind::Post: labels = &net.post_labels; break;
    case NodeKind::Knowledge: labels = &net.knowledge_labels; break;
    case NodeKind::Field: labels = &net.field_labels; break;
  }
  for (std::uint32_t i = 0; i < labels->size(); ++i) {
    if ((*labels)[i] == text) return i;
  }
  throw Error("unknown " + std::string(kind_name(kind)) + " node or label: " + text);
}

NodeId resolve_any_node(const SuperNetwork& net, const std::string& text) {
  if (auto id = parse_node_id(text)) {
    if (id->index < net.node_count(id->kind)) return *id;
    throw Error("unknown node " + text);
  }
  for (NodeKind kind : kAllNodeKinds) {
    const std::vector<std::string>& labels =
        kind == NodeKind::User      ? net.user_labels
        : kind == NodeKind::Post    ? net.post_labels
        : kind == NodeKind::Knowledge ? net.knowledge_labels
                                      : net.field_labels;
    for (std::uint32_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == text) return {kind, i};
    }
  }
  throw Error("unknown node or label: " + text);
}

std::uint64_t provenance_u64(const Provenance& prov, const char* key) {
  auto it = prov.find(key);
  if (it == prov.end()) return 0;
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(it->second.data(), it->second.data() + it->second.size(), out);
  return ec == std::errc() ? out : 0;
}

}  // namespace

AnalyzeOutputs run_analyze(const SuperNetwork& net, const AnalyzeRequest& request) {
  NetworkView view = NetworkView::open(net);

  std::uint64_t q0 = request.q0 ? *request.q0 : provenance_u64(net.provenance, "q0");
  std::uint64_t q1 = request.q1 ? *request.q1 : provenance_u64(net.provenance, "q1");
  std::uint64_t q2 = request.q2 ? *request.q2 : provenance_u64(net.provenance, "q2");

  SubNetworkReport report;
  std::string stem = request.query;
  if (request.query == "hot-knowledge") {
    report = hot_knowledge_report(view, q0);
  } else if (request.query == "core-users") {
    report = core_users_report(view, q0, q1, request.contribution_floor);
  } else if (request.query == "hot-fields") {
    report = hot_fields_report(view, q2);
  } else if (request.query == "user") {
    std::uint32_t user = resolve_node(net, NodeKind::User, request.center);
    report = user_self_network(view, user).report;
    stem += "_" + render(user_node(user));
  } else if (request.query == "field") {
    std::uint32_t field = resolve_node(net, NodeKind::Field, request.center);
    report = field_subnetwork(view, field, request.contribution_floor);
    stem += "_" + render(field_node(field));
  } else if (request.query == "ego") {
    NodeId center = resolve_any_node(net, request.center);
    RelationSet kinds =
        request.edge_kinds ? *request.edge_kinds : default_ego_kinds(center.kind);
    report = ego_network(view, center, request.radius, kinds);
    stem += "_" + render(center) + "_r" + std::to_string(request.radius);
  } else {
    throw Error("unknown query: " + request.query +
                " (expected hot-knowledge|core-users|hot-fields|user|ego|field)");
  }

  fs::create_directories(request.out_dir);
  stem = sanitize_stem(stem);
  AnalyzeOutputs outputs;
  outputs.report = std::move(report);
  outputs.json_path = (fs::path(request.out_dir) / (stem + ".json")).string();
  outputs.graphml_path = (fs::path(request.out_dir) / (stem + ".graphml")).string();
  outputs.text_path = (fs::path(request.out_dir) / (stem + ".txt")).string();
  write_file(outputs.json_path, report_to_json(outputs.report));
  write_file(outputs.graphml_path, subnetwork_to_graphml(outputs.report.subnetwork));
  write_file(outputs.text_path, report_to_text(outputs.report));
  return outputs;
}

}  // namespace uiksn
