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

#ifndef UIKSN_PIPELINE_HPP
#define UIKSN_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uiksn/analysis.hpp"
#include "uiksn/clustering.hpp"
#include "uiksn/corpus.hpp"
#include "uiksn/super_network.hpp"
#include "uiksn/tokenizer.hpp"

namespace uiksn {

/// Everything one batch run needs. Loadable from a key=value config file;
/// command-line flags override file values. Every seed and threshold is
/// recorded into the provenance of each output.
struct PipelineConfig {
  std::string corpus_path;
  std::optional<CorpusFormat> corpus_format;  // inferred from extension when unset
  double sample_rate = 1.0;
  std::uint64_t sample_seed = 0;
  std::string stopwords_path;  // optional
  TokenizerConfig tokenizer;
  Thresholds thresholds;  // q0/q1/q2 defaults for analysis queries
  ClusteringConfig clustering;
  std::uint64_t cluster_seed = 0;
  std::string out_dir = "out";
  bool write_wkn = false;        // wkn.graphml + wkn.csv
  bool write_partition = false;  // fields.graphml + fields.csv
};

/// Parses the documented key=value config file ('#' comments, blank lines
/// ignored). Unknown keys and unparsable values are errors naming the key.
PipelineConfig load_pipeline_config(const std::string& path);

/// Applies "key=value" override strings on top of a config (the CLI's
/// --set flags and dedicated options funnel through this).
void apply_config_override(PipelineConfig& config, const std::string& key,
                           const std::string& value);

/// The provenance block every output of this config embeds.
Provenance build_provenance(const PipelineConfig& config);

struct BuildOutputs {
  SuperNetwork network;
  std::vector<RejectedRow> rejects;
  std::string network_path;
  std::string manifest_path;
  std::string manifest_json;
};

/// Runs ingest -> sampling -> mining -> WKN -> clustering -> assembly and
/// writes network.json, manifest.json, keywords.csv (and rejects.jsonl when
/// rows were rejected) under out_dir. Throws Error with a stage-named message
/// on any failure. Reruns with the same config produce byte-identical files.
BuildOutputs run_build(const PipelineConfig& config);

/// One analysis invocation: which query plus its parameters. Queries default
/// their thresholds from the network's provenance when unset here.
struct AnalyzeRequest {
  std::string query;                       // hot-knowledge | core-users | hot-fields |
                                           // user | ego | field
  std::optional<std::uint64_t> q0, q1, q2;
  std::optional<std::uint64_t> contribution_floor;
  std::string center;                      // node id ("U479") for user/ego/field
  std::uint32_t radius = 2;                // ego only
  std::optional<RelationSet> edge_kinds;   // ego only; preset default per center kind
  std::string out_dir = "out";
};

struct AnalyzeOutputs {
  SubNetworkReport report;
  std::string json_path;
  std::string graphml_path;
  std::string text_path;
};

/// Runs one query against a persisted network and writes report JSON,
/// GraphML and the ranked text table. Throws Error on an unknown query or
/// node, naming it.
AnalyzeOutputs run_analyze(const SuperNetwork& net, const AnalyzeRequest& request);

/// Ego-network edge-kind presets keyed by the center kind: knowledge centers
/// traverse containment + cooccurrence + membership + authorship; field
/// centers membership + hierarchy + containment + authorship; post and user
/// centers authorship + containment + membership.
RelationSet default_ego_kinds(NodeKind center_kind);

}  // namespace uiksn

#endif  // UIKSN_PIPELINE_HPP
