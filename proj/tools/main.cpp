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

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uiksn/export.hpp"
#include "uiksn/pipeline.hpp"
#include "uiksn/serialize.hpp"
#include "uiksn/validate.hpp"

namespace {

struct BuildArgs {
  std::string config_file;
  std::vector<std::string> sets;  // raw key=value overrides
  std::string corpus, format, out_dir, stopwords;
  bool write_wkn = false;
  bool write_partition = false;
};

int cmd_build(const BuildArgs& args) {
  uiksn::PipelineConfig config;
  if (!args.config_file.empty()) config = uiksn::load_pipeline_config(args.config_file);
  // Flags win over file values.
  if (!args.corpus.empty()) uiksn::apply_config_override(config, "corpus", args.corpus);
  if (!args.format.empty()) uiksn::apply_config_override(config, "format", args.format);
  if (!args.out_dir.empty()) uiksn::apply_config_override(config, "out_dir", args.out_dir);
  if (!args.stopwords.empty()) uiksn::apply_config_override(config, "stopwords", args.stopwords);
  if (args.write_wkn) config.write_wkn = true;
  if (args.write_partition) config.write_partition = true;
  for (const std::string& kv : args.sets) {
    std::size_t eq = kv.find('=');
    if (eq == std::string::npos) throw uiksn::Error("--set expects key=value, got " + kv);
    uiksn::apply_config_override(config, kv.substr(0, eq), kv.substr(eq + 1));
  }

  uiksn::BuildOutputs outputs = uiksn::run_build(config);
  std::cout << "network: " << outputs.network_path << "\n"
            << "manifest: " << outputs.manifest_path << "\n"
            << "users: " << outputs.network.user_labels.size()
            << " posts: " << outputs.network.post_labels.size()
            << " knowledge: " << outputs.network.knowledge_labels.size()
            << " fields: " << outputs.network.field_labels.size()
            << " rejects: " << outputs.rejects.size() << "\n";
  return 0;
}

struct AnalyzeArgs {
  std::string network;
  uiksn::AnalyzeRequest request;
  std::int64_t q0 = -1, q1 = -1, q2 = -1, floor = -1;
  std::string edges;
};

int cmd_analyze(AnalyzeArgs& args) {
  if (args.q0 >= 0) args.request.q0 = static_cast<std::uint64_t>(args.q0);
  if (args.q1 >= 0) args.request.q1 = static_cast<std::uint64_t>(args.q1);
  if (args.q2 >= 0) args.request.q2 = static_cast<std::uint64_t>(args.q2);
  if (args.floor >= 0) args.request.contribution_floor = static_cast<std::uint64_t>(args.floor);
  if (!args.edges.empty()) args.request.edge_kinds = uiksn::parse_relation_set(args.edges);

  uiksn::SuperNetwork net = uiksn::load_network(args.network);
  uiksn::AnalyzeOutputs outputs = uiksn::run_analyze(net, args.request);
  std::cout << "report: " << outputs.json_path << "\n"
            << "graphml: " << outputs.graphml_path << "\n"
            << "table: " << outputs.text_path << "\n";
  return 0;
}

struct ExportArgs {
  std::string network, report, format = "graphml", out;
};

int cmd_export(const ExportArgs& args) {
  uiksn::ExportFormat format;
  if (args.format == "graphml") format = uiksn::ExportFormat::GraphML;
  else if (args.format == "dot") format = uiksn::ExportFormat::Dot;
  else if (args.format == "json") format = uiksn::ExportFormat::Json;
  else throw uiksn::Error("unknown export format: " + args.format);

  uiksn::SubNetwork sub;
  if (!args.report.empty()) {
    sub = uiksn::report_from_json(uiksn::read_file(args.report)).subnetwork;
  } else if (!args.network.empty()) {
    uiksn::SuperNetwork net = uiksn::load_network(args.network);
    uiksn::Provenance prov = net.provenance;
    prov["query"] = "full-network";
    sub = uiksn::full_subnetwork(net, std::move(prov));
  } else {
    throw uiksn::Error("export needs --network or --report");
  }
  uiksn::write_file(args.out, uiksn::export_subnetwork(sub, format));
  std::cout << "wrote: " << args.out << "\n";
  return 0;
}

int cmd_validate(const std::string& network_path) {
  uiksn::SuperNetwork net = uiksn::load_network(network_path);
  std::vector<uiksn::Violation> violations = uiksn::validate(net);
  if (violations.empty()) {
    std::cout << "valid: " << network_path << "\n";
    return 0;
  }
  for (const uiksn::Violation& v : violations) std::cout << v.to_string() << "\n";
  std::cout << violations.size() << " violation(s)\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"User innovation knowledge super-network pipeline"};
  app.require_subcommand(1);

  BuildArgs build_args;
  CLI::App* build = app.add_subcommand("build", "Run the corpus -> network pipeline");
  build->add_option("--config", build_args.config_file, "key = value pipeline config file");
  build->add_option("--corpus", build_args.corpus, "corpus file (json or csv)");
  build->add_option("--format", build_args.format, "corpus format: json or csv");
  build->add_option("--out", build_args.out_dir, "output directory");
  build->add_option("--stopwords", build_args.stopwords, "stopword list file");
  build->add_flag("--write-wkn", build_args.write_wkn, "also write wkn.graphml / wkn.csv");
  build->add_flag("--write-partition", build_args.write_partition,
                  "also write fields.graphml / fields.csv");
  build->add_option("--set", build_args.sets, "override any config key (key=value)");

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand("analyze", "Run a query against a built network");
  analyze->add_option("--network", analyze_args.network, "network.json path")->required();
  analyze
      ->add_option("--query", analyze_args.request.query,
                   "hot-knowledge | core-users | hot-fields | user | ego | field")
      ->required();
  analyze->add_option("--q0", analyze_args.q0, "hot/core knowledge frequency threshold");
  analyze->add_option("--q1", analyze_args.q1, "core user/post relation-weight threshold");
  analyze->add_option("--q2", analyze_args.q2, "hot field weight threshold");
  analyze->add_option("--floor", analyze_args.floor, "contribution display floor");
  analyze->add_option("--center", analyze_args.request.center,
                      "center node id or label (user/ego/field queries)");
  analyze->add_option("--radius", analyze_args.request.radius, "ego radius (default 2)");
  analyze->add_option("--edges", analyze_args.edges,
                      "ego edge kinds, comma separated (default per center kind)");
  analyze->add_option("--out", analyze_args.request.out_dir, "output directory");

  ExportArgs export_args;
  CLI::App* exporter = app.add_subcommand("export", "Export a network or report for rendering");
  exporter->add_option("--network", export_args.network, "network.json to export whole");
  exporter->add_option("--report", export_args.report, "report.json to re-export");
  exporter->add_option("--format", export_args.format, "graphml | dot | json");
  exporter->add_option("--out", export_args.out, "output file")->required();

  std::string validate_network;
  CLI::App* validate = app.add_subcommand("validate", "Check network invariants");
  validate->add_option("--network", validate_network, "network.json path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return cmd_build(build_args);
    if (analyze->parsed()) return cmd_analyze(analyze_args);
    if (exporter->parsed()) return cmd_export(export_args);
    if (validate->parsed()) return cmd_validate(validate_network);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
