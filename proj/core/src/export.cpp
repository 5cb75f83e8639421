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

#include "uiksn/export.hpp"

#include <algorithm>
#include <map>

#include "uiksn/serialize.hpp"

namespace uiksn {

namespace {

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string dot_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

constexpr const char* kGraphmlHeader =
    "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\"\n"
    "         xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\"\n"
    "         xsi:schemaLocation=\"http://graphml.graphdrawing.org/xmlns "
    "http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd\">\n"
    "  <key id=\"kind\" for=\"node\" attr.name=\"kind\" attr.type=\"string\"/>\n"
    "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
    "  <key id=\"weight\" for=\"node\" attr.name=\"weight\" attr.type=\"long\"/>\n"
    "  <key id=\"relation\" for=\"edge\" attr.name=\"relation\" attr.type=\"string\"/>\n"
    "  <key id=\"e_weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n"
    "  <key id=\"provenance\" for=\"graph\" attr.name=\"provenance\" attr.type=\"string\"/>\n";

std::string provenance_line(const Provenance& prov) {
  std::string out;
  for (const auto& [key, value] : prov) {
    if (!out.empty()) out += "; ";
    out += key + "=" + value;
  }
  return out;
}

void append_graphml_node(std::string& out, const std::string& id, std::string_view kind,
                         const std::string& label, std::uint64_t weight) {
  out += "    <node id=\"" + xml_escape(id) + "\">\n";
  out += "      <data key=\"kind\">" + std::string(kind) + "</data>\n";
  out += "      <data key=\"label\">" + xml_escape(label) + "</data>\n";
  out += "      <data key=\"weight\">" + std::to_string(weight) + "</data>\n";
  out += "    </node>\n";
}

void append_graphml_edge(std::string& out, const std::string& a, const std::string& b,
                         std::string_view relation, std::uint64_t weight) {
  out += "    <edge source=\"" + xml_escape(a) + "\" target=\"" + xml_escape(b) + "\">\n";
  out += "      <data key=\"relation\">" + std::string(relation) + "</data>\n";
  out += "      <data key=\"e_weight\">" + std::to_string(weight) + "</data>\n";
  out += "    </edge>\n";
}

}  // namespace

std::string subnetwork_to_graphml(const SubNetwork& sub) {
  std::string out = kGraphmlHeader;
  out += "  <graph id=\"uiksn\" edgedefault=\"undirected\">\n";
  if (!sub.provenance.empty()) {
    out += "    <data key=\"provenance\">" + xml_escape(provenance_line(sub.provenance)) +
           "</data>\n";
  }
  for (const SubNode& n : sub.nodes) {
    append_graphml_node(out, render(n.id), kind_name(n.id.kind), n.label, n.weight);
  }
  for (const SubEdge& e : sub.edges) {
    append_graphml_edge(out, render(e.a), render(e.b), relation_name(e.kind), e.weight);
  }
  out += "  </graph>\n</graphml>\n";
  return out;
}

std::string subnetwork_to_dot(const SubNetwork& sub) {
  std::string out = "graph uiksn {\n";
  for (const auto& [key, value] : sub.provenance) {
    out += "  // " + key + "=" + value + "\n";
  }
  for (const SubNode& n : sub.nodes) {
    out += "  \"" + render(n.id) + "\" [kind=\"" + std::string(kind_name(n.id.kind)) +
           "\", label=\"" + dot_escape(n.label) + "\", weight=" + std::to_string(n.weight) +
           "];\n";
  }
  for (const SubEdge& e : sub.edges) {
    out += "  \"" + render(e.a) + "\" -- \"" + render(e.b) + "\" [relation=\"" +
           std::string(relation_name(e.kind)) + "\", weight=" + std::to_string(e.weight) + "];\n";
  }
  out += "}\n";
  return out;
}

std::string export_subnetwork(const SubNetwork& sub, ExportFormat format) {
  switch (format) {
    case ExportFormat::GraphML: return subnetwork_to_graphml(sub);
    case ExportFormat::Dot: return subnetwork_to_dot(sub);
    case ExportFormat::Json: return subnetwork_to_json(sub);
  }
  throw Error("unknown export format");
}

std::string wkn_to_graphml(const Wkn& wkn, const KeywordTable& table) {
  std::string out = kGraphmlHeader;
  out += "  <graph id=\"wkn\" edgedefault=\"undirected\">\n";
  for (std::size_t i = 0; i < wkn.node_ids.size(); ++i) {
    std::uint32_t k = wkn.node_ids[i];
    append_graphml_node(out, render(knowledge_node(k)), "knowledge", table.keywords[k],
                        wkn.node_weight[i]);
  }
  for (const WeightedLink& e : wkn.edges) {
    append_graphml_edge(out, render(knowledge_node(e.a)), render(knowledge_node(e.b)),
                        "cooccurrence", e.weight);
  }
  out += "  </graph>\n</graphml>\n";
  return out;
}

std::string wkn_to_csv(const Wkn& wkn, const KeywordTable& table) {
  std::string out = "source,target,weight\n";
  for (const WeightedLink& e : wkn.edges) {
    out += table.keywords[e.a] + "," + table.keywords[e.b] + "," + std::to_string(e.weight) + "\n";
  }
  return out;
}

std::string partition_to_graphml(const FieldPartition& partition, const KeywordTable& table) {
  std::string out = kGraphmlHeader;
  out += "  <graph id=\"wcn\" edgedefault=\"undirected\">\n";
  for (std::uint32_t k = 0; k < partition.assignment.size(); ++k) {
    append_graphml_node(out, render(knowledge_node(k)), "knowledge", table.keywords[k],
                        table.frequency[k]);
  }
  for (std::uint32_t f = 0; f < partition.field_count(); ++f) {
    append_graphml_node(out, render(field_node(f)), "field", partition.labels[f],
                        partition.field_weight[f]);
  }
  for (std::uint32_t k = 0; k < partition.assignment.size(); ++k) {
    append_graphml_edge(out, render(knowledge_node(k)),
                        render(field_node(partition.assignment[k])), "membership", 1);
  }
  for (std::uint32_t f = 0; f < partition.field_count(); ++f) {
    if (partition.parent[f]) {
      append_graphml_edge(out, render(field_node(f)), render(field_node(*partition.parent[f])),
                          "hierarchy", 1);
    }
  }
  out += "  </graph>\n</graphml>\n";
  return out;
}

std::string partition_to_csv(const FieldPartition& partition, const KeywordTable& table) {
  std::string out = "source,target,relation\n";
  for (std::uint32_t k = 0; k < partition.assignment.size(); ++k) {
    out += table.keywords[k] + "," + partition.labels[partition.assignment[k]] + ",membership\n";
  }
  for (std::uint32_t f = 0; f < partition.field_count(); ++f) {
    if (partition.parent[f]) {
      out += partition.labels[f] + "," + partition.labels[*partition.parent[f]] + ",hierarchy\n";
    }
  }
  return out;
}

std::string report_to_text(const SubNetworkReport& report) {
  std::string out;
  out += "# query: " + report.query_name + "\n";
  out += "# thresholds: q0=" + std::to_string(report.thresholds.q0) +
         " q1=" + std::to_string(report.thresholds.q1) +
         " q2=" + std::to_string(report.thresholds.q2);
  if (report.thresholds.contribution_floor) {
    out += " contribution_floor=" + std::to_string(*report.thresholds.contribution_floor);
  }
  out += "\n";
  for (const auto& [key, value] : report.subnetwork.provenance) {
    out += "# " + key + ": " + value + "\n";
  }

  // Labels for ranked ids come from the sub-network's node list.
  std::map<NodeId, const std::string*> labels;
  for (const SubNode& n : report.subnetwork.nodes) labels[n.id] = &n.label;
  auto label_of = [&](NodeId id) -> const std::string& {
    static const std::string empty;
    auto it = labels.find(id);
    return it == labels.end() ? empty : *it->second;
  };
  auto section = [&](const char* heading, const std::vector<RankedNode>& rankings,
                     const char* score_name) {
    if (rankings.empty()) return;
    out += "\n== " + std::string(heading) + " (" + std::to_string(rankings.size()) + ") ==\n";
    out += std::string("id\tlabel\t") + score_name + "\n";
    for (const RankedNode& r : rankings) {
      out += render(r.id) + "\t" + label_of(r.id) + "\t" + std::to_string(r.score) + "\n";
    }
  };
  // The knowledge section leads, as a keyword/frequency table.
  section("knowledge", report.knowledge_rankings,
          report.query_name == "hot-knowledge" ? "frequency" : "score");
  section("users", report.user_rankings, "score");
  section("fields", report.field_rankings, "score");
  section("posts", report.post_rankings, "score");
  return out;
}

}  // namespace uiksn
