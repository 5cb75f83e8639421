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

#include "uiksn/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace uiksn {

namespace {

using nlohmann::json;

constexpr int kNetworkVersion = 1;

json provenance_to_json(const Provenance& prov) {
  json obj = json::object();
  for (const auto& [key, value] : prov) obj[key] = value;
  return obj;
}

Provenance provenance_from_json(const json& obj) {
  Provenance prov;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    prov[it.key()] = it.value().get<std::string>();
  }
  return prov;
}

json parse_document(const std::string& text, const char* expected_format) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string(expected_format) + ": " + e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != expected_format) {
    throw Error(std::string("not a ") + expected_format + " document");
  }
  if (doc.value("version", 0) != kNetworkVersion) {
    throw Error(std::string(expected_format) + ": unsupported version");
  }
  return doc;
}

json node_array(const std::vector<std::string>& labels, const std::vector<std::uint64_t>* weights) {
  json arr = json::array();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    json node;
    node["label"] = labels[i];
    if (weights) node["weight"] = (*weights)[i];
    arr.push_back(std::move(node));
  }
  return arr;
}

json link_array(const std::vector<Link>& edges) {
  json arr = json::array();
  for (const Link& e : edges) arr.push_back(json::array({e.first, e.second}));
  return arr;
}

std::vector<Link> link_vector(const json& arr) {
  std::vector<Link> edges;
  for (const json& e : arr) {
    edges.push_back({e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>()});
  }
  return edges;
}

json subnetwork_body(const SubNetwork& sub) {
  json nodes = json::array();
  for (const SubNode& n : sub.nodes) {
    nodes.push_back({{"id", render(n.id)},
                     {"kind", std::string(kind_name(n.id.kind))},
                     {"label", n.label},
                     {"weight", n.weight}});
  }
  json edges = json::array();
  for (const SubEdge& e : sub.edges) {
    edges.push_back({{"kind", std::string(relation_name(e.kind))},
                     {"source", render(e.a)},
                     {"target", render(e.b)},
                     {"weight", e.weight}});
  }
  return {{"nodes", std::move(nodes)},
          {"edges", std::move(edges)},
          {"provenance", provenance_to_json(sub.provenance)}};
}

NodeId parse_id_or_throw(const std::string& text) {
  auto id = parse_node_id(text);
  if (!id) throw Error("bad node id in document: " + text);
  return *id;
}

SubNetwork subnetwork_from_body(const json& body) {
  SubNetwork sub;
  for (const json& n : body.at("nodes")) {
    SubNode node;
    node.id = parse_id_or_throw(n.at("id").get<std::string>());
    node.label = n.at("label").get<std::string>();
    node.weight = n.at("weight").get<std::uint64_t>();
    sub.nodes.push_back(std::move(node));
  }
  for (const json& e : body.at("edges")) {
    SubEdge edge;
    auto kind = parse_relation_kind(e.at("kind").get<std::string>());
    if (!kind) throw Error("bad relation kind in document: " + e.at("kind").get<std::string>());
    edge.kind = *kind;
    edge.a = parse_id_or_throw(e.at("source").get<std::string>());
    edge.b = parse_id_or_throw(e.at("target").get<std::string>());
    edge.weight = e.at("weight").get<std::uint64_t>();
    sub.edges.push_back(std::move(edge));
  }
  sub.provenance = provenance_from_json(body.at("provenance"));
  return sub;
}

json rankings_to_json(const std::vector<RankedNode>& rankings) {
  json arr = json::array();
  for (const RankedNode& r : rankings) arr.push_back(json::array({render(r.id), r.score}));
  return arr;
}

std::vector<RankedNode> rankings_from_json(const json& arr) {
  std::vector<RankedNode> out;
  for (const json& r : arr) {
    out.push_back({parse_id_or_throw(r.at(0).get<std::string>()), r.at(1).get<std::uint64_t>()});
  }
  return out;
}

}  // namespace

std::string network_to_json(const SuperNetwork& net) {
  json doc;
  doc["format"] = "uiksn-network";
  doc["version"] = kNetworkVersion;
  doc["provenance"] = provenance_to_json(net.provenance);
  doc["nodes"] = {{"users", node_array(net.user_labels, &net.user_weight)},
                  {"posts", node_array(net.post_labels, nullptr)},
                  {"knowledge", node_array(net.knowledge_labels, &net.knowledge_weight)},
                  {"fields", node_array(net.field_labels, &net.field_weight)}};
  json cooc = json::array();
  for (const WeightedLink& e : net.cooccurrence) {
    cooc.push_back(json::array({e.a, e.b, e.weight}));
  }
  doc["relations"] = {{"authorship", link_array(net.authorship)},
                      {"containment", link_array(net.containment)},
                      {"membership", link_array(net.membership)},
                      {"hierarchy", link_array(net.hierarchy)},
                      {"cooccurrence", std::move(cooc)}};
  return doc.dump(2) + "\n";
}

SuperNetwork network_from_json(const std::string& text) {
  json doc = parse_document(text, "uiksn-network");
  SuperNetwork net;
  try {
    net.provenance = provenance_from_json(doc.at("provenance"));
    const json& nodes = doc.at("nodes");
    for (const json& n : nodes.at("users")) {
      net.user_labels.push_back(n.at("label").get<std::string>());
      net.user_weight.push_back(n.at("weight").get<std::uint64_t>());
    }
    for (const json& n : nodes.at("posts")) {
      net.post_labels.push_back(n.at("label").get<std::string>());
    }
    for (const json& n : nodes.at("knowledge")) {
      net.knowledge_labels.push_back(n.at("label").get<std::string>());
      net.knowledge_weight.push_back(n.at("weight").get<std::uint64_t>());
    }
    for (const json& n : nodes.at("fields")) {
      net.field_labels.push_back(n.at("label").get<std::string>());
      net.field_weight.push_back(n.at("weight").get<std::uint64_t>());
    }
    const json& relations = doc.at("relations");
    net.authorship = link_vector(relations.at("authorship"));
    net.containment = link_vector(relations.at("containment"));
    net.membership = link_vector(relations.at("membership"));
    net.hierarchy = link_vector(relations.at("hierarchy"));
    for (const json& e : relations.at("cooccurrence")) {
      net.cooccurrence.push_back({e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>(),
                                  e.at(2).get<std::uint64_t>()});
    }
  } catch (const json::exception& e) {
    throw Error(std::string("uiksn-network: missing or mistyped key: ") + e.what());
  }
  return net;
}

SuperNetwork load_network(const std::string& path) { return network_from_json(read_file(path)); }

void save_network(const SuperNetwork& net, const std::string& path) {
  write_file(path, network_to_json(net));
}

std::string report_to_json(const SubNetworkReport& report) {
  json doc;
  doc["format"] = "uiksn-report";
  doc["version"] = kNetworkVersion;
  doc["query"] = report.query_name;
  json thresholds = {{"q0", report.thresholds.q0},
                     {"q1", report.thresholds.q1},
                     {"q2", report.thresholds.q2}};
  if (report.thresholds.contribution_floor) {
    thresholds["contribution_floor"] = *report.thresholds.contribution_floor;
  } else {
    thresholds["contribution_floor"] = nullptr;
  }
  doc["thresholds"] = std::move(thresholds);
  doc["subnetwork"] = subnetwork_body(report.subnetwork);
  doc["rankings"] = {{"users", rankings_to_json(report.user_rankings)},
                     {"posts", rankings_to_json(report.post_rankings)},
                     {"knowledge", rankings_to_json(report.knowledge_rankings)},
                     {"fields", rankings_to_json(report.field_rankings)}};
  return doc.dump(2) + "\n";
}

SubNetworkReport report_from_json(const std::string& text) {
  json doc = parse_document(text, "uiksn-report");
  SubNetworkReport report;
  try {
    report.query_name = doc.at("query").get<std::string>();
    const json& thresholds = doc.at("thresholds");
    report.thresholds.q0 = thresholds.at("q0").get<std::uint64_t>();
    report.thresholds.q1 = thresholds.at("q1").get<std::uint64_t>();
    report.thresholds.q2 = thresholds.at("q2").get<std::uint64_t>();
    if (!thresholds.at("contribution_floor").is_null()) {
      report.thresholds.contribution_floor =
          thresholds.at("contribution_floor").get<std::uint64_t>();
    }
    report.subnetwork = subnetwork_from_body(doc.at("subnetwork"));
    const json& rankings = doc.at("rankings");
    report.user_rankings = rankings_from_json(rankings.at("users"));
    report.post_rankings = rankings_from_json(rankings.at("posts"));
    report.knowledge_rankings = rankings_from_json(rankings.at("knowledge"));
    report.field_rankings = rankings_from_json(rankings.at("fields"));
  } catch (const json::exception& e) {
    throw Error(std::string("uiksn-report: missing or mistyped key: ") + e.what());
  }
  return report;
}

std::string subnetwork_to_json(const SubNetwork& sub) {
  json doc = subnetwork_body(sub);
  doc["format"] = "uiksn-subnetwork";
  doc["version"] = kNetworkVersion;
  return doc.dump(2) + "\n";
}

SubNetwork subnetwork_from_json(const std::string& text) {
  json doc = parse_document(text, "uiksn-subnetwork");
  try {
    return subnetwork_from_body(doc);
  } catch (const json::exception& e) {
    throw Error(std::string("uiksn-subnetwork: missing or mistyped key: ") + e.what());
  }
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write file: " + path);
  out << contents;
  if (!out) throw Error("write failed: " + path);
}

}  // namespace uiksn
