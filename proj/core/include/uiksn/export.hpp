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

#ifndef UIKSN_EXPORT_HPP
#define UIKSN_EXPORT_HPP

#include <string>

#include "uiksn/analysis.hpp"
#include "uiksn/clustering.hpp"
#include "uiksn/super_network.hpp"
#include "uiksn/wkn.hpp"

namespace uiksn {

enum class ExportFormat { GraphML, Dot, Json };

/// Renderer-facing exports. The node kind (user/post/knowledge/field) and
/// weights travel as attributes so any tool can reproduce the four-shape
/// legend; an empty sub-network is still a syntactically valid document.
std::string subnetwork_to_graphml(const SubNetwork& sub);
std::string subnetwork_to_dot(const SubNetwork& sub);

/// Dispatches on format (Json uses the canonical sub-network serialization).
std::string export_subnetwork(const SubNetwork& sub, ExportFormat format);

/// WKN exports: GraphML with keyword labels and weights, and a plain
/// source,target,weight edge-list CSV (node rows keyword,frequency first,
/// comment-separated).
std::string wkn_to_graphml(const Wkn& wkn, const KeywordTable& table);
std::string wkn_to_csv(const Wkn& wkn, const KeywordTable& table);

/// Field partition exports: membership (knowledge -> leaf field) and
/// hierarchy (leaf -> root) as GraphML / edge-list CSV.
std::string partition_to_graphml(const FieldPartition& partition, const KeywordTable& table);
std::string partition_to_csv(const FieldPartition& partition, const KeywordTable& table);

/// Human-readable ranked table for a report; for hot-knowledge the leading
/// section is one "keyword  frequency" row per knowledge point.
std::string report_to_text(const SubNetworkReport& report);

}  // namespace uiksn

#endif  // UIKSN_EXPORT_HPP
