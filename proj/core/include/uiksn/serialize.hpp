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

#ifndef UIKSN_SERIALIZE_HPP
#define UIKSN_SERIALIZE_HPP

#include <string>

#include "uiksn/analysis.hpp"
#include "uiksn/super_network.hpp"

namespace uiksn {

/// Canonical network serialization: a versioned JSON document with the four
/// node arrays and one sorted edge array per relation. Identical networks
/// serialize to identical bytes; round-trips are exact.
std::string network_to_json(const SuperNetwork& net);
SuperNetwork network_from_json(const std::string& text);

SuperNetwork load_network(const std::string& path);
void save_network(const SuperNetwork& net, const std::string& path);

/// Sub-network report serialization (nodes, edges, rankings, thresholds,
/// provenance). Round-trips are exact.
std::string report_to_json(const SubNetworkReport& report);
SubNetworkReport report_from_json(const std::string& text);

/// Sub-network alone (the "json" export format).
std::string subnetwork_to_json(const SubNetwork& sub);
SubNetwork subnetwork_from_json(const std::string& text);

/// 64-bit FNV-1a over a byte string, rendered as zero-padded hex; used for
/// the manifest's content hash.
std::string fnv1a64_hex(const std::string& bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace uiksn

#endif  // UIKSN_SERIALIZE_HPP
