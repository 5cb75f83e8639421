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

#include "uiksn/node_id.hpp"

#include <charconv>
#include <limits>

#include "uiksn/errors.hpp"

namespace uiksn {

char kind_letter(NodeKind kind) {
  switch (kind) {
    case NodeKind::User: return 'U';
    case NodeKind::Post: return 'P';
    case NodeKind::Knowledge: return 'K';
    case NodeKind::Field: return 'F';
  }
  return '?';
}

std::string_view kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::User: return "user";
    case NodeKind::Post: return "post";
    case NodeKind::Knowledge: return "knowledge";
    case NodeKind::Field: return "field";
  }
  return "unknown";
}

std::string render(NodeId id) {
  return kind_letter(id.kind) + std::to_string(id.index);
}

std::optional<NodeId> parse_node_id(std::string_view text) {
  if (text.size() < 2) return std::nullopt;
  NodeKind kind;
  switch (text[0]) {
    case 'U': kind = NodeKind::User; break;
    case 'P': kind = NodeKind::Post; break;
    case 'K': kind = NodeKind::Knowledge; break;
    case 'F': kind = NodeKind::Field; break;
    default: return std::nullopt;
  }
  std::string_view digits = text.substr(1);
  if (digits.size() > 1 && digits[0] == '0') return std::nullopt;
  std::uint32_t index = 0;
  const char* first = digits.data();
  const char* last = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(first, last, index);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return NodeId{kind, index};
}

std::string_view relation_name(RelationKind kind) {
  switch (kind) {
    case RelationKind::Authorship: return "authorship";
    case RelationKind::Containment: return "containment";
    case RelationKind::Membership: return "membership";
    case RelationKind::FieldHierarchy: return "hierarchy";
    case RelationKind::Cooccurrence: return "cooccurrence";
  }
  return "unknown";
}

std::optional<RelationKind> parse_relation_kind(std::string_view name) {
  for (RelationKind k : kAllRelationKinds) {
    if (relation_name(k) == name) return k;
  }
  return std::nullopt;
}

RelationSet parse_relation_set(std::string_view names) {
  RelationSet set;
  std::size_t start = 0;
  while (start <= names.size()) {
    std::size_t comma = names.find(',', start);
    std::string_view item = names.substr(
        start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (!item.empty()) {
      auto kind = parse_relation_kind(item);
      if (!kind) throw Error("unknown relation kind: " + std::string(item));
      set.insert(*kind);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return set;
}

std::string relation_set_to_string(RelationSet set) {
  std::string out;
  for (RelationKind k : kAllRelationKinds) {
    if (!set.contains(k)) continue;
    if (!out.empty()) out += ',';
    out += relation_name(k);
  }
  return out;
}

}  // namespace uiksn
