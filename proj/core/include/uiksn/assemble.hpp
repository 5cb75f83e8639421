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

#ifndef UIKSN_ASSEMBLE_HPP
#define UIKSN_ASSEMBLE_HPP

#include "uiksn/clustering.hpp"
#include "uiksn/corpus.hpp"
#include "uiksn/keywords.hpp"
#include "uiksn/super_network.hpp"
#include "uiksn/wkn.hpp"

namespace uiksn {

/// Assembles the full super-network from the pipeline stages: encoded
/// user/post layers, the keyword table (containment + q(K)), the WKN
/// (co-occurrence) and the field partition (membership, hierarchy, q(F)).
/// Computes q(U) as each user's (post, knowledge) incidence count. The
/// provenance is stored verbatim. Throws Error when the inputs are mutually
/// inconsistent (sizes or ids that do not line up, named in the message);
/// the result always satisfies validate() == {}.
///
/// An empty keyword table (zero keywords) yields a network with user and
/// post layers only.
SuperNetwork assemble_uiksn(const EncodedCorpus& encoded, const KeywordTable& table,
                            const Wkn& wkn, const FieldPartition& partition,
                            Provenance provenance = {});

}  // namespace uiksn

#endif  // UIKSN_ASSEMBLE_HPP
