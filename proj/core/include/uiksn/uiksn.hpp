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

#ifndef UIKSN_UIKSN_HPP
#define UIKSN_UIKSN_HPP

#include "uiksn/analysis.hpp"
#include "uiksn/assemble.hpp"
#include "uiksn/clustering.hpp"
#include "uiksn/corpus.hpp"
#include "uiksn/errors.hpp"
#include "uiksn/export.hpp"
#include "uiksn/keywords.hpp"
#include "uiksn/network_view.hpp"
#include "uiksn/node_id.hpp"
#include "uiksn/pipeline.hpp"
#include "uiksn/serialize.hpp"
#include "uiksn/super_network.hpp"
#include "uiksn/tokenizer.hpp"
#include "uiksn/validate.hpp"
#include "uiksn/wkn.hpp"

#endif  // UIKSN_UIKSN_HPP
