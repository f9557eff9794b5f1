// Copyright 2026 The sdmw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON encoding of algebras and reports.

#pragma once

#include <string>

#include "json.hpp"
#include "sdm/algebra.hpp"

namespace sdm {

using Json = nlohmann::ordered_json;

// Throws AlgebraError on missing fields or wrong shapes.
SmaTables sma_tables_from_json(const Json& j);
HeteroTables hetero_tables_from_json(const Json& j);
bool is_hetero_json(const Json& j);

Json to_json(const FiniteLattice& l);
Json to_json(const FiniteSMA& a);
Json to_json(const FiniteDMA& d);
Json to_json(const HeteroAlgebra& hh);
Json to_json(const Report& r);

Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace sdm
