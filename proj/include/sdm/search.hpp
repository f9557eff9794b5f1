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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sdm/algebra.hpp"
#include "sdm/proof.hpp"

namespace sdm {

struct SearchBudget {
  int max_depth = 40;
  std::size_t max_visited = 200000;
};

enum class SearchStatus : std::uint8_t { Found, Exhausted, Refuted };
const char* search_status_name(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<ProofTree> proof;
  std::size_t visited = 0;
  // Set when the goal fails on one of the test algebras of the system.
  std::string refutation;
};

// Backward cut-free search. Exhausted means the budget ran out; it does not
// mean the goal is underivable.
SearchResult search(const Sequent& goal, System s, const SearchBudget& b = {});

// Small heterogeneous algebras of the class of `s`, used to prune branches
// whose premises are not valid.
const std::vector<HeteroAlgebra>& search_models(System s);

}  // namespace sdm
