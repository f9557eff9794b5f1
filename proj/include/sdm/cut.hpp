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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdm/proof.hpp"

namespace sdm {

class CutError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rewrites the cut at `node`, whose cut formula must be introduced by the
// last rule of both premises. Throws CutError otherwise.
ProofTree reduce_cut(const ProofTree& t, const ProofPath& node);

// Cut formulas of all cut nodes, in preorder.
std::vector<Term> cut_formulas(const ProofTree& t);

// Strict multiset ordering over the usual order on integers.
bool multiset_less(std::vector<int> a, std::vector<int> b);

enum class CutPattern : std::uint8_t {
  Atom, Top, Bot, One, Zero, Sim, And, Or, Cap, Cup, Box, Circ,
};
inline constexpr int kCutPatternCount = 12;
const char* cut_pattern_name(CutPattern p);

struct CutInstance {
  ProofTree proof;
  ProofPath cut;  // path to the principal cut
};

// Random proofs in SM ending in a principal cut of the given shape,
// possibly under a few structural steps.
std::vector<CutInstance> cut_instances(CutPattern p, int count,
                                       std::uint32_t seed);

}  // namespace sdm
