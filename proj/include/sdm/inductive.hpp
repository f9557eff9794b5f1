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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdm/syntax.hpp"

namespace sdm {

enum class Sign : std::uint8_t { Plus, Minus };
inline Sign opposite(Sign s) {
  return s == Sign::Plus ? Sign::Minus : Sign::Plus;
}

// Node roles; a node may carry several.
enum Role : unsigned {
  kDeltaAdjoint = 1u << 0,
  kSLR = 1u << 1,
  kSRA = 1u << 2,
  kSRR = 1u << 3,
};
inline constexpr unsigned kSkeleton = kDeltaAdjoint | kSLR;
inline constexpr unsigned kPIA = kSRA | kSRR;

unsigned node_roles(Op op, Sign s);  // 0 for variables and constants
std::string role_names(unsigned roles);
// Polarity of argument i of a connective: true when it flips the sign.
bool flips(Op op, int i);

struct SignedTree {
  Term node;
  Sign sign = Sign::Plus;
  unsigned roles = 0;
  std::vector<SignedTree> kids;
};

SignedTree signed_tree(const Term& t, Sign s);

enum class Polarity : std::uint8_t { One, Partial };

struct BranchCut {
  int tree = 0;           // 0 for +lhs, 1 for -rhs
  std::vector<int> path;  // child indices from the root to the leaf
  // Nodes at path depth >= pia_from form the PIA part; the rest is
  // Skeleton. The leaf itself sits at depth path.size().
  int pia_from = 0;
};

struct InductiveWitness {
  std::vector<std::string> vars;
  std::vector<Polarity> epsilon;
  std::vector<std::pair<int, int>> omega;  // (k, i) means p_k < p_i
  std::vector<BranchCut> branches;
};

std::optional<InductiveWitness> is_analytic_inductive(const Term& lhs,
                                                      const Term& rhs);

// Clause by clause recheck of a witness.
bool check_witness(const Term& lhs, const Term& rhs,
                   const InductiveWitness& w, std::string* why = nullptr);

// Exhaustive search over all order types, all strict partial orders and
// all branch splits.
bool brute_force_inductive(const Term& lhs, const Term& rhs);

std::string render(const InductiveWitness& w);

// Multi-type formulas of the given sort up to a height, over DL atoms.
std::vector<Term> mt_formulas(int max_height,
                              const std::vector<std::string>& atoms,
                              Sort sort);

}  // namespace sdm
