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

// Hand-transcribed derivations of the translated axioms, and the small
// gap-filling search used to replay them line by line.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdm/proof.hpp"

namespace sdm {

// Backward breadth-first search over unary non-cut rules from `target` down
// to from.conclusion, at most `max_steps` rules. Returns `from` extended to
// conclude `target`.
std::optional<ProofTree> connect(const ProofTree& from, const Sequent& target,
                                 System s, int max_steps);

// Replays a derivation written as a list of infix sequent lines. Consecutive
// lines are joined by the shortest rule chain found by `connect`.
class Transcript {
 public:
  Transcript(System s, Subst inst, int max_gap = 4);

  Sequent line(const std::string& text) const;
  // Leaf: an identity on a formula, or a zero-premise rule.
  ProofTree start(const std::string& text);
  ProofTree step(ProofTree from, const std::vector<std::string>& lines);
  // Binary rule on l and r, then the lines that follow.
  ProofTree join(ProofTree l, ProofTree r,
                 const std::vector<std::string>& lines);

  // Lines that needed more than one rule, with the rules used.
  const std::vector<std::string>& gaps() const { return gaps_; }

 private:
  ProofTree reach(ProofTree from, const std::string& text);

  System sys_;
  Subst inst_;
  int max_gap_;
  std::vector<std::string> gaps_;
};

struct AxiomDerivation {
  std::string id;       // "i" .. "xi"
  std::string axiom;    // single-type axiom, infix with A and B
  System system;
  Sequent goal;         // translated axiom
  ProofTree proof;
  std::vector<std::string> gaps;
};

// The eleven derivations with A and B instantiated to the given DL
// formulas.
std::vector<AxiomDerivation> axiom_derivations(const Term& a, const Term& b);

// The translated axiom sequents alone.
std::vector<std::pair<std::string, Sequent>> axiom_goals(const Term& a,
                                                         const Term& b);

}  // namespace sdm
