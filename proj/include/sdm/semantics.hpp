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

// Evaluation of extended terms in heterogeneous algebras, validity of
// sequents, and the single-type semantics used as a reference.

#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sdm/algebra.hpp"
#include "sdm/syntax.hpp"

namespace sdm {

// Atom (or metavariable) name to element index. DL names index into L,
// K names into D.
using Valuation = std::map<std::string, int>;

int eval(const ExtendedTerm& t, const HeteroAlgebra& hh, const Valuation& v);

// Postfix form of an extended term with variables numbered in order of
// first occurrence; used where the same term is evaluated many times.
class Program {
 public:
  struct Var {
    std::string name;
    Sort sort;
  };

  Program() = default;
  // Variables already present in `vars` keep their index.
  void append(const ExtendedTerm& t);
  // Evaluates the i-th appended term.
  int run(int i, const HeteroAlgebra& hh, const int* vals) const;
  const std::vector<Var>& vars() const { return vars_; }
  int var_index(const std::string& name, Sort sort);

 private:
  struct Instr {
    XOp op;
    int arg;  // variable index for Var
  };
  void emit(const ExtendedTerm& t, std::vector<Instr>* code);
  std::vector<Var> vars_;
  std::vector<std::vector<Instr>> code_;
};

struct Validity {
  bool valid = true;
  Valuation counter;  // set when !valid
  int lhs = -1, rhs = -1;
};

// Atoms per sequent are capped so that exhaustive valuation stays small.
inline constexpr int kMaxValidateAtoms = 4;

// Valid iff the precedent reading of the antecedent is below the succedent
// reading of the succedent for every valuation. Throws AlgebraError when the
// sequent has more than kMaxValidateAtoms atoms.
Validity validate(const Sequent& s, const HeteroAlgebra& hh);

// Single-type reference semantics: negation read off the neg table.
int eval(const Formula& f, const FiniteSMA& a, const Valuation& v);
bool valid(const Formula& lhs, const Formula& rhs, const FiniteSMA& a,
           Valuation* counter = nullptr);

// Enumerates every assignment of `sizes[i]` values to slot i, calling `f`
// until it returns false. Returns false iff stopped early.
bool for_each_assignment(const std::vector<int>& sizes,
                         const std::function<bool(const std::vector<int>&)>& f);

}  // namespace sdm
