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

// Derivation trees, their JSON form, and the proof checker.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "sdm/rules.hpp"

namespace sdm {

struct ProofTree {
  Sequent conclusion;
  std::string rule;
  std::vector<ProofTree> premises;

  std::size_t size() const;   // node count
  std::size_t depth() const;  // a leaf has depth 1
};

// Path from the root: the i-th entry picks premises[i].
using ProofPath = std::vector<int>;

const ProofTree& at(const ProofTree& t, const ProofPath& path);
ProofTree replace_at(const ProofTree& t, const ProofPath& path, ProofTree sub);

struct Diagnostic {
  ProofPath path;
  std::string rule;
  std::string message;
};

struct CheckReport {
  bool accepted = false;
  std::vector<Diagnostic> diagnostics;
  bool cut_free = true;
  bool subformula = true;
};

CheckReport check_proof(const ProofTree& t, System s);

// Applies `rule` forward to the given premises; bindings not fixed by the
// premises (weakened structures, axiom parameters) come from `extra`.
// Throws std::invalid_argument when the premises do not fit the rule.
ProofTree apply_rule(const std::string& rule, std::vector<ProofTree> premises,
                     const Subst& extra = {});

// A^tau |- A^tau style identity for any multi-type formula, built by
// induction on the formula with Id at atoms. Uses rules common to every
// system.
ProofTree identity_proof(const Term& formula);

class ProofFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::ordered_json to_json(const ProofTree& t);
// Throws ProofFormatError on shape problems and ParseError on bad sequents.
ProofTree proof_from_json(const nlohmann::ordered_json& j);

std::string render_path(const ProofPath& p);

}  // namespace sdm
