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

// Rule schemas of the display calculi and schema matching.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdm/syntax.hpp"

namespace sdm {

enum class System : std::uint8_t { SM, LQM, UQM, DP, AP, WS };
inline constexpr int kSystemCount = 6;

const char* system_name(System s);  // "sm", "lqm", ...
// Throws std::invalid_argument for unknown names; case-insensitive.
System parse_system(const std::string& name);
// Heterogeneous-algebra flags (HFlag bits) a system's rules are sound for.
unsigned system_flags(System s);

struct RuleSchema {
  std::string name;
  std::vector<Sequent> premises;
  Sequent conclusion;
  unsigned systems = 0;  // bit i set for System(i)
  bool is_cut = false;

  bool in(System s) const { return systems >> static_cast<int>(s) & 1u; }
};

// The full catalogue, every system.
const std::vector<RuleSchema>& all_rules();
std::vector<RuleSchema> system_rules(System s);
// Looks a rule up by name within a system; null when absent.
const RuleSchema* find_rule(System s, const std::string& name);
const RuleSchema* find_rule(const std::string& name);

// Bindings of metavariable names.
class Subst {
 public:
  const Term* get(const std::string& name) const;
  void set(const std::string& name, Term t);
  std::size_t size() const { return items_.size(); }
  const std::vector<std::pair<std::string, Term>>& items() const {
    return items_;
  }

 private:
  std::vector<std::pair<std::string, Term>> items_;
};

struct MatchFailure {
  std::string message;  // empty on success
};

// Extends `s` so that instantiate(p, s) == t. On failure returns a reason
// ("metavariable X bound inconsistently", shape or kind mismatch) and leaves
// `s` in an unspecified state.
bool match(const Term& p, const Term& t, Subst* s, std::string* why = nullptr);
bool match(const Sequent& p, const Sequent& t, Subst* s,
           std::string* why = nullptr);

// Replaces metavariables; unbound ones are left in place.
Term instantiate(const Term& p, const Subst& s);
Sequent instantiate(const Sequent& p, const Subst& s);

}  // namespace sdm
