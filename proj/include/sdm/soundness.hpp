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

#include "sdm/algebra.hpp"
#include "sdm/rules.hpp"
#include "sdm/semantics.hpp"

namespace sdm {

struct RuleSoundness {
  bool sound = true;
  // Values of the schema's metavariables (L or D elements by sort) under
  // which every premise holds and the conclusion fails.
  Valuation counter;
};

// Checks the quasi-inequality read off the schema, with structural
// connectives interpreted by position.
RuleSoundness rule_sound(const RuleSchema& r, const HeteroAlgebra& hh);

}  // namespace sdm
