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

// Enumeration of finite semi De Morgan algebras up to isomorphism.

#pragma once

#include <vector>

#include "sdm/algebra.hpp"

namespace sdm {

inline constexpr int kMaxEnumerateSize = 8;

// Every distributive lattice with 2..max_size elements, up to isomorphism,
// built as the downset lattices of finite posets. Ordered by size.
std::vector<FiniteLattice> distributive_lattices(int max_size);

// Lattice automorphisms, identity first.
std::vector<std::vector<int>> automorphisms(const FiniteLattice& l);

// Every SMA on a lattice of at most max_size elements whose variety flags
// include `variety`, one per isomorphism class. Deterministic order.
// Throws AlgebraError when max_size exceeds kMaxEnumerateSize.
std::vector<FiniteSMA> enumerate(int max_size, unsigned variety = 0);

// All SMA negations on one lattice, one per isomorphism class.
std::vector<std::vector<int>> sma_negations(const FiniteLattice& l,
                                            unsigned variety = 0);

}  // namespace sdm
