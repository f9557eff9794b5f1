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

#include "doctest.h"
#include "sdm/enumerate.hpp"
#include "sdm/soundness.hpp"

using namespace sdm;

namespace {

FiniteSMA chain_sma(std::vector<int> neg) {
  int n = static_cast<int>(neg.size());
  SmaCheck c = check_sma({FiniteLattice::chain(n).leq_table(), neg});
  REQUIRE(c.sma.has_value());
  return *c.sma;
}

std::vector<HeteroAlgebra> all_hetero(int max_size) {
  std::vector<HeteroAlgebra> out;
  for (const auto& a : enumerate(max_size)) out.push_back(heterogenize(a));
  return out;
}

}  // namespace

TEST_CASE("residuation is sound everywhere") {
  for (const auto& hh : all_hetero(4)) {
    CHECK(rule_sound(*find_rule("res_L_and.dn"), hh).sound);
    CHECK(rule_sound(*find_rule("res_L_and.up"), hh).sound);
  }
}

TEST_CASE("WS rule on the two three-element chains") {
  const RuleSchema& ws = *find_rule("WS");
  HeteroAlgebra pc = heterogenize(chain_sma({2, 0, 0}));
  CHECK((pc.flags & kH8) != 0);
  CHECK(rule_sound(ws, pc).sound);

  HeteroAlgebra km = heterogenize(chain_sma({2, 1, 0}));
  CHECK((km.flags & kH8) == 0);
  RuleSoundness r = rule_sound(ws, km);
  CHECK_FALSE(r.sound);
  CHECK(r.counter.at("X") == 1);
}

TEST_CASE("every schema is sound on its class") {
  auto algs = all_hetero(5);
  for (int si = 0; si < kSystemCount; ++si) {
    System s = static_cast<System>(si);
    unsigned need = system_flags(s);
    for (const auto& hh : algs) {
      if ((hh.flags & need) != need) continue;
      for (const auto& r : system_rules(s)) {
        RuleSoundness res = rule_sound(r, hh);
        INFO(r.name, " in ", system_name(s));
        CHECK(res.sound);
      }
    }
  }
}

TEST_CASE("extension rules fail outside their class") {
  auto algs = all_hetero(5);
  const std::pair<const char*, unsigned> ext[] = {
      {"LQM", kH6a}, {"UQM", kH6b}, {"res_B.dn", kBoolD},
      {"AP", kH7},   {"WS", kH8}};
  for (const auto& [name, flag] : ext) {
    bool failed = false;
    for (const auto& hh : algs)
      if ((hh.flags & flag) == 0 && !rule_sound(*find_rule(name), hh).sound)
        failed = true;
    INFO(name);
    CHECK(failed);
  }
}
