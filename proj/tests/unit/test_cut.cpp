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
#include "sdm/cut.hpp"

using namespace sdm;

namespace {

std::vector<int> sizes(const ProofTree& t) {
  std::vector<int> out;
  for (const auto& f : cut_formulas(t)) out.push_back(f.size());
  return out;
}

ProofTree id(const char* atom) {
  Subst s;
  s.set("p", Term::atom(atom));
  return apply_rule("Id", {}, s);
}

}  // namespace

TEST_CASE("multiset order") {
  CHECK(multiset_less({2, 2, 1}, {3}));
  CHECK(multiset_less({}, {1}));
  CHECK(multiset_less({3, 1}, {3, 2}));
  CHECK_FALSE(multiset_less({3}, {3}));
  CHECK_FALSE(multiset_less({4}, {3}));
  CHECK_FALSE(multiset_less({3, 3}, {3}));
}

TEST_CASE("atomic cut disappears") {
  ProofTree t = apply_rule("Cut_L", {id("p"), id("p")});
  ProofTree r = reduce_cut(t, {});
  CHECK(r.rule == "Id");
  CHECK(r.conclusion == t.conclusion);
  CHECK(cut_formulas(r).empty());
}

TEST_CASE("conjunction cut keeps the conclusion") {
  Term p = Term::atom("p"), q = Term::atom("q");
  ProofTree right = apply_rule("and_R", {id("p"), id("q")});
  ProofTree left = apply_rule("and_L", {right});
  ProofTree t = apply_rule("Cut_L", {right, left});
  CHECK(render(t.conclusion) == "(seq (hand p q) (and p q))");
  ProofTree r = reduce_cut(t, {});
  CHECK(r.conclusion == t.conclusion);
  CHECK(check_proof(r, System::SM).accepted);
  auto cuts = cut_formulas(r);
  REQUIRE(cuts.size() == 2);
  CHECK((cuts[0] == p || cuts[0] == q));
  CHECK(multiset_less(sizes(r), sizes(t)));
}

TEST_CASE("box cut goes through the adjunction with a cut on the argument") {
  auto inst = cut_instances(CutPattern::Box, 1, 3);
  const ProofTree& cut = at(inst[0].proof, inst[0].cut);
  Term alpha = cut.premises[0].conclusion.suc.child(0);
  ProofTree r = reduce_cut(inst[0].proof, inst[0].cut);
  const ProofTree& n = at(r, inst[0].cut);
  CHECK(n.rule == "adj_LD.up");
  CHECK(n.premises[0].rule == "Cut_D");
  CHECK(cut_formulas(r) == std::vector<Term>{alpha});
}

TEST_CASE("non-principal and non-cut nodes are rejected") {
  ProofTree t = apply_rule("Cut_L", {id("p"), id("p")});
  CHECK_THROWS_AS(reduce_cut(t, {0}), CutError);
  CHECK_THROWS_AS(reduce_cut(t, {5}), CutError);
  Subst z;
  z.set("Z", Term::atom("q"));
  ProofTree w = apply_rule("W_L_and", {id("p")}, z);   // (p , q) |- p
  ProofTree c = apply_rule("Cut_L", {w, id("p")});
  CHECK_THROWS_WITH_AS(reduce_cut(c, {}),
                       doctest::Contains("not principal"), CutError);
}

TEST_CASE("generated principal cuts reduce") {
  for (int i = 0; i < kCutPatternCount; ++i) {
    auto p = static_cast<CutPattern>(i);
    INFO(cut_pattern_name(p));
    for (const auto& inst : cut_instances(p, 30, 11)) {
      REQUIRE(check_proof(inst.proof, System::SM).accepted);
      ProofTree r = reduce_cut(inst.proof, inst.cut);
      CHECK(r.conclusion == inst.proof.conclusion);
      CHECK(check_proof(r, System::SM).accepted);
      CHECK(multiset_less(sizes(r), sizes(inst.proof)));
      // new cut formulas are proper subformulas of the old one
      Term old = at(inst.proof, inst.cut).premises[0].conclusion.suc;
      for (const auto& f : cut_formulas(r)) CHECK(f.size() < old.size());
    }
  }
}
