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
#include "sdm/derivations.hpp"
#include "sdm/enumerate.hpp"
#include "sdm/search.hpp"
#include "sdm/semantics.hpp"

using namespace sdm;

namespace {

void expect_found(const Sequent& g, System s, int depth) {
  SearchResult r = search(g, s, {depth, 500000});
  INFO(render(g), " in ", system_name(s));
  REQUIRE(r.status == SearchStatus::Found);
  REQUIRE(r.proof.has_value());
  CHECK(r.proof->conclusion == g);
  CHECK(static_cast<int>(r.proof->depth()) <= depth);
  CheckReport c = check_proof(*r.proof, s);
  CHECK(c.accepted);
  CHECK(c.cut_free);
}

std::vector<HeteroAlgebra> algebras_of(System s) {
  std::vector<HeteroAlgebra> out;
  for (const auto& a : enumerate(5)) {
    HeteroAlgebra hh = heterogenize(a);
    if ((hh.flags & system_flags(s)) == system_flags(s))
      out.push_back(std::move(hh));
  }
  return out;
}

}  // namespace

TEST_CASE("identity axiom is a single node") {
  SearchResult r = search(parse_sequent("(seq p p)"), System::SM);
  REQUIRE(r.status == SearchStatus::Found);
  CHECK(r.proof->rule == "Id");
  CHECK(r.proof->size() == 1);
}

TEST_CASE("top entails box sim circ bot within depth 20") {
  expect_found(parse_sequent("(seq htop (box (sim (circ bot))))"), System::SM,
               20);
}

TEST_CASE("double negation elimination is refuted in SM") {
  Sequent g = parse_infix_sequent("box sim circ box sim circ p |- p");
  SearchResult r = search(g, System::SM);
  CHECK(r.status == SearchStatus::Refuted);
  CHECK_FALSE(r.proof.has_value());
  CHECK(r.refutation.find("fails on test algebra") != std::string::npos);
  // but it holds with the upper quasi De Morgan rule
  expect_found(g, System::UQM, 40);
}

TEST_CASE("budget exhaustion is not a refutation") {
  Sequent g = parse_infix_sequent(
      "box sim circ box sim circ p and box sim circ box sim circ q |- "
      "box sim circ box sim circ (p and q)");
  SearchResult r = search(g, System::SM, {40, 3});
  CHECK(r.status == SearchStatus::Exhausted);
  CHECK(r.refutation.empty());
}

TEST_CASE("translated axioms are found in their systems") {
  for (const auto& d :
       axiom_derivations(Term::atom("p"), Term::atom("q"))) {
    expect_found(d.goal, d.system, 40);
    // extension axioms are refuted below their system
    if (d.system != System::SM) {
      SearchResult r = search(d.goal, System::SM);
      CHECK(r.status == SearchStatus::Refuted);
    }
  }
}

TEST_CASE("identities up to height 2") {
  for (const auto& f : formulas_up_to(2, {"p", "q"})) {
    Term t = translate(f);
    expect_found(Sequent{t, t}, System::SM, 40);
  }
}

TEST_CASE("found sequents are valid on the test algebras") {
  std::vector<Sequent> goals;
  for (const auto& d : axiom_derivations(Term::atom("p"), Term::atom("q")))
    goals.push_back(d.goal);
  for (const auto& f : formulas_up_to(2, {"p"})) {
    Term t = translate(f);
    goals.push_back(Sequent{t, t});
  }
  for (int si = 0; si < kSystemCount; ++si) {
    System s = static_cast<System>(si);
    auto algs = algebras_of(s);
    REQUIRE(!algs.empty());
    for (const auto& g : goals) {
      SearchResult r = search(g, s, {40, 20000});
      if (r.status != SearchStatus::Found) continue;
      for (const auto& hh : algs) CHECK(validate(g, hh).valid);
    }
  }
}

TEST_CASE("test algebras carry the system flags") {
  for (int si = 0; si < kSystemCount; ++si) {
    System s = static_cast<System>(si);
    const auto& models = search_models(s);
    CHECK(!models.empty());
    for (const auto& hh : models)
      CHECK((hh.flags & system_flags(s)) == system_flags(s));
  }
}
