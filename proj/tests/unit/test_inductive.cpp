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

#include <functional>
#include <random>

#include "doctest.h"
#include "sdm/inductive.hpp"

using namespace sdm;

namespace {

Term f(const char* text) { return parse_infix_term(text); }

void flip_all(SignedTree* t) {
  t->sign = opposite(t->sign);
  t->roles = node_roles(t->node.op(), t->sign);
  for (auto& k : t->kids) flip_all(&k);
}

bool same(const SignedTree& a, const SignedTree& b) {
  if (a.node != b.node || a.sign != b.sign || a.roles != b.roles ||
      a.kids.size() != b.kids.size())
    return false;
  for (std::size_t i = 0; i < a.kids.size(); ++i)
    if (!same(a.kids[i], b.kids[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("sign propagation") {
  SignedTree t = signed_tree(f("p and q"), Sign::Plus);
  CHECK(t.roles == (kSRA | kSLR));
  CHECK(t.kids[0].sign == Sign::Plus);
  CHECK(t.kids[1].sign == Sign::Plus);

  SignedTree n = signed_tree(f("sim one"), Sign::Minus);
  CHECK(n.kids[0].sign == Sign::Plus);

  SignedTree b = signed_tree(f("box one"), Sign::Plus);
  CHECK(b.roles == kSRA);
  CHECK(b.kids[0].sign == Sign::Plus);
  CHECK(signed_tree(f("box one"), Sign::Minus).roles == kSLR);
  CHECK(signed_tree(f("p or q"), Sign::Plus).roles == (kDeltaAdjoint | kSRR));
  CHECK(signed_tree(f("p"), Sign::Plus).roles == 0);
}

TEST_CASE("negative tree mirrors the positive one") {
  for (const auto& t : mt_formulas(3, {"p", "q"}, Sort::K)) {
    SignedTree pos = signed_tree(t, Sign::Plus);
    flip_all(&pos);
    CHECK(same(pos, signed_tree(t, Sign::Minus)));
  }
}

TEST_CASE("heterogeneous conditions are analytic inductive") {
  const std::pair<const char*, const char*> ineqs[] = {
      {"p", "box circ p"},                          // H6a
      {"box circ p", "p"},                          // H6b
      {"box sim circ p and p", "bot"},              // H7
      {"top", "box sim circ p or box circ p"},      // H8 with alpha = circ p
  };
  for (const auto& [l, r] : ineqs) {
    INFO(l, " <= ", r);
    auto w = is_analytic_inductive(f(l), f(r));
    REQUIRE(w.has_value());
    std::string why;
    CHECK(check_witness(f(l), f(r), *w, &why));
    CHECK(why.empty());
  }
  auto w = is_analytic_inductive(f("p and q"), f("p"));
  REQUIRE(w.has_value());
  CHECK(check_witness(f("p and q"), f("p"), *w));
}

TEST_CASE("witness checker rejects tampering") {
  Term l = f("p or q"), r = f("p");
  auto w = is_analytic_inductive(l, r);
  REQUIRE(w.has_value());
  InductiveWitness bad = *w;
  bad.omega.push_back({0, 0});
  CHECK_FALSE(check_witness(l, r, bad));
  bad = *w;
  bad.branches.pop_back();
  CHECK_FALSE(check_witness(l, r, bad));
  bad = *w;
  bad.epsilon.pop_back();
  CHECK_FALSE(check_witness(l, r, bad));
}

TEST_CASE("a non-good branch is rejected") {
  // +box, +sim, -circ, then -box: Skeleton below a PIA-only node
  Term l = f("box sim circ box circ p");
  CHECK_FALSE(is_analytic_inductive(l, f("p")).has_value());
  CHECK_FALSE(brute_force_inductive(l, f("p")));
}

TEST_CASE("SRR side condition needs the dependency order") {
  // the critical branch to q passes +or as SRR with sibling +p
  Term l = f("box circ (p or q)");
  Term r = f("q");
  auto w = is_analytic_inductive(l, r);
  REQUIRE(w.has_value());
  CHECK(check_witness(l, r, *w));
  CHECK(brute_force_inductive(l, r));
  // p and q both occur on both sides of an SRR node: no order works
  Term l2 = f("box circ (p or q) and box circ (q or p)");
  CHECK(is_analytic_inductive(l2, f("p and q")).has_value() ==
        brute_force_inductive(l2, f("p and q")));
}

TEST_CASE("classifier agrees with the oracle on one variable, height 2") {
  int yes = 0, no = 0;
  for (Sort s : {Sort::DL, Sort::K}) {
    auto fs = mt_formulas(2, {"p"}, s);
    for (const auto& a : fs)
      for (const auto& b : fs) {
        auto w = is_analytic_inductive(a, b);
        INFO(render(a), " <= ", render(b));
        CHECK(w.has_value() == brute_force_inductive(a, b));
        if (w) {
          CHECK(check_witness(a, b, *w));
          ++yes;
        } else {
          ++no;
        }
      }
  }
  CHECK(yes > 0);
  // a single connective per side never breaks a branch
  CHECK(no == 0);
}

TEST_CASE("classifier agrees with the oracle on deeper random inequalities") {
  std::mt19937 rng(20261016);
  auto pick = [&](int n) {
    return std::uniform_int_distribution<int>(0, n - 1)(rng);
  };
  std::function<Term(Sort, int)> gen = [&](Sort s, int h) -> Term {
    if (s == Sort::DL) {
      if (h <= 1 || pick(5) == 0)
        return pick(4) == 0 ? Term::constant(Op::Top)
                            : Term::atom(pick(2) ? "p" : "q");
      switch (pick(3)) {
        case 0: return Term::binary(Op::And, gen(s, h - 1), gen(s, h - 1));
        case 1: return Term::binary(Op::Or, gen(s, h - 1), gen(s, h - 1));
        default: return Term::unary(Op::Box, gen(Sort::K, h - 1));
      }
    }
    if (h <= 1) return Term::constant(pick(2) ? Op::One : Op::Zero);
    switch (pick(5)) {
      case 0: return Term::binary(Op::Cap, gen(s, h - 1), gen(s, h - 1));
      case 1: return Term::binary(Op::Cup, gen(s, h - 1), gen(s, h - 1));
      case 2: return Term::unary(Op::Sim, gen(s, h - 1));
      default: return Term::unary(Op::Circ, gen(Sort::DL, h - 1));
    }
  };
  int no = 0;
  for (int n = 0; n < 2000; ++n) {
    Sort s = pick(2) ? Sort::DL : Sort::K;
    Term a = gen(s, 7), b = gen(s, 7);
    auto w = is_analytic_inductive(a, b);
    INFO(render(a), " <= ", render(b));
    CHECK(w.has_value() == brute_force_inductive(a, b));
    if (w)
      CHECK(check_witness(a, b, *w));
    else
      ++no;
  }
  CHECK(no > 0);
}
