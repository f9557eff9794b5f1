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
#include "sdm/algebra.hpp"
#include "sdm/algebra_io.hpp"
#include "sdm/enumerate.hpp"
#include "sdm/semantics.hpp"

using namespace sdm;

namespace {

LeqTable chain_leq(int n) { return FiniteLattice::chain(n).leq_table(); }

FiniteSMA chain_sma(std::vector<int> neg) {
  SmaCheck c = check_sma({chain_leq(static_cast<int>(neg.size())), neg});
  REQUIRE(c.sma.has_value());
  return *c.sma;
}

// Brute force: every order on n elements with 0 bottom and n-1 top that is
// a distributive lattice, deduplicated by isomorphism.
std::vector<FiniteLattice> brute_lattices(int n) {
  std::vector<FiniteLattice> out;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a < n - 1; ++a)
    for (int b = 1; b < n - 1; ++b)
      if (a != b) pairs.push_back({a, b});
  for (unsigned m = 0; m < (1u << pairs.size()); ++m) {
    LeqTable leq(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a) {
      leq[a][a] = true;
      leq[0][a] = true;
      leq[a][n - 1] = true;
    }
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (m >> i & 1u) leq[pairs[i].first][pairs[i].second] = true;
    Report r;
    auto l = FiniteLattice::from_leq(leq, &r, "x");
    if (!l) continue;
    bool dup = false;
    for (const auto& o : out) dup = dup || find_lattice_iso(o, *l).has_value();
    if (!dup) out.push_back(*l);
  }
  return out;
}

// Brute force: all n^n unary tables filtered by S2-S5, up to isomorphism.
int brute_sma_count(const FiniteLattice& l) {
  int n = l.size();
  std::vector<FiniteSMA> found;
  std::vector<int> sizes(n, n);
  for_each_assignment(sizes, [&](const std::vector<int>& neg) {
    SmaCheck c = check_sma({l.leq_table(), neg});
    if (!c.sma) return true;
    for (const auto& o : found)
      if (find_iso(o, *c.sma)) return true;
    found.push_back(*c.sma);
    return true;
  });
  return static_cast<int>(found.size());
}

}  // namespace

TEST_CASE("check_sma examples") {
  CHECK(check_sma({chain_leq(2), {1, 0}}).sma.has_value());
  CHECK(check_sma({chain_leq(3), {2, 0, 0}}).sma.has_value());
  SmaCheck bad = check_sma({chain_leq(3), {0, 0, 0}});
  CHECK(!bad.sma);
  const Check* f = bad.report.first_failure();
  REQUIRE(f != nullptr);
  CHECK(f->name == "S2");
  CHECK(f->detail == "at bottom");
  CHECK(f->witness == std::vector<int>{0});
  CHECK_THROWS_AS(check_sma({chain_leq(3), {2, 0}}), AlgebraError);
  CHECK_THROWS_AS(check_sma({chain_leq(3), {2, 0, 7}}), AlgebraError);
  // A non-distributive lattice (M3) fails S1.
  LeqTable m3(5, std::vector<bool>(5, false));
  for (int a = 0; a < 5; ++a) m3[a][a] = m3[0][a] = m3[a][4] = true;
  SmaCheck nd = check_sma({m3, {4, 0, 0, 0, 0}});
  CHECK(nd.report.first_failure()->name == "S1");
}

TEST_CASE("classify examples") {
  CHECK(classify(chain_sma({2, 0, 0})) == (kLQMA | kDPL | kAPL | kWSA));
  CHECK(classify(chain_sma({2, 1, 0})) == (kLQMA | kUQMA | kDMA));
  CHECK(classify(chain_sma({1, 0})) == 0x7fu);
  CHECK(variety_names(kLQMA | kDPL | kAPL | kWSA) == "LQMA DPL APL WSA");
  CHECK(parse_variety("lqma,DPL") == (kLQMA | kDPL));
  CHECK_THROWS_AS(parse_variety("XYZ"), AlgebraError);
}

TEST_CASE("kernel examples") {
  Kernel k = kernel(chain_sma({2, 0, 0}));
  CHECK(k.e == std::vector<int>{0, 2});
  CHECK(k.k.star == std::vector<int>{1, 0});
  CHECK(k.h[1] == 1);
  CHECK(k.k.boolean);
  Kernel k2 = kernel(chain_sma({2, 1, 0}));
  CHECK(k2.e == std::vector<int>{0, 1, 2});
  CHECK(k2.k.star == std::vector<int>{2, 1, 0});
  Kernel k3 = kernel(chain_sma({1, 0}));
  CHECK(k3.k.size() == 2);
}

TEST_CASE("heterogenize, check_hetero and dehetero") {
  FiniteSMA pc = chain_sma({2, 0, 0});
  HeteroAlgebra hh = heterogenize(pc);
  CHECK((hh.flags & kH7) != 0);
  // e(h(m)*) and m meet at bottom.
  CHECK(hh.L.meet(hh.e[hh.D.star[hh.h[1]]], 1) == 0);
  CHECK(dehetero(hh).neg == pc.neg);

  HeteroAlgebra two = heterogenize(chain_sma({1, 0}));
  CHECK(two.e == std::vector<int>{0, 1});
  CHECK(two.h == std::vector<int>{0, 1});
  CHECK(two.D.boolean);

  HeteroAlgebra km = heterogenize(chain_sma({2, 1, 0}));
  CHECK(km.h == std::vector<int>{0, 1, 2});
  HeteroTables t = tables_of(km);
  t.h[1] = 0;
  HeteroCheck c = check_hetero(t);
  CHECK(!c.hh);
  CHECK(c.report.find("H5") != nullptr);
  CHECK(!c.report.find("H5")->ok);

  HeteroTables boolean2{chain_leq(2), chain_leq(2), {1, 0}, {0, 1}, {0, 1}};
  HeteroCheck bc = check_hetero(boolean2);
  REQUIRE(bc.hh);
  CHECK(classify(dehetero(*bc.hh)) == 0x7fu);
}

TEST_CASE("find_iso") {
  FiniteSMA pc = chain_sma({2, 0, 0});
  auto id = find_iso(pc, dehetero(heterogenize(pc)));
  REQUIRE(id);
  CHECK(*id == std::vector<int>{0, 1, 2});
  CHECK(!find_iso(pc, chain_sma({2, 1, 0})));
}

TEST_CASE("derived operations") {
  HeteroAlgebra two = heterogenize(chain_sma({1, 0}));
  CHECK(two.ops.imp[1 * 2 + 0] == 0);
  CHECK(two.ops.imp[0 * 2 + 0] == 1);
  CHECK(two.ops.imp[0 * 2 + 1] == 1);
  HeteroAlgebra pc = heterogenize(chain_sma({2, 0, 0}));
  CHECK(pc.ops.imp[1 * 3 + 0] == 0);
  CHECK(pc.ops.eleft[1] == 1);
}

TEST_CASE("eval and validate") {
  HeteroAlgebra pc = heterogenize(chain_sma({2, 0, 0}));
  auto rd = [](const char* s) {
    return operational_reading(parse_term(s, Sort::DL), Position::Precedent);
  };
  CHECK(eval(rd("(box (circ p))"), pc, {{"p", 1}}) == 2);
  CHECK(eval(rd("top"), pc, {}) == pc.L.top());
  CHECK(eval(rd("(box (sim (circ p)))"), pc, {{"p", 1}}) == 0);
  CHECK_THROWS_AS(eval(rd("p"), pc, {}), AlgebraError);

  CHECK(validate(parse_sequent("(seq bot p)"), pc).valid);
  Validity v = validate(
      parse_sequent("(seq (box (sim (circ (box (sim (circ p)))))) p)"), pc);
  CHECK(!v.valid);
  CHECK(v.counter.at("p") == 1);
  CHECK(v.lhs == 2);
}

TEST_CASE("distributive lattice counts") {
  std::vector<int> expected = {1, 1, 2, 3, 5, 8, 15};
  auto ls = distributive_lattices(8);
  for (int n = 2; n <= 8; ++n) {
    int c = 0;
    for (const auto& l : ls) c += l.size() == n;
    CHECK(c == expected[n - 2]);
  }
  for (int n = 2; n <= 6; ++n) {
    int c = 0;
    for (const auto& l : ls) c += l.size() == n;
    CHECK(static_cast<int>(brute_lattices(n).size()) == c);
  }
  CHECK_THROWS_AS(distributive_lattices(9), AlgebraError);
}

TEST_CASE("enumerate agrees with unpruned brute force") {
  CHECK(enumerate(1).empty());
  auto two = enumerate(2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].neg == std::vector<int>{1, 0});
  int chains3 = 0;
  for (const auto& a : enumerate(3)) chains3 += a.size() == 3;
  CHECK(chains3 == 3);
  for (const auto& l : distributive_lattices(5))
    CHECK(static_cast<int>(sma_negations(l).size()) == brute_sma_count(l));
  // The variety filter agrees with classify.
  auto all = enumerate(5);
  auto dpl = enumerate(5, kDPL);
  int c = 0;
  for (const auto& a : all) c += (classify(a) & kDPL) != 0;
  CHECK(static_cast<int>(dpl.size()) == c);
}

TEST_CASE("properties over enumerated algebras") {
  for (const auto& a : enumerate(6)) {
    unsigned v = classify(a);
    if (v & (kAPL | kWSA)) CHECK((v & kDPL) != 0);
    HeteroAlgebra hh = heterogenize(a);
    auto id = find_iso(a, dehetero(hh));
    REQUIRE(id);
    for (int x = 0; x < a.size(); ++x) CHECK((*id)[x] == x);
    CHECK(find_iso(kernel(dehetero(hh)).k, hh.D).has_value());
    // Adjunction laws, checked independently of derived_ops.
    const auto& L = hh.L;
    const auto& K = hh.D.lat;
    int n = L.size(), m = K.size();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          CHECK(L.leq(L.meet(x, z), y) == L.leq(z, hh.ops.imp[x * n + y]));
          CHECK(L.leq(y, L.join(x, z)) == L.leq(hh.ops.coimp[x * n + y], z));
        }
    for (int g = 0; g < m; ++g)
      for (int x = 0; x < n; ++x) {
        CHECK(L.leq(hh.ops.hleft[g], x) == K.leq(g, hh.h[x]));
        CHECK(L.leq(x, hh.ops.hright[g]) == K.leq(hh.h[x], g));
        CHECK(K.leq(hh.ops.eleft[x], g) == L.leq(x, hh.e[g]));
      }
  }
}

TEST_CASE("validity is invariant under isomorphism") {
  std::mt19937 rng(3);
  std::vector<Sequent> seqs;
  for (const char* a : {"p", "(box (sim (circ p)))", "(and p q)",
                        "(box (circ p))", "(or (box (sim (circ q))) p)"})
    for (const char* b : {"q", "(box (sim (circ q)))", "(or p q)", "bot"})
      seqs.push_back(parse_sequent(std::string("(seq ") + a + " " + b + ")"));
  for (const auto& a : enumerate(5)) {
    int n = a.size();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    LeqTable leq(n, std::vector<bool>(n));
    std::vector<int> neg(n);
    for (int x = 0; x < n; ++x) {
      neg[perm[x]] = perm[a.neg[x]];
      for (int y = 0; y < n; ++y) leq[perm[x]][perm[y]] = a.lat.leq(x, y);
    }
    SmaCheck b = check_sma({leq, neg});
    REQUIRE(b.sma);
    REQUIRE(find_iso(a, *b.sma));
    HeteroAlgebra ha = heterogenize(a), hb = heterogenize(*b.sma);
    for (const auto& s : seqs)
      CHECK(validate(s, ha).valid == validate(s, hb).valid);
  }
}

TEST_CASE("json round trip") {
  FiniteSMA pc = chain_sma({2, 0, 0});
  SmaTables t = sma_tables_from_json(to_json(pc));
  CHECK(check_sma(t).sma->neg == pc.neg);
  HeteroAlgebra hh = heterogenize(pc);
  Json j = to_json(hh);
  HeteroCheck c = check_hetero(hetero_tables_from_json(j));
  REQUIRE(c.hh);
  CHECK(c.hh->e == hh.e);
  CHECK_THROWS_AS(sma_tables_from_json(parse_json_text("{\"leq\": 3}")),
                  AlgebraError);
  CHECK_THROWS_AS(parse_json_text("{"), AlgebraError);
}
