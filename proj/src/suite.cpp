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
#include "sdm/suite.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "sdm/algebra.hpp"
#include "sdm/cut.hpp"
#include "sdm/derivations.hpp"
#include "sdm/enumerate.hpp"
#include "sdm/inductive.hpp"
#include "sdm/proof.hpp"
#include "sdm/search.hpp"
#include "sdm/semantics.hpp"
#include "sdm/soundness.hpp"

namespace sdm {

Profile parse_profile(const std::string& name) {
  if (name == "quick") return Profile::Quick;
  if (name == "full") return Profile::Full;
  throw std::invalid_argument("unknown profile '" + name + "'");
}

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  long count = 0;

  // Keeps the first failure only.
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string valuation_text(const Valuation& v) {
  std::ostringstream o;
  bool first = true;
  for (const auto& [k, x] : v) {
    o << (first ? "" : ", ") << k << "=" << x;
    first = false;
  }
  return o.str();
}

std::string proof_problem(const ProofTree& t, System s, bool need_cut_free) {
  CheckReport r = check_proof(t, s);
  if (!r.accepted) {
    const auto& d = r.diagnostics.front();
    return "rejected at " + render_path(d.path) + " (" + d.rule +
           "): " + d.message;
  }
  if (need_cut_free && !r.cut_free) return "uses cut";
  if (need_cut_free && !r.subformula) return "subformula property fails";
  return {};
}

Outcome axioms(Profile) {
  Outcome o;
  for (const auto& d : axiom_derivations(Term::atom("p"), Term::atom("q"))) {
    ++o.count;
    if (d.proof.conclusion != d.goal) {
      o.fail("(" + d.id + ") proves the wrong sequent");
      continue;
    }
    std::string why = proof_problem(d.proof, d.system, true);
    if (!why.empty())
      o.fail("(" + d.id + ") in " + system_name(d.system) + ": " + why);
  }
  o.detail = o.ok ? std::to_string(o.count) + " derivations accepted"
                  : o.detail;
  return o;
}

Outcome identities(Profile p) {
  Outcome o;
  int h = p == Profile::Full ? 3 : 2;
  auto fs = formulas_up_to(h, {"p", "q"});
  for (const Formula& f : fs) {
    Term t = translate(f);
    ProofTree pr = identity_proof(t);
    for (int si = 0; si < kSystemCount; ++si) {
      System s = static_cast<System>(si);
      ++o.count;
      if (pr.conclusion != Sequent{t, t}) {
        o.fail("wrong conclusion for " + render(f));
        break;
      }
      std::string why = proof_problem(pr, s, false);
      if (!why.empty())
        o.fail(render(f) + " in " + system_name(s) + ": " + why);
    }
  }
  if (o.ok)
    o.detail = std::to_string(fs.size()) + " formulas x " +
               std::to_string(kSystemCount) + " systems";
  return o;
}

bool flags_transfer(unsigned v, unsigned hf) {
  return ((v & kLQMA) != 0) == ((hf & kH6a) != 0) &&
         ((v & kUQMA) != 0) == ((hf & kH6b) != 0) &&
         ((v & kDPL) != 0) == ((hf & kBoolD) != 0) &&
         ((v & kAPL) != 0) == ((hf & kH7) != 0) &&
         ((v & kWSA) != 0) == ((hf & kH8) != 0);
}

bool s7(const FiniteSMA& a) {
  for (int x = 0; x < a.size(); ++x)
    if (a.lat.meet(a.neg[x], a.nn(x)) != a.lat.bot()) return false;
  return true;
}

Outcome equivalence(Profile p) {
  Outcome o;
  auto algs = enumerate(p == Profile::Full ? 6 : 5);
  for (std::size_t i = 0; i < algs.size(); ++i) {
    const FiniteSMA& a = algs[i];
    std::string tag = "algebra " + std::to_string(i) + ": ";
    ++o.count;
    unsigned v = classify(a);
    Kernel k = kernel(a);
    Report kr = check_dma(k.k.lat, k.k.star);
    for (const char* name : {"D1", "D2", "D3", "D4", "D5"})
      if (!kr.find(name)->ok) o.fail(tag + "kernel fails " + name);
    if ((v & kDPL) && !kr.find("B1")->ok) o.fail(tag + "DPL kernel fails B1");

    HeteroAlgebra hh = heterogenize(a);
    HeteroCheck hc = check_hetero(tables_of(hh));
    for (const char* name : {"H1", "H2a", "H3", "H4", "H5"}) {
      const Check* c = hc.report.find(name);
      if (!c || !c->ok) o.fail(tag + "A+ fails " + name);
    }
    if (!hc.hh || !flags_transfer(v, hc.flags) || hc.flags != hh.flags)
      o.fail(tag + "flags " + variety_names(v) + " vs " +
             hflag_names(hc.flags));

    FiniteSMA back = dehetero(hh);
    if (!(back.lat == a.lat) || back.neg != a.neg)
      o.fail(tag + "(A+)+ differs from A");
    if (!find_iso(kernel(back).k, hh.D)) o.fail(tag + "kernel of H+ is not D");
    if ((v & (kAPL | kWSA)) && !s7(a)) o.fail(tag + "S7 fails");
  }
  if (o.ok) o.detail = std::to_string(o.count) + " algebras";
  return o;
}

Outcome soundness(Profile p) {
  Outcome o;
  std::vector<HeteroAlgebra> algs;
  for (const auto& a : enumerate(p == Profile::Full ? 5 : 4))
    algs.push_back(heterogenize(a));
  for (int si = 0; si < kSystemCount; ++si) {
    System s = static_cast<System>(si);
    unsigned need = system_flags(s);
    for (const auto& r : system_rules(s))
      for (std::size_t i = 0; i < algs.size(); ++i) {
        if ((algs[i].flags & need) != need) continue;
        ++o.count;
        RuleSoundness rs = rule_sound(r, algs[i]);
        if (!rs.sound)
          o.fail(r.name + " unsound in " + system_name(s) + " on algebra " +
                 std::to_string(i) + " at " + valuation_text(rs.counter));
      }
  }
  std::string ws;
  for (std::size_t i = 0; i < algs.size() && ws.empty(); ++i) {
    if (algs[i].flags & kH8) continue;
    RuleSoundness rs = rule_sound(*find_rule("WS"), algs[i]);
    if (!rs.sound)
      ws = "WS fails on algebra " + std::to_string(i) + " (|L|=" +
           std::to_string(algs[i].L.size()) + ") at " +
           valuation_text(rs.counter);
  }
  if (ws.empty()) o.fail("WS holds on every non-HWSA instance");
  if (o.ok) o.detail = std::to_string(o.count) + " rule/algebra pairs; " + ws;
  return o;
}

Outcome translation(Profile p) {
  Outcome o;
  auto algs = enumerate(p == Profile::Full ? 6 : 4);
  auto fs = formulas_up_to(2, {"p", "q"});
  for (std::size_t i = 0; i < algs.size(); ++i) {
    HeteroAlgebra hh = heterogenize(algs[i]);
    for (const auto& a : fs)
      for (const auto& b : fs) {
        ++o.count;
        bool single = valid(a, b, algs[i]);
        bool multi = validate(translate(a, b), hh).valid;
        if (single != multi)
          o.fail(render(a) + " |- " + render(b) + " on algebra " +
                 std::to_string(i));
      }
  }
  if (o.ok)
    o.detail = std::to_string(algs.size()) + " algebras x " +
               std::to_string(fs.size() * fs.size()) + " sequents";
  return o;
}

std::vector<int> complexities(const ProofTree& t) {
  std::vector<int> out;
  for (const auto& f : cut_formulas(t)) out.push_back(int(f.size()));
  return out;
}

Outcome cuts(Profile p) {
  Outcome o;
  int n = p == Profile::Full ? 100 : 20;
  for (int i = 0; i < kCutPatternCount; ++i) {
    auto pat = static_cast<CutPattern>(i);
    std::string tag = std::string(cut_pattern_name(pat)) + ": ";
    for (const auto& inst : cut_instances(pat, n, 1000 + i)) {
      ++o.count;
      try {
        ProofTree r = reduce_cut(inst.proof, inst.cut);
        if (r.conclusion != inst.proof.conclusion)
          o.fail(tag + "conclusion changed");
        std::string why = proof_problem(r, System::SM, false);
        if (!why.empty()) o.fail(tag + why);
        if (!multiset_less(complexities(r), complexities(inst.proof)))
          o.fail(tag + "cut multiset did not decrease");
      } catch (const std::exception& e) {
        o.fail(tag + e.what());
      }
    }
  }
  if (o.ok)
    o.detail = std::to_string(kCutPatternCount) + " patterns x " +
               std::to_string(n) + " instances";
  return o;
}

Outcome classifier(Profile) {
  Outcome o;
  const std::pair<const char*, const char*> conds[] = {
      {"p", "box circ p"},
      {"box circ p", "p"},
      {"box sim circ p and p", "bot"},
      {"top", "box sim circ p or box circ p"},
  };
  for (const auto& [l, r] : conds) {
    Term a = parse_infix_term(l), b = parse_infix_term(r);
    auto w = is_analytic_inductive(a, b);
    if (!w || !check_witness(a, b, *w))
      o.fail(std::string("no witness for ") + l + " <= " + r);
  }
  long no = 0;
  for (Sort s : {Sort::DL, Sort::K}) {
    auto fs = mt_formulas(2, {"p"}, s);
    for (const auto& a : fs)
      for (const auto& b : fs) {
        ++o.count;
        auto w = is_analytic_inductive(a, b);
        if (w.has_value() != brute_force_inductive(a, b))
          o.fail("disagrees with the oracle on " + render(a) + " <= " +
                 render(b));
        else if (w && !check_witness(a, b, *w))
          o.fail("bad witness for " + render(a) + " <= " + render(b));
        no += !w;
      }
  }
  if (o.ok)
    o.detail = "4 conditions; " + std::to_string(o.count) +
               " inequalities, " + std::to_string(no) + " not inductive";
  return o;
}

Outcome searching(Profile p) {
  Outcome o;
  std::vector<std::pair<Sequent, System>> goals;
  for (const auto& d : axiom_derivations(Term::atom("p"), Term::atom("q")))
    goals.push_back({d.goal, d.system});
  for (const auto& f :
       formulas_up_to(p == Profile::Full ? 3 : 2, {"p", "q"})) {
    Term t = translate(f);
    for (int si = 0; si < kSystemCount; ++si)
      goals.push_back({Sequent{t, t}, static_cast<System>(si)});
  }
  long visited = 0;
  for (const auto& [g, s] : goals) {
    ++o.count;
    SearchResult r = search(g, s, SearchBudget{40, 200000});
    visited += r.visited;
    std::string tag = render(g) + " in " + system_name(s) + ": ";
    if (r.status != SearchStatus::Found) {
      o.fail(tag + search_status_name(r.status));
      continue;
    }
    if (r.proof->conclusion != g) o.fail(tag + "wrong conclusion");
    if (r.proof->depth() > 40) o.fail(tag + "too deep");
    std::string why = proof_problem(*r.proof, s, true);
    if (!why.empty()) o.fail(tag + why);
  }
  if (o.ok)
    o.detail = std::to_string(o.count) + " goals, " +
               std::to_string(visited) + " nodes visited";
  return o;
}

struct Spec {
  const char* name;
  double limit;
  Outcome (*run)(Profile);
};

const Spec kSpecs[kCriterionCount] = {
    {"axiom derivations", 10, axioms},
    {"identity derivations", 30, identities},
    {"algebraic equivalence", 300, equivalence},
    {"rule soundness", 300, soundness},
    {"translation invariance", 300, translation},
    {"cut reduction", 60, cuts},
    {"inductive classifier", 60, classifier},
    {"bounded search", 600, searching},
};

}  // namespace

CriterionResult run_criterion(int id, Profile p) {
  if (id < 1 || id > kCriterionCount)
    throw std::invalid_argument("no criterion " + std::to_string(id));
  const Spec& sp = kSpecs[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = sp.name;
  r.limit = sp.limit;
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = sp.run(p);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count();
  r.ok = o.ok && r.seconds <= r.limit;
  r.detail = o.detail;
  if (o.ok && !r.ok) r.detail += "; over the time limit";
  return r;
}

std::vector<CriterionResult> run_suite(Profile p) {
  std::vector<CriterionResult> out;
  for (int i = 1; i <= kCriterionCount; ++i) out.push_back(run_criterion(i, p));
  return out;
}

}  // namespace sdm
