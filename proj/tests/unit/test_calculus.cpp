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

#include <set>

#include "doctest.h"
#include "sdm/algebra.hpp"
#include "sdm/derivations.hpp"
#include "sdm/proof.hpp"

using namespace sdm;

namespace {

Sequent seq(const char* s) { return parse_sequent(s); }
Sequent ix(const std::string& s) { return parse_infix_sequent(s); }

std::set<std::string> names(System s) {
  std::set<std::string> out;
  for (const auto& r : system_rules(s)) out.insert(r.name);
  return out;
}

void metas(const Term& t, std::set<std::string>* out) {
  if (t.is_meta()) out->insert(t.name());
  for (int i = 0; i < t.arity(); ++i) metas(t.child(i), out);
}

}  // namespace

TEST_CASE("catalogue membership") {
  auto sm = names(System::SM);
  CHECK(sm.count("res_L_and.dn"));
  CHECK(sm.count("res_L_and.up"));
  CHECK_FALSE(sm.count("LQM"));
  CHECK_FALSE(sm.count("res_B.dn"));

  auto dp = names(System::DP);
  std::set<std::string> extra;
  for (const auto& n : dp)
    if (!sm.count(n)) extra.insert(n);
  CHECK(extra == std::set<std::string>{"res_B.dn", "res_B.up"});
  CHECK(std::includes(dp.begin(), dp.end(), sm.begin(), sm.end()));

  for (System s : {System::AP, System::WS}) {
    auto n = names(s);
    CHECK(std::includes(n.begin(), n.end(), dp.begin(), dp.end()));
    CHECK(n.size() == dp.size() + 1);
  }
  CHECK(names(System::LQM).size() == sm.size() + 1);
  CHECK(names(System::UQM).size() == sm.size() + 1);
  CHECK(names(System::AP).count("AP"));
  CHECK_FALSE(names(System::AP).count("WS"));

  CHECK(parse_system("WS") == System::WS);
  CHECK_THROWS_AS(parse_system("kt"), std::invalid_argument);
}

TEST_CASE("schema invariants") {
  std::set<std::string> seen;
  for (const auto& r : all_rules()) {
    CAPTURE(r.name);
    CHECK(seen.insert(r.name).second);
    CHECK(r.premises.size() <= 2);
    CHECK(r.conclusion.ant.sort() == r.conclusion.suc.sort());
    CHECK(placement_error(r.conclusion).empty());
    std::set<std::string> concl;
    metas(r.conclusion.ant, &concl);
    metas(r.conclusion.suc, &concl);
    for (const auto& p : r.premises) {
      CHECK(p.ant.sort() == p.suc.sort());
      CHECK(placement_error(p).empty());
      std::set<std::string> pm;
      metas(p.ant, &pm);
      metas(p.suc, &pm);
      for (const auto& m : pm)
        if (!concl.count(m)) {
          CHECK(r.is_cut);
          CHECK((m == "A" || m == "a"));
        }
    }
    // Double-line rules come in pairs with swapped premise and conclusion.
    if (r.name.size() > 3 && r.name.substr(r.name.size() - 3) == ".dn") {
      const RuleSchema* up =
          find_rule(r.name.substr(0, r.name.size() - 3) + ".up");
      REQUIRE(up != nullptr);
      CHECK(up->premises.size() == 1);
      CHECK(up->premises[0] == r.conclusion);
      CHECK(up->conclusion == r.premises[0]);
      CHECK(up->systems == r.systems);
    }
  }
}

TEST_CASE("match") {
  ParseOptions o;
  o.allow_meta = true;
  Term pat = parse_term("(hand ?X ?Y)", Sort::DL, o);
  Subst s;
  REQUIRE(match(pat, parse_term("(hand p (cvee q r))", Sort::DL), &s));
  CHECK(render(*s.get("X")) == "p");
  CHECK(render(*s.get("Y")) == "(cvee q r)");

  Subst s2;
  std::string why;
  CHECK_FALSE(match(parse_term("?A", Sort::DL, o),
                    parse_term("(hand p q)", Sort::DL), &s2, &why));
  CHECK(why.find("formula") != std::string::npos);

  Subst s3;
  CHECK_FALSE(match(parse_term("?p", Sort::DL, o),
                    parse_term("(and q r)", Sort::DL), &s3, &why));
  CHECK(why.find("atom") != std::string::npos);

  Subst s4;
  CHECK(match(parse_term("(hand ?X ?X)", Sort::DL, o),
              parse_term("(hand (and p q) (and p q))", Sort::DL), &s4));
  Subst s5;
  CHECK_FALSE(match(parse_term("(hand ?X ?X)", Sort::DL, o),
                    parse_term("(hand p q)", Sort::DL), &s5, &why));
  CHECK(why == "metavariable X bound inconsistently");

  // K metavariables never match DL terms.
  Subst s6;
  CHECK_FALSE(match(parse_term("?G", Sort::K, o), parse_term("p", Sort::DL),
                    &s6, &why));

  // instantiate is the inverse of a successful match.
  Subst s7;
  Term t = parse_term("(hand p (cvee q r))", Sort::DL);
  REQUIRE(match(pat, t, &s7));
  CHECK(instantiate(pat, s7) == t);
}

TEST_CASE("infix reader") {
  CHECK(ix("box sim circ p |- bot") ==
        seq("(seq (box (sim (circ p))) bot)"));
  CHECK(ix("(hbul tstar czero) hand htop |- top") ==
        seq("(seq (hand (hbul (tstar czero)) htop) top)"));
  CHECK(ix("hbul tstar czero hand htop |- top") ==
        seq("(seq (hand (hbul (tstar czero)) htop) top)"));
  CHECK(ix("hloz (p hand q) |- tstar hloz p ccup czero") ==
        seq("(seq (hloz (hand p q)) (ccup (tstar (hloz p)) czero))"));
  CHECK_THROWS_AS(ix("p hand q hand r |- p"), ParseError);
  CHECK_THROWS_AS(ix("p |- circ p"), ParseError);
  CHECK_THROWS_AS(ix("p |-"), ParseError);
  CHECK_THROWS_AS(ix("p hand |- q"), ParseError);
}

TEST_CASE("check_proof basics") {
  ProofTree id{seq("(seq p p)"), "Id", {}};
  CheckReport r = check_proof(id, System::SM);
  CHECK(r.accepted);
  CHECK(r.cut_free);
  CHECK(r.subformula);

  ProofTree bad{seq("(seq p q)"), "Id", {}};
  r = check_proof(bad, System::SM);
  CHECK_FALSE(r.accepted);
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].message == "metavariable p bound inconsistently");

  // Id is for atoms only.
  ProofTree top_id{seq("(seq top top)"), "Id", {}};
  CHECK_FALSE(check_proof(top_id, System::SM).accepted);

  // Unknown rule, wrong arity, rule from another system.
  CHECK_FALSE(check_proof({seq("(seq p p)"), "Nope", {}}, System::SM).accepted);
  CHECK_FALSE(
      check_proof({seq("(seq p p)"), "Id", {id}}, System::SM).accepted);
  ProofTree lqm{seq("(seq p (cbox (tcirc p)))"), "LQM", {id}};
  CHECK(check_proof(lqm, System::LQM).accepted);
  r = check_proof(lqm, System::SM);
  CHECK_FALSE(r.accepted);
  CHECK(r.diagnostics[0].message.find("not in sm") != std::string::npos);

  // A cut is accepted but flagged.
  ProofTree w = apply_rule("W_L_and", {id}, [] {
    Subst s;
    s.set("Z", Term::atom("q"));
    return s;
  }());
  ProofTree cut{seq("(seq (hand p q) p)"), "Cut_L", {w, id}};
  r = check_proof(cut, System::SM);
  CHECK(r.accepted);
  CHECK_FALSE(r.cut_free);

  // Diagnostics carry the path to the offending node.
  ProofTree deep{seq("(seq (hand p q) p)"), "W_L_and", {bad}};
  r = check_proof(deep, System::SM);
  CHECK_FALSE(r.accepted);
  bool found = false;
  for (const auto& d : r.diagnostics)
    if (d.path == ProofPath{0}) found = true;
  CHECK(found);
}

TEST_CASE("subformula flag") {
  Subst zp;
  zp.set("Z", Term::atom("p"));
  ProofTree idp = identity_proof(Term::atom("p"));
  // p |- p and p
  ProofTree l = apply_rule("C_L_and", {apply_rule("and_R", {idp, idp})});
  // p and p |- p
  ProofTree r = apply_rule("and_L", {apply_rule("W_L_and", {idp}, zp)});
  ProofTree cut{seq("(seq p p)"), "Cut_L", {l, r}};
  CheckReport rep = check_proof(cut, System::SM);
  CHECK(rep.accepted);
  CHECK_FALSE(rep.cut_free);
  CHECK_FALSE(rep.subformula);

  // The same cut under a conclusion that mentions p and p keeps the flag.
  ProofTree wide = apply_rule("W_L_or", {cut}, [] {
    Subst s;
    s.set("Z", parse_term("(and p p)", Sort::DL));
    return s;
  }());
  rep = check_proof(wide, System::SM);
  CHECK(rep.accepted);
  CHECK(rep.subformula);
}

TEST_CASE("identity constructor") {
  auto fs = formulas_up_to(3, {"p", "q"});
  CHECK(fs.size() == 3244);
  for (const Formula& f : fs) {
    Term t = translate(f);
    ProofTree pr = identity_proof(t);
    REQUIRE(pr.conclusion == Sequent{t, t});
    CheckReport r = check_proof(pr, System::SM);
    REQUIRE(r.accepted);
    CHECK(r.cut_free);
    CHECK(r.subformula);
  }
  // K formulas too.
  Term k = parse_term("(cap (sim one) (cup zero (circ p)))", Sort::K);
  ProofTree pk = identity_proof(k);
  CHECK(pk.conclusion == Sequent{k, k});
  CHECK(check_proof(pk, System::WS).accepted);
}

TEST_CASE("axiom derivations") {
  std::vector<std::pair<Term, Term>> inst = {
      {Term::atom("p"), Term::atom("q")},
      {parse_term("(and p (box (sim (circ q))))", Sort::DL),
       parse_term("(or top q)", Sort::DL)},
  };
  for (const auto& [a, b] : inst) {
    auto ds = axiom_derivations(a, b);
    REQUIRE(ds.size() == 11);
    auto goals = axiom_goals(a, b);
    for (std::size_t i = 0; i < ds.size(); ++i) {
      const auto& d = ds[i];
      CAPTURE(d.id);
      CHECK(d.goal == goals[i].second);
      CHECK(d.proof.conclusion == d.goal);
      CheckReport r = check_proof(d.proof, d.system);
      for (const auto& diag : r.diagnostics)
        MESSAGE(render_path(diag.path) << " " << diag.rule << ": "
                                       << diag.message);
      CHECK(r.accepted);
      CHECK(r.cut_free);
      CHECK(r.subformula);
    }
  }
  // The extension axioms need their own rule.
  auto ds = axiom_derivations(Term::atom("p"), Term::atom("q"));
  CHECK_FALSE(check_proof(ds[6].proof, System::SM).accepted);   // vii
  CHECK_FALSE(check_proof(ds[7].proof, System::SM).accepted);   // viii
  CHECK_FALSE(check_proof(ds[8].proof, System::SM).accepted);   // ix
  CHECK_FALSE(check_proof(ds[9].proof, System::DP).accepted);   // x
  CHECK_FALSE(check_proof(ds[10].proof, System::AP).accepted);  // xi
  CHECK(render(ds[4].goal) == "(seq top (box (sim (circ bot))))");
}

TEST_CASE("connect finds short chains") {
  ProofTree id = identity_proof(Term::atom("p"));
  auto t = connect(id, ix("tcirc p |- tcirc p"), System::SM, 1);
  REQUIRE(t);
  CHECK(t->rule == "tcirc");
  CHECK_FALSE(connect(id, ix("p |- q"), System::SM, 3));
  auto w = connect(identity_proof(Term::constant(Op::Top)),
                   ix("top hand q |- top"), System::SM, 2);
  REQUIRE(w);
  CHECK(check_proof(*w, System::SM).accepted);
}

TEST_CASE("proof json round trip") {
  auto ds = axiom_derivations(Term::atom("p"), Term::atom("q"));
  for (const auto& d : ds) {
    auto j = to_json(d.proof);
    ProofTree back = proof_from_json(j);
    CHECK(to_json(back) == j);
    CHECK(check_proof(back, d.system).accepted);
  }
  CHECK_THROWS_AS(proof_from_json(nlohmann::ordered_json::parse("[1]")),
                  ProofFormatError);
  CHECK_THROWS_AS(proof_from_json(nlohmann::ordered_json::parse(
                      R"({"rule":"Id","conclusion":"(seq p"})")),
                  ParseError);
}

TEST_CASE("replace_at and at") {
  ProofTree id = identity_proof(Term::atom("p"));
  ProofTree t = apply_rule("tcirc", {id});
  CHECK(at(t, {0}).rule == "Id");
  ProofTree u = replace_at(t, {0}, identity_proof(Term::atom("p")));
  CHECK(u.premises[0].conclusion == id.conclusion);
  CHECK_THROWS_AS(at(t, {1}), std::out_of_range);
}
