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

#include <random>
#include <set>

#include "doctest.h"
#include "sdm/syntax.hpp"

using namespace sdm;

namespace {

Term dl(const char* s) { return parse_term(s, Sort::DL); }

// Random well-sorted term of the given sort; structures allowed when
// `structures` is set.
Term random_term(std::mt19937& rng, Sort sort, int depth, bool structures) {
  std::vector<Op> ops;
  for (int i = 0; i < kOpCount; ++i) {
    Op op = static_cast<Op>(i);
    const OpInfo& info = op_info(op);
    if (op == Op::Meta || info.sort != sort) continue;
    if (!structures && info.family != Family::Formula) continue;
    if (depth <= 1 && info.arity > 0) continue;
    ops.push_back(op);
  }
  Op op = ops[std::uniform_int_distribution<int>(0, ops.size() - 1)(rng)];
  if (op == Op::Atom) {
    const char* names[] = {"p", "q", "r"};
    return Term::atom(names[rng() % 3]);
  }
  const OpInfo& info = op_info(op);
  std::vector<Term> kids;
  for (int i = 0; i < info.arity; ++i)
    kids.push_back(
        random_term(rng, info.child_sort[i], depth - 1, structures));
  return Term::make(op, kids);
}

void all_formulas(int depth, std::vector<Formula>* out) {
  if (depth == 1) {
    *out = {Formula::atom("p"), Formula::atom("q"), Formula::top(),
            Formula::bot()};
    return;
  }
  std::vector<Formula> prev;
  all_formulas(depth - 1, &prev);
  *out = {Formula::atom("p"), Formula::atom("q"), Formula::top(),
          Formula::bot()};
  for (const auto& a : prev) out->push_back(Formula::neg(a));
  for (const auto& a : prev)
    for (const auto& b : prev) {
      out->push_back(Formula::conj(a, b));
      out->push_back(Formula::disj(a, b));
    }
}

// Independent left inverse of the translation; returns a null formula when
// the term is not in the image.
Formula untranslate(const Term& t) {
  switch (t.op()) {
    case Op::Atom: return Formula::atom(t.name());
    case Op::Top: return Formula::top();
    case Op::Bot: return Formula::bot();
    case Op::And:
    case Op::Or: {
      Formula a = untranslate(t.child(0)), b = untranslate(t.child(1));
      if (!a || !b) return {};
      return t.op() == Op::And ? Formula::conj(a, b) : Formula::disj(a, b);
    }
    case Op::Box:
      if (t.child(0).op() == Op::Sim && t.child(0).child(0).op() == Op::Circ) {
        Formula a = untranslate(t.child(0).child(0).child(0));
        if (a) return Formula::neg(a);
      }
      return {};
    default:
      return {};
  }
}

int count_triples(const Term& t) {
  int n = 0;
  if (t.op() == Op::Box && t.child(0).op() == Op::Sim &&
      t.child(0).child(0).op() == Op::Circ)
    ++n;
  for (int i = 0; i < t.arity(); ++i) n += count_triples(t.child(i));
  return n;
}

int count_neg(const Formula& f) {
  int n = f.kind() == Formula::Kind::Not;
  for (int i = 0; i < f.arity(); ++i) n += count_neg(f.child(i));
  return n;
}

}  // namespace

TEST_CASE("parse builds the expected constructors") {
  Term t = dl("(and p q)");
  CHECK(t.op() == Op::And);
  CHECK(t.child(0) == Term::atom("p"));
  CHECK(t.child(1) == Term::atom("q"));
  Term neg = dl("(box (sim (circ p)))");
  CHECK(neg == translate(parse_formula("(not p)")));
  CHECK(neg.sort() == Sort::DL);
  CHECK(neg.child(0).sort() == Sort::K);
}

TEST_CASE("parse reports sort, arity and lexical errors") {
  try {
    parse_term("(cap p q)", Sort::K);
    FAIL("expected a sort error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseErrorKind::Sort);
    CHECK(std::string(e.what()).find("p") != std::string::npos);
  }
  try {
    parse_term("(and p)", Sort::DL);
    FAIL("expected an arity error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseErrorKind::Arity);
  }
  try {
    parse_term("(and p $)", Sort::DL);
    FAIL("expected a lexical error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseErrorKind::Lexical);
    CHECK(e.position() == 7);
  }
  CHECK_THROWS_AS(parse_term("one", Sort::DL), ParseError);
  CHECK_THROWS_AS(parse_term("(and p q) r", Sort::DL), ParseError);
  CHECK_THROWS_AS(parse_term("?X", Sort::DL), ParseError);
  CHECK_THROWS_AS(parse_sequent("(seq p one)"), ParseError);
}

TEST_CASE("render uses the token table") {
  CHECK(render(dl("(box (sim (circ p)))")) == "(box (sim (circ p)))");
  CHECK(render(dl("(hand x1 y)")) == "(hand x1 y)" );
  CHECK(render(parse_sequent("(seq  (hand p q)   (cvee q p))")) ==
        "(seq (hand p q) (cvee q p))");
  CHECK(render_unicode(dl("(hand p q)")) == "(p ∧̂ q)");
}

TEST_CASE("parse inverts render on random terms") {
  std::mt19937 rng(7);
  for (int i = 0; i < 1000; ++i) {
    Sort s = i % 2 ? Sort::DL : Sort::K;
    Term t = random_term(rng, s, 1 + i % 6, true);
    CHECK(sort_error(t).empty());
    Term back = parse_term(render(t), s);
    CHECK(back == t);
    CHECK(Term::compare(back, t) == 0);
  }
}

TEST_CASE("metavariables parse only when allowed") {
  ParseOptions opts;
  opts.allow_meta = true;
  Sequent s = parse_sequent("(seq (hand ?X ?A) (cbox (tcirc ?p)))", opts);
  CHECK(s.ant.child(0).is_meta());
  CHECK(s.ant.child(0).meta_kind() == MetaKind::Structure);
  CHECK(s.ant.child(1).meta_kind() == MetaKind::Formula);
  CHECK(render(s) == "(seq (hand ?X ?A) (cbox (tcirc ?p)))");
  CHECK_THROWS_AS(parse_sequent("(seq ?G ?X)", opts), ParseError);
}

TEST_CASE("translate") {
  CHECK(translate(parse_formula("p")) == dl("p"));
  CHECK(translate(parse_formula("(not p)")) == dl("(box (sim (circ p)))"));
  CHECK(translate(parse_formula("(not (not p))")) ==
        dl("(box (sim (circ (box (sim (circ p))))))"));
  CHECK(translate(parse_formula("(and top (or bot q))")) ==
        dl("(and top (or bot q))"));
}

TEST_CASE("translate is injective and counts negations") {
  std::vector<Formula> fs;
  all_formulas(3, &fs);
  CHECK(fs.size() == 3244);
  std::set<std::string> seen;
  for (const auto& f : fs) {
    Term t = translate(f);
    CHECK(sort_error(t).empty());
    CHECK(count_triples(t) == count_neg(f));
    CHECK(untranslate(t) == f);
    seen.insert(render(t));
  }
  CHECK(seen.size() == fs.size());
}

TEST_CASE("translate has a left inverse on all depth 4 formulas") {
  std::vector<Formula> fs;
  all_formulas(3, &fs);
  std::vector<Term> ts;
  for (const auto& f : fs) ts.push_back(translate(f));
  long checked = 0;
  bool ok = true;
  for (std::size_t i = 0; i < fs.size() && ok; ++i) {
    ok = untranslate(translate(Formula::neg(fs[i]))) == Formula::neg(fs[i]);
    for (std::size_t j = 0; j < fs.size() && ok; ++j) {
      Formula c = Formula::conj(fs[i], fs[j]);
      Formula d = Formula::disj(fs[i], fs[j]);
      ok = untranslate(Term::binary(Op::And, ts[i], ts[j])) == c &&
           untranslate(Term::binary(Op::Or, ts[i], ts[j])) == d;
      checked += 2;
    }
  }
  CHECK(ok);
  CHECK(checked == 2L * 3244 * 3244);
}

TEST_CASE("operational reading") {
  CHECK(operational_reading(dl("(and p q)"), Position::Precedent).render() ==
        "(and p q)");
  CHECK(operational_reading(dl("(hand p q)"), Position::Precedent).render() ==
        "(and p q)");
  CHECK(operational_reading(dl("(carr p q)"), Position::Succedent).render() ==
        "(imp p q)");
  CHECK(parse_term("(hloz p)", Sort::K).sort() == Sort::K);
  CHECK(operational_reading(parse_term("(hloz p)", Sort::K),
                            Position::Precedent)
            .render() == "(e-left p)");
  CHECK(child_position(Op::TStar, 0, Position::Precedent) ==
        Position::Succedent);
  CHECK(child_position(Op::CArr, 0, Position::Succedent) ==
        Position::Precedent);
  CHECK(child_position(Op::CArr, 1, Position::Succedent) ==
        Position::Succedent);
  // Formula leaves read the same in both positions.
  Term f = dl("(box (sim (circ (or p top))))");
  CHECK(operational_reading(f, Position::Precedent).render() ==
        operational_reading(f, Position::Succedent).render());
}

TEST_CASE("placement of hat and check connectives") {
  CHECK(placement_error(parse_sequent("(seq (hand p q) (cvee p q))")).empty());
  CHECK(!placement_error(parse_sequent("(seq (cvee p q) p)")).empty());
  CHECK(placement_error(parse_sequent("(seq p (carr (hand p q) q))")).empty());
}
