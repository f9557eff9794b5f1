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

// Sorted terms for single-type formulas, multi-type formulas and display
// structures, plus the parenthesized prefix surface syntax.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sdm {

enum class Sort : std::uint8_t { DL, K };

// Multi-type formula connectives come first, then structural connectives,
// then pattern metavariables.
enum class Op : std::uint8_t {
  // DL formulas
  Atom, Top, Bot, Box, And, Or,
  // K formulas
  One, Zero, Circ, Sim, Cap, Cup,
  // DL structures
  HTop, CBot, CBox, HBul, CBur, HAnd, CVee, HExcl, CArr,
  // K structures
  HOne, CZero, TCirc, HLoz, TStar, HCap, CCup, HSup, CSup,
  Meta,
};
inline constexpr int kOpCount = static_cast<int>(Op::Meta) + 1;

enum class MetaKind : std::uint8_t { Structure, Formula, Atom };

// Where a structural connective is allowed to occur.
enum class Family : std::uint8_t { Formula, Hat, Check, Tilde, Meta };

struct OpInfo {
  const char* token;     // surface token; empty for atoms and metas
  const char* glyph;     // unicode glyph for the display renderer
  Sort sort;
  int arity;
  Sort child_sort[2];
  Family family;
};

const OpInfo& op_info(Op op);
bool is_formula_op(Op op);

class Term;

namespace detail {
struct Node;
}

// Immutable, shared term. Formulas are the structures whose every node is a
// formula connective.
class Term {
 public:
  Term() = default;

  static Term atom(std::string name);
  static Term constant(Op op);
  static Term unary(Op op, Term a);
  static Term binary(Op op, Term a, Term b);
  static Term make(Op op, const std::vector<Term>& kids);
  static Term meta(std::string name, Sort sort, MetaKind kind);

  explicit operator bool() const { return n_ != nullptr; }
  Op op() const;
  Sort sort() const;
  MetaKind meta_kind() const;
  const std::string& name() const;
  int arity() const;
  const Term& child(int i) const;
  const Term& operator[](int i) const { return child(i); }
  std::size_t hash() const;
  std::uint32_t size() const;    // node count
  std::uint32_t height() const;  // leaves have height 1
  // True iff every node is a formula connective (metas of formula or atom
  // kind count as formulas).
  bool is_formula() const;
  bool is_meta() const { return op() == Op::Meta; }
  bool has_meta() const;

  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }
  // Total order used for canonical choices; not meaningful otherwise.
  static int compare(const Term& a, const Term& b);
  bool same_node(const Term& o) const { return n_ == o.n_; }

 private:
  static Term build(Op op, std::string name, Sort sort, MetaKind kind,
                    const Term* a, const Term* b);
  explicit Term(std::shared_ptr<const detail::Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const detail::Node> n_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

namespace detail {
struct Node {
  Op op;
  Sort sort;
  MetaKind kind;
  bool formula;
  bool has_meta;
  std::uint32_t size;
  std::uint32_t height;
  std::size_t hash;
  std::string name;
  std::array<Term, 2> kids;
};
}  // namespace detail

struct Sequent {
  Term ant;
  Term suc;

  Sort sort() const { return ant.sort(); }
  bool operator==(const Sequent& o) const {
    return ant == o.ant && suc == o.suc;
  }
  bool operator!=(const Sequent& o) const { return !(*this == o); }
  std::size_t hash() const { return ant.hash() * 1000003u ^ suc.hash(); }
};

struct SequentHash {
  std::size_t operator()(const Sequent& s) const { return s.hash(); }
};

// Single-type formulas: p, top, bot, not, and, or.
class Formula {
 public:
  enum class Kind : std::uint8_t { Atom, Top, Bot, Not, And, Or };

  Formula() = default;
  static Formula atom(std::string name);
  static Formula top();
  static Formula bot();
  static Formula neg(Formula a);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);

  explicit operator bool() const { return n_ != nullptr; }
  Kind kind() const;
  const std::string& name() const;
  const Formula& child(int i) const;
  int arity() const;
  int height() const;
  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

struct Formula::Node {
  Kind kind;
  int height;
  std::string name;
  std::array<Formula, 2> kids;
};

inline Formula::Kind Formula::kind() const { return n_->kind; }
inline const std::string& Formula::name() const { return n_->name; }
inline const Formula& Formula::child(int i) const { return n_->kids[i]; }
inline int Formula::height() const { return n_->height; }

enum class ParseErrorKind : std::uint8_t { Lexical, Syntax, Arity, Sort };

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t pos, const std::string& msg);
  ParseErrorKind kind() const { return kind_; }
  std::size_t position() const { return pos_; }

 private:
  ParseErrorKind kind_;
  std::size_t pos_;
};

struct ParseOptions {
  // Accept `?X`-style metavariables (used by the rule catalogue).
  bool allow_meta = false;
};

// Parses a multi-type formula or structure of the given sort.
Term parse_term(std::string_view text, Sort expected, ParseOptions opts = {});
// Parses `(seq X Y)`; the sort is taken from the antecedent.
Sequent parse_sequent(std::string_view text, ParseOptions opts = {});
// Parses a single-type formula (uses `not`).
Formula parse_formula(std::string_view text);
// Infix form used for hand-written derivations: `box sim circ p |- cbox x`.
// Unary connectives are prefix; a binary connective sits between its
// operands and nested binaries need parentheses.
Sequent parse_infix_sequent(std::string_view text, ParseOptions opts = {});
Term parse_infix_term(std::string_view text, ParseOptions opts = {});

std::string render(const Term& t);
std::string render(const Sequent& s);
std::string render(const Formula& f);
// Infix unicode rendering, for humans only.
std::string render_unicode(const Term& t);
std::string render_unicode(const Sequent& s);

// Meta name conventions: X Y Z W are DL structures, G D T P S are K
// structures, A B DL formulas, a b K formulas, p atoms.
bool meta_signature(std::string_view name, Sort* sort, MetaKind* kind);

Term translate(const Formula& f);
// Every single-type formula of height <= max_height over the given atoms
// and the two constants, shortest first.
std::vector<Formula> formulas_up_to(int max_height,
                                    const std::vector<std::string>& atoms);
Sequent translate(const Formula& lhs, const Formula& rhs);

// Total sort check; returns an empty string when t is well sorted.
std::string sort_error(const Term& t);

// Every formula occurring in t (maximal formula subterms).
void formula_leaves(const Term& t, std::vector<Term>* out);
// Every subformula of a formula, including itself.
void subformulas(const Term& f, std::vector<Term>* out);

// ---------------------------------------------------------------------------
// Operational reading.

enum class Position : std::uint8_t { Precedent, Succedent };
inline Position flip(Position p) {
  return p == Position::Precedent ? Position::Succedent : Position::Precedent;
}

enum class XOp : std::uint8_t {
  Var, Top, Bot, Box, And, Or, One, Zero, Circ, Sim, Cap, Cup,
  Heyting, CoImp, KHeyting, KCoImp, HLeft, HRight, ELeft,
};

// Formula terms extended with the residuals and adjoints needed to read
// structures. Atoms and metavariables both become variables.
class ExtendedTerm {
 public:
  ExtendedTerm() = default;
  static ExtendedTerm var(std::string name, Sort sort);
  static ExtendedTerm make(XOp op, std::vector<ExtendedTerm> kids);

  explicit operator bool() const { return n_ != nullptr; }
  XOp op() const { return n_->op; }
  Sort sort() const { return n_->sort; }
  const std::string& name() const { return n_->name; }
  const std::vector<ExtendedTerm>& kids() const { return n_->kids; }
  std::string render() const;

 private:
  struct Node {
    XOp op;
    Sort sort;
    std::string name;
    std::vector<ExtendedTerm> kids;
  };
  explicit ExtendedTerm(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

Sort xop_sort(XOp op);

ExtendedTerm operational_reading(const Term& s, Position pos);

// Position of each child coordinate of a structural or formula connective.
Position child_position(Op op, int index, Position parent);

// Hat connectives belong in precedent position, check connectives in
// succedent position. Returns a description of the first misplaced node, or
// an empty string.
std::string placement_error(const Sequent& s);

}  // namespace sdm
