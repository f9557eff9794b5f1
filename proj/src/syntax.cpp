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

#include "sdm/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace sdm {
namespace {

const OpInfo kOps[kOpCount] = {
    {"", "", Sort::DL, 0, {Sort::DL, Sort::DL}, Family::Formula},
    {"top", "⊤", Sort::DL, 0, {Sort::DL, Sort::DL}, Family::Formula},
    {"bot", "⊥", Sort::DL, 0, {Sort::DL, Sort::DL}, Family::Formula},
    {"box", "□", Sort::DL, 1, {Sort::K, Sort::K}, Family::Formula},
    {"and", "∧", Sort::DL, 2, {Sort::DL, Sort::DL}, Family::Formula},
    {"or", "∨", Sort::DL, 2, {Sort::DL, Sort::DL}, Family::Formula},
    {"one", "1", Sort::K, 0, {Sort::K, Sort::K}, Family::Formula},
    {"zero", "0", Sort::K, 0, {Sort::K, Sort::K}, Family::Formula},
    {"circ", "∘", Sort::K, 1, {Sort::DL, Sort::DL}, Family::Formula},
    {"sim", "∼", Sort::K, 1, {Sort::K, Sort::K}, Family::Formula},
    {"cap", "∩", Sort::K, 2, {Sort::K, Sort::K}, Family::Formula},
    {"cup", "∪", Sort::K, 2, {Sort::K, Sort::K}, Family::Formula},
    {"htop", "⊤̂", Sort::DL, 0, {Sort::DL, Sort::DL}, Family::Hat},
    {"cbot", "⊥̌", Sort::DL, 0, {Sort::DL, Sort::DL}, Family::Check},
    {"cbox", "□̌", Sort::DL, 1, {Sort::K, Sort::K}, Family::Check},
    {"hbul", "•̂ℓ", Sort::DL, 1, {Sort::K, Sort::K}, Family::Hat},
    {"cbur", "•̌ᵣ", Sort::DL, 1, {Sort::K, Sort::K}, Family::Check},
    {"hand", "∧̂", Sort::DL, 2, {Sort::DL, Sort::DL}, Family::Hat},
    {"cvee", "∨̌", Sort::DL, 2, {Sort::DL, Sort::DL}, Family::Check},
    {"hexcl", ">̂", Sort::DL, 2, {Sort::DL, Sort::DL}, Family::Hat},
    {"carr", "→̌", Sort::DL, 2, {Sort::DL, Sort::DL}, Family::Check},
    {"hone", "1̂", Sort::K, 0, {Sort::K, Sort::K}, Family::Hat},
    {"czero", "0̌", Sort::K, 0, {Sort::K, Sort::K}, Family::Check},
    {"tcirc", "∘̃", Sort::K, 1, {Sort::DL, Sort::DL}, Family::Tilde},
    {"hloz", "◆̂", Sort::K, 1, {Sort::DL, Sort::DL}, Family::Hat},
    {"tstar", "∗̃", Sort::K, 1, {Sort::K, Sort::K}, Family::Tilde},
    {"hcap", "∩̂", Sort::K, 2, {Sort::K, Sort::K}, Family::Hat},
    {"ccup", "∪̌", Sort::K, 2, {Sort::K, Sort::K}, Family::Check},
    {"hsup", "⊃̂", Sort::K, 2, {Sort::K, Sort::K}, Family::Hat},
    {"csup", "⊃̌", Sort::K, 2, {Sort::K, Sort::K}, Family::Check},
    {"", "", Sort::DL, 0, {Sort::DL, Sort::DL}, Family::Meta},
};

const char* sort_name(Sort s) { return s == Sort::DL ? "DL" : "K"; }

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

bool lookup_op(std::string_view tok, Op* out) {
  for (int i = 0; i < kOpCount; ++i) {
    if (kOps[i].token[0] != '\0' && tok == kOps[i].token) {
      *out = static_cast<Op>(i);
      return true;
    }
  }
  return false;
}

bool is_reserved(std::string_view tok) {
  Op dummy;
  return lookup_op(tok, &dummy) || tok == "seq" || tok == "not";
}

// Minimal s-expression reader shared by the three parsers.
struct SExpr {
  std::string head;  // atom text, or the head token of a list
  bool list = false;
  std::size_t pos = 0;
  std::vector<SExpr> args;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  SExpr read_all() {
    SExpr e = read();
    skip_ws();
    if (i_ != text_.size())
      throw ParseError(ParseErrorKind::Syntax, i_, "trailing input");
    return e;
  }

 private:
  void skip_ws() {
    while (i_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[i_])))
      ++i_;
  }

  std::string ident() {
    std::size_t start = i_;
    if (i_ < text_.size() && text_[i_] == '?') ++i_;
    while (i_ < text_.size() && is_ident_char(text_[i_])) ++i_;
    if (i_ == start || (text_[start] == '?' && i_ == start + 1))
      throw ParseError(ParseErrorKind::Lexical, start,
                       std::string("unexpected character '") +
                           (start < text_.size() ? text_[start] : '?') + "'");
    return std::string(text_.substr(start, i_ - start));
  }

  SExpr read() {
    skip_ws();
    if (i_ >= text_.size())
      throw ParseError(ParseErrorKind::Syntax, i_, "unexpected end of input");
    SExpr e;
    e.pos = i_;
    if (text_[i_] == ')')
      throw ParseError(ParseErrorKind::Syntax, i_, "unexpected ')'");
    if (text_[i_] != '(') {
      e.head = ident();
      return e;
    }
    ++i_;
    skip_ws();
    e.list = true;
    e.head = ident();
    for (;;) {
      skip_ws();
      if (i_ >= text_.size())
        throw ParseError(ParseErrorKind::Syntax, i_, "missing ')'");
      if (text_[i_] == ')') {
        ++i_;
        break;
      }
      e.args.push_back(read());
    }
    return e;
  }

  std::string_view text_;
  std::size_t i_ = 0;
};

Term convert(const SExpr& e, const ParseOptions& opts) {
  if (!e.head.empty() && e.head[0] == '?') {
    if (!opts.allow_meta || e.list)
      throw ParseError(ParseErrorKind::Lexical, e.pos,
                       "metavariable '" + e.head + "' not allowed here");
    Sort sort;
    MetaKind kind;
    std::string name = e.head.substr(1);
    if (!meta_signature(name, &sort, &kind))
      throw ParseError(ParseErrorKind::Lexical, e.pos,
                       "unknown metavariable '" + e.head + "'");
    return Term::meta(name, sort, kind);
  }
  Op op;
  if (!lookup_op(e.head, &op)) {
    if (e.list || is_reserved(e.head) ||
        !std::islower(static_cast<unsigned char>(e.head[0])))
      throw ParseError(ParseErrorKind::Syntax, e.pos,
                       "unknown token '" + e.head + "'");
    return Term::atom(e.head);
  }
  const OpInfo& info = op_info(op);
  int given = static_cast<int>(e.args.size());
  if (info.arity == 0 && e.list)
    throw ParseError(ParseErrorKind::Arity, e.pos,
                     "'" + e.head + "' takes no arguments");
  if (info.arity > 0 && (!e.list || given != info.arity))
    throw ParseError(ParseErrorKind::Arity, e.pos,
                     "'" + e.head + "' expects " +
                         std::to_string(info.arity) + " argument(s), got " +
                         std::to_string(given));
  std::vector<Term> kids;
  for (int i = 0; i < given; ++i) {
    Term k = convert(e.args[i], opts);
    if (k.sort() != info.child_sort[i])
      throw ParseError(ParseErrorKind::Sort, e.args[i].pos,
                       "'" + e.head + "' requires " +
                           sort_name(info.child_sort[i]) +
                           "-sorted argument " + std::to_string(i + 1) +
                           ", got " + sort_name(k.sort()) + " term " +
                           render(k));
    kids.push_back(k);
  }
  return Term::make(op, kids);
}

Formula convert_formula(const SExpr& e) {
  auto expect = [&](std::size_t n) {
    if (!e.list || e.args.size() != n)
      throw ParseError(ParseErrorKind::Arity, e.pos,
                       "'" + e.head + "' expects " + std::to_string(n) +
                           " argument(s)");
  };
  if (e.head == "top" || e.head == "bot") {
    if (e.list)
      throw ParseError(ParseErrorKind::Arity, e.pos,
                       "'" + e.head + "' takes no arguments");
    return e.head == "top" ? Formula::top() : Formula::bot();
  }
  if (e.head == "not") {
    expect(1);
    return Formula::neg(convert_formula(e.args[0]));
  }
  if (e.head == "and" || e.head == "or") {
    expect(2);
    Formula a = convert_formula(e.args[0]);
    Formula b = convert_formula(e.args[1]);
    return e.head == "and" ? Formula::conj(a, b) : Formula::disj(a, b);
  }
  if (e.list || is_reserved(e.head) || e.head[0] == '?' ||
      !std::islower(static_cast<unsigned char>(e.head[0])))
    throw ParseError(ParseErrorKind::Syntax, e.pos,
                     "unknown token '" + e.head + "'");
  return Formula::atom(e.head);
}

void render_to(const Term& t, std::string* out) {
  if (t.op() == Op::Atom) {
    *out += t.name();
    return;
  }
  if (t.op() == Op::Meta) {
    *out += '?';
    *out += t.name();
    return;
  }
  const OpInfo& info = op_info(t.op());
  if (info.arity == 0) {
    *out += info.token;
    return;
  }
  *out += '(';
  *out += info.token;
  for (int i = 0; i < info.arity; ++i) {
    *out += ' ';
    render_to(t.child(i), out);
  }
  *out += ')';
}

void render_unicode_to(const Term& t, std::string* out) {
  if (t.op() == Op::Atom || t.op() == Op::Meta) {
    *out += t.name();
    return;
  }
  const OpInfo& info = op_info(t.op());
  if (info.arity == 0) {
    *out += info.glyph;
  } else if (info.arity == 1) {
    *out += info.glyph;
    render_unicode_to(t.child(0), out);
  } else {
    *out += '(';
    render_unicode_to(t.child(0), out);
    *out += ' ';
    *out += info.glyph;
    *out += ' ';
    render_unicode_to(t.child(1), out);
    *out += ')';
  }
}

void render_formula(const Formula& f, std::string* out) {
  switch (f.kind()) {
    case Formula::Kind::Atom: *out += f.name(); return;
    case Formula::Kind::Top: *out += "top"; return;
    case Formula::Kind::Bot: *out += "bot"; return;
    case Formula::Kind::Not:
      *out += "(not ";
      render_formula(f.child(0), out);
      *out += ')';
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      *out += f.kind() == Formula::Kind::And ? "(and " : "(or ";
      render_formula(f.child(0), out);
      *out += ' ';
      render_formula(f.child(1), out);
      *out += ')';
      return;
  }
}

}  // namespace

const OpInfo& op_info(Op op) { return kOps[static_cast<int>(op)]; }

bool is_formula_op(Op op) { return op_info(op).family == Family::Formula; }

// ---------------------------------------------------------------------------
// Term

Term Term::build(Op op, std::string name, Sort sort, MetaKind kind,
                 const Term* a, const Term* b) {
  auto n = std::make_shared<detail::Node>();
  n->op = op;
  n->sort = sort;
  n->kind = kind;
  n->name = std::move(name);
  n->size = 1;
  n->has_meta = op == Op::Meta;
  std::size_t h = mix(static_cast<std::size_t>(op) * 0x100000001b3ull,
                      n->name.empty() ? 0 : std::hash<std::string>{}(n->name));
  bool formula =
      op == Op::Meta ? kind != MetaKind::Structure : is_formula_op(op);
  std::uint32_t kid_height = 0;
  const Term* kids[2] = {a, b};
  for (int i = 0; i < 2; ++i) {
    if (kids[i] == nullptr) continue;
    const Term& k = *kids[i];
    n->kids[i] = k;
    n->size += k.size();
    kid_height = std::max(kid_height, k.height());
    n->has_meta = n->has_meta || k.has_meta();
    formula = formula && k.is_formula();
    h = mix(h, k.hash() * (i + 1));
  }
  n->height = 1 + kid_height;
  n->formula = formula;
  n->hash = h;
  return Term(std::move(n));
}

Term Term::atom(std::string name) {
  return build(Op::Atom, std::move(name), Sort::DL, MetaKind::Atom, nullptr,
               nullptr);
}

Term Term::constant(Op op) {
  return build(op, "", op_info(op).sort, MetaKind::Structure, nullptr,
               nullptr);
}

Term Term::unary(Op op, Term a) {
  return build(op, "", op_info(op).sort, MetaKind::Structure, &a, nullptr);
}

Term Term::binary(Op op, Term a, Term b) {
  return build(op, "", op_info(op).sort, MetaKind::Structure, &a, &b);
}

Term Term::make(Op op, const std::vector<Term>& kids) {
  switch (kids.size()) {
    case 0: return constant(op);
    case 1: return unary(op, kids[0]);
    default: return binary(op, kids[0], kids[1]);
  }
}

Term Term::meta(std::string name, Sort sort, MetaKind kind) {
  return build(Op::Meta, std::move(name), sort, kind, nullptr, nullptr);
}

Op Term::op() const { return n_->op; }
Sort Term::sort() const { return n_->sort; }
MetaKind Term::meta_kind() const { return n_->kind; }
const std::string& Term::name() const { return n_->name; }
int Term::arity() const { return op_info(n_->op).arity; }
const Term& Term::child(int i) const { return n_->kids[i]; }
std::size_t Term::hash() const { return n_->hash; }
std::uint32_t Term::size() const { return n_->size; }
std::uint32_t Term::height() const { return n_->height; }
bool Term::is_formula() const { return n_->formula; }
bool Term::has_meta() const { return n_->has_meta; }

bool Term::operator==(const Term& o) const {
  if (n_ == o.n_) return true;
  if (!n_ || !o.n_) return false;
  if (n_->hash != o.n_->hash || n_->op != o.n_->op ||
      n_->size != o.n_->size || n_->sort != o.n_->sort)
    return false;
  if (n_->op == Op::Atom || n_->op == Op::Meta)
    return n_->name == o.n_->name && n_->kind == o.n_->kind;
  int k = arity();
  for (int i = 0; i < k; ++i)
    if (!(n_->kids[i] == o.n_->kids[i])) return false;
  return true;
}

int Term::compare(const Term& a, const Term& b) {
  if (a.n_ == b.n_) return 0;
  if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
  if (a.op() == Op::Atom || a.op() == Op::Meta) {
    int c = a.name().compare(b.name());
    if (c != 0) return c < 0 ? -1 : 1;
    if (a.sort() != b.sort()) return a.sort() < b.sort() ? -1 : 1;
    return 0;
  }
  for (int i = 0; i < a.arity(); ++i) {
    int c = compare(a.child(i), b.child(i));
    if (c != 0) return c;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Formula

Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Atom, 1, std::move(name), {}}));
}
Formula Formula::top() {
  return Formula(std::make_shared<const Node>(Node{Kind::Top, 1, "", {}}));
}
Formula Formula::bot() {
  return Formula(std::make_shared<const Node>(Node{Kind::Bot, 1, "", {}}));
}
Formula Formula::neg(Formula a) {
  int h = a.height() + 1;
  return Formula(std::make_shared<const Node>(
      Node{Kind::Not, h, "", {std::move(a), Formula()}}));
}
Formula Formula::conj(Formula a, Formula b) {
  int h = std::max(a.height(), b.height()) + 1;
  return Formula(std::make_shared<const Node>(
      Node{Kind::And, h, "", {std::move(a), std::move(b)}}));
}
Formula Formula::disj(Formula a, Formula b) {
  int h = std::max(a.height(), b.height()) + 1;
  return Formula(std::make_shared<const Node>(
      Node{Kind::Or, h, "", {std::move(a), std::move(b)}}));
}

int Formula::arity() const {
  switch (kind()) {
    case Kind::Not: return 1;
    case Kind::And:
    case Kind::Or: return 2;
    default: return 0;
  }
}

bool Formula::operator==(const Formula& o) const {
  if (n_ == o.n_) return true;
  if (!n_ || !o.n_ || kind() != o.kind()) return false;
  if (kind() == Kind::Atom) return name() == o.name();
  for (int i = 0; i < arity(); ++i)
    if (child(i) != o.child(i)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Parsing and rendering

ParseError::ParseError(ParseErrorKind kind, std::size_t pos,
                       const std::string& msg)
    : std::runtime_error("at " + std::to_string(pos) + ": " + msg),
      kind_(kind),
      pos_(pos) {}

bool meta_signature(std::string_view name, Sort* sort, MetaKind* kind) {
  if (name.empty()) return false;
  char c = name[0];
  if (std::string_view("XYZW").find(c) != std::string_view::npos) {
    *sort = Sort::DL;
    *kind = MetaKind::Structure;
  } else if (std::string_view("GDTPS").find(c) != std::string_view::npos) {
    *sort = Sort::K;
    *kind = MetaKind::Structure;
  } else if (c == 'A' || c == 'B') {
    *sort = Sort::DL;
    *kind = MetaKind::Formula;
  } else if (c == 'a' || c == 'b') {
    *sort = Sort::K;
    *kind = MetaKind::Formula;
  } else if (c == 'p') {
    *sort = Sort::DL;
    *kind = MetaKind::Atom;
  } else {
    return false;
  }
  for (char d : name.substr(1))
    if (!is_ident_char(d)) return false;
  return true;
}

Term parse_term(std::string_view text, Sort expected, ParseOptions opts) {
  SExpr e = Reader(text).read_all();
  if (e.head == "seq")
    throw ParseError(ParseErrorKind::Syntax, e.pos,
                     "expected a term, got a sequent");
  Term t = convert(e, opts);
  if (t.sort() != expected)
    throw ParseError(ParseErrorKind::Sort, e.pos,
                     std::string("expected a ") + sort_name(expected) +
                         " term, got " + sort_name(t.sort()) + " term " +
                         render(t));
  return t;
}

Sequent parse_sequent(std::string_view text, ParseOptions opts) {
  SExpr e = Reader(text).read_all();
  if (!e.list || e.head != "seq")
    throw ParseError(ParseErrorKind::Syntax, e.pos,
                     "expected (seq <antecedent> <succedent>)");
  if (e.args.size() != 2)
    throw ParseError(ParseErrorKind::Arity, e.pos,
                     "'seq' expects 2 arguments");
  Sequent s{convert(e.args[0], opts), convert(e.args[1], opts)};
  if (s.ant.sort() != s.suc.sort())
    throw ParseError(ParseErrorKind::Sort, e.args[1].pos,
                     std::string("succedent is ") + sort_name(s.suc.sort()) +
                         "-sorted but antecedent is " +
                         sort_name(s.ant.sort()) + "-sorted");
  return s;
}

std::vector<Formula> formulas_up_to(int max_height,
                                    const std::vector<std::string>& atoms) {
  std::vector<Formula> base;
  for (const auto& a : atoms) base.push_back(Formula::atom(a));
  base.push_back(Formula::top());
  base.push_back(Formula::bot());
  if (max_height < 1) return {};
  std::vector<Formula> all = base;
  for (int h = 2; h <= max_height; ++h) {
    std::vector<Formula> next = base;
    for (const auto& a : all) next.push_back(Formula::neg(a));
    for (const auto& a : all)
      for (const auto& b : all) {
        next.push_back(Formula::conj(a, b));
        next.push_back(Formula::disj(a, b));
      }
    all = std::move(next);
  }
  // Stable order: by height, then generation order.
  std::stable_sort(all.begin(), all.end(),
                   [](const Formula& x, const Formula& y) {
                     return x.height() < y.height();
                   });
  return all;
}

Formula parse_formula(std::string_view text) {
  return convert_formula(Reader(text).read_all());
}

namespace {

// Infix reader: prefix unary connectives, one binary connective per
// parenthesis level, `|-` between the two sides.
class InfixReader {
 public:
  InfixReader(std::string_view text, ParseOptions opts)
      : text_(text), opts_(opts) {}

  Sequent sequent() {
    Term a = expr();
    skip_ws();
    if (text_.substr(i_, 2) != "|-")
      throw ParseError(ParseErrorKind::Syntax, i_, "expected '|-'");
    i_ += 2;
    std::size_t at = i_;
    Term b = expr();
    end();
    if (a.sort() != b.sort())
      throw ParseError(ParseErrorKind::Sort, at,
                       "the two sides of '|-' have different sorts");
    return {a, b};
  }

  Term term() {
    Term t = expr();
    end();
    return t;
  }

 private:
  void end() {
    skip_ws();
    if (i_ != text_.size())
      throw ParseError(ParseErrorKind::Syntax, i_, "trailing input");
  }

  void skip_ws() {
    while (i_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[i_])))
      ++i_;
  }

  std::string_view peek_word() {
    skip_ws();
    std::size_t j = i_;
    if (j < text_.size() && text_[j] == '?') ++j;
    while (j < text_.size() && is_ident_char(text_[j])) ++j;
    return text_.substr(i_, j - i_);
  }

  Term checked(Op op, std::vector<Term> kids, std::size_t pos) {
    const OpInfo& info = op_info(op);
    for (std::size_t k = 0; k < kids.size(); ++k)
      if (kids[k].sort() != info.child_sort[k])
        throw ParseError(ParseErrorKind::Sort, pos,
                         std::string("'") + info.token + "' requires " +
                             sort_name(info.child_sort[k]) + "-sorted argument " +
                             std::to_string(k + 1));
    return Term::make(op, kids);
  }

  Term expr() {
    std::size_t at = (skip_ws(), i_);
    Term left = unary();
    std::string_view w = peek_word();
    Op op;
    if (!w.empty() && lookup_op(w, &op) && op_info(op).arity == 2) {
      i_ += w.size();
      Term right = unary();
      std::string_view again = peek_word();
      Op op2;
      if (!again.empty() && lookup_op(again, &op2) && op_info(op2).arity == 2)
        throw ParseError(ParseErrorKind::Syntax, i_,
                         "chained binary connectives need parentheses");
      return checked(op, {left, right}, at);
    }
    return left;
  }

  Term unary() {
    skip_ws();
    if (i_ >= text_.size())
      throw ParseError(ParseErrorKind::Syntax, i_, "unexpected end of input");
    std::size_t at = i_;
    if (text_[i_] == '(') {
      ++i_;
      Term t = expr();
      skip_ws();
      if (i_ >= text_.size() || text_[i_] != ')')
        throw ParseError(ParseErrorKind::Syntax, i_, "missing ')'");
      ++i_;
      return t;
    }
    std::string_view w = peek_word();
    if (w.empty() || w == "?")
      throw ParseError(ParseErrorKind::Lexical, i_,
                       std::string("unexpected character '") + text_[i_] + "'");
    i_ += w.size();
    if (w[0] == '?') {
      Sort sort;
      MetaKind kind;
      std::string name(w.substr(1));
      if (!opts_.allow_meta)
        throw ParseError(ParseErrorKind::Lexical, at,
                         "metavariable '" + std::string(w) +
                             "' not allowed here");
      if (!meta_signature(name, &sort, &kind))
        throw ParseError(ParseErrorKind::Lexical, at,
                         "unknown metavariable '" + std::string(w) + "'");
      return Term::meta(name, sort, kind);
    }
    Op op;
    if (lookup_op(w, &op)) {
      const OpInfo& info = op_info(op);
      if (info.arity == 0) return Term::constant(op);
      if (info.arity == 1) return checked(op, {unary()}, at);
      throw ParseError(ParseErrorKind::Syntax, at,
                       "binary '" + std::string(w) + "' needs a left operand");
    }
    if (is_reserved(w) || !std::islower(static_cast<unsigned char>(w[0])))
      throw ParseError(ParseErrorKind::Syntax, at,
                       "unknown token '" + std::string(w) + "'");
    return Term::atom(std::string(w));
  }

  std::string_view text_;
  ParseOptions opts_;
  std::size_t i_ = 0;
};

}  // namespace

Sequent parse_infix_sequent(std::string_view text, ParseOptions opts) {
  return InfixReader(text, opts).sequent();
}

Term parse_infix_term(std::string_view text, ParseOptions opts) {
  return InfixReader(text, opts).term();
}

std::string render(const Term& t) {
  std::string out;
  render_to(t, &out);
  return out;
}

std::string render(const Sequent& s) {
  std::string out = "(seq ";
  render_to(s.ant, &out);
  out += ' ';
  render_to(s.suc, &out);
  out += ')';
  return out;
}

std::string render(const Formula& f) {
  std::string out;
  render_formula(f, &out);
  return out;
}

std::string render_unicode(const Term& t) {
  std::string out;
  render_unicode_to(t, &out);
  return out;
}

std::string render_unicode(const Sequent& s) {
  return render_unicode(s.ant) + " ⊢ " + render_unicode(s.suc);
}

// ---------------------------------------------------------------------------
// Translation and traversals

Term translate(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return Term::atom(f.name());
    case Formula::Kind::Top: return Term::constant(Op::Top);
    case Formula::Kind::Bot: return Term::constant(Op::Bot);
    case Formula::Kind::Not:
      return Term::unary(
          Op::Box,
          Term::unary(Op::Sim, Term::unary(Op::Circ, translate(f.child(0)))));
    case Formula::Kind::And:
      return Term::binary(Op::And, translate(f.child(0)),
                          translate(f.child(1)));
    case Formula::Kind::Or:
      return Term::binary(Op::Or, translate(f.child(0)),
                          translate(f.child(1)));
  }
  return {};
}

Sequent translate(const Formula& lhs, const Formula& rhs) {
  return {translate(lhs), translate(rhs)};
}

std::string sort_error(const Term& t) {
  if (!t) return "null term";
  if (t.op() == Op::Meta) return "";
  if (t.op() == Op::Atom) return t.sort() == Sort::DL ? "" : "atom not DL";
  const OpInfo& info = op_info(t.op());
  if (t.sort() != info.sort) return "bad sort at " + render(t);
  for (int i = 0; i < info.arity; ++i) {
    if (!t.child(i)) return "missing child in " + std::string(info.token);
    if (t.child(i).sort() != info.child_sort[i])
      return "ill-sorted argument of " + std::string(info.token) + ": " +
             render(t.child(i));
    std::string e = sort_error(t.child(i));
    if (!e.empty()) return e;
  }
  return "";
}

void formula_leaves(const Term& t, std::vector<Term>* out) {
  if (t.is_formula()) {
    out->push_back(t);
    return;
  }
  for (int i = 0; i < t.arity(); ++i) formula_leaves(t.child(i), out);
}

void subformulas(const Term& f, std::vector<Term>* out) {
  out->push_back(f);
  for (int i = 0; i < f.arity(); ++i) subformulas(f.child(i), out);
}

// ---------------------------------------------------------------------------
// Operational reading

Sort xop_sort(XOp op) {
  switch (op) {
    case XOp::One: case XOp::Zero: case XOp::Circ: case XOp::Sim:
    case XOp::Cap: case XOp::Cup: case XOp::KHeyting: case XOp::KCoImp:
    case XOp::ELeft:
      return Sort::K;
    default:
      return Sort::DL;
  }
}

ExtendedTerm ExtendedTerm::var(std::string name, Sort sort) {
  return ExtendedTerm(
      std::make_shared<const Node>(Node{XOp::Var, sort, std::move(name), {}}));
}

ExtendedTerm ExtendedTerm::make(XOp op, std::vector<ExtendedTerm> kids) {
  return ExtendedTerm(std::make_shared<const Node>(
      Node{op, xop_sort(op), "", std::move(kids)}));
}

std::string ExtendedTerm::render() const {
  static const char* names[] = {
      "",      "top",     "bot",      "box",     "and",    "or",
      "one",   "zero",    "circ",     "sim",     "cap",    "cup",
      "imp",   "coimp",   "kimp",     "kcoimp",  "h-left", "h-right",
      "e-left"};
  if (op() == XOp::Var) return name();
  if (kids().empty()) return names[static_cast<int>(op())];
  std::string out = "(";
  out += names[static_cast<int>(op())];
  for (const auto& k : kids()) {
    out += ' ';
    out += k.render();
  }
  return out + ")";
}

Position child_position(Op op, int index, Position parent) {
  switch (op) {
    case Op::TStar:
    case Op::Sim:
      return flip(parent);
    case Op::HExcl:
    case Op::CArr:
    case Op::HSup:
    case Op::CSup:
      return index == 0 ? flip(parent) : parent;
    default:
      return parent;
  }
}

ExtendedTerm operational_reading(const Term& s, Position pos) {
  XOp op;
  switch (s.op()) {
    case Op::Atom: return ExtendedTerm::var(s.name(), Sort::DL);
    case Op::Meta: return ExtendedTerm::var(s.name(), s.sort());
    case Op::Top: case Op::HTop: op = XOp::Top; break;
    case Op::Bot: case Op::CBot: op = XOp::Bot; break;
    case Op::Box: case Op::CBox: op = XOp::Box; break;
    case Op::And: case Op::HAnd: op = XOp::And; break;
    case Op::Or: case Op::CVee: op = XOp::Or; break;
    case Op::One: case Op::HOne: op = XOp::One; break;
    case Op::Zero: case Op::CZero: op = XOp::Zero; break;
    case Op::Circ: case Op::TCirc: op = XOp::Circ; break;
    case Op::Sim: case Op::TStar: op = XOp::Sim; break;
    case Op::Cap: case Op::HCap: op = XOp::Cap; break;
    case Op::Cup: case Op::CCup: op = XOp::Cup; break;
    case Op::HBul: op = XOp::HLeft; break;
    case Op::CBur: op = XOp::HRight; break;
    case Op::HLoz: op = XOp::ELeft; break;
    case Op::HExcl: op = XOp::CoImp; break;
    case Op::CArr: op = XOp::Heyting; break;
    case Op::HSup: op = XOp::KCoImp; break;
    case Op::CSup: op = XOp::KHeyting; break;
    default: return {};
  }
  std::vector<ExtendedTerm> kids;
  for (int i = 0; i < s.arity(); ++i)
    kids.push_back(
        operational_reading(s.child(i), child_position(s.op(), i, pos)));
  return ExtendedTerm::make(op, std::move(kids));
}

namespace {
std::string misplaced(const Term& t, Position pos) {
  if (t.is_formula()) return "";
  Family f = op_info(t.op()).family;
  if (f == Family::Hat && pos == Position::Succedent)
    return std::string(op_info(t.op()).token) + " in succedent position";
  if (f == Family::Check && pos == Position::Precedent)
    return std::string(op_info(t.op()).token) + " in precedent position";
  for (int i = 0; i < t.arity(); ++i) {
    std::string e = misplaced(t.child(i), child_position(t.op(), i, pos));
    if (!e.empty()) return e;
  }
  return "";
}
}  // namespace

std::string placement_error(const Sequent& s) {
  std::string e = misplaced(s.ant, Position::Precedent);
  return e.empty() ? misplaced(s.suc, Position::Succedent) : e;
}

}  // namespace sdm
