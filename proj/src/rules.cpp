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

#include "sdm/rules.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "sdm/algebra.hpp"

namespace sdm {
namespace {

constexpr unsigned kAll = 0x3f;
constexpr unsigned bit(System s) { return 1u << static_cast<int>(s); }
constexpr unsigned kDPUp = bit(System::DP) | bit(System::AP) | bit(System::WS);

struct Builder {
  std::vector<RuleSchema> rules;

  Sequent seq(const char* text) {
    ParseOptions o;
    o.allow_meta = true;
    return parse_sequent(std::string("(seq ") + text + ")", o);
  }

  void rule(const char* name, std::vector<const char*> prem,
            const char* concl, unsigned systems = kAll, bool cut = false) {
    RuleSchema r;
    r.name = name;
    for (const char* p : prem) r.premises.push_back(seq(p));
    r.conclusion = seq(concl);
    r.systems = systems;
    r.is_cut = cut;
    rules.push_back(std::move(r));
  }

  // Double-line rule: `.dn` reads top to bottom, `.up` bottom to top.
  void both(const char* name, const char* top, const char* bottom,
            unsigned systems = kAll) {
    std::string n(name);
    rule((n + ".dn").c_str(), {top}, bottom, systems);
    rule((n + ".up").c_str(), {bottom}, top, systems);
  }
};

std::vector<RuleSchema> build_catalogue() {
  Builder b;
  // Identity and cut.
  b.rule("Id", {}, "?p ?p");
  b.rule("Cut_L", {"?X ?A", "?A ?Y"}, "?X ?Y", kAll, true);
  b.rule("Cut_D", {"?G ?a", "?a ?D"}, "?G ?D", kAll, true);

  // Display rules.
  b.both("res_L_and", "(hand ?X ?Y) ?Z", "?Y (carr ?X ?Z)");
  b.both("res_L_or", "?X (cvee ?Y ?Z)", "(hexcl ?Y ?X) ?Z");
  b.both("res_D_cap", "(hcap ?G ?D) ?T", "?D (csup ?G ?T)");
  b.both("res_D_cup", "?G (ccup ?D ?T)", "(hsup ?D ?G) ?T");
  b.both("adj_star_L", "(tstar ?G) ?D", "(tstar ?D) ?G");
  b.both("adj_star_R", "?G (tstar ?D)", "?D (tstar ?G)");
  b.both("adj_LD", "?X (cbox ?G)", "(hloz ?X) ?G");
  b.both("adj_DL_r", "(tcirc ?X) ?G", "?X (cbur ?G)");
  b.both("adj_DL_l", "?G (tcirc ?X)", "(hbul ?G) ?X");

  // DL structural rules.
  b.both("htop", "?X ?Y", "(hand ?X htop) ?Y");
  b.both("cbot", "?X ?Y", "?X (cvee ?Y cbot)");
  b.rule("E_L_and", {"(hand ?X ?Y) ?Z"}, "(hand ?Y ?X) ?Z");
  b.rule("E_L_or", {"?X (cvee ?Y ?Z)"}, "?X (cvee ?Z ?Y)");
  b.both("A_L_and", "(hand (hand ?X ?Y) ?Z) ?W", "(hand ?X (hand ?Y ?Z)) ?W");
  b.both("A_L_or", "?X (cvee (cvee ?Y ?Z) ?W)", "?X (cvee ?Y (cvee ?Z ?W))");
  b.rule("W_L_and", {"?X ?Y"}, "(hand ?X ?Z) ?Y");
  b.rule("W_L_or", {"?X ?Y"}, "?X (cvee ?Y ?Z)");
  b.rule("C_L_and", {"(hand ?X ?X) ?Y"}, "?X ?Y");
  b.rule("C_L_or", {"?X (cvee ?Y ?Y)"}, "?X ?Y");

  // K structural rules.
  b.both("hone", "?G ?D", "(hcap ?G hone) ?D");
  b.both("czero", "?G ?D", "?G (ccup ?D czero)");
  b.rule("E_D_cap", {"(hcap ?G ?D) ?T"}, "(hcap ?D ?G) ?T");
  b.rule("E_D_cup", {"?G (ccup ?D ?T)"}, "?G (ccup ?T ?D)");
  b.both("A_D_cap", "(hcap (hcap ?G ?D) ?T) ?P", "(hcap ?G (hcap ?D ?T)) ?P");
  b.both("A_D_cup", "?G (ccup (ccup ?D ?T) ?P)", "?G (ccup ?D (ccup ?T ?P))");
  b.rule("W_D_cap", {"?G ?D"}, "(hcap ?G ?T) ?D");
  b.rule("W_D_cup", {"?G ?D"}, "?G (ccup ?D ?T)");
  b.rule("C_D_cap", {"(hcap ?G ?G) ?D"}, "?G ?D");
  b.rule("C_D_cup", {"?G (ccup ?D ?D)"}, "?G ?D");
  b.both("cont", "?G ?D", "(tstar ?D) (tstar ?G)");

  // Multi-type structural rules.
  b.rule("tcirc", {"?X ?Y"}, "(tcirc ?X) (tcirc ?Y)");
  b.rule("tbul", {"(hbul ?G) (cbur ?D)"}, "?G ?D");
  b.rule("hloz_hone", {"hone ?G"}, "(hloz htop) ?G");
  b.rule("cbox_czero", {"?X (cbox czero)"}, "?X cbot");
  b.both("tcirc_cbox", "?G (tcirc (cbox ?D))", "?G ?D");

  // DL operational rules.
  b.rule("top_L", {"htop ?X"}, "top ?X");
  b.rule("top_R", {}, "htop top");
  b.rule("bot_L", {}, "bot cbot");
  b.rule("bot_R", {"?X cbot"}, "?X bot");
  b.rule("and_L", {"(hand ?A ?B) ?X"}, "(and ?A ?B) ?X");
  b.rule("and_R", {"?X ?A", "?Y ?B"}, "(hand ?X ?Y) (and ?A ?B)");
  b.rule("or_L", {"?A ?X", "?B ?Y"}, "(or ?A ?B) (cvee ?X ?Y)");
  b.rule("or_R", {"?X (cvee ?A ?B)"}, "?X (or ?A ?B)");

  // K operational rules.
  b.rule("one_L", {"hone ?G"}, "one ?G");
  b.rule("one_R", {}, "hone one");
  b.rule("zero_L", {}, "zero czero");
  b.rule("zero_R", {"?G czero"}, "?G zero");
  b.rule("cap_L", {"(hcap ?a ?b) ?G"}, "(cap ?a ?b) ?G");
  b.rule("cap_R", {"?G ?a", "?D ?b"}, "(hcap ?G ?D) (cap ?a ?b)");
  b.rule("cup_L", {"?a ?G", "?b ?D"}, "(cup ?a ?b) (ccup ?G ?D)");
  b.rule("cup_R", {"?G (ccup ?a ?b)"}, "?G (cup ?a ?b)");
  b.rule("sim_L", {"(tstar ?a) ?G"}, "(sim ?a) ?G");
  b.rule("sim_R", {"?G (tstar ?a)"}, "?G (sim ?a)");

  // Multi-type operational rules.
  b.rule("circ_L", {"(tcirc ?A) ?G"}, "(circ ?A) ?G");
  b.rule("circ_R", {"?G (tcirc ?A)"}, "?G (circ ?A)");
  b.rule("box_L", {"?a ?G"}, "(box ?a) (cbox ?G)");
  b.rule("box_R", {"?X (cbox ?a)"}, "?X (box ?a)");

  // Extensions.
  b.rule("LQM", {"?X ?Y"}, "?X (cbox (tcirc ?Y))", bit(System::LQM));
  b.rule("UQM", {"(hbul (hloz ?X)) ?Y"}, "?X ?Y", bit(System::UQM));
  b.both("res_B", "(hcap ?G ?D) ?S", "?D (ccup (tstar ?G) ?S)", kDPUp);
  b.rule("AP", {"?X (cbox (tstar (tcirc ?Y)))"}, "(hand ?X ?Y) cbot",
         bit(System::AP));
  b.rule("WS", {"(hloz ?X) ?D"},
         "(hloz (hexcl (cbox (tstar (tcirc ?X))) htop)) ?D", bit(System::WS));
  return b.rules;
}

}  // namespace

const char* system_name(System s) {
  static const char* names[] = {"sm", "lqm", "uqm", "dp", "ap", "ws"};
  return names[static_cast<int>(s)];
}

System parse_system(const std::string& name) {
  std::string low;
  for (char c : name) low += static_cast<char>(std::tolower(c));
  for (int i = 0; i < kSystemCount; ++i)
    if (low == system_name(static_cast<System>(i)))
      return static_cast<System>(i);
  throw std::invalid_argument("unknown system '" + name + "'");
}

unsigned system_flags(System s) {
  switch (s) {
    case System::SM: return 0;
    case System::LQM: return kH6a;
    case System::UQM: return kH6b;
    case System::DP: return kBoolD;
    case System::AP: return kBoolD | kH7;
    case System::WS: return kBoolD | kH8;
  }
  return 0;
}

const std::vector<RuleSchema>& all_rules() {
  static const std::vector<RuleSchema> rules = build_catalogue();
  return rules;
}

std::vector<RuleSchema> system_rules(System s) {
  std::vector<RuleSchema> out;
  for (const auto& r : all_rules())
    if (r.in(s)) out.push_back(r);
  return out;
}

const RuleSchema* find_rule(const std::string& name) {
  static const std::unordered_map<std::string, const RuleSchema*> index = [] {
    std::unordered_map<std::string, const RuleSchema*> m;
    for (const auto& r : all_rules()) m[r.name] = &r;
    return m;
  }();
  auto it = index.find(name);
  return it == index.end() ? nullptr : it->second;
}

const RuleSchema* find_rule(System s, const std::string& name) {
  const RuleSchema* r = find_rule(name);
  return r != nullptr && r->in(s) ? r : nullptr;
}

const Term* Subst::get(const std::string& name) const {
  for (const auto& [n, t] : items_)
    if (n == name) return &t;
  return nullptr;
}

void Subst::set(const std::string& name, Term t) {
  for (auto& [n, v] : items_)
    if (n == name) {
      v = std::move(t);
      return;
    }
  items_.emplace_back(name, std::move(t));
}

bool match(const Term& p, const Term& t, Subst* s, std::string* why) {
  if (p.op() == Op::Meta) {
    if (p.sort() != t.sort()) {
      if (why) *why = "metavariable " + p.name() + " has the wrong sort";
      return false;
    }
    if (p.meta_kind() == MetaKind::Formula && !t.is_formula()) {
      if (why) *why = "metavariable " + p.name() + " needs a formula";
      return false;
    }
    if (p.meta_kind() == MetaKind::Atom && t.op() != Op::Atom) {
      if (why) *why = "metavariable " + p.name() + " needs an atom";
      return false;
    }
    if (const Term* b = s->get(p.name())) {
      if (*b != t) {
        if (why) *why = "metavariable " + p.name() + " bound inconsistently";
        return false;
      }
      return true;
    }
    s->set(p.name(), t);
    return true;
  }
  if (p.op() != t.op() || (p.op() == Op::Atom && p.name() != t.name())) {
    if (why)
      *why = "expected " + render(p) + ", found " + render(t);
    return false;
  }
  for (int i = 0; i < p.arity(); ++i)
    if (!match(p.child(i), t.child(i), s, why)) return false;
  return true;
}

bool match(const Sequent& p, const Sequent& t, Subst* s, std::string* why) {
  return match(p.ant, t.ant, s, why) && match(p.suc, t.suc, s, why);
}

Term instantiate(const Term& p, const Subst& s) {
  if (!p.has_meta()) return p;
  if (p.op() == Op::Meta) {
    const Term* b = s.get(p.name());
    return b ? *b : p;
  }
  if (p.arity() == 1) return Term::unary(p.op(), instantiate(p.child(0), s));
  return Term::binary(p.op(), instantiate(p.child(0), s),
                      instantiate(p.child(1), s));
}

Sequent instantiate(const Sequent& p, const Subst& s) {
  return {instantiate(p.ant, s), instantiate(p.suc, s)};
}

}  // namespace sdm
