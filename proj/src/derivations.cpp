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

#include "sdm/derivations.hpp"

#include <stdexcept>
#include <unordered_map>

#include "sdm/algebra.hpp"

namespace sdm {
namespace {

const std::vector<const RuleSchema*>& unary_rules(System s) {
  static std::vector<std::vector<const RuleSchema*>> cache = [] {
    std::vector<std::vector<const RuleSchema*>> out(kSystemCount);
    for (const auto& r : all_rules())
      if (r.premises.size() == 1 && !r.is_cut)
        for (int i = 0; i < kSystemCount; ++i)
          if (r.in(static_cast<System>(i))) out[i].push_back(&r);
    return out;
  }();
  return cache[static_cast<int>(s)];
}

}  // namespace

std::optional<ProofTree> connect(const ProofTree& from, const Sequent& target,
                                 System s, int max_steps) {
  if (from.conclusion == target) return from;
  struct Node {
    Sequent seq;
    int parent;  // node this one is a premise of
    const RuleSchema* rule;
  };
  std::vector<Node> nodes{{target, -1, nullptr}};
  std::unordered_map<Sequent, int, SequentHash> seen{{target, 0}};
  std::size_t level_begin = 0;
  for (int depth = 0; depth < max_steps; ++depth) {
    std::size_t level_end = nodes.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (const RuleSchema* r : unary_rules(s)) {
        Subst sub;
        if (!match(r->conclusion, nodes[i].seq, &sub)) continue;
        Sequent prem = instantiate(r->premises[0], sub);
        if (prem.ant.has_meta() || prem.suc.has_meta()) continue;
        if (prem == from.conclusion) {
          ProofTree t{nodes[i].seq, r->name, {from}};
          for (int k = static_cast<int>(i); nodes[k].parent >= 0;
               k = nodes[k].parent)
            t = ProofTree{nodes[nodes[k].parent].seq, nodes[k].rule->name,
                          {std::move(t)}};
          return t;
        }
        if (seen.count(prem)) continue;
        seen.emplace(prem, static_cast<int>(nodes.size()));
        nodes.push_back({prem, static_cast<int>(i), r});
      }
    }
    level_begin = level_end;
    if (level_begin == nodes.size()) break;
  }
  return std::nullopt;
}

Transcript::Transcript(System s, Subst inst, int max_gap)
    : sys_(s), inst_(std::move(inst)), max_gap_(max_gap) {}

Sequent Transcript::line(const std::string& text) const {
  ParseOptions o;
  o.allow_meta = true;
  Sequent q = instantiate(parse_infix_sequent(text, o), inst_);
  if (q.ant.has_meta() || q.suc.has_meta())
    throw std::invalid_argument("uninstantiated line: " + text);
  return q;
}

ProofTree Transcript::start(const std::string& text) {
  Sequent q = line(text);
  if (q.ant == q.suc && q.ant.is_formula()) return identity_proof(q.ant);
  for (const auto& r : all_rules()) {
    if (!r.premises.empty() || !r.in(sys_)) continue;
    Subst s;
    if (match(r.conclusion, q, &s)) return {q, r.name, {}};
  }
  throw InternalError("no axiom concludes " + text);
}

ProofTree Transcript::reach(ProofTree from, const std::string& text) {
  Sequent q = line(text);
  std::optional<ProofTree> t = connect(from, q, sys_, max_gap_);
  if (!t)
    throw InternalError("cannot reach '" + text + "' from " +
                        render(from.conclusion));
  std::size_t added = t->depth() - from.depth();
  if (added > 1) {
    std::string rules;
    for (const ProofTree* n = &*t; n->premises.size() == 1 &&
                                   !(n->conclusion == from.conclusion);
         n = &n->premises[0])
      rules = n->rule + (rules.empty() ? "" : ", ") + rules;
    gaps_.push_back(text + "  <=  " + rules);
  }
  return *t;
}

ProofTree Transcript::step(ProofTree from,
                           const std::vector<std::string>& lines) {
  for (const auto& l : lines) from = reach(std::move(from), l);
  return from;
}

ProofTree Transcript::join(ProofTree l, ProofTree r,
                           const std::vector<std::string>& lines) {
  if (lines.empty()) throw std::invalid_argument("join needs a line");
  Sequent q = line(lines.front());
  for (const auto& rule : all_rules()) {
    if (rule.premises.size() != 2 || rule.is_cut || !rule.in(sys_)) continue;
    ProofTree t;
    try {
      t = apply_rule(rule.name, {l, r});
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (auto u = connect(t, q, sys_, max_gap_)) {
      std::vector<std::string> rest(lines.begin() + 1, lines.end());
      return step(std::move(*u), rest);
    }
  }
  throw InternalError("no binary rule reaches '" + lines.front() + "'");
}

namespace {

struct Spec {
  const char* id;
  const char* axiom;
  System system;
  const char* goal;
};

const Spec kSpecs[] = {
    {"i", "not not A and not not B |- not not (A and B)", System::SM,
     "box sim circ box sim circ ?A and box sim circ box sim circ ?B |- "
     "box sim circ box sim circ (?A and ?B)"},
    {"ii", "not A |- not not not A", System::SM,
     "box sim circ ?A |- box sim circ box sim circ box sim circ ?A"},
    {"iii", "not not not A |- not A", System::SM,
     "box sim circ box sim circ box sim circ ?A |- box sim circ ?A"},
    {"iv", "not A and not B |- not (A or B)", System::SM,
     "box sim circ ?A and box sim circ ?B |- box sim circ (?A or ?B)"},
    {"v", "top |- not bot", System::SM, "top |- box sim circ bot"},
    {"vi", "not top |- bot", System::SM, "box sim circ top |- bot"},
    {"vii", "A |- not not A", System::LQM,
     "?A |- box sim circ box sim circ ?A"},
    {"viii", "not not A |- A", System::UQM,
     "box sim circ box sim circ ?A |- ?A"},
    {"ix", "not A and not not A |- bot", System::DP,
     "box sim circ ?A and box sim circ box sim circ ?A |- bot"},
    {"x", "A and not A |- bot", System::AP, "?A and box sim circ ?A |- bot"},
    {"xi", "top |- not A or not not A", System::WS,
     "top |- box sim circ ?A or box sim circ box sim circ ?A"},
};

using Lines = std::vector<std::string>;

// Negation chains used below: N1 = box sim circ A, N2 = box sim circ N1.
ProofTree derive_i(Transcript& t) {
  const std::string m =
      "(box sim circ box sim circ ?A and box sim circ box sim circ ?B)";
  auto half = [&](const std::string& x) {
    Lines ls = {
        "tcirc ?X |- tcirc ?X",
        "circ ?X |- tcirc ?X",
        "tstar tcirc ?X |- tstar circ ?X",
        "tstar tcirc ?X |- sim circ ?X",
        "tstar tcirc ?X |- tcirc cbox sim circ ?X",
        "hbul tstar tcirc ?X |- cbox sim circ ?X",
        "hbul tstar tcirc ?X |- box sim circ ?X",
        "tstar tcirc ?X |- tcirc box sim circ ?X",
        "tstar tcirc ?X |- circ box sim circ ?X",
        "tstar circ box sim circ ?X |- tcirc ?X",
        "sim circ box sim circ ?X |- tcirc ?X",
        "box sim circ box sim circ ?X |- cbox tcirc ?X",
        "box sim circ box sim circ ?A hand box sim circ box sim circ ?B |- "
        "cbox tcirc ?X",
        "box sim circ box sim circ ?A and box sim circ box sim circ ?B |- "
        "cbox tcirc ?X",
        "hloz M |- tcirc ?X",
        "hbul hloz M |- ?X",
    };
    for (auto& l : ls) {
      for (std::size_t p; (p = l.find("?X")) != std::string::npos;)
        l.replace(p, 2, x);
      for (std::size_t p; (p = l.find(" M ")) != std::string::npos;)
        l.replace(p, 3, " " + m + " ");
    }
    return t.step(t.start(x + " |- " + x), ls);
  };
  ProofTree l = half("?A");
  ProofTree r = half("?B");
  const std::string hm = "hloz " + m;
  return t.join(l, r,
                {"(hbul " + hm + ") hand (hbul " + hm + ") |- ?A and ?B",
                 "hbul " + hm + " |- ?A and ?B",
                 hm + " |- tcirc (?A and ?B)",
                 hm + " |- circ (?A and ?B)",
                 "tstar circ (?A and ?B) |- tstar " + hm,
                 "sim circ (?A and ?B) |- tstar " + hm,
                 "box sim circ (?A and ?B) |- cbox tstar " + hm,
                 "tcirc box sim circ (?A and ?B) |- tcirc cbox tstar " + hm,
                 "tcirc box sim circ (?A and ?B) |- tstar " + hm,
                 "circ box sim circ (?A and ?B) |- tstar " + hm,
                 hm + " |- tstar circ box sim circ (?A and ?B)",
                 hm + " |- sim circ box sim circ (?A and ?B)",
                 m + " |- cbox sim circ box sim circ (?A and ?B)",
                 m + " |- box sim circ box sim circ (?A and ?B)"});
}

ProofTree derive_ii(Transcript& t) {
  return t.step(
      t.start("?A |- ?A"),
      {"tcirc ?A |- tcirc ?A",
       "circ ?A |- tcirc ?A",
       "circ ?A |- circ ?A",
       "tstar circ ?A |- tstar circ ?A",
       "tstar circ ?A |- sim circ ?A",
       "tstar circ ?A |- tcirc cbox sim circ ?A",
       "hbul tstar circ ?A |- cbox sim circ ?A",
       "hbul tstar circ ?A |- box sim circ ?A",
       "tstar circ ?A |- tcirc box sim circ ?A",
       "tstar circ ?A |- circ box sim circ ?A",
       "tstar circ box sim circ ?A |- circ ?A",
       "sim circ box sim circ ?A |- circ ?A",
       "box sim circ box sim circ ?A |- cbox circ ?A",
       "tcirc box sim circ box sim circ ?A |- tcirc cbox circ ?A",
       "circ box sim circ box sim circ ?A |- tcirc cbox circ ?A",
       "circ box sim circ box sim circ ?A |- circ ?A",
       "tstar circ ?A |- tstar circ box sim circ box sim circ ?A",
       "tstar circ ?A |- sim circ box sim circ box sim circ ?A",
       "sim circ ?A |- sim circ box sim circ box sim circ ?A",
       "box sim circ ?A |- cbox sim circ box sim circ box sim circ ?A",
       "box sim circ ?A |- box sim circ box sim circ box sim circ ?A"});
}

ProofTree derive_iii(Transcript& t) {
  return t.step(
      t.start("?A |- ?A"),
      {"tcirc ?A |- tcirc ?A",
       "circ ?A |- tcirc ?A",
       "circ ?A |- circ ?A",
       "tstar circ ?A |- tstar circ ?A",
       "sim circ ?A |- tstar circ ?A",
       "box sim circ ?A |- cbox tstar circ ?A",
       "tcirc box sim circ ?A |- tcirc cbox tstar circ ?A",
       "circ box sim circ ?A |- tcirc cbox tstar circ ?A",
       "circ box sim circ ?A |- tstar circ ?A",
       "circ ?A |- tstar circ box sim circ ?A",
       "circ ?A |- sim circ box sim circ ?A",
       "circ ?A |- tcirc cbox sim circ box sim circ ?A",
       "hbul circ ?A |- cbox sim circ box sim circ ?A",
       "hbul circ ?A |- box sim circ box sim circ ?A",
       "circ ?A |- tcirc box sim circ box sim circ ?A",
       "circ ?A |- circ box sim circ box sim circ ?A",
       "tstar circ box sim circ box sim circ ?A |- tstar circ ?A",
       "sim circ box sim circ box sim circ ?A |- tstar circ ?A",
       "sim circ box sim circ box sim circ ?A |- sim circ ?A",
       "box sim circ box sim circ box sim circ ?A |- cbox sim circ ?A",
       "box sim circ box sim circ box sim circ ?A |- box sim circ ?A"});
}

ProofTree derive_iv(Transcript& t) {
  const std::string n = "(box sim circ ?A and box sim circ ?B)";
  const std::string s = "cbur tstar hloz " + n;
  auto half = [&](const std::string& x, bool swap) {
    Lines ls = {
        "tcirc " + x + " |- tcirc " + x,
        "tcirc " + x + " |- circ " + x,
        "tstar circ " + x + " |- tstar tcirc " + x,
        "sim circ " + x + " |- tstar tcirc " + x,
        "box sim circ " + x + " |- cbox tstar tcirc " + x,
    };
    if (swap)
      ls.push_back("box sim circ ?B hand box sim circ ?A |- cbox tstar tcirc " +
                   x);
    ls.push_back("box sim circ ?A hand box sim circ ?B |- cbox tstar tcirc " +
                 x);
    ls.push_back("box sim circ ?A and box sim circ ?B |- cbox tstar tcirc " +
                 x);
    ls.push_back("hloz " + n + " |- tstar tcirc " + x);
    ls.push_back("tcirc " + x + " |- tstar hloz " + n);
    ls.push_back(x + " |- " + s);
    return t.step(t.start(x + " |- " + x), ls);
  };
  ProofTree l = half("?A", false);
  ProofTree r = half("?B", true);
  return t.join(l, r,
                {"?A or ?B |- (" + s + ") cvee (" + s + ")",
                 "?A or ?B |- " + s,
                 "tcirc (?A or ?B) |- tstar hloz " + n,
                 "circ (?A or ?B) |- tstar hloz " + n,
                 "hloz " + n + " |- tstar circ (?A or ?B)",
                 "hloz " + n + " |- sim circ (?A or ?B)",
                 n + " |- cbox sim circ (?A or ?B)",
                 n + " |- box sim circ (?A or ?B)"});
}

ProofTree derive_v(Transcript& t) {
  return t.step(t.start("bot |- cbot"),
                {"bot |- cbot cvee (cbur tstar hone)",
                 "bot |- cbur tstar hone",
                 "tcirc bot |- tstar hone",
                 "circ bot |- tstar hone",
                 "hone |- tstar circ bot",
                 "hone |- sim circ bot",
                 "hloz htop |- sim circ bot",
                 "htop |- cbox sim circ bot",
                 "htop |- box sim circ bot",
                 "top |- box sim circ bot"});
}

ProofTree derive_vi(Transcript& t) {
  return t.step(t.start("htop |- top"),
                {"(hbul tstar czero) hand htop |- top",
                 "hbul tstar czero |- top",
                 "tstar czero |- tcirc top",
                 "tstar czero |- circ top",
                 "tstar circ top |- czero",
                 "sim circ top |- czero",
                 "box sim circ top |- cbox czero",
                 "box sim circ top |- cbot",
                 "box sim circ top |- bot"});
}

ProofTree derive_vii(Transcript& t) {
  return t.step(t.start("?A |- ?A"),
                {"?A |- cbox tcirc ?A",
                 "hloz ?A |- tcirc ?A",
                 "hloz ?A |- circ ?A",
                 "tstar circ ?A |- tstar hloz ?A",
                 "sim circ ?A |- tstar hloz ?A",
                 "box sim circ ?A |- cbox tstar hloz ?A",
                 "tcirc box sim circ ?A |- tcirc cbox tstar hloz ?A",
                 "tcirc box sim circ ?A |- tstar hloz ?A",
                 "circ box sim circ ?A |- tstar hloz ?A",
                 "hloz ?A |- tstar circ box sim circ ?A",
                 "hloz ?A |- sim circ box sim circ ?A",
                 "?A |- cbox sim circ box sim circ ?A",
                 "?A |- box sim circ box sim circ ?A"});
}

ProofTree derive_viii(Transcript& t) {
  return t.step(t.start("?A |- ?A"),
                {"tcirc ?A |- tcirc ?A",
                 "circ ?A |- tcirc ?A",
                 "tstar tcirc ?A |- tstar circ ?A",
                 "tstar tcirc ?A |- sim circ ?A",
                 "tstar tcirc ?A |- tcirc cbox sim circ ?A",
                 "hbul tstar tcirc ?A |- cbox sim circ ?A",
                 "hbul tstar tcirc ?A |- box sim circ ?A",
                 "tstar tcirc ?A |- tcirc box sim circ ?A",
                 "tstar tcirc ?A |- circ box sim circ ?A",
                 "tstar circ box sim circ ?A |- tcirc ?A",
                 "sim circ box sim circ ?A |- tcirc ?A",
                 "box sim circ box sim circ ?A |- cbox tcirc ?A",
                 "hloz box sim circ box sim circ ?A |- tcirc ?A",
                 "hbul hloz box sim circ box sim circ ?A |- ?A",
                 "box sim circ box sim circ ?A |- ?A"});
}

ProofTree derive_ix(Transcript& t) {
  const std::string n1 = "box sim circ ?A";
  const std::string n2 = "box sim circ box sim circ ?A";
  const std::string c = "circ box sim circ ?A";
  const std::string h1 = "hloz " + n1;
  const std::string both = "(" + n1 + " hand " + n2 + ")";
  return t.step(
      t.start("?A |- ?A"),
      {"tcirc ?A |- tcirc ?A",
       "circ ?A |- tcirc ?A",
       "circ ?A |- circ ?A",
       // res_B needs tstar on the structure it moves; cont does the job.
       "tstar circ ?A |- tstar circ ?A",
       "tstar circ ?A |- sim circ ?A",
       "sim circ ?A |- sim circ ?A",
       "sim circ ?A |- tcirc cbox sim circ ?A",
       "hbul sim circ ?A |- cbox sim circ ?A",
       "hbul sim circ ?A |- " + n1,
       "sim circ ?A |- tcirc " + n1,
       "sim circ ?A |- " + c,
       n1 + " |- cbox " + c,
       h1 + " |- " + c,
       h1 + " |- " + c + " ccup czero",
       // Double star on the moved formula so res_B applies.
       "(czero hsup " + h1 + ") |- " + c,
       "(czero hsup " + h1 + ") |- tstar tstar " + c,
       h1 + " |- czero ccup (tstar tstar " + c + ")",
       h1 + " |- (tstar tstar " + c + ") ccup czero",
       "(tstar " + c + ") hcap (" + h1 + ") |- czero",
       "(" + h1 + ") hcap (tstar " + c + ") |- czero",
       "tstar " + c + " |- (tstar " + h1 + ") ccup czero",
       "sim " + c + " |- (tstar " + h1 + ") ccup czero",
       n2 + " |- cbox ((tstar " + h1 + ") ccup czero)",
       "hloz " + n2 + " |- (tstar " + h1 + ") ccup czero",
       "(" + h1 + ") hcap (hloz " + n2 + ") |- czero",
       "hloz " + n2 + " |- (" + h1 + ") csup czero",
       n2 + " |- cbox ((" + h1 + ") csup czero)",
       n2 + " hand " + n1 + " |- cbox ((" + h1 + ") csup czero)",
       n1 + " hand " + n2 + " |- cbox ((" + h1 + ") csup czero)",
       "hloz " + both + " |- (" + h1 + ") csup czero",
       "(" + h1 + ") hcap (hloz " + both + ") |- czero",
       h1 + " |- (hloz " + both + ") csup czero",
       n1 + " |- cbox ((hloz " + both + ") csup czero)",
       n1 + " hand " + n2 + " |- cbox ((hloz " + both + ") csup czero)",
       "hloz " + both + " |- (hloz " + both + ") csup czero",
       "(hloz " + both + ") hcap (hloz " + both + ") |- czero",
       "hloz " + both + " |- czero",
       n1 + " hand " + n2 + " |- cbox czero",
       n1 + " hand " + n2 + " |- cbot",
       n1 + " hand " + n2 + " |- bot",
       n1 + " and " + n2 + " |- bot"});
}

ProofTree derive_x(Transcript& t) {
  const std::string n1 = "box sim circ ?A";
  return t.step(t.start("?A |- ?A"),
                {"tcirc ?A |- tcirc ?A",
                 "tcirc ?A |- circ ?A",
                 "sim circ ?A |- tstar tcirc ?A",
                 n1 + " |- cbox tstar tcirc ?A",
                 "?A hand " + n1 + " |- cbot",
                 n1 + " |- ?A carr cbot",
                 "?A hand " + n1 + " |- cbot",
                 "?A hand " + n1 + " |- bot",
                 "?A and " + n1 + " |- bot"});
}

ProofTree derive_xi(Transcript& t) {
  const std::string n1 = "box sim circ ?A";
  const std::string w = "(cbox tstar tcirc " + n1 + ")";
  const std::string e = "(" + n1 + " hexcl htop)";
  return t.step(t.start("?A |- ?A"),
                {"tcirc ?A |- tcirc ?A",
                 "tcirc ?A |- circ ?A",
                 "circ ?A |- circ ?A",
                 "sim circ ?A |- tstar circ ?A",
                 "sim circ ?A |- sim circ ?A",
                 n1 + " |- cbox sim circ ?A",
                 "hloz " + n1 + " |- sim circ ?A",
                 "hloz (" + w + " hexcl htop) |- sim circ ?A",
                 w + " hexcl htop |- cbox sim circ ?A",
                 w + " hexcl htop |- " + n1,
                 "htop |- " + w + " cvee " + n1,
                 e + " |- " + w,
                 "hloz " + e + " |- tstar tcirc " + n1,
                 "tcirc " + n1 + " |- tstar hloz " + e,
                 "circ " + n1 + " |- tstar hloz " + e,
                 "hloz " + e + " |- tstar circ " + n1,
                 "hloz " + e + " |- sim circ " + n1,
                 e + " |- cbox sim circ " + n1,
                 e + " |- box sim circ " + n1,
                 "htop |- " + n1 + " cvee box sim circ " + n1,
                 "htop |- " + n1 + " or box sim circ " + n1,
                 "top |- " + n1 + " or box sim circ " + n1});
}

using Deriver = ProofTree (*)(Transcript&);
const Deriver kDerivers[] = {derive_i,   derive_ii,   derive_iii, derive_iv,
                             derive_v,   derive_vi,   derive_vii, derive_viii,
                             derive_ix,  derive_x,    derive_xi};

Subst ab(const Term& a, const Term& b) {
  Subst s;
  s.set("A", a);
  s.set("B", b);
  return s;
}

}  // namespace

std::vector<std::pair<std::string, Sequent>> axiom_goals(const Term& a,
                                                         const Term& b) {
  std::vector<std::pair<std::string, Sequent>> out;
  Transcript t(System::SM, ab(a, b));
  for (const Spec& s : kSpecs) out.emplace_back(s.id, t.line(s.goal));
  return out;
}

std::vector<AxiomDerivation> axiom_derivations(const Term& a, const Term& b) {
  std::vector<AxiomDerivation> out;
  for (std::size_t i = 0; i < std::size(kSpecs); ++i) {
    const Spec& s = kSpecs[i];
    Transcript t(s.system, ab(a, b));
    AxiomDerivation d;
    d.id = s.id;
    d.axiom = s.axiom;
    d.system = s.system;
    d.goal = t.line(s.goal);
    d.proof = kDerivers[i](t);
    d.gaps = t.gaps();
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace sdm
