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

#include "sdm/cut.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace sdm {
namespace {

ProofTree rule(const char* name, std::vector<ProofTree> premises) {
  return apply_rule(name, std::move(premises));
}

ProofTree reduce_here(const ProofTree& c) {
  const RuleSchema* r = find_rule(c.rule);
  if (r == nullptr || !r->is_cut)
    throw CutError("node is not a cut (" + c.rule + ")");
  if (c.premises.size() != 2) throw CutError("cut node needs two premises");
  const ProofTree& l = c.premises[0];
  const ProofTree& rt = c.premises[1];
  const Term& f = l.conclusion.suc;
  auto need = [&](const char* lr, const char* rr) {
    if (l.rule != lr || rt.rule != rr)
      throw CutError("cut formula " + render(f) +
                     " is not principal in both premises (" + l.rule + ", " +
                     rt.rule + ")");
  };
  switch (f.op()) {
    case Op::Atom:
      need("Id", "Id");
      return l;
    case Op::Top:
      need("top_R", "top_L");
      return rt.premises[0];
    case Op::Bot:
      need("bot_R", "bot_L");
      return l.premises[0];
    case Op::One:
      need("one_R", "one_L");
      return rt.premises[0];
    case Op::Zero:
      need("zero_R", "zero_L");
      return l.premises[0];
    case Op::Sim: {
      need("sim_R", "sim_L");
      ProofTree a = rule("adj_star_L.dn", {rt.premises[0]});
      ProofTree b = rule("adj_star_R.dn", {l.premises[0]});
      return rule("cont.up", {rule("Cut_D", {a, b})});
    }
    case Op::And:
    case Op::Cap: {
      bool dl = f.op() == Op::And;
      need(dl ? "and_R" : "cap_R", dl ? "and_L" : "cap_L");
      const char* dn = dl ? "res_L_and.dn" : "res_D_cap.dn";
      const char* up = dl ? "res_L_and.up" : "res_D_cap.up";
      const char* ex = dl ? "E_L_and" : "E_D_cap";
      const char* cut = dl ? "Cut_L" : "Cut_D";
      ProofTree s = rule(dn, {rt.premises[0]});
      s = rule(cut, {l.premises[1], s});
      s = rule(ex, {rule(up, {s})});
      s = rule(dn, {s});
      s = rule(cut, {l.premises[0], s});
      return rule(ex, {rule(up, {s})});
    }
    case Op::Or:
    case Op::Cup: {
      bool dl = f.op() == Op::Or;
      need(dl ? "or_R" : "cup_R", dl ? "or_L" : "cup_L");
      const char* dn = dl ? "res_L_or.dn" : "res_D_cup.dn";
      const char* up = dl ? "res_L_or.up" : "res_D_cup.up";
      const char* ex = dl ? "E_L_or" : "E_D_cup";
      const char* cut = dl ? "Cut_L" : "Cut_D";
      ProofTree s = rule(dn, {l.premises[0]});
      s = rule(cut, {s, rt.premises[1]});
      s = rule(ex, {rule(up, {s})});
      s = rule(dn, {s});
      s = rule(cut, {s, rt.premises[0]});
      return rule(ex, {rule(up, {s})});
    }
    case Op::Box: {
      need("box_R", "box_L");
      ProofTree s = rule("adj_LD.dn", {l.premises[0]});
      s = rule("Cut_D", {s, rt.premises[0]});
      return rule("adj_LD.up", {s});
    }
    case Op::Circ: {
      need("circ_R", "circ_L");
      ProofTree a = rule("adj_DL_l.dn", {l.premises[0]});
      ProofTree b = rule("adj_DL_r.dn", {rt.premises[0]});
      return rule("tbul", {rule("Cut_L", {a, b})});
    }
    default:
      throw CutError("no reduction for cut formula " + render(f));
  }
}

void collect_cuts(const ProofTree& t, std::vector<Term>* out) {
  const RuleSchema* r = find_rule(t.rule);
  if (r != nullptr && r->is_cut && t.premises.size() == 2)
    out->push_back(t.premises[0].conclusion.suc);
  for (const auto& p : t.premises) collect_cuts(p, out);
}

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  Term dl(int h) {
    static const char* atoms[] = {"p", "q", "r"};
    if (h <= 1 || pick(4) == 0) {
      int k = pick(5);
      if (k == 3) return Term::constant(Op::Top);
      if (k == 4) return Term::constant(Op::Bot);
      return Term::atom(atoms[k]);
    }
    switch (pick(3)) {
      case 0: return Term::binary(Op::And, dl(h - 1), dl(h - 1));
      case 1: return Term::binary(Op::Or, dl(h - 1), dl(h - 1));
      default: return Term::unary(Op::Box, k(h - 1));
    }
  }

  Term k(int h) {
    if (h <= 1) return Term::constant(pick(2) == 0 ? Op::One : Op::Zero);
    switch (pick(5)) {
      case 0: return Term::binary(Op::Cap, k(h - 1), k(h - 1));
      case 1: return Term::binary(Op::Cup, k(h - 1), k(h - 1));
      case 2: return Term::unary(Op::Sim, k(h - 1));
      default: return Term::unary(Op::Circ, dl(h - 1));
    }
  }

  Term formula(Sort s, int h) { return s == Sort::DL ? dl(h) : k(h); }

  // Adds a random formula next to the antecedent, half of the time.
  ProofTree weaken_ant(ProofTree t) {
    if (pick(2) == 0) return t;
    bool d = t.conclusion.sort() == Sort::DL;
    Subst s;
    s.set(d ? "Z" : "T", formula(t.conclusion.sort(), 2));
    return apply_rule(d ? "W_L_and" : "W_D_cap", {std::move(t)}, s);
  }

  ProofTree weaken_suc(ProofTree t) {
    if (pick(2) == 0) return t;
    bool d = t.conclusion.sort() == Sort::DL;
    Subst s;
    s.set(d ? "Z" : "T", formula(t.conclusion.sort(), 2));
    return apply_rule(d ? "W_L_or" : "W_D_cup", {std::move(t)}, s);
  }

 private:
  std::mt19937 rng_;
};

ProofTree principal_cut(CutPattern p, Gen& g, int index) {
  switch (p) {
    case CutPattern::Atom: {
      Subst s;
      s.set("p", Term::atom("p" + std::to_string(index)));
      ProofTree id = apply_rule("Id", {}, s);
      return rule("Cut_L", {id, id});
    }
    case CutPattern::Top: {
      ProofTree pi = g.weaken_suc(rule("top_R", {}));
      return rule("Cut_L", {rule("top_R", {}), rule("top_L", {pi})});
    }
    case CutPattern::Bot: {
      ProofTree pi = g.weaken_ant(rule("bot_L", {}));
      return rule("Cut_L", {rule("bot_R", {pi}), rule("bot_L", {})});
    }
    case CutPattern::One: {
      ProofTree pi = g.weaken_suc(rule("one_R", {}));
      return rule("Cut_D", {rule("one_R", {}), rule("one_L", {pi})});
    }
    case CutPattern::Zero: {
      ProofTree pi = g.weaken_ant(rule("zero_L", {}));
      return rule("Cut_D", {rule("zero_R", {pi}), rule("zero_L", {})});
    }
    case CutPattern::Sim: {
      ProofTree base = rule("cont.dn", {identity_proof(g.k(3))});
      return rule("Cut_D", {rule("sim_R", {g.weaken_ant(base)}),
                            rule("sim_L", {g.weaken_suc(base)})});
    }
    case CutPattern::And:
    case CutPattern::Cap: {
      bool d = p == CutPattern::And;
      Sort s = d ? Sort::DL : Sort::K;
      Term a = g.formula(s, 3), b = g.formula(s, 3);
      ProofTree ia = identity_proof(a), ib = identity_proof(b);
      ProofTree right = rule(d ? "and_R" : "cap_R",
                             {g.weaken_ant(ia), g.weaken_ant(ib)});
      ProofTree left = rule(
          d ? "and_L" : "cap_L",
          {g.weaken_suc(rule(d ? "and_R" : "cap_R", {ia, ib}))});
      return rule(d ? "Cut_L" : "Cut_D", {right, left});
    }
    case CutPattern::Or:
    case CutPattern::Cup: {
      bool d = p == CutPattern::Or;
      Sort s = d ? Sort::DL : Sort::K;
      Term a = g.formula(s, 3), b = g.formula(s, 3);
      ProofTree ia = identity_proof(a), ib = identity_proof(b);
      ProofTree right = rule(
          d ? "or_R" : "cup_R",
          {g.weaken_ant(rule(d ? "or_L" : "cup_L", {ia, ib}))});
      ProofTree left = rule(d ? "or_L" : "cup_L",
                            {g.weaken_suc(ia), g.weaken_suc(ib)});
      return rule(d ? "Cut_L" : "Cut_D", {right, left});
    }
    case CutPattern::Box: {
      ProofTree ia = identity_proof(g.k(3));
      ProofTree right = rule("box_R", {g.weaken_ant(rule("box_L", {ia}))});
      ProofTree left = rule("box_L", {g.weaken_suc(ia)});
      return rule("Cut_L", {right, left});
    }
    case CutPattern::Circ: {
      ProofTree base = rule("tcirc", {identity_proof(g.dl(3))});
      return rule("Cut_D", {rule("circ_R", {g.weaken_ant(base)}),
                            rule("circ_L", {g.weaken_suc(base)})});
    }
  }
  throw CutError("unknown cut pattern");
}

}  // namespace

ProofTree reduce_cut(const ProofTree& t, const ProofPath& node) {
  const ProofTree* c = nullptr;
  try {
    c = &at(t, node);
  } catch (const std::out_of_range&) {
    throw CutError("no node at " + render_path(node));
  }
  return replace_at(t, node, reduce_here(*c));
}

std::vector<Term> cut_formulas(const ProofTree& t) {
  std::vector<Term> out;
  collect_cuts(t, &out);
  return out;
}

bool multiset_less(std::vector<int> a, std::vector<int> b) {
  std::map<int, int> diff;  // count in a minus count in b
  for (int x : a) ++diff[x];
  for (int x : b) --diff[x];
  bool equal = true;
  for (const auto& [x, d] : diff) {
    if (d == 0) continue;
    equal = false;
    if (d < 0) continue;
    // every surplus element of a needs a larger surplus element of b
    bool covered = false;
    for (auto it = diff.upper_bound(x); it != diff.end(); ++it)
      if (it->second < 0) covered = true;
    if (!covered) return false;
  }
  return !equal;
}

const char* cut_pattern_name(CutPattern p) {
  static const char* names[] = {"atom", "top", "bot", "one", "zero", "sim",
                                "and",  "or",  "cap", "cup", "box",  "circ"};
  return names[static_cast<int>(p)];
}

std::vector<CutInstance> cut_instances(CutPattern p, int count,
                                       std::uint32_t seed) {
  Gen g(seed * 7919u + static_cast<std::uint32_t>(p));
  std::vector<CutInstance> out;
  for (int i = 0; i < count; ++i) {
    ProofTree t = principal_cut(p, g, i);
    ProofPath path;
    // a few invertible steps below the cut
    int wraps = g.pick(3);
    for (int w = 0; w < wraps; ++w) {
      bool d = t.conclusion.sort() == Sort::DL;
      const char* name = d ? (g.pick(2) ? "htop.dn" : "cbot.dn")
                           : (g.pick(2) ? "hone.dn" : "czero.dn");
      t = rule(name, {std::move(t)});
      path.push_back(0);
    }
    out.push_back({std::move(t), std::move(path)});
  }
  return out;
}

}  // namespace sdm
