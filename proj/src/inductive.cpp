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

#include "sdm/inductive.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace sdm {
namespace {

void atoms_of(const Term& t, std::set<std::string>* out) {
  if (t.op() == Op::Atom) out->insert(t.name());
  for (int i = 0; i < t.arity(); ++i) atoms_of(t.child(i), out);
}

struct Step {
  const SignedTree* node;
  int child;  // index taken towards the leaf; -1 at the leaf
};

void branches(const SignedTree& t, std::vector<Step>* path,
              const std::function<void(const std::vector<Step>&)>& f) {
  if (t.kids.empty()) {
    path->push_back({&t, -1});
    f(*path);
    path->pop_back();
    return;
  }
  for (int i = 0; i < static_cast<int>(t.kids.size()); ++i) {
    path->push_back({&t, i});
    branches(t.kids[i], path, f);
    path->pop_back();
  }
}

// Leftmost split making the PIA part as short as possible, or -1.
int minimal_split(const std::vector<Step>& b) {
  const int leaf = static_cast<int>(b.size()) - 1;
  int j = leaf;
  for (int d = 0; d < leaf; ++d)
    if ((b[d].node->roles & kSkeleton) == 0) {
      j = d;
      break;
    }
  for (int d = j; d < leaf; ++d)
    if ((b[d].node->roles & kPIA) == 0) return -1;
  return j;
}

bool acts_srr(unsigned roles) { return (roles & kPIA) == kSRR; }

bool critical(Sign s, Polarity e) {
  return (s == Sign::Plus) == (e == Polarity::One);
}

// Every variable leaf of t agrees with the opposite order type.
bool agrees_opposite(const SignedTree& t, const std::vector<std::string>& vars,
                     const std::vector<Polarity>& eps,
                     std::vector<int>* seen) {
  if (t.kids.empty()) {
    if (t.node.op() != Op::Atom) return true;
    int k = static_cast<int>(
        std::find(vars.begin(), vars.end(), t.node.name()) - vars.begin());
    seen->push_back(k);
    return !critical(t.sign, eps[k]);
  }
  for (const auto& c : t.kids)
    if (!agrees_opposite(c, vars, eps, seen)) return false;
  return true;
}

int var_index(const std::vector<std::string>& vars, const std::string& n) {
  return static_cast<int>(std::find(vars.begin(), vars.end(), n) -
                          vars.begin());
}

// Clause 2 on one branch with the PIA part starting at `from`; the
// required dependencies are appended to `need`.
bool srr_clause(const std::vector<Step>& b, int from,
                const std::vector<std::string>& vars,
                const std::vector<Polarity>& eps,
                std::vector<std::pair<int, int>>* need) {
  const SignedTree* leaf = b.back().node;
  if (leaf->node.op() != Op::Atom) return true;
  int i = var_index(vars, leaf->node.name());
  if (!critical(leaf->sign, eps[i])) return true;
  for (int d = from; d + 1 < static_cast<int>(b.size()); ++d) {
    const SignedTree* n = b[d].node;
    if (!acts_srr(n->roles)) continue;
    const SignedTree& s = n->kids[1 - b[d].child];
    std::vector<int> ks;
    if (!agrees_opposite(s, vars, eps, &ks)) return false;
    for (int k : ks) need->push_back({k, i});
  }
  return true;
}

std::vector<int> path_of(const std::vector<Step>& b) {
  std::vector<int> p;
  for (std::size_t d = 0; d + 1 < b.size(); ++d) p.push_back(b[d].child);
  return p;
}

std::vector<std::string> vars_of(const Term& lhs, const Term& rhs) {
  std::set<std::string> s;
  atoms_of(lhs, &s);
  atoms_of(rhs, &s);
  return {s.begin(), s.end()};
}

}  // namespace

unsigned node_roles(Op op, Sign s) {
  const bool plus = s == Sign::Plus;
  switch (op) {
    case Op::And: case Op::Cap:
      return plus ? (kSRA | kSLR) : (kDeltaAdjoint | kSRR);
    case Op::Or: case Op::Cup:
      return plus ? (kDeltaAdjoint | kSRR) : (kSRA | kSLR);
    case Op::Circ: case Op::Sim:
      return kSRA | kSLR;
    case Op::Box:
      return plus ? kSRA : kSLR;
    default:
      return 0;
  }
}

std::string role_names(unsigned roles) {
  std::string out;
  const std::pair<unsigned, const char*> names[] = {
      {kDeltaAdjoint, "delta-adjoint"}, {kSLR, "SLR"}, {kSRA, "SRA"},
      {kSRR, "SRR"}};
  for (const auto& [bit, name] : names)
    if (roles & bit) {
      if (!out.empty()) out += ' ';
      out += name;
    }
  return out.empty() ? "leaf" : out;
}

bool flips(Op op, int) { return op == Op::Sim; }

SignedTree signed_tree(const Term& t, Sign s) {
  SignedTree out;
  out.node = t;
  out.sign = s;
  out.roles = node_roles(t.op(), s);
  for (int i = 0; i < t.arity(); ++i)
    out.kids.push_back(
        signed_tree(t.child(i), flips(t.op(), i) ? opposite(s) : s));
  return out;
}

std::optional<InductiveWitness> is_analytic_inductive(const Term& lhs,
                                                      const Term& rhs) {
  const SignedTree trees[2] = {signed_tree(lhs, Sign::Plus),
                               signed_tree(rhs, Sign::Minus)};
  struct Br {
    int tree;
    std::vector<Step> steps;
    int split;
  };
  std::vector<Br> all;
  bool good = true;
  for (int ti = 0; ti < 2; ++ti) {
    std::vector<Step> path;
    branches(trees[ti], &path, [&](const std::vector<Step>& b) {
      int k = minimal_split(b);
      if (k < 0) good = false;
      all.push_back({ti, b, k});
    });
  }
  if (!good) return std::nullopt;

  InductiveWitness w;
  w.vars = vars_of(lhs, rhs);
  const int n = static_cast<int>(w.vars.size());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Polarity> eps(n);
    for (int i = 0; i < n; ++i)
      eps[i] = (mask >> i & 1u) ? Polarity::Partial : Polarity::One;
    std::vector<std::pair<int, int>> need;
    bool ok = true;
    for (const Br& b : all)
      ok = ok && srr_clause(b.steps, b.split, w.vars, eps, &need);
    if (!ok) continue;
    // smallest linear order containing the dependencies
    std::vector<std::vector<bool>> before(n, std::vector<bool>(n, false));
    for (auto [k, i] : need) before[k][i] = true;
    std::vector<int> order;
    std::vector<bool> placed(n, false);
    for (int step = 0; step < n; ++step) {
      int pick = -1;
      for (int v = 0; v < n && pick < 0; ++v) {
        if (placed[v]) continue;
        bool free = true;
        for (int u = 0; u < n; ++u)
          if (!placed[u] && before[u][v]) free = false;
        if (free) pick = v;
      }
      if (pick < 0) break;
      placed[pick] = true;
      order.push_back(pick);
    }
    if (static_cast<int>(order.size()) < n) continue;
    w.epsilon = eps;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) w.omega.push_back({order[a], order[b]});
    for (const Br& b : all) w.branches.push_back({b.tree, path_of(b.steps), b.split});
    return w;
  }
  return std::nullopt;
}

bool check_witness(const Term& lhs, const Term& rhs, const InductiveWitness& w,
                   std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why != nullptr) *why = m;
    return false;
  };
  if (w.vars != vars_of(lhs, rhs)) return fail("variable list differs");
  const int n = static_cast<int>(w.vars.size());
  if (static_cast<int>(w.epsilon.size()) != n)
    return fail("order type has the wrong length");
  std::set<std::pair<int, int>> om(w.omega.begin(), w.omega.end());
  for (auto [a, b] : om) {
    if (a == b) return fail("dependency order is not irreflexive");
    if (a < 0 || b < 0 || a >= n || b >= n) return fail("bad variable index");
    for (auto [c, d] : om)
      if (b == c && om.count({a, d}) == 0)
        return fail("dependency order is not transitive");
  }
  const SignedTree trees[2] = {signed_tree(lhs, Sign::Plus),
                               signed_tree(rhs, Sign::Minus)};
  std::set<std::pair<int, std::vector<int>>> listed;
  for (const auto& c : w.branches) listed.insert({c.tree, c.path});
  bool ok = true;
  std::string msg;
  for (int ti = 0; ti < 2 && ok; ++ti) {
    std::vector<Step> path;
    branches(trees[ti], &path, [&](const std::vector<Step>& b) {
      if (!ok) return;
      std::vector<int> p = path_of(b);
      auto it = std::find_if(w.branches.begin(), w.branches.end(),
                             [&](const BranchCut& c) {
                               return c.tree == ti && c.path == p;
                             });
      if (it == w.branches.end()) {
        ok = false;
        msg = "branch missing from witness";
        return;
      }
      const int leaf = static_cast<int>(b.size()) - 1;
      if (it->pia_from < 0 || it->pia_from > leaf) {
        ok = false;
        msg = "split out of range";
        return;
      }
      // clause 1: Skeleton above, PIA below
      for (int d = 0; d < leaf; ++d) {
        unsigned need = d < it->pia_from ? kSkeleton : kPIA;
        if ((b[d].node->roles & need) == 0) {
          ok = false;
          msg = "branch is not good";
          return;
        }
      }
      // clause 2
      std::vector<std::pair<int, int>> deps;
      if (!srr_clause(b, it->pia_from, w.vars, w.epsilon, &deps)) {
        ok = false;
        msg = "SRR side term does not agree with the opposite order type";
        return;
      }
      for (const auto& dp : deps)
        if (om.count(dp) == 0) {
          ok = false;
          msg = "dependency " + w.vars[dp.first] + " < " + w.vars[dp.second] +
                " missing";
          return;
        }
    });
  }
  if (!ok) return fail(msg);
  if (listed.size() != w.branches.size()) return fail("duplicate branch");
  return true;
}

namespace {

// The oracle recomputes signs and roles from its own table.
struct OracleNode {
  std::string key;  // e.g. "+and"
  int child;
  Term sibling;
  bool sibling_plus;
};

std::string op_key(Op op) {
  switch (op) {
    case Op::And: return "and";
    case Op::Or: return "or";
    case Op::Cap: return "cap";
    case Op::Cup: return "cup";
    case Op::Box: return "box";
    case Op::Circ: return "circ";
    case Op::Sim: return "sim";
    default: return "";
  }
}

const std::set<std::string> kSkel = {"-and", "-cap", "+or", "+cup",
                                     "+and", "+cap", "+circ", "+sim",
                                     "-or", "-cup", "-circ", "-sim", "-box"};
const std::set<std::string> kSra = {"+and", "+cap", "+circ", "+sim", "+box",
                                    "-or", "-cup", "-circ", "-sim"};
const std::set<std::string> kSrr = {"+or", "+cup", "-and", "-cap"};

void oracle_branches(
    const Term& t, bool plus, std::vector<OracleNode>* path,
    std::vector<std::pair<std::vector<OracleNode>, std::pair<Term, bool>>>*
        out) {
  if (t.arity() == 0) {
    out->push_back({*path, {t, plus}});
    return;
  }
  std::string key = (plus ? "+" : "-") + op_key(t.op());
  for (int i = 0; i < t.arity(); ++i) {
    bool cp = t.op() == Op::Sim ? !plus : plus;
    Term sib = t.arity() == 2 ? t.child(1 - i) : Term();
    path->push_back({key, i, sib, plus});
    oracle_branches(t.child(i), cp, path, out);
    path->pop_back();
  }
}

void signed_leaves(const Term& t, bool plus,
                   std::vector<std::pair<std::string, bool>>* out) {
  if (t.op() == Op::Atom) out->push_back({t.name(), plus});
  bool cp = t.op() == Op::Sim ? !plus : plus;
  for (int i = 0; i < t.arity(); ++i) signed_leaves(t.child(i), cp, out);
}

}  // namespace

bool brute_force_inductive(const Term& lhs, const Term& rhs) {
  std::vector<std::string> vars = vars_of(lhs, rhs);
  const int n = static_cast<int>(vars.size());
  std::vector<std::pair<std::vector<OracleNode>, std::pair<Term, bool>>> bs;
  std::vector<OracleNode> path;
  oracle_branches(lhs, true, &path, &bs);
  oracle_branches(rhs, false, &path, &bs);

  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) pairs.push_back({a, b});
  const int np = static_cast<int>(pairs.size());

  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    auto one = [&](int k) { return (mask >> k & 1u) == 0; };
    for (unsigned om = 0; om < (1u << np); ++om) {
      std::set<std::pair<int, int>> rel;
      for (int j = 0; j < np; ++j)
        if (om >> j & 1u) rel.insert(pairs[j]);
      bool trans = true;
      for (auto [a, b] : rel)
        for (auto [c, d] : rel)
          if (b == c && (a == d || rel.count({a, d}) == 0)) trans = false;
      if (!trans) continue;

      bool all = true;
      for (const auto& [nodes, leaf] : bs) {
        const int len = static_cast<int>(nodes.size());
        int i = -1;
        bool crit = false;
        if (leaf.first.op() == Op::Atom) {
          i = var_index(vars, leaf.first.name());
          crit = leaf.second == one(i);
        }
        bool some = false;
        for (int split = 0; split <= len && !some; ++split) {
          bool fine = true;
          for (int d = 0; d < len && fine; ++d) {
            const std::string& key = nodes[d].key;
            if (d < split) {
              fine = kSkel.count(key) > 0;
              continue;
            }
            fine = kSra.count(key) > 0 || kSrr.count(key) > 0;
            if (!fine || !crit || kSrr.count(key) == 0) continue;
            std::vector<std::pair<std::string, bool>> ls;
            signed_leaves(nodes[d].sibling, nodes[d].sibling_plus, &ls);
            for (const auto& [name, plus] : ls) {
              int k = var_index(vars, name);
              if (plus == one(k)) fine = false;  // must agree with the dual
              if (rel.count({k, i}) == 0) fine = false;
            }
          }
          some = fine;
        }
        if (!some) {
          all = false;
          break;
        }
      }
      if (all) return true;
    }
  }
  return false;
}

std::string render(const InductiveWitness& w) {
  std::ostringstream os;
  os << "epsilon=(";
  for (std::size_t i = 0; i < w.vars.size(); ++i) {
    if (i > 0) os << ", ";
    os << w.vars[i] << ':'
       << (w.epsilon[i] == Polarity::One ? "1" : "\xE2\x88\x82");
  }
  os << ") omega={";
  for (std::size_t j = 0; j < w.omega.size(); ++j) {
    if (j > 0) os << ", ";
    os << '(' << w.vars[w.omega[j].first] << ", "
       << w.vars[w.omega[j].second] << ')';
  }
  os << '}';
  return os.str();
}

std::vector<Term> mt_formulas(int max_height,
                              const std::vector<std::string>& atoms,
                              Sort sort) {
  // by_height[s][h]: formulas of sort s with height exactly h
  std::vector<std::vector<Term>> dl(max_height + 1), k(max_height + 1);
  if (max_height >= 1) {
    for (const auto& a : atoms) dl[1].push_back(Term::atom(a));
    dl[1].push_back(Term::constant(Op::Top));
    dl[1].push_back(Term::constant(Op::Bot));
    k[1].push_back(Term::constant(Op::One));
    k[1].push_back(Term::constant(Op::Zero));
  }
  for (int h = 2; h <= max_height; ++h) {
    for (const auto& a : k[h - 1]) dl[h].push_back(Term::unary(Op::Box, a));
    for (const auto& a : dl[h - 1]) k[h].push_back(Term::unary(Op::Circ, a));
    for (const auto& a : k[h - 1]) k[h].push_back(Term::unary(Op::Sim, a));
    auto pairs = [&](const std::vector<std::vector<Term>>& src, Op op,
                     std::vector<Term>* out) {
      for (int h1 = 1; h1 < h; ++h1)
        for (int h2 = 1; h2 < h; ++h2) {
          if (h1 != h - 1 && h2 != h - 1) continue;
          for (const auto& a : src[h1])
            for (const auto& b : src[h2]) out->push_back(Term::binary(op, a, b));
        }
    };
    pairs(dl, Op::And, &dl[h]);
    pairs(dl, Op::Or, &dl[h]);
    pairs(k, Op::Cap, &k[h]);
    pairs(k, Op::Cup, &k[h]);
  }
  std::vector<Term> out;
  const auto& src = sort == Sort::DL ? dl : k;
  for (const auto& level : src) out.insert(out.end(), level.begin(), level.end());
  return out;
}

}  // namespace sdm
