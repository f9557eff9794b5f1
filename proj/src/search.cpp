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

#include "sdm/search.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "sdm/enumerate.hpp"
#include "sdm/semantics.hpp"

namespace sdm {
namespace {

constexpr int kModelSize = 5;
constexpr int kGrowthQuota = 2;

unsigned variety_of(System s) {
  switch (s) {
    case System::SM: return 0;
    case System::LQM: return kLQMA;
    case System::UQM: return kUQMA;
    case System::DP: return kDPL;
    case System::AP: return kAPL;
    case System::WS: return kWSA;
  }
  return 0;
}

void atoms_of(const Term& t, std::set<std::string>* out) {
  if (t.op() == Op::Atom) {
    out->insert(t.name());
    return;
  }
  for (int i = 0; i < t.arity(); ++i) atoms_of(t.child(i), out);
}

// Validity on the test algebras, with a per-search cache. Models that
// refute something move to the front since they tend to refute again.
class Oracle {
 public:
  explicit Oracle(System s) : models_(search_models(s)) {
    order_.resize(models_.size());
    std::iota(order_.begin(), order_.end(), 0);
  }

  bool valid(const Sequent& q) {
    auto it = cache_.find(q);
    if (it != cache_.end()) return it->second;
    bool v = refuter(q) < 0;
    cache_.emplace(q, v);
    return v;
  }

  // Index into search_models of an algebra refuting q, or -1.
  int refuter(const Sequent& q) {
    std::set<std::string> atoms;
    atoms_of(q.ant, &atoms);
    atoms_of(q.suc, &atoms);
    if (static_cast<int>(atoms.size()) > kMaxValidateAtoms) return -1;
    Program prog;
    for (const auto& a : atoms) prog.var_index(a, Sort::DL);
    prog.append(operational_reading(q.ant, Position::Precedent));
    prog.append(operational_reading(q.suc, Position::Succedent));
    const int nv = static_cast<int>(prog.vars().size());
    std::vector<int> vals(nv);
    for (std::size_t k = 0; k < order_.size(); ++k) {
      const HeteroAlgebra& hh = models_[order_[k]];
      const FiniteLattice& lat = q.sort() == Sort::DL ? hh.L : hh.D.lat;
      const int n = hh.L.size();
      std::fill(vals.begin(), vals.end(), 0);
      while (true) {
        int l = prog.run(0, hh, vals.data());
        int r = prog.run(1, hh, vals.data());
        if (!lat.leq(l, r)) {
          int idx = order_[k];
          std::rotate(order_.begin(), order_.begin() + k,
                      order_.begin() + k + 1);
          return idx;
        }
        int i = 0;
        while (i < nv && ++vals[i] == n) vals[i++] = 0;
        if (i == nv) break;
      }
    }
    return -1;
  }

 private:
  const std::vector<HeteroAlgebra>& models_;
  std::vector<int> order_;
  std::unordered_map<Sequent, bool, SequentHash> cache_;
};

bool back(const RuleSchema& r, const Sequent& g, std::vector<Sequent>* prem) {
  Subst s;
  if (!match(r.conclusion, g, &s)) return false;
  prem->clear();
  for (const auto& p : r.premises) prem->push_back(instantiate(p, s));
  return true;
}

// Backward applications of unary rules from a goal.
struct Chain {
  std::vector<Sequent> seqs;
  std::vector<const RuleSchema*> rules;

  explicit Chain(const Sequent& g) : seqs{g} {}
  const Sequent& cur() const { return seqs.back(); }
  int length() const { return static_cast<int>(rules.size()); }

  bool step(const RuleSchema* r) {
    if (r == nullptr) return false;
    std::vector<Sequent> p;
    if (!back(*r, cur(), &p) || p.size() != 1) return false;
    rules.push_back(r);
    seqs.push_back(std::move(p[0]));
    return true;
  }

  ProofTree wrap(ProofTree inner) const {
    for (int i = length() - 1; i >= 0; --i) {
      ProofTree t{seqs[i], rules[i]->name, {}};
      t.premises.push_back(std::move(inner));
      inner = std::move(t);
    }
    return inner;
  }
};

enum Cls : int { kClose, kDecompose, kUnfold, kSplit, kWeaken, kLift, kGrowth };

struct Move {
  Chain chain;
  const RuleSchema* last = nullptr;
  std::vector<Sequent> open;
  int cls = kClose;
  std::size_t weight = 0;

  int cost() const { return chain.length() + (last != nullptr ? 1 : 0); }
};

struct ActionSpec {
  std::vector<const char*> rules;
  int cls;
  bool check;
};

// Actions tried once a node has been displayed. Rules missing from the
// system drop the action.
const std::vector<ActionSpec>& action_specs() {
  static const std::vector<ActionSpec> specs = {
      {{"box_L"}, kDecompose, true},
      {{"tcirc"}, kDecompose, true},
      {{"and_R"}, kDecompose, true},
      {{"or_L"}, kDecompose, true},
      {{"cap_R"}, kDecompose, true},
      {{"cup_L"}, kDecompose, true},
      {{"LQM"}, kDecompose, true},
      {{"WS"}, kDecompose, true},
      {{"AP"}, kDecompose, true},
      {{"E_L_and", "AP"}, kDecompose, true},
      {{"hloz_hone"}, kDecompose, false},
      {{"cbox_czero"}, kDecompose, false},
      {{"res_B.dn"}, kDecompose, false},
      {{"res_B.up"}, kDecompose, false},
      {{"C_L_and", "and_R"}, kSplit, true},
      {{"C_L_or", "or_L"}, kSplit, true},
      {{"C_D_cap", "cap_R"}, kSplit, true},
      {{"C_D_cup", "cup_L"}, kSplit, true},
      {{"W_L_and"}, kWeaken, true},
      {{"E_L_and", "W_L_and"}, kWeaken, true},
      {{"W_L_or"}, kWeaken, true},
      {{"E_L_or", "W_L_or"}, kWeaken, true},
      {{"W_D_cap"}, kWeaken, true},
      {{"E_D_cap", "W_D_cap"}, kWeaken, true},
      {{"W_D_cup"}, kWeaken, true},
      {{"E_D_cup", "W_D_cup"}, kWeaken, true},
      {{"tcirc_cbox.dn", "tcirc"}, kLift, true},
      {{"htop.up", "E_L_and", "W_L_and"}, kLift, true},
      {{"cbot.up", "E_L_or", "W_L_or"}, kLift, true},
      {{"hone.up", "E_D_cap", "W_D_cap"}, kLift, true},
      {{"czero.up", "E_D_cup", "W_D_cup"}, kLift, true},
      {{"C_L_and"}, kGrowth, true},
      {{"C_L_or"}, kGrowth, true},
      {{"C_D_cap"}, kGrowth, true},
      {{"C_D_cup"}, kGrowth, true},
      {{"tbul"}, kGrowth, true},
      {{"UQM"}, kGrowth, true},
  };
  return specs;
}

// Invertible steps applied eagerly at the top level.
const std::vector<std::vector<const char*>>& eager_specs() {
  static const std::vector<std::vector<const char*>> specs = {
      {"and_L"}, {"or_R"}, {"cap_L"}, {"cup_R"}, {"top_L"}, {"bot_R"},
      {"one_L"}, {"zero_R"}, {"sim_L"}, {"sim_R"}, {"circ_L"}, {"circ_R"},
      {"box_R"}, {"cont.dn"}, {"tcirc_cbox.up"},
      {"htop.dn"}, {"cbot.dn"}, {"hone.dn"}, {"czero.dn"},
      {"E_L_and", "htop.dn"}, {"E_L_or", "cbot.dn"},
      {"E_D_cap", "hone.dn"}, {"E_D_cup", "czero.dn"},
  };
  return specs;
}

struct DisplayStep {
  const char* pre;
  const char* rule;
  bool to_ant;
  // The target lands as the left child of the new side's root.
  bool redirect;
};

// How to bring child i of the root of one side to the top of a side.
const DisplayStep* display_step(bool ant, Op op, int i) {
  struct Entry {
    bool ant;
    Op op;
    int i;
    DisplayStep d;
  };
  static const Entry table[] = {
      {true, Op::HAnd, 1, {nullptr, "res_L_and.up", true, false}},
      {true, Op::HAnd, 0, {"E_L_and", "res_L_and.up", true, false}},
      {true, Op::HExcl, 1, {nullptr, "res_L_or.dn", true, false}},
      {true, Op::HExcl, 0, {nullptr, "res_L_or.dn", false, true}},
      {false, Op::CVee, 1, {nullptr, "res_L_or.up", false, false}},
      {false, Op::CVee, 0, {"E_L_or", "res_L_or.up", false, false}},
      {false, Op::CArr, 1, {nullptr, "res_L_and.dn", false, false}},
      {false, Op::CArr, 0, {nullptr, "res_L_and.dn", true, true}},
      {true, Op::TStar, 0, {nullptr, "adj_star_L.dn", false, false}},
      {false, Op::TStar, 0, {nullptr, "adj_star_R.dn", true, false}},
      {true, Op::HLoz, 0, {nullptr, "adj_LD.dn", true, false}},
      {false, Op::CBox, 0, {nullptr, "adj_LD.up", false, false}},
      {true, Op::TCirc, 0, {nullptr, "adj_DL_r.up", true, false}},
      {false, Op::CBur, 0, {nullptr, "adj_DL_r.dn", false, false}},
      {false, Op::TCirc, 0, {nullptr, "adj_DL_l.up", false, false}},
      {true, Op::HBul, 0, {nullptr, "adj_DL_l.dn", true, false}},
      {true, Op::HCap, 1, {nullptr, "res_D_cap.up", true, false}},
      {true, Op::HCap, 0, {"E_D_cap", "res_D_cap.up", true, false}},
      {false, Op::CSup, 1, {nullptr, "res_D_cap.dn", false, false}},
      {false, Op::CSup, 0, {nullptr, "res_D_cap.dn", true, true}},
      {false, Op::CCup, 1, {nullptr, "res_D_cup.up", false, false}},
      {false, Op::CCup, 0, {"E_D_cup", "res_D_cup.up", false, false}},
      {true, Op::HSup, 1, {nullptr, "res_D_cup.dn", true, false}},
      {true, Op::HSup, 0, {nullptr, "res_D_cup.dn", false, true}},
  };
  for (const auto& e : table)
    if (e.ant == ant && e.op == op && e.i == i) return &e.d;
  return nullptr;
}

struct Site {
  bool ant;
  std::vector<int> path;
};

void collect_sites(const Term& t, bool ant, std::vector<int>* path,
                   std::vector<Site>* out) {
  if (!path->empty()) out->push_back({ant, *path});
  if (t.is_formula()) return;
  for (int i = 0; i < t.arity(); ++i) {
    path->push_back(i);
    collect_sites(t.child(i), ant, path, out);
    path->pop_back();
  }
}

class Prover {
 public:
  Prover(System s, const SearchBudget& b) : sys_(s), budget_(b), oracle_(s) {
    auto get = [&](const char* name) { return find_rule(s, name); };
    for (const auto& r : all_rules())
      if (r.in(s) && r.premises.empty() && !r.is_cut) axioms_.push_back(&r);
    for (const auto& spec : action_specs()) {
      Action a{{}, spec.cls, spec.check};
      bool ok = true;
      for (const char* n : spec.rules) {
        const RuleSchema* r = get(n);
        if (r == nullptr) ok = false;
        a.rules.push_back(r);
      }
      if (ok) actions_.push_back(std::move(a));
    }
    for (const auto& spec : eager_specs()) {
      std::vector<const RuleSchema*> v;
      for (const char* n : spec) v.push_back(get(n));
      eager_.push_back(std::move(v));
    }
  }

  Oracle& oracle() { return oracle_; }
  std::size_t visited() const { return visited_; }
  bool exhausted() const { return exhausted_; }

  std::optional<ProofTree> attempt(const Sequent& g, int depth,
                                   std::size_t cap) {
    limit_ = std::min(budget_.max_visited, visited_ + cap);
    exhausted_ = false;
    return prove(g, depth, kGrowthQuota);
  }

  std::optional<ProofTree> prove(const Sequent& g, int budget, int quota) {
    if (exhausted_) return std::nullopt;
    if (++visited_ > limit_) {
      exhausted_ = true;
      return std::nullopt;
    }
    if (budget < 1) return std::nullopt;
    if (const RuleSchema* ax = axiom(g)) return ProofTree{g, ax->name, {}};
    auto pit = proved_.find(g);
    if (pit != proved_.end() &&
        static_cast<int>(pit->second.depth()) <= budget)
      return pit->second;
    Key key{g, quota};
    auto fit = failed_.find(key);
    if (fit != failed_.end() && fit->second >= budget) return std::nullopt;
    if (!path_.insert(g).second) return std::nullopt;
    std::optional<ProofTree> out = expand(g, budget, quota);
    path_.erase(g);
    if (out) {
      auto it = proved_.find(g);
      if (it == proved_.end() || it->second.depth() > out->depth())
        proved_.insert_or_assign(g, *out);
    } else if (!exhausted_) {
      int& f = failed_[key];
      f = std::max(f, budget);
    }
    return out;
  }

 private:
  struct Action {
    std::vector<const RuleSchema*> rules;
    int cls;
    bool check;
  };
  struct Key {
    Sequent seq;
    int quota;
    bool operator==(const Key& o) const {
      return quota == o.quota && seq == o.seq;
    }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return k.seq.hash() * 31u + static_cast<std::size_t>(k.quota);
    }
  };

  const RuleSchema* axiom(const Sequent& g) const {
    for (const RuleSchema* r : axioms_) {
      Subst s;
      if (match(r->conclusion, g, &s)) return r;
    }
    return nullptr;
  }

  bool normalize_step(Chain* c) const {
    for (const auto& steps : eager_) {
      if (steps.size() == 1) {
        if (c->step(steps[0])) return true;
        continue;
      }
      Chain t = *c;
      bool ok = true;
      for (const RuleSchema* r : steps) ok = ok && t.step(r);
      if (ok) {
        *c = std::move(t);
        return true;
      }
    }
    return false;
  }

  void normalize(Chain* c) const {
    while (normalize_step(c)) {
    }
  }

  bool display(Chain* c, const Site& site) const {
    bool ant = site.ant;
    std::vector<int> path = site.path;
    std::size_t k = 0;
    while (k < path.size()) {
      const Term& t = ant ? c->cur().ant : c->cur().suc;
      const DisplayStep* d = display_step(ant, t.op(), path[k]);
      if (d == nullptr) return false;
      if (d->pre != nullptr && !c->step(find_rule(sys_, d->pre))) return false;
      if (!c->step(find_rule(sys_, d->rule))) return false;
      ant = d->to_ant;
      if (d->redirect)
        path[k] = 0;
      else
        ++k;
    }
    return true;
  }

  void actions_at(const Chain& c, int quota, std::vector<Move>* out) {
    const Sequent& h = c.cur();
    if (const RuleSchema* ax = axiom(h)) {
      out->push_back(Move{c, ax, {}, kClose, 0});
      return;
    }
    std::vector<Sequent> prem;
    for (const Action& a : actions_) {
      if (a.cls == kGrowth && quota <= 0) continue;
      Chain t = c;
      bool ok = true;
      for (std::size_t i = 0; ok && i + 1 < a.rules.size(); ++i)
        ok = t.step(a.rules[i]);
      if (!ok || !back(*a.rules.back(), t.cur(), &prem)) continue;
      bool progress = true;
      for (const auto& p : prem) progress = progress && p != h;
      if (!progress) continue;
      if (a.check) {
        bool valid = true;
        for (const auto& p : prem) valid = valid && oracle_.valid(p);
        if (!valid) continue;
      }
      Move m{std::move(t), a.rules.back(), prem, a.cls, 0};
      for (const auto& p : prem) m.weight += p.ant.size() + p.suc.size();
      out->push_back(std::move(m));
    }
  }

  std::vector<Move> moves(const Sequent& g, int quota) {
    std::vector<Move> out;
    std::vector<Site> sites;
    std::vector<int> path;
    collect_sites(g.ant, true, &path, &sites);
    collect_sites(g.suc, false, &path, &sites);
    std::unordered_set<Sequent, SequentHash> seen{g};
    actions_at(Chain(g), quota, &out);
    for (const Site& s : sites) {
      Chain c(g);
      if (!display(&c, s)) continue;
      int shown = c.length();
      normalize(&c);
      if (!seen.insert(c.cur()).second) continue;
      if (c.length() > shown) {
        // The displayed formula was decomposed: worth a goal of its own.
        Move m{c, nullptr, {c.cur()}, kUnfold, 0};
        m.weight = c.cur().ant.size() + c.cur().suc.size();
        out.push_back(std::move(m));
      }
      actions_at(c, quota, &out);
    }
    std::stable_sort(out.begin(), out.end(), [](const Move& a, const Move& b) {
      if (a.cls != b.cls) return a.cls < b.cls;
      if (a.weight != b.weight) return a.weight < b.weight;
      return a.cost() < b.cost();
    });
    return out;
  }

  std::optional<ProofTree> expand(const Sequent& g, int budget, int quota) {
    Chain c(g);
    normalize(&c);
    if (c.length() > 0) {
      auto sub = prove(c.cur(), budget - c.length(), quota);
      if (!sub) return std::nullopt;
      return c.wrap(std::move(*sub));
    }
    for (Move& m : moves(g, quota)) {
      int rem = budget - m.cost();
      if (rem < 0 || (rem < 1 && !m.open.empty())) continue;
      int q = m.cls == kGrowth ? quota - 1 : quota;
      std::vector<ProofTree> subs;
      bool ok = true;
      for (const auto& o : m.open) {
        auto s = prove(o, rem, q);
        if (!s) {
          ok = false;
          break;
        }
        subs.push_back(std::move(*s));
      }
      if (ok) {
        if (m.last == nullptr) return m.chain.wrap(std::move(subs[0]));
        ProofTree t{m.chain.cur(), m.last->name, std::move(subs)};
        return m.chain.wrap(std::move(t));
      }
      if (exhausted_) return std::nullopt;
    }
    return std::nullopt;
  }

  System sys_;
  SearchBudget budget_;
  Oracle oracle_;
  std::vector<const RuleSchema*> axioms_;
  std::vector<Action> actions_;
  std::vector<std::vector<const RuleSchema*>> eager_;
  std::size_t visited_ = 0;
  std::size_t limit_ = 0;
  bool exhausted_ = false;
  std::unordered_map<Sequent, ProofTree, SequentHash> proved_;
  std::unordered_map<Key, int, KeyHash> failed_;
  std::unordered_set<Sequent, SequentHash> path_;
};

std::string describe_refutation(const Sequent& g, int idx,
                                const HeteroAlgebra& hh) {
  Validity v = validate(g, hh);
  std::ostringstream os;
  os << "fails on test algebra " << idx << " (|L|=" << hh.L.size()
     << ", |D|=" << hh.D.lat.size() << ")";
  for (const auto& [name, val] : v.counter) os << ' ' << name << '=' << val;
  os << ": lhs=" << v.lhs << " rhs=" << v.rhs;
  return os.str();
}

}  // namespace

const char* search_status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::Refuted: return "refuted";
  }
  return "?";
}

const std::vector<HeteroAlgebra>& search_models(System s) {
  static std::mutex mu;
  static std::map<System, std::vector<HeteroAlgebra>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(s);
  if (it != cache.end()) return it->second;
  std::vector<HeteroAlgebra> out;
  const unsigned need = system_flags(s);
  for (const auto& a : enumerate(kModelSize, variety_of(s))) {
    HeteroAlgebra hh = heterogenize(a);
    if ((hh.flags & need) == need) out.push_back(std::move(hh));
  }
  return cache.emplace(s, std::move(out)).first->second;
}

SearchResult search(const Sequent& goal, System s, const SearchBudget& b) {
  SearchResult res;
  Prover prover(s, b);
  int idx = prover.oracle().refuter(goal);
  if (idx >= 0) {
    res.status = SearchStatus::Refuted;
    res.refutation = describe_refutation(goal, idx, search_models(s)[idx]);
    return res;
  }
  // Full depth first with a small allowance, then shallow bounded passes
  // for goals where the first ordering wanders off.
  const std::size_t inf = b.max_visited;
  const std::pair<int, std::size_t> attempts[] = {
      {b.max_depth, 4000}, {10, 20000}, {16, 40000},
      {b.max_depth, 100000}, {24, 200000}, {b.max_depth, inf}};
  for (auto [d, cap] : attempts) {
    if (d > b.max_depth) continue;
    auto p = prover.attempt(goal, d, cap);
    if (p) {
      res.status = SearchStatus::Found;
      res.proof = std::move(p);
      break;
    }
    if (prover.visited() >= b.max_visited) break;
  }
  res.visited = prover.visited();
  return res;
}

}  // namespace sdm
