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

#include "sdm/proof.hpp"

#include <algorithm>
#include <unordered_set>

namespace sdm {

std::size_t ProofTree::size() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.size();
  return n;
}

std::size_t ProofTree::depth() const {
  std::size_t d = 0;
  for (const auto& p : premises) d = std::max(d, p.depth());
  return d + 1;
}

const ProofTree& at(const ProofTree& t, const ProofPath& path) {
  const ProofTree* cur = &t;
  for (int i : path) {
    if (i < 0 || static_cast<std::size_t>(i) >= cur->premises.size())
      throw std::out_of_range("proof path " + render_path(path) +
                              " leaves the tree");
    cur = &cur->premises[i];
  }
  return *cur;
}

ProofTree replace_at(const ProofTree& t, const ProofPath& path,
                     ProofTree sub) {
  if (path.empty()) return sub;
  ProofTree copy = t;
  ProofTree* cur = &copy;
  for (int i : path) {
    if (i < 0 || static_cast<std::size_t>(i) >= cur->premises.size())
      throw std::out_of_range("proof path " + render_path(path) +
                              " leaves the tree");
    cur = &cur->premises[i];
  }
  *cur = std::move(sub);
  return copy;
}

std::string render_path(const ProofPath& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

namespace {

struct Checker {
  System sys;
  CheckReport rep;
  std::unordered_set<Term, TermHash> allowed;

  void fail(const ProofPath& path, const std::string& rule,
            const std::string& msg) {
    rep.diagnostics.push_back({path, rule, msg});
  }

  void visit(const ProofTree& t, ProofPath& path) {
    const Sequent& c = t.conclusion;
    bool sorted = true;
    for (const Term* side : {&c.ant, &c.suc}) {
      if (!*side) {
        fail(path, t.rule, "missing sequent side");
        sorted = false;
        continue;
      }
      std::string e = sort_error(*side);
      if (!e.empty()) {
        fail(path, t.rule, e);
        sorted = false;
      }
    }
    if (sorted && c.ant.sort() != c.suc.sort()) {
      fail(path, t.rule, "antecedent and succedent have different sorts");
      sorted = false;
    }
    if (sorted) {
      std::string e = placement_error(c);
      if (!e.empty()) fail(path, t.rule, e);
      std::vector<Term> leaves;
      formula_leaves(c.ant, &leaves);
      formula_leaves(c.suc, &leaves);
      for (const Term& f : leaves)
        if (!allowed.count(f)) {
          rep.subformula = false;
          break;
        }
    }

    const RuleSchema* r = find_rule(t.rule);
    if (r == nullptr) {
      fail(path, t.rule, "unknown rule '" + t.rule + "'");
    } else if (!r->in(sys)) {
      fail(path, t.rule,
           "rule '" + t.rule + "' is not in " + system_name(sys));
    } else if (r->premises.size() != t.premises.size()) {
      fail(path, t.rule,
           "rule '" + t.rule + "' takes " +
               std::to_string(r->premises.size()) + " premise(s), got " +
               std::to_string(t.premises.size()));
    } else if (sorted) {
      if (r->is_cut) rep.cut_free = false;
      Subst s;
      std::string why;
      bool ok = match(r->conclusion, c, &s, &why);
      for (std::size_t i = 0; ok && i < r->premises.size(); ++i) {
        if (!match(r->premises[i], t.premises[i].conclusion, &s, &why)) {
          why = "premise " + std::to_string(i + 1) + ": " + why;
          ok = false;
        }
      }
      if (!ok) fail(path, t.rule, why);
    }
    for (std::size_t i = 0; i < t.premises.size(); ++i) {
      path.push_back(static_cast<int>(i));
      visit(t.premises[i], path);
      path.pop_back();
    }
  }
};

}  // namespace

CheckReport check_proof(const ProofTree& t, System s) {
  Checker ck{s, {}, {}};
  if (t.conclusion.ant && t.conclusion.suc) {
    std::vector<Term> leaves, subs;
    formula_leaves(t.conclusion.ant, &leaves);
    formula_leaves(t.conclusion.suc, &leaves);
    for (const Term& f : leaves) subformulas(f, &subs);
    ck.allowed.insert(subs.begin(), subs.end());
  }
  ProofPath path;
  ck.visit(t, path);
  ck.rep.accepted = ck.rep.diagnostics.empty();
  return ck.rep;
}

ProofTree apply_rule(const std::string& rule, std::vector<ProofTree> premises,
                     const Subst& extra) {
  const RuleSchema* r = find_rule(rule);
  if (r == nullptr) throw std::invalid_argument("unknown rule " + rule);
  if (r->premises.size() != premises.size())
    throw std::invalid_argument(rule + ": wrong number of premises");
  Subst s = extra;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    std::string why;
    if (!match(r->premises[i], premises[i].conclusion, &s, &why))
      throw std::invalid_argument(rule + ": " + why + " in " +
                                  render(premises[i].conclusion));
  }
  Sequent c = instantiate(r->conclusion, s);
  if (c.ant.has_meta() || c.suc.has_meta())
    throw std::invalid_argument(rule + ": conclusion not determined: " +
                                render(c));
  return {std::move(c), rule, std::move(premises)};
}

ProofTree identity_proof(const Term& f) {
  auto one = [](const char* name, const Term& t) {
    Subst s;
    s.set(name, t);
    return s;
  };
  auto leaf = [](const char* rule) { return apply_rule(rule, {}); };
  switch (f.op()) {
    case Op::Atom: {
      Subst s;
      s.set("p", f);
      return apply_rule("Id", {}, s);
    }
    case Op::Top: return apply_rule("top_L", {leaf("top_R")});
    case Op::Bot: return apply_rule("bot_R", {leaf("bot_L")});
    case Op::One: return apply_rule("one_L", {leaf("one_R")});
    case Op::Zero: return apply_rule("zero_R", {leaf("zero_L")});
    case Op::And: case Op::Cap: {
      bool dl = f.op() == Op::And;
      const char* w = dl ? "W_L_and" : "W_D_cap";
      const char* e = dl ? "E_L_and" : "E_D_cap";
      const char* z = dl ? "Z" : "T";
      ProofTree l = apply_rule(w, {identity_proof(f.child(0))},
                               one(z, f.child(1)));
      ProofTree r = apply_rule(
          e, {apply_rule(w, {identity_proof(f.child(1))},
                         one(z, f.child(0)))});
      ProofTree both = apply_rule(dl ? "and_R" : "cap_R", {l, r});
      return apply_rule(dl ? "and_L" : "cap_L",
                        {apply_rule(dl ? "C_L_and" : "C_D_cap", {both})});
    }
    case Op::Or: case Op::Cup: {
      bool dl = f.op() == Op::Or;
      const char* w = dl ? "W_L_or" : "W_D_cup";
      const char* e = dl ? "E_L_or" : "E_D_cup";
      const char* z = dl ? "Z" : "T";
      ProofTree l = apply_rule(w, {identity_proof(f.child(0))},
                               one(z, f.child(1)));
      ProofTree r = apply_rule(
          e, {apply_rule(w, {identity_proof(f.child(1))},
                         one(z, f.child(0)))});
      ProofTree both = apply_rule(dl ? "or_L" : "cup_L", {l, r});
      return apply_rule(dl ? "or_R" : "cup_R",
                        {apply_rule(dl ? "C_L_or" : "C_D_cup", {both})});
    }
    case Op::Circ: {
      ProofTree t = apply_rule("tcirc", {identity_proof(f.child(0))});
      return apply_rule("circ_R", {apply_rule("circ_L", {t})});
    }
    case Op::Sim: {
      ProofTree t = apply_rule("cont.dn", {identity_proof(f.child(0))});
      return apply_rule("sim_L", {apply_rule("sim_R", {t})});
    }
    case Op::Box: {
      ProofTree t = apply_rule("box_L", {identity_proof(f.child(0))});
      return apply_rule("box_R", {t});
    }
    default:
      throw std::invalid_argument("identity_proof needs a formula, got " +
                                  render(f));
  }
}

nlohmann::ordered_json to_json(const ProofTree& t) {
  nlohmann::ordered_json j;
  j["rule"] = t.rule;
  j["conclusion"] = render(t.conclusion);
  j["premises"] = nlohmann::ordered_json::array();
  for (const auto& p : t.premises) j["premises"].push_back(to_json(p));
  return j;
}

ProofTree proof_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw ProofFormatError("proof node must be an object");
  if (!j.contains("rule") || !j["rule"].is_string())
    throw ProofFormatError("proof node needs a string \"rule\"");
  if (!j.contains("conclusion") || !j["conclusion"].is_string())
    throw ProofFormatError("proof node needs a string \"conclusion\"");
  ProofTree t;
  t.rule = j["rule"].get<std::string>();
  t.conclusion = parse_sequent(j["conclusion"].get<std::string>());
  if (j.contains("premises")) {
    if (!j["premises"].is_array())
      throw ProofFormatError("\"premises\" must be an array");
    for (const auto& p : j["premises"]) t.premises.push_back(proof_from_json(p));
  }
  return t;
}

}  // namespace sdm
