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

#include "sdm/semantics.hpp"

#include <set>

namespace sdm {
namespace {

int apply(XOp op, const HeteroAlgebra& hh, int a, int b) {
  const FiniteLattice& L = hh.L;
  const FiniteLattice& K = hh.D.lat;
  switch (op) {
    case XOp::Top: return L.top();
    case XOp::Bot: return L.bot();
    case XOp::One: return K.top();
    case XOp::Zero: return K.bot();
    case XOp::Box: return hh.e[a];
    case XOp::Circ: return hh.h[a];
    case XOp::Sim: return hh.D.star[a];
    case XOp::And: return L.meet(a, b);
    case XOp::Or: return L.join(a, b);
    case XOp::Cap: return K.meet(a, b);
    case XOp::Cup: return K.join(a, b);
    case XOp::Heyting: return hh.ops.imp[a * L.size() + b];
    case XOp::CoImp: return hh.ops.coimp[a * L.size() + b];
    case XOp::KHeyting: return hh.ops.kimp[a * K.size() + b];
    case XOp::KCoImp: return hh.ops.kcoimp[a * K.size() + b];
    case XOp::HLeft: return hh.ops.hleft[a];
    case XOp::HRight: return hh.ops.hright[a];
    case XOp::ELeft: return hh.ops.eleft[a];
    case XOp::Var: break;
  }
  throw InternalError("apply: variable");
}

void atoms_of(const Term& t, std::set<std::string>* out) {
  if (t.op() == Op::Atom) out->insert(t.name());
  for (int i = 0; i < t.arity(); ++i) atoms_of(t.child(i), out);
}

void atoms_of(const Formula& f, std::set<std::string>* out) {
  if (f.kind() == Formula::Kind::Atom) out->insert(f.name());
  for (int i = 0; i < f.arity(); ++i) atoms_of(f.child(i), out);
}

}  // namespace

int eval(const ExtendedTerm& t, const HeteroAlgebra& hh, const Valuation& v) {
  if (t.op() == XOp::Var) {
    auto it = v.find(t.name());
    if (it == v.end())
      throw AlgebraError("no value for '" + t.name() + "'");
    int bound = t.sort() == Sort::DL ? hh.L.size() : hh.D.size();
    if (it->second < 0 || it->second >= bound)
      throw AlgebraError("value of '" + t.name() + "' out of range");
    return it->second;
  }
  int a = 0, b = 0;
  if (!t.kids().empty()) a = eval(t.kids()[0], hh, v);
  if (t.kids().size() > 1) b = eval(t.kids()[1], hh, v);
  return apply(t.op(), hh, a, b);
}

int Program::var_index(const std::string& name, Sort sort) {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name && vars_[i].sort == sort)
      return static_cast<int>(i);
  vars_.push_back({name, sort});
  return static_cast<int>(vars_.size()) - 1;
}

void Program::emit(const ExtendedTerm& t, std::vector<Instr>* code) {
  if (t.op() == XOp::Var) {
    code->push_back({XOp::Var, var_index(t.name(), t.sort())});
    return;
  }
  for (const auto& k : t.kids()) emit(k, code);
  code->push_back({t.op(), static_cast<int>(t.kids().size())});
}

void Program::append(const ExtendedTerm& t) {
  std::vector<Instr> code;
  emit(t, &code);
  code_.push_back(std::move(code));
}

int Program::run(int i, const HeteroAlgebra& hh, const int* vals) const {
  int stack[64];
  int sp = 0;
  for (const Instr& in : code_[i]) {
    if (in.op == XOp::Var) {
      stack[sp++] = vals[in.arg];
      continue;
    }
    int b = in.arg == 2 ? stack[--sp] : 0;
    int a = in.arg >= 1 ? stack[--sp] : 0;
    stack[sp++] = apply(in.op, hh, a, b);
    if (sp >= 63) throw InternalError("program stack overflow");
  }
  return stack[0];
}

bool for_each_assignment(
    const std::vector<int>& sizes,
    const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> cur(sizes.size(), 0);
  for (int s : sizes)
    if (s <= 0) return true;
  for (;;) {
    if (!f(cur)) return false;
    std::size_t i = 0;
    for (; i < cur.size(); ++i) {
      if (++cur[i] < sizes[i]) break;
      cur[i] = 0;
    }
    if (i == cur.size()) return true;
  }
}

Validity validate(const Sequent& s, const HeteroAlgebra& hh) {
  std::set<std::string> atoms;
  atoms_of(s.ant, &atoms);
  atoms_of(s.suc, &atoms);
  if (static_cast<int>(atoms.size()) > kMaxValidateAtoms)
    throw AlgebraError("sequent has more than " +
                       std::to_string(kMaxValidateAtoms) + " atoms");
  Program prog;
  for (const auto& a : atoms) prog.var_index(a, Sort::DL);
  prog.append(operational_reading(s.ant, Position::Precedent));
  prog.append(operational_reading(s.suc, Position::Succedent));
  const auto& vars = prog.vars();
  std::vector<int> sizes;
  for (const auto& v : vars)
    sizes.push_back(v.sort == Sort::DL ? hh.L.size() : hh.D.size());
  const FiniteLattice& lat = s.sort() == Sort::DL ? hh.L : hh.D.lat;
  Validity out;
  for_each_assignment(sizes, [&](const std::vector<int>& vals) {
    int l = prog.run(0, hh, vals.data());
    int r = prog.run(1, hh, vals.data());
    if (lat.leq(l, r)) return true;
    out.valid = false;
    out.lhs = l;
    out.rhs = r;
    for (std::size_t i = 0; i < vars.size(); ++i)
      out.counter[vars[i].name] = vals[i];
    return false;
  });
  return out;
}

int eval(const Formula& f, const FiniteSMA& a, const Valuation& v) {
  const FiniteLattice& l = a.lat;
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      auto it = v.find(f.name());
      if (it == v.end())
        throw AlgebraError("no value for '" + f.name() + "'");
      return it->second;
    }
    case Formula::Kind::Top: return l.top();
    case Formula::Kind::Bot: return l.bot();
    case Formula::Kind::Not: return a.neg[eval(f.child(0), a, v)];
    case Formula::Kind::And:
      return l.meet(eval(f.child(0), a, v), eval(f.child(1), a, v));
    case Formula::Kind::Or:
      return l.join(eval(f.child(0), a, v), eval(f.child(1), a, v));
  }
  return 0;
}

bool valid(const Formula& lhs, const Formula& rhs, const FiniteSMA& a,
           Valuation* counter) {
  std::set<std::string> atoms;
  atoms_of(lhs, &atoms);
  atoms_of(rhs, &atoms);
  std::vector<std::string> names(atoms.begin(), atoms.end());
  std::vector<int> sizes(names.size(), a.size());
  Valuation v;
  return for_each_assignment(sizes, [&](const std::vector<int>& vals) {
    for (std::size_t i = 0; i < names.size(); ++i) v[names[i]] = vals[i];
    if (a.lat.leq(eval(lhs, a, v), eval(rhs, a, v))) return true;
    if (counter) *counter = v;
    return false;
  });
}

}  // namespace sdm
