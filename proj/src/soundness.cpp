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

#include "sdm/soundness.hpp"

#include <map>

namespace sdm {
namespace {

void metas_of(const Term& t, std::map<std::string, Sort>* out) {
  if (t.is_meta()) {
    out->emplace(t.name(), t.sort());
    return;
  }
  for (int i = 0; i < t.arity(); ++i) metas_of(t.child(i), out);
}

}  // namespace

RuleSoundness rule_sound(const RuleSchema& r, const HeteroAlgebra& hh) {
  std::map<std::string, Sort> metas;
  std::vector<const Sequent*> seqs;
  for (const auto& p : r.premises) seqs.push_back(&p);
  seqs.push_back(&r.conclusion);
  for (const Sequent* s : seqs) {
    metas_of(s->ant, &metas);
    metas_of(s->suc, &metas);
  }
  Program prog;
  for (const auto& [name, sort] : metas) prog.var_index(name, sort);
  for (const Sequent* s : seqs) {
    prog.append(operational_reading(s->ant, Position::Precedent));
    prog.append(operational_reading(s->suc, Position::Succedent));
  }
  const auto& vars = prog.vars();
  std::vector<int> sizes;
  for (const auto& v : vars)
    sizes.push_back(v.sort == Sort::DL ? hh.L.size() : hh.D.size());
  auto holds = [&](std::size_t i, const int* vals) {
    const FiniteLattice& lat =
        seqs[i]->sort() == Sort::DL ? hh.L : hh.D.lat;
    int l = prog.run(static_cast<int>(2 * i), hh, vals);
    int u = prog.run(static_cast<int>(2 * i + 1), hh, vals);
    return lat.leq(l, u);
  };
  RuleSoundness out;
  const std::size_t last = seqs.size() - 1;
  for_each_assignment(sizes, [&](const std::vector<int>& vals) {
    for (std::size_t i = 0; i < last; ++i)
      if (!holds(i, vals.data())) return true;
    if (holds(last, vals.data())) return true;
    out.sound = false;
    for (std::size_t i = 0; i < vars.size(); ++i)
      out.counter[vars[i].name] = vals[i];
    return false;
  });
  return out;
}

}  // namespace sdm
