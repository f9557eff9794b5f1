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

#include "sdm/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

namespace sdm {
namespace {

using Mask = unsigned;

bool is_downset(const std::vector<Mask>& below, Mask s) {
  for (std::size_t i = 0; i < below.size(); ++i)
    if ((s >> i & 1u) && (below[i] & ~s)) return false;
  return true;
}

std::vector<Mask> downsets(const std::vector<Mask>& below) {
  std::vector<Mask> out;
  Mask full = (1u << below.size());
  for (Mask s = 0; s < full; ++s)
    if (is_downset(below, s)) out.push_back(s);
  return out;
}

FiniteLattice downset_lattice(const std::vector<Mask>& below) {
  std::vector<Mask> ds = downsets(below);
  std::stable_sort(ds.begin(), ds.end(), [](Mask a, Mask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  int n = static_cast<int>(ds.size());
  LeqTable leq(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) leq[i][j] = (ds[i] & ~ds[j]) == 0;
  Report r;
  auto l = FiniteLattice::from_leq(leq, &r, "downsets");
  if (!l) throw InternalError("downset lattice invalid: " + r.summary());
  return *l;
}

}  // namespace

std::vector<FiniteLattice> distributive_lattices(int max_size) {
  if (max_size > kMaxEnumerateSize)
    throw AlgebraError("size bound " + std::to_string(max_size) +
                       " exceeds " + std::to_string(kMaxEnumerateSize));
  std::vector<FiniteLattice> out;
  if (max_size < 2) return out;
  // Posets in natural labelling: each new element sits above a downset of
  // the earlier ones. A poset with k elements has at least k+1 downsets.
  std::vector<std::vector<Mask>> found;
  std::vector<Mask> below;
  std::function<void()> grow = [&] {
    found.push_back(below);
    if (static_cast<int>(below.size()) + 2 > max_size) return;
    for (Mask d : downsets(below)) {
      below.push_back(d);
      if (static_cast<int>(downsets(below).size()) <= max_size) grow();
      below.pop_back();
    }
  };
  grow();
  std::vector<FiniteLattice> cands;
  for (const auto& p : found)
    if (!p.empty()) cands.push_back(downset_lattice(p));
  std::stable_sort(cands.begin(), cands.end(),
                   [](const FiniteLattice& a, const FiniteLattice& b) {
                     return a.size() < b.size();
                   });
  for (const auto& c : cands) {
    bool dup = false;
    for (const auto& o : out)
      if (o.size() == c.size() && find_lattice_iso(o, c)) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(c);
  }
  return out;
}

std::vector<std::vector<int>> automorphisms(const FiniteLattice& l) {
  int n = l.size();
  std::vector<std::vector<int>> out;
  std::vector<int> f(n, -1);
  std::vector<bool> used(n, false);
  std::function<void(int)> go = [&](int x) {
    if (x == n) {
      out.push_back(f);
      return;
    }
    for (int y = 0; y < n; ++y) {
      if (used[y]) continue;
      bool ok = true;
      for (int z = 0; z < x && ok; ++z)
        ok = l.leq(z, x) == l.leq(f[z], y) && l.leq(x, z) == l.leq(y, f[z]);
      if (!ok) continue;
      f[x] = y;
      used[y] = true;
      go(x + 1);
      used[y] = false;
    }
  };
  go(0);
  std::sort(out.begin(), out.end());  // identity is the least permutation
  return out;
}

std::vector<std::vector<int>> sma_negations(const FiniteLattice& l,
                                            unsigned variety) {
  int n = l.size();
  std::vector<int> jis = l.join_irreducibles();
  auto auts = automorphisms(l);
  std::set<std::vector<int>> canon;
  std::vector<int> neg(n), img(n);
  std::vector<int> sizes(jis.size(), n);
  std::vector<int> vals(jis.size(), 0);
  // Odometer over the values on join-irreducibles; S2 and S3 fix the rest.
  for (;;) {
    for (int a = 0; a < n; ++a) {
      int v = l.top();
      for (std::size_t j = 0; j < jis.size(); ++j)
        if (l.leq(jis[j], a)) v = l.meet(v, vals[j]);
      neg[a] = v;
    }
    bool ok = neg[l.top()] == l.bot();
    for (int a = 0; a < n && ok; ++a)
      ok = neg[a] == neg[neg[neg[a]]];
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        ok = neg[neg[l.meet(a, b)]] ==
                 l.meet(neg[neg[a]], neg[neg[b]]) &&
             neg[l.join(a, b)] == l.meet(neg[a], neg[b]);
    if (ok && (classify(FiniteSMA{l, neg}) & variety) == variety) {
      std::vector<int> best;
      for (const auto& s : auts) {
        for (int a = 0; a < n; ++a) img[s[a]] = s[neg[a]];
        if (best.empty() || img < best) best = img;
      }
      canon.insert(best);
    }
    std::size_t i = 0;
    for (; i < vals.size(); ++i) {
      if (++vals[i] < n) break;
      vals[i] = 0;
    }
    if (i == vals.size()) break;
  }
  return {canon.begin(), canon.end()};
}

std::vector<FiniteSMA> enumerate(int max_size, unsigned variety) {
  std::vector<FiniteSMA> out;
  for (const auto& l : distributive_lattices(max_size))
    for (auto& neg : sma_negations(l, variety))
      out.push_back(FiniteSMA{l, std::move(neg)});
  return out;
}

}  // namespace sdm
