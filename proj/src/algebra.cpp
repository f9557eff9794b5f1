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

#include "sdm/algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace sdm {
namespace {

std::string tuple_text(const std::vector<int>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

void require(bool cond, const std::string& what) {
  if (!cond) throw InternalError(what);
}

void check_unary_table(const std::vector<int>& t, int n, const char* name) {
  if (static_cast<int>(t.size()) != n)
    throw AlgebraError(std::string(name) + " table has " +
                       std::to_string(t.size()) + " entries, expected " +
                       std::to_string(n));
  for (int v : t)
    if (v < 0 || v >= n)
      throw AlgebraError(std::string(name) + " table entry " +
                         std::to_string(v) + " out of range");
}

void check_square(const LeqTable& leq, const char* name) {
  for (const auto& row : leq)
    if (row.size() != leq.size())
      throw AlgebraError(std::string(name) + " order table is not square");
}

// Backtracking search for an order isomorphism that also commutes with the
// given unary operations (pass empty vectors to ignore them).
std::optional<std::vector<int>> iso_search(const FiniteLattice& a,
                                           const std::vector<int>& ua,
                                           const FiniteLattice& b,
                                           const std::vector<int>& ub) {
  int n = a.size();
  if (n != b.size()) return std::nullopt;
  auto down_count = [](const FiniteLattice& l, int x) {
    int c = 0;
    for (int y = 0; y < l.size(); ++y) c += l.leq(y, x);
    return c;
  };
  std::vector<int> da(n), db(n);
  for (int x = 0; x < n; ++x) {
    da[x] = down_count(a, x);
    db[x] = down_count(b, x);
  }
  std::vector<int> f(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> go = [&](int x) -> bool {
    if (x == n) {
      if (ua.empty()) return true;
      for (int i = 0; i < n; ++i)
        if (f[ua[i]] != ub[f[i]]) return false;
      return true;
    }
    for (int y = 0; y < n; ++y) {
      if (used[y] || da[x] != db[y]) continue;
      bool ok = true;
      for (int z = 0; z < x && ok; ++z)
        ok = a.leq(z, x) == b.leq(f[z], y) && a.leq(x, z) == b.leq(y, f[z]);
      if (!ok) continue;
      if (!ua.empty()) {
        // Unary consistency for pairs already fully assigned.
        f[x] = y;
        for (int z = 0; z <= x && ok; ++z) {
          int uz = ua[z];
          if (uz <= x) ok = f[uz] == ub[f[z]];
        }
        if (!ok) {
          f[x] = -1;
          continue;
        }
      }
      f[x] = y;
      used[y] = true;
      if (go(x + 1)) return true;
      used[y] = false;
      f[x] = -1;
    }
    return false;
  };
  if (go(0)) return f;
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// Report

bool Report::ok() const { return first_failure() == nullptr; }

const Check* Report::first_failure() const {
  for (const auto& c : checks)
    if (!c.ok) return &c;
  return nullptr;
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

void Report::add(std::string name, bool ok, std::vector<int> witness,
                 std::string detail) {
  checks.push_back(
      Check{std::move(name), ok, std::move(witness), std::move(detail)});
}

std::string Report::summary() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << c.name << (c.ok ? " ok" : " fails");
    if (!c.ok) {
      if (!c.detail.empty()) out << " " << c.detail;
      if (!c.witness.empty()) out << " witness " << tuple_text(c.witness);
    }
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// FiniteLattice

std::optional<FiniteLattice> FiniteLattice::from_leq(const LeqTable& leq,
                                                     Report* report,
                                                     const std::string& label) {
  check_square(leq, label.c_str());
  int n = static_cast<int>(leq.size());
  auto fail = [&](std::vector<int> w, std::string d) {
    report->add(label, false, std::move(w), std::move(d));
    return std::nullopt;
  };
  if (n < 2) return fail({}, "needs at least two elements");
  for (int a = 0; a < n; ++a)
    if (!leq[a][a]) return fail({a}, "order is not reflexive");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && leq[a][b] && leq[b][a])
        return fail({a, b}, "order is not antisymmetric");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (leq[a][b])
        for (int c = 0; c < n; ++c)
          if (leq[b][c] && !leq[a][c])
            return fail({a, b, c}, "order is not transitive");
  FiniteLattice l;
  l.n_ = n;
  l.leq_.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) l.leq_[a * n + b] = leq[a][b];
  l.meet_.assign(n * n, -1);
  l.join_.assign(n * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int m = -1, j = -1;
      for (int c = 0; c < n; ++c) {
        if (leq[c][a] && leq[c][b] && (m < 0 || leq[m][c])) m = c;
        if (leq[a][c] && leq[b][c] && (j < 0 || leq[c][j])) j = c;
      }
      for (int c = 0; c < n && m >= 0; ++c)
        if (leq[c][a] && leq[c][b] && !leq[c][m]) m = -1;
      for (int c = 0; c < n && j >= 0; ++c)
        if (leq[a][c] && leq[b][c] && !leq[j][c]) j = -1;
      if (m < 0) return fail({a, b}, "meet does not exist");
      if (j < 0) return fail({a, b}, "join does not exist");
      l.meet_[a * n + b] = m;
      l.join_[a * n + b] = j;
    }
  }
  l.bot_ = l.top_ = 0;
  for (int a = 1; a < n; ++a) {
    l.bot_ = l.meet(l.bot_, a);
    l.top_ = l.join(l.top_, a);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)))
          return fail({a, b, c}, "not distributive");
  report->add(label, true);
  return l;
}

FiniteLattice FiniteLattice::chain(int n) {
  LeqTable leq(n, std::vector<bool>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) leq[a][b] = a <= b;
  Report r;
  auto l = from_leq(leq, &r, "chain");
  if (!l) throw AlgebraError("chain needs at least two elements");
  return *l;
}

LeqTable FiniteLattice::leq_table() const {
  LeqTable t(n_, std::vector<bool>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = leq(a, b);
  return t;
}

std::vector<int> FiniteLattice::join_irreducibles() const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j) {
    if (j == bot_) continue;
    int covers = 0;
    for (int x = 0; x < n_; ++x) {
      if (x == j || !leq(x, j)) continue;
      bool cover = true;
      for (int y = 0; y < n_ && cover; ++y)
        if (y != x && y != j && leq(x, y) && leq(y, j)) cover = false;
      covers += cover;
    }
    if (covers == 1) out.push_back(j);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Varieties

std::string variety_names(unsigned flags) {
  static const char* names[] = {"LQMA", "UQMA", "DPL", "APL",
                                "WSA",  "DMA",  "BA"};
  std::string out;
  for (int i = 0; i < 7; ++i) {
    if (!(flags & (1u << i))) continue;
    if (!out.empty()) out += ' ';
    out += names[i];
  }
  return out;
}

unsigned parse_variety(const std::string& text) {
  static const char* names[] = {"LQMA", "UQMA", "DPL", "APL",
                                "WSA",  "DMA",  "BA"};
  unsigned flags = 0;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    std::string up;
    for (char c : tok) up += static_cast<char>(std::toupper(c));
    if (up == "SMA") {
      tok.clear();
      return;
    }
    bool found = false;
    for (int i = 0; i < 7; ++i)
      if (up == names[i]) {
        flags |= 1u << i;
        found = true;
      }
    if (!found) throw AlgebraError("unknown variety '" + tok + "'");
    tok.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == ',' || c == '+') flush();
    else tok += c;
  }
  flush();
  return flags;
}

SmaCheck check_sma(const SmaTables& t) {
  SmaCheck out;
  Report& r = out.report;
  check_square(t.leq, "leq");
  int n = static_cast<int>(t.leq.size());
  check_unary_table(t.neg, n, "neg");
  auto lat = FiniteLattice::from_leq(t.leq, &r, "S1");
  if (!lat) return out;
  const FiniteLattice& l = *lat;
  const auto& neg = t.neg;
  auto nn = [&](int a) { return neg[neg[a]]; };

  if (neg[l.bot()] != l.top())
    r.add("S2", false, {l.bot()}, "at bottom");
  else if (neg[l.top()] != l.bot())
    r.add("S2", false, {l.top()}, "at top");
  else
    r.add("S2", true);

  std::vector<int> w;
  for (int a = 0; a < n && w.empty(); ++a)
    for (int b = 0; b < n && w.empty(); ++b)
      if (neg[l.join(a, b)] != l.meet(neg[a], neg[b])) w = {a, b};
  r.add("S3", w.empty(), w);
  w.clear();
  for (int a = 0; a < n && w.empty(); ++a)
    for (int b = 0; b < n && w.empty(); ++b)
      if (nn(l.meet(a, b)) != l.meet(nn(a), nn(b))) w = {a, b};
  r.add("S4", w.empty(), w);
  w.clear();
  for (int a = 0; a < n && w.empty(); ++a)
    if (neg[a] != neg[nn(a)]) w = {a};
  r.add("S5", w.empty(), w);
  if (r.ok()) out.sma = FiniteSMA{l, neg};
  return out;
}

unsigned classify(const FiniteSMA& a) {
  const FiniteLattice& l = a.lat;
  int n = l.size();
  const auto& neg = a.neg;
  bool s6a = true, s6b = true, s7 = true, s8 = true, s9 = true, d4 = true,
       d5 = true, b1 = true;
  for (int x = 0; x < n; ++x) {
    int nx = neg[x], nnx = a.nn(x);
    s6a = s6a && l.leq(x, nnx);
    s6b = s6b && l.leq(nnx, x);
    s7 = s7 && l.meet(nx, nnx) == l.bot();
    s8 = s8 && l.meet(x, nx) == l.bot();
    s9 = s9 && l.join(nx, nnx) == l.top();
    d5 = d5 && nnx == x;
    b1 = b1 && l.join(x, nx) == l.top();
    for (int y = 0; y < n; ++y)
      d4 = d4 && neg[l.meet(x, y)] == l.join(nx, neg[y]);
  }
  unsigned f = 0;
  if (s6a) f |= kLQMA;
  if (s6b) f |= kUQMA;
  if (s7) f |= kDPL;
  if (s8) f |= kAPL;
  if (s9) f |= kWSA;
  bool dma = d4 && d5;
  if (dma) f |= kDMA;
  if (dma && b1) f |= kBA;
  return f;
}

Report check_dma(const FiniteLattice& l, const std::vector<int>& star) {
  Report r;
  int n = l.size();
  check_unary_table(star, n, "star");
  r.add("D1", true);
  if (star[l.bot()] != l.top())
    r.add("D2", false, {l.bot()}, "at bottom");
  else if (star[l.top()] != l.bot())
    r.add("D2", false, {l.top()}, "at top");
  else
    r.add("D2", true);
  std::vector<int> w3, w4, w5, wb;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (w3.empty() && star[l.join(a, b)] != l.meet(star[a], star[b]))
        w3 = {a, b};
      if (w4.empty() && star[l.meet(a, b)] != l.join(star[a], star[b]))
        w4 = {a, b};
    }
    if (w5.empty() && star[star[a]] != a) w5 = {a};
    if (wb.empty() && l.join(a, star[a]) != l.top()) wb = {a};
  }
  r.add("D3", w3.empty(), w3);
  r.add("D4", w4.empty(), w4);
  r.add("D5", w5.empty(), w5);
  r.add("B1", wb.empty(), wb);
  return r;
}

namespace {
bool dma_ok(const Report& r) {
  for (const char* name : {"D1", "D2", "D3", "D4", "D5"}) {
    const Check* c = r.find(name);
    if (c == nullptr || !c->ok) return false;
  }
  return true;
}
}  // namespace

// ---------------------------------------------------------------------------
// Kernel

Kernel kernel(const FiniteSMA& a) {
  const FiniteLattice& l = a.lat;
  int n = l.size();
  std::vector<int> elems;
  std::vector<int> index(n, -1);
  for (int x = 0; x < n; ++x)
    if (a.nn(x) == x) {
      index[x] = static_cast<int>(elems.size());
      elems.push_back(x);
    }
  // K1: the carrier is the image of double negation.
  for (int x = 0; x < n; ++x)
    require(index[a.nn(x)] >= 0, "kernel: a'' is not a fixpoint of ''");
  int m = static_cast<int>(elems.size());
  auto hfun = [&](int x) { return index[a.nn(x)]; };
  std::vector<int> cup(m * m), cap(m * m), star(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int jn = l.join(elems[i], elems[j]);
      cup[i * m + j] = hfun(a.nn(jn));  // K2 as written
      require(cup[i * m + j] == hfun(jn), "kernel: K2 drift");
      cap[i * m + j] = hfun(l.meet(elems[i], elems[j]));  // K3
    }
    star[i] = hfun(a.neg[elems[i]]);  // K6
  }
  int one = hfun(l.top()), zero = hfun(l.bot());  // K4, K5
  LeqTable leq(m, std::vector<bool>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) leq[i][j] = cap[i * m + j] == i;
  Report r;
  auto kl = FiniteLattice::from_leq(leq, &r, "D1");
  require(kl.has_value(), "kernel: not a bounded distributive lattice: " +
                              r.summary());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      require(kl->meet(i, j) == cap[i * m + j], "kernel: meet table");
      require(kl->join(i, j) == cup[i * m + j], "kernel: join table");
    }
  require(kl->top() == one && kl->bot() == zero, "kernel: bounds");
  Report d = check_dma(*kl, star);
  require(dma_ok(d), "kernel: not a De Morgan algebra: " + d.summary());
  bool boolean = d.find("B1")->ok;
  if (classify(a) & kDPL)
    require(boolean, "kernel of a DPL is not Boolean");
  Kernel k{FiniteDMA{*kl, star, boolean}, elems, std::vector<int>(n)};
  for (int x = 0; x < n; ++x) k.h[x] = hfun(x);
  for (int i = 0; i < m; ++i) require(k.h[k.e[i]] == i, "kernel: he != id");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      require(k.h[l.meet(x, y)] == kl->meet(k.h[x], k.h[y]),
              "kernel: h does not preserve meets");
      require(k.h[l.join(x, y)] == kl->join(k.h[x], k.h[y]),
              "kernel: h does not preserve joins");
    }
  require(k.h[l.top()] == one && k.h[l.bot()] == zero,
          "kernel: h does not preserve bounds");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      require(k.e[kl->meet(i, j)] == l.meet(k.e[i], k.e[j]),
              "kernel: e does not preserve meets");
  require(k.e[one] == l.top() && k.e[zero] == l.bot(),
          "kernel: e does not preserve bounds");
  return k;
}

// ---------------------------------------------------------------------------
// Heterogeneous algebras

std::string hflag_names(unsigned flags) {
  static const char* names[] = {"H6a", "H6b", "H2b", "H7", "H8"};
  std::string out;
  for (int i = 0; i < 5; ++i) {
    if (!(flags & (1u << i))) continue;
    if (!out.empty()) out += ' ';
    out += names[i];
  }
  return out;
}

DerivedOps derived_ops(const FiniteLattice& L, const FiniteDMA& D,
                       const std::vector<int>& e, const std::vector<int>& h) {
  const FiniteLattice& K = D.lat;
  int n = L.size(), m = K.size();
  DerivedOps o;
  o.imp.resize(n * n);
  o.coimp.resize(n * n);
  o.kimp.resize(m * m);
  o.kcoimp.resize(m * m);
  o.hleft.resize(m);
  o.hright.resize(m);
  o.eleft.resize(n);

  auto residuals = [](const FiniteLattice& l, std::vector<int>* imp,
                      std::vector<int>* coimp, const char* what) {
    int k = l.size();
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        int best = l.bot();
        for (int c = 0; c < k; ++c)
          if (l.leq(l.meet(a, c), b)) best = l.join(best, c);
        require(l.leq(l.meet(a, best), b),
                std::string(what) + ": heyting arrow does not exist");
        (*imp)[a * k + b] = best;
        best = l.top();
        for (int c = 0; c < k; ++c)
          if (l.leq(b, l.join(a, c))) best = l.meet(best, c);
        require(l.leq(b, l.join(a, best)),
                std::string(what) + ": co-implication does not exist");
        (*coimp)[a * k + b] = best;
      }
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        for (int c = 0; c < k; ++c) {
          require(l.leq(l.meet(a, c), b) == l.leq(c, (*imp)[a * k + b]),
                  std::string(what) + ": heyting adjunction");
          require(l.leq(b, l.join(a, c)) == l.leq((*coimp)[a * k + b], c),
                  std::string(what) + ": co-implication adjunction");
        }
  };
  residuals(L, &o.imp, &o.coimp, "L");
  residuals(K, &o.kimp, &o.kcoimp, "D");

  for (int g = 0; g < m; ++g) {
    int lo = L.top(), hi = L.bot();
    for (int x = 0; x < n; ++x) {
      if (K.leq(g, h[x])) lo = L.meet(lo, x);
      if (K.leq(h[x], g)) hi = L.join(hi, x);
    }
    require(K.leq(g, h[lo]), "h-left does not exist");
    require(K.leq(h[hi], g), "h-right does not exist");
    o.hleft[g] = lo;
    o.hright[g] = hi;
  }
  for (int x = 0; x < n; ++x) {
    int lo = K.top();
    for (int g = 0; g < m; ++g)
      if (L.leq(x, e[g])) lo = K.meet(lo, g);
    require(L.leq(x, e[lo]), "e-left does not exist");
    o.eleft[x] = lo;
  }
  for (int g = 0; g < m; ++g)
    for (int x = 0; x < n; ++x) {
      require(L.leq(o.hleft[g], x) == K.leq(g, h[x]), "h-left adjunction");
      require(L.leq(x, o.hright[g]) == K.leq(h[x], g), "h-right adjunction");
      require(K.leq(o.eleft[x], g) == L.leq(x, e[g]), "e-left adjunction");
    }
  return o;
}

HeteroCheck check_hetero(const HeteroTables& t) {
  HeteroCheck out;
  Report& r = out.report;
  check_square(t.L, "L");
  check_square(t.D, "D");
  int n = static_cast<int>(t.L.size()), m = static_cast<int>(t.D.size());
  check_unary_table(t.star, m, "star");
  if (static_cast<int>(t.e.size()) != m)
    throw AlgebraError("e table must have one entry per element of D");
  if (static_cast<int>(t.h.size()) != n)
    throw AlgebraError("h table must have one entry per element of L");
  for (int v : t.e)
    if (v < 0 || v >= n) throw AlgebraError("e table entry out of range");
  for (int v : t.h)
    if (v < 0 || v >= m) throw AlgebraError("h table entry out of range");

  auto L = FiniteLattice::from_leq(t.L, &r, "H1");
  Report dr;
  auto K = FiniteLattice::from_leq(t.D, &dr, "H2a");
  if (!K) {
    r.checks.insert(r.checks.end(), dr.checks.begin(), dr.checks.end());
  }
  if (!L || !K) return out;
  Report dm = check_dma(*K, t.star);
  bool dma = dma_ok(dm);
  const Check* fail = dm.first_failure();
  r.add("H2a", dma, dma ? std::vector<int>{} : fail->witness,
        dma ? "" : fail->name + " fails");
  bool boolean = dma && dm.find("B1")->ok;

  const auto& e = t.e;
  const auto& h = t.h;
  std::vector<int> w;
  for (int a = 0; a < m && w.empty(); ++a)
    for (int b = 0; b < m && w.empty(); ++b) {
      if (K->leq(a, b) != L->leq(e[a], e[b])) w = {a, b};
      else if (e[K->meet(a, b)] != L->meet(e[a], e[b])) w = {a, b};
    }
  if (w.empty() && e[K->top()] != L->top()) w = {K->top()};
  if (w.empty() && e[K->bot()] != L->bot()) w = {K->bot()};
  r.add("H3", w.empty(), w);
  w.clear();
  for (int x = 0; x < n && w.empty(); ++x)
    for (int y = 0; y < n && w.empty(); ++y)
      if (h[L->meet(x, y)] != K->meet(h[x], h[y]) ||
          h[L->join(x, y)] != K->join(h[x], h[y]))
        w = {x, y};
  if (w.empty() && h[L->top()] != K->top()) w = {L->top()};
  if (w.empty() && h[L->bot()] != K->bot()) w = {L->bot()};
  std::vector<bool> hit(m, false);
  for (int x = 0; x < n; ++x) hit[h[x]] = true;
  for (int g = 0; g < m && w.empty(); ++g)
    if (!hit[g]) w = {g};
  r.add("H4", w.empty(), w);
  w.clear();
  for (int g = 0; g < m && w.empty(); ++g)
    if (h[e[g]] != g) w = {g};
  r.add("H5", w.empty(), w);
  if (!r.ok()) return out;

  unsigned flags = 0;
  bool h6a = true, h6b = true, h7 = true, h8 = true;
  for (int x = 0; x < n; ++x) {
    h6a = h6a && L->leq(x, e[h[x]]);
    h6b = h6b && L->leq(e[h[x]], x);
    h7 = h7 && L->meet(e[t.star[h[x]]], x) == L->bot();
  }
  for (int g = 0; g < m; ++g)
    h8 = h8 && L->join(e[t.star[g]], e[g]) == L->top();
  r.add("H6a", h6a);
  r.add("H6b", h6b);
  r.add("H2b", boolean);
  r.add("H7", h7);
  r.add("H8", h8);
  if (h6a) flags |= kH6a;
  if (h6b) flags |= kH6b;
  if (boolean) {
    flags |= kBoolD;
    if (h7) flags |= kH7;
    if (h8) flags |= kH8;
  }
  out.flags = flags;
  HeteroAlgebra hh;
  hh.L = *L;
  hh.D = FiniteDMA{*K, t.star, boolean};
  hh.e = e;
  hh.h = h;
  hh.flags = flags;
  hh.ops = derived_ops(hh.L, hh.D, e, h);
  out.hh = std::move(hh);
  return out;
}

HeteroTables tables_of(const HeteroAlgebra& hh) {
  return {hh.L.leq_table(), hh.D.lat.leq_table(), hh.D.star, hh.e, hh.h};
}

HeteroAlgebra heterogenize(const FiniteSMA& a) {
  Kernel k = kernel(a);
  HeteroCheck c =
      check_hetero({a.lat.leq_table(), k.k.lat.leq_table(), k.k.star, k.e, k.h});
  require(c.hh.has_value(), "heterogenize: not an HSMA: " + c.report.summary());
  unsigned v = classify(a);
  unsigned f = c.flags;
  require(((v & kLQMA) != 0) == ((f & kH6a) != 0), "flag transfer H6a");
  require(((v & kUQMA) != 0) == ((f & kH6b) != 0), "flag transfer H6b");
  require(((v & kDPL) != 0) == ((f & kBoolD) != 0), "flag transfer H2b");
  require(((v & kAPL) != 0) == ((f & kH7) != 0), "flag transfer H7");
  require(((v & kWSA) != 0) == ((f & kH8) != 0), "flag transfer H8");
  return std::move(*c.hh);
}

FiniteSMA dehetero(const HeteroAlgebra& hh) {
  int n = hh.L.size();
  std::vector<int> neg(n);
  for (int x = 0; x < n; ++x) neg[x] = hh.e[hh.D.star[hh.h[x]]];
  SmaCheck c = check_sma({hh.L.leq_table(), neg});
  require(c.sma.has_value(), "dehetero: not an SMA: " + c.report.summary());
  unsigned v = classify(*c.sma);
  unsigned f = hh.flags;
  if (f & kH6a) require(v & kLQMA, "flag transfer LQMA");
  if (f & kH6b) require(v & kUQMA, "flag transfer UQMA");
  if (f & kBoolD) require(v & kDPL, "flag transfer DPL");
  if (f & kH7) require(v & kAPL, "flag transfer APL");
  if (f & kH8) require(v & kWSA, "flag transfer WSA");
  return std::move(*c.sma);
}

std::optional<std::vector<int>> find_iso(const FiniteSMA& a,
                                         const FiniteSMA& b) {
  return iso_search(a.lat, a.neg, b.lat, b.neg);
}

std::optional<std::vector<int>> find_iso(const FiniteDMA& a,
                                         const FiniteDMA& b) {
  return iso_search(a.lat, a.star, b.lat, b.star);
}

std::optional<std::vector<int>> find_lattice_iso(const FiniteLattice& a,
                                                 const FiniteLattice& b) {
  return iso_search(a, {}, b, {});
}

}  // namespace sdm
