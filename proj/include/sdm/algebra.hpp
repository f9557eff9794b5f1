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

// Finite semi De Morgan algebras, their kernels and the equivalent
// two-sorted (heterogeneous) presentation.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdm {

// Malformed input tables (wrong shape, indices out of range).
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction produced something the theory says cannot happen.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Check {
  std::string name;
  bool ok = true;
  std::vector<int> witness;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  bool ok() const;
  const Check* first_failure() const;
  const Check* find(const std::string& name) const;
  void add(std::string name, bool ok, std::vector<int> witness = {},
           std::string detail = {});
  std::string summary() const;
};

using LeqTable = std::vector<std::vector<bool>>;

class FiniteLattice {
 public:
  FiniteLattice() = default;

  // Validates `leq` as a bounded distributive lattice with at least two
  // elements. Failures are appended to `report` under `label`.
  static std::optional<FiniteLattice> from_leq(const LeqTable& leq,
                                               Report* report,
                                               const std::string& label);
  static FiniteLattice chain(int n);

  int size() const { return n_; }
  bool leq(int a, int b) const { return leq_[a * n_ + b] != 0; }
  int meet(int a, int b) const { return meet_[a * n_ + b]; }
  int join(int a, int b) const { return join_[a * n_ + b]; }
  int bot() const { return bot_; }
  int top() const { return top_; }
  LeqTable leq_table() const;
  // Elements with exactly one lower cover.
  std::vector<int> join_irreducibles() const;
  bool operator==(const FiniteLattice& o) const {
    return n_ == o.n_ && leq_ == o.leq_;
  }

 private:
  int n_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<int> meet_, join_;
  int bot_ = 0, top_ = 0;
};

// Variety flags of a semi De Morgan algebra.
enum Variety : unsigned {
  kLQMA = 1u << 0,
  kUQMA = 1u << 1,
  kDPL = 1u << 2,
  kAPL = 1u << 3,
  kWSA = 1u << 4,
  kDMA = 1u << 5,
  kBA = 1u << 6,
};
std::string variety_names(unsigned flags);
// Parses a space or comma separated list such as "LQMA DPL"; throws
// AlgebraError on unknown names.
unsigned parse_variety(const std::string& text);

struct FiniteSMA {
  FiniteLattice lat;
  std::vector<int> neg;

  int size() const { return lat.size(); }
  int nn(int a) const { return neg[neg[a]]; }
};

struct SmaTables {
  LeqTable leq;
  std::vector<int> neg;
};

struct SmaCheck {
  Report report;
  std::optional<FiniteSMA> sma;
};

SmaCheck check_sma(const SmaTables& t);
unsigned classify(const FiniteSMA& a);

struct FiniteDMA {
  FiniteLattice lat;
  std::vector<int> star;
  bool boolean = false;

  int size() const { return lat.size(); }
};

// D2-D5 on an already validated lattice, plus B1 as an informational check.
Report check_dma(const FiniteLattice& lat, const std::vector<int>& star);

struct Kernel {
  FiniteDMA k;
  std::vector<int> e;  // K -> L
  std::vector<int> h;  // L -> K
};

Kernel kernel(const FiniteSMA& a);

enum HFlag : unsigned {
  kH6a = 1u << 0,
  kH6b = 1u << 1,
  kBoolD = 1u << 2,
  kH7 = 1u << 3,
  kH8 = 1u << 4,
};
std::string hflag_names(unsigned flags);

struct DerivedOps {
  // Row-major binary tables: imp[a * n + b] = a -> b.
  std::vector<int> imp, coimp;    // on L
  std::vector<int> kimp, kcoimp;  // on D
  std::vector<int> hleft, hright; // D -> L
  std::vector<int> eleft;         // L -> D
};

struct HeteroAlgebra {
  FiniteLattice L;
  FiniteDMA D;
  std::vector<int> e;
  std::vector<int> h;
  unsigned flags = 0;
  DerivedOps ops;
};

struct HeteroTables {
  LeqTable L;
  LeqTable D;
  std::vector<int> star;
  std::vector<int> e;
  std::vector<int> h;
};

struct HeteroCheck {
  Report report;
  unsigned flags = 0;
  std::optional<HeteroAlgebra> hh;
};

HeteroCheck check_hetero(const HeteroTables& t);
HeteroTables tables_of(const HeteroAlgebra& hh);
HeteroAlgebra heterogenize(const FiniteSMA& a);
FiniteSMA dehetero(const HeteroAlgebra& hh);

// Throws InternalError if some residual or adjoint does not exist.
DerivedOps derived_ops(const FiniteLattice& L, const FiniteDMA& D,
                       const std::vector<int>& e, const std::vector<int>& h);

std::optional<std::vector<int>> find_iso(const FiniteSMA& a,
                                         const FiniteSMA& b);
std::optional<std::vector<int>> find_iso(const FiniteDMA& a,
                                         const FiniteDMA& b);
std::optional<std::vector<int>> find_lattice_iso(const FiniteLattice& a,
                                                 const FiniteLattice& b);

}  // namespace sdm
