// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Packing-constraint systems: a dense [0,1] coefficient matrix, capacities
// >= 1, the width parameter, and the reduction of arbitrary nonnegative
// constraints to that canonical domain. Instances are immutable after
// construction and safe to share across threads.

#ifndef SUBMAX_INSTANCE_HPP_
#define SUBMAX_INSTANCE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "submax/errors.hpp"

namespace submax {

// Row sums up to b[i] + kFeasibilityTol count as feasible. The guarantees are
// combinatorial; the slack only absorbs rounding in sums of ~n terms.
inline constexpr double kFeasibilityTol = 1e-9;

// Constraint system A x <= b with A in [0,1]^{m x n} and b in [1,inf)^m.
// Storage is dense row-major; per-element and per-row adjacency lists of the
// nonzero pattern are precomputed for the solvers' selection-score loops.
class PackingInstance {
 public:
  PackingInstance(int n, int m, std::vector<double> a_row_major, std::vector<double> b);

  int n() const { return n_; }
  int m() const { return m_; }
  double a(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double b(int i) const { return b_[static_cast<std::size_t>(i)]; }
  std::span<const double> row(int i) const {
    return {a_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)};
  }
  std::span<const double> b_vector() const { return b_; }

  // Rows i with a(i, j) > 0, ascending.
  std::span<const int> rows_of(int j) const {
    return {col_adjacency_.data() + col_start_[j],
            col_adjacency_.data() + col_start_[j + 1]};
  }
  // Elements j with a(i, j) > 0, ascending.
  std::span<const int> cols_of(int i) const {
    return {row_adjacency_.data() + row_start_[i],
            row_adjacency_.data() + row_start_[i + 1]};
  }

  bool all_zero() const { return col_adjacency_.empty(); }

  // W = min{b_i / a_ij : a_ij > 0}; always >= 1 on this domain.
  // Throws AllZeroMatrix when no entry is positive (callers treat every set
  // as feasible in that case).
  double width() const;

  // True iff sum_{j in s} a(i, j) <= b(i) + kFeasibilityTol for every row.
  bool is_feasible(std::span<const int> s) const;

 private:
  int n_;
  int m_;
  std::vector<double> a_;
  std::vector<double> b_;
  std::vector<int> col_adjacency_;
  std::vector<std::size_t> col_start_;
  std::vector<int> row_adjacency_;
  std::vector<std::size_t> row_start_;
  double width_ = 0.0;  // 0 encodes "undefined" (all-zero matrix)
};

// Binary specialization: entries in {0,1}, integral capacities, and the
// column-sparsity parameter k. Real-valued capacities are floored at
// construction (the solvers' guarantees are unaffected); `b_floored`
// records whether that happened.
class BinaryPackingInstance {
 public:
  BinaryPackingInstance(int n, int m, std::vector<double> a_row_major, std::vector<double> b);

  // Validates entries; throws NotBinary on anything outside {0,1}.
  static BinaryPackingInstance from_packing(const PackingInstance& inst);

  const PackingInstance& packing() const { return packing_; }
  int n() const { return packing_.n(); }
  int m() const { return packing_.m(); }
  int k() const { return k_; }
  bool b_floored() const { return b_floored_; }

 private:
  PackingInstance packing_;
  int k_;
  bool b_floored_;
};

// Arbitrary nonnegative constraints, before reduction to the canonical
// domain. Entries must be finite and >= 0; capacities > 0.
struct RawInstance {
  int n = 0;
  int m = 0;
  std::vector<double> a;  // row-major, m x n
  std::vector<double> b;
};

struct CanonicalizeResult {
  PackingInstance instance;
  std::vector<int> kept_elements;  // original indices, ascending
};

// Reduction to the canonical domain: drop every element j with
// a[i][j] > b[i] for some i, then rescale each surviving row with positive
// maximum M_i as a/M_i, b/M_i (zero rows are kept verbatim). Feasibility of
// kept-element sets is preserved. Throws EmptyGroundSet when nothing
// survives.
CanonicalizeResult canonicalize(const RawInstance& raw);

double width(const PackingInstance& inst);
bool is_feasible(const PackingInstance& inst, std::span<const int> s);

// Maximum number of ones in any column.
int column_sparsity(const BinaryPackingInstance& inst);

}  // namespace submax

#endif  // SUBMAX_INSTANCE_HPP_
