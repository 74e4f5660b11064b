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

#include "submax/instance.hpp"

#include <cmath>
#include <string>

namespace submax {
namespace {

std::string at(int i, int j) {
  return "row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1);
}

}  // namespace

PackingInstance::PackingInstance(int n, int m, std::vector<double> a_row_major,
                                 std::vector<double> b)
    : n_(n), m_(m), a_(std::move(a_row_major)), b_(std::move(b)) {
  if (n_ < 1 || m_ < 1) throw SubmaxError("instance dimensions must be positive");
  if (a_.size() != static_cast<std::size_t>(n_) * m_)
    throw SubmaxError("matrix size does not match n*m");
  if (b_.size() != static_cast<std::size_t>(m_))
    throw SubmaxError("capacity vector size does not match m");
  for (int i = 0; i < m_; ++i) {
    if (!(std::isfinite(b_[i]) && b_[i] >= 1.0))
      throw SubmaxError("capacity b[" + std::to_string(i + 1) + "] must be >= 1");
    for (int j = 0; j < n_; ++j) {
      double v = a(i, j);
      if (!(std::isfinite(v) && v >= 0.0 && v <= 1.0))
        throw SubmaxError("coefficient outside [0,1] at " + at(i, j));
    }
  }

  col_start_.assign(n_ + 1, 0);
  row_start_.assign(m_ + 1, 0);
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (a(i, j) > 0.0) {
        ++col_start_[j + 1];
        ++row_start_[i + 1];
      }
    }
  }
  for (int j = 0; j < n_; ++j) col_start_[j + 1] += col_start_[j];
  for (int i = 0; i < m_; ++i) row_start_[i + 1] += row_start_[i];
  col_adjacency_.resize(col_start_[n_]);
  row_adjacency_.resize(row_start_[m_]);
  std::vector<std::size_t> col_fill(col_start_.begin(), col_start_.end() - 1);
  std::vector<std::size_t> row_fill(row_start_.begin(), row_start_.end() - 1);
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (a(i, j) > 0.0) {
        col_adjacency_[col_fill[j]++] = i;
        row_adjacency_[row_fill[i]++] = j;
      }
    }
  }

  double w = 0.0;
  for (int j = 0; j < n_; ++j) {
    for (int i : rows_of(j)) {
      double ratio = b_[i] / a(i, j);
      if (w == 0.0 || ratio < w) w = ratio;
    }
  }
  width_ = w;
}

double PackingInstance::width() const {
  if (width_ == 0.0) throw AllZeroMatrix("width undefined: constraint matrix is all zeros");
  return width_;
}

bool PackingInstance::is_feasible(std::span<const int> s) const {
  for (int i = 0; i < m_; ++i) {
    double sum = 0.0;
    for (int j : s) sum += a(i, j);
    if (sum > b_[i] + kFeasibilityTol) return false;
  }
  return true;
}

namespace {

int compute_column_sparsity(const PackingInstance& inst) {
  int k = 0;
  for (int j = 0; j < inst.n(); ++j)
    k = std::max(k, static_cast<int>(inst.rows_of(j).size()));
  return k;
}

std::vector<double> floor_capacities(std::vector<double> b, bool* floored) {
  *floored = false;
  for (double& v : b) {
    double f = std::floor(v);
    if (f != v) *floored = true;
    v = f;
  }
  return b;
}

void check_binary_entries(const PackingInstance& inst) {
  for (int i = 0; i < inst.m(); ++i)
    for (int j = 0; j < inst.n(); ++j) {
      double v = inst.a(i, j);
      if (v != 0.0 && v != 1.0)
        throw NotBinary("entry not in {0,1} at " + at(i, j));
    }
}

}  // namespace

BinaryPackingInstance::BinaryPackingInstance(int n, int m, std::vector<double> a_row_major,
                                             std::vector<double> b)
    : packing_(n, m, std::move(a_row_major),
               floor_capacities(std::move(b), &b_floored_)),
      k_(0) {
  check_binary_entries(packing_);
  k_ = compute_column_sparsity(packing_);
}

BinaryPackingInstance BinaryPackingInstance::from_packing(const PackingInstance& inst) {
  std::vector<double> a(inst.m() * static_cast<std::size_t>(inst.n()));
  for (int i = 0; i < inst.m(); ++i)
    for (int j = 0; j < inst.n(); ++j)
      a[static_cast<std::size_t>(i) * inst.n() + j] = inst.a(i, j);
  std::vector<double> b(inst.b_vector().begin(), inst.b_vector().end());
  return BinaryPackingInstance(inst.n(), inst.m(), std::move(a), std::move(b));
}

CanonicalizeResult canonicalize(const RawInstance& raw) {
  if (raw.n < 1 || raw.m < 1) throw SubmaxError("raw instance dimensions must be positive");
  if (raw.a.size() != static_cast<std::size_t>(raw.n) * raw.m ||
      raw.b.size() != static_cast<std::size_t>(raw.m))
    throw SubmaxError("raw instance shape mismatch");
  for (double v : raw.a)
    if (!(std::isfinite(v) && v >= 0.0)) throw SubmaxError("raw coefficients must be finite and >= 0");
  for (double v : raw.b)
    if (!(std::isfinite(v) && v > 0.0)) throw SubmaxError("raw capacities must be finite and > 0");

  auto raw_a = [&](int i, int j) { return raw.a[static_cast<std::size_t>(i) * raw.n + j]; };

  // Pass 1: an element is kept iff no constraint rejects it outright.
  std::vector<int> kept;
  for (int j = 0; j < raw.n; ++j) {
    bool ok = true;
    for (int i = 0; i < raw.m && ok; ++i)
      if (raw_a(i, j) > raw.b[i]) ok = false;
    if (ok) kept.push_back(j);
  }
  if (kept.empty()) throw EmptyGroundSet("every element violates some constraint on its own");

  // Pass 2: rescale each row by its maximum over kept columns. Zero rows are
  // kept verbatim so that m (and hence the update-factor presets) is stable.
  int n = static_cast<int>(kept.size());
  std::vector<double> a(static_cast<std::size_t>(raw.m) * n, 0.0);
  std::vector<double> b(raw.m);
  for (int i = 0; i < raw.m; ++i) {
    double row_max = 0.0;
    for (int jj = 0; jj < n; ++jj) row_max = std::max(row_max, raw_a(i, kept[jj]));
    double scale = row_max > 0.0 ? row_max : 1.0;
    for (int jj = 0; jj < n; ++jj)
      a[static_cast<std::size_t>(i) * n + jj] = raw_a(i, kept[jj]) / scale;
    b[i] = row_max > 0.0 ? raw.b[i] / scale : raw.b[i];
  }
  return CanonicalizeResult{PackingInstance(n, raw.m, std::move(a), std::move(b)),
                            std::move(kept)};
}

double width(const PackingInstance& inst) { return inst.width(); }

bool is_feasible(const PackingInstance& inst, std::span<const int> s) {
  return inst.is_feasible(s);
}

int column_sparsity(const BinaryPackingInstance& inst) {
  return compute_column_sparsity(inst.packing());
}

}  // namespace submax
