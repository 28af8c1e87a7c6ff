/*
 * Copyright 2026 The piexp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Exact linear algebra over a field Scalar (Rational, ModP). All routines
// use the same pivot rule: leftmost nonzero column, scaled to a monic
// leading entry, fully reduced. Results are therefore canonical.

#pragma once

#include "piexp/rational.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace piexp {

using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = MatrixX<Rational>;
using Vector = VectorX<Rational>;

template <typename Derived>
bool is_zero_vector(const Eigen::MatrixBase<Derived>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) return false;
  return true;
}

template <typename Derived>
Index leading_index(const Eigen::MatrixBase<Derived>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) return i;
  return -1;
}

/// v -= c * row, touching only the nonzero entries of row from `from` on.
template <typename Scalar>
void subtract_multiple(VectorX<Scalar>& v, const Scalar& c, const VectorX<Scalar>& row, Index from = 0) {
  for (Index k = from; k < row.size(); ++k)
    if (!is_zero(row(k))) v(k) -= c * row(k);
}

/// Incrementally maintained reduced row echelon basis of a row space.
template <typename Scalar>
class Echelon {
 public:
  explicit Echelon(Index ambient = 0) : ambient_(ambient) {}

  Index ambient() const noexcept { return ambient_; }
  Index rank() const noexcept { return static_cast<Index>(rows_.size()); }
  const std::vector<VectorX<Scalar>>& rows() const noexcept { return rows_; }
  const std::vector<Index>& pivots() const noexcept { return pivots_; }

  /// Remainder of v modulo the row space (zero iff v is in the span).
  VectorX<Scalar> reduce(VectorX<Scalar> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Index p = pivots_[r];
      if (!is_zero(v(p))) {
        Scalar c = v(p);
        subtract_multiple(v, c, rows_[r], p);
      }
    }
    return v;
  }

  bool contains(const VectorX<Scalar>& v) const { return is_zero_vector(reduce(v)); }

  /// Adds v to the spanning set. Returns true iff the rank grew.
  bool insert(VectorX<Scalar> v) {
    v = reduce(std::move(v));
    const Index p = leading_index(v);
    if (p < 0) return false;
    const Scalar lead = v(p);
    for (Index k = p; k < v.size(); ++k)
      if (!is_zero(v(k))) v(k) /= lead;
    for (auto& row : rows_) {
      if (!is_zero(row(p))) {
        Scalar c = row(p);
        subtract_multiple(row, c, v, p);
      }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    const auto offset = pos - pivots_.begin();
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + offset, std::move(v));
    return true;
  }

  /// Coordinates of v (assumed in the span) with respect to rows().
  VectorX<Scalar> coordinates(const VectorX<Scalar>& v) const {
    VectorX<Scalar> c(rank());
    for (Index r = 0; r < rank(); ++r) c(r) = v(pivots_[static_cast<std::size_t>(r)]);
    return c;
  }

  MatrixX<Scalar> matrix() const {
    MatrixX<Scalar> m(rank(), ambient_);
    for (Index r = 0; r < rank(); ++r) m.row(r) = rows_[static_cast<std::size_t>(r)].transpose();
    return m;
  }

 private:
  Index ambient_;
  std::vector<VectorX<Scalar>> rows_;
  std::vector<Index> pivots_;
};

template <typename Derived>
auto row_echelon(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> e(m.cols());
  for (Index r = 0; r < m.rows(); ++r) e.insert(m.row(r).transpose());
  return e;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return row_echelon(m).rank();
}

/// Canonical basis (as rows) of {x : m x = 0}, one vector per free column.
template <typename Derived>
auto null_space(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto e = row_echelon(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : e.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<VectorX<Scalar>> basis;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    VectorX<Scalar> x = VectorX<Scalar>::Zero(n);
    x(f) = Scalar(1);
    for (Index r = 0; r < e.rank(); ++r) x(e.pivots()[static_cast<std::size_t>(r)]) = -e.rows()[static_cast<std::size_t>(r)](f);
    basis.push_back(std::move(x));
  }
  MatrixX<Scalar> out(static_cast<Index>(basis.size()), n);
  for (Index r = 0; r < out.rows(); ++r) out.row(r) = basis[static_cast<std::size_t>(r)].transpose();
  return out;
}

/// Exact Gauss-Jordan inverse; nullopt when singular.
template <typename Scalar>
std::optional<MatrixX<Scalar>> inverse(const MatrixX<Scalar>& m) {
  const Index n = m.rows();
  if (m.cols() != n) return std::nullopt;
  MatrixX<Scalar> a(n, 2 * n);
  a.leftCols(n) = m;
  a.rightCols(n).setZero();
  for (Index i = 0; i < n; ++i) a(i, n + i) = Scalar(1);
  for (Index c = 0; c < n; ++c) {
    Index pr = -1;
    for (Index r = c; r < n; ++r)
      if (!is_zero(a(r, c))) {
        pr = r;
        break;
      }
    if (pr < 0) return std::nullopt;
    if (pr != c) a.row(pr).swap(a.row(c));
    const Scalar lead = a(c, c);
    for (Index k = c; k < 2 * n; ++k)
      if (!is_zero(a(c, k))) a(c, k) /= lead;
    for (Index r = 0; r < n; ++r) {
      if (r == c || is_zero(a(r, c))) continue;
      const Scalar f = a(r, c);
      for (Index k = c; k < 2 * n; ++k)
        if (!is_zero(a(c, k))) a(r, k) -= f * a(c, k);
    }
  }
  return MatrixX<Scalar>(a.rightCols(n));
}

/// Some solution of m x = b (free variables set to zero), or nullopt.
template <typename Scalar>
std::optional<VectorX<Scalar>> solve(const MatrixX<Scalar>& m, const VectorX<Scalar>& b) {
  MatrixX<Scalar> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  const auto e = row_echelon(aug);
  VectorX<Scalar> x = VectorX<Scalar>::Zero(m.cols());
  for (Index r = 0; r < e.rank(); ++r) {
    const Index p = e.pivots()[static_cast<std::size_t>(r)];
    if (p == m.cols()) return std::nullopt;
    x(p) = e.rows()[static_cast<std::size_t>(r)](m.cols());
  }
  return x;
}

/// Sparse linear system assembled one equation at a time. Rows are kept
/// triangular (keyed by leading column); solve() back-substitutes.
template <typename Scalar>
class SparseSystem {
 public:
  using Row = std::vector<std::pair<Index, Scalar>>;  // sorted by column

  explicit SparseSystem(Index unknowns) : unknowns_(unknowns) {}

  Index unknowns() const noexcept { return unknowns_; }
  bool consistent() const noexcept { return consistent_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Adds sum(row) == rhs. Entries may be unsorted and repeated.
  void add(Row row, Scalar rhs) {
    row = normalize(std::move(row));
    while (!row.empty()) {
      auto it = rows_.find(row.front().first);
      if (it == rows_.end()) break;
      const Scalar c = row.front().second;
      row = axpy(row, -c, it->second.first);
      rhs -= c * it->second.second;
    }
    if (row.empty()) {
      if (!is_zero(rhs)) consistent_ = false;
      return;
    }
    const Scalar lead = row.front().second;
    for (auto& [col, v] : row) v /= lead;
    rhs /= lead;
    const Index key = row.front().first;
    rows_.emplace(key, std::make_pair(std::move(row), std::move(rhs)));
  }

  std::optional<VectorX<Scalar>> solve() const {
    if (!consistent_) return std::nullopt;
    VectorX<Scalar> x = VectorX<Scalar>::Zero(unknowns_);
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      const auto& [row, rhs] = it->second;
      Scalar v = rhs;
      for (std::size_t k = 1; k < row.size(); ++k) v -= row[k].second * x(row[k].first);
      x(it->first) = v;
    }
    return x;
  }

  /// Basis of the homogeneous solution space, one vector per free column.
  std::vector<VectorX<Scalar>> kernel() const {
    std::vector<VectorX<Scalar>> out;
    for (Index f = 0; f < unknowns_; ++f) {
      if (rows_.count(f)) continue;
      VectorX<Scalar> x = VectorX<Scalar>::Zero(unknowns_);
      x(f) = Scalar(1);
      for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        if (it->first > f) continue;
        const auto& row = it->second.first;
        Scalar v(0);
        for (std::size_t k = 1; k < row.size(); ++k) v -= row[k].second * x(row[k].first);
        x(it->first) = v;
      }
      out.push_back(std::move(x));
    }
    return out;
  }

 private:
  static Row normalize(Row row) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Row out;
    for (auto& [col, v] : row) {
      if (!out.empty() && out.back().first == col)
        out.back().second += v;
      else
        out.emplace_back(col, std::move(v));
      if (is_zero(out.back().second)) out.pop_back();
    }
    return out;
  }

  static Row axpy(const Row& a, const Scalar& c, const Row& b) {
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, c * b[j].second);
        ++j;
      } else {
        Scalar v = a[i].second + c * b[j].second;
        if (!is_zero(v)) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  Index unknowns_;
  bool consistent_ = true;
  std::map<Index, std::pair<Row, Scalar>> rows_;
};

}  // namespace piexp
