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

#include "piexp/algebra.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace piexp {

namespace {

std::vector<Index> support(const Vector& v) {
  std::vector<Index> s;
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) s.push_back(i);
  return s;
}

void accumulate(Vector& out, std::span<const Term> terms, const Rational& scale) {
  for (const auto& t : terms) out(t.index) += scale * t.coeff;
}

void require_dim(const Vector& v, Index dim, const char* what) {
  if (v.size() != dim)
    throw DimensionMismatch(std::string(what) + ": expected length " + std::to_string(dim) + ", got " +
                            std::to_string(v.size()));
}

}  // namespace

Algebra::Algebra(Index dim, std::vector<std::string> labels, const std::vector<StructureConstant>& entries,
                 std::optional<Vector> unit)
    : dim_(dim), labels_(std::move(labels)), unit_(std::move(unit)) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
  if (labels_.empty())
    for (Index i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i + 1));
  if (static_cast<Index>(labels_.size()) != dim) throw DimensionMismatch("label count differs from dimension");
  if (unit_) require_dim(*unit_, dim, "unit");

  std::map<std::tuple<Index, Index, Index>, Rational> acc;
  for (const auto& e : entries) {
    if (e.left < 0 || e.left >= dim || e.right < 0 || e.right >= dim || e.result < 0 || e.result >= dim)
      throw std::out_of_range("structure constant index out of range (" + std::to_string(e.left) + "," +
                              std::to_string(e.right) + "," + std::to_string(e.result) + ")");
    acc[{e.left, e.right, e.result}] += e.value;
  }
  products_.assign(static_cast<std::size_t>(dim * dim), {});
  for (auto& [key, value] : acc) {
    if (is_zero(value)) continue;
    auto [i, j, k] = key;
    products_[static_cast<std::size_t>(i * dim + j)].push_back(Term{k, value});
  }
}

std::vector<StructureConstant> Algebra::entries() const {
  std::vector<StructureConstant> out;
  for (Index i = 0; i < dim_; ++i)
    for (Index j = 0; j < dim_; ++j)
      for (const auto& t : product(i, j)) out.push_back({i, j, t.index, t.coeff});
  return out;
}

bool Algebra::same_table(const Algebra& other) const {
  return dim_ == other.dim_ && entries() == other.entries();
}

Vector Algebra::basis_vector(Index i) const {
  Vector v = Vector::Zero(dim_);
  v(i) = 1;
  return v;
}

Vector multiply(const Vector& a, const Vector& b, const Algebra& algebra) {
  require_dim(a, algebra.dim(), "left factor");
  require_dim(b, algebra.dim(), "right factor");
  Vector out = Vector::Zero(algebra.dim());
  const auto sb = support(b);
  for (Index i : support(a))
    for (Index j : sb) accumulate(out, algebra.product(i, j), a(i) * b(j));
  return out;
}

Vector multiply_basis_left(Index i, const Vector& b, const Algebra& algebra) {
  Vector out = Vector::Zero(algebra.dim());
  for (Index j = 0; j < b.size(); ++j)
    if (!is_zero(b(j))) accumulate(out, algebra.product(i, j), b(j));
  return out;
}

Vector multiply_basis_right(const Vector& a, Index j, const Algebra& algebra) {
  Vector out = Vector::Zero(algebra.dim());
  for (Index i = 0; i < a.size(); ++i)
    if (!is_zero(a(i))) accumulate(out, algebra.product(i, j), a(i));
  return out;
}

std::optional<Violation> validate(const Algebra& algebra) {
  const Index d = algebra.dim();
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const auto ij = algebra.product(i, j);
      for (Index k = 0; k < d; ++k) {
        Vector lhs = Vector::Zero(d);
        for (const auto& t : ij) accumulate(lhs, algebra.product(t.index, k), t.coeff);
        Vector rhs = Vector::Zero(d);
        for (const auto& t : algebra.product(j, k)) accumulate(rhs, algebra.product(i, t.index), t.coeff);
        if (lhs != rhs) return Violation{Violation::Kind::associativity, i, j, k, lhs, rhs};
      }
    }
  if (const auto& u = algebra.unit()) {
    for (Index i = 0; i < d; ++i) {
      Vector e = algebra.basis_vector(i);
      Vector left = multiply(*u, e, algebra);
      if (left != e) return Violation{Violation::Kind::unit, i, 0, 0, left, e};
      Vector right = multiply(e, *u, algebra);
      if (right != e) return Violation{Violation::Kind::unit, i, 1, 0, right, e};
    }
  }
  return std::nullopt;
}

Subspace Subspace::span(Index ambient, const std::vector<Vector>& vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) {
    require_dim(v, ambient, "subspace vector");
    s.insert(v);
  }
  return s;
}

Subspace Subspace::whole(Index ambient) {
  Subspace s(ambient);
  for (Index i = 0; i < ambient; ++i) {
    Vector v = Vector::Zero(ambient);
    v(i) = 1;
    s.insert(v);
  }
  return s;
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis().begin(), other.basis().end(), [&](const Vector& v) { return contains(v); });
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_dim() == b.ambient_dim() && a.pivots() == b.pivots() && a.basis() == b.basis();
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace sum");
  Subspace s = a;
  for (const auto& v : b.basis()) s.insert(v);
  return s;
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace intersection");
  const Index n = a.ambient_dim();
  const Index p = a.dim(), q = b.dim();
  Matrix m(n, p + q);
  for (Index i = 0; i < p; ++i) m.col(i) = a.basis()[static_cast<std::size_t>(i)];
  for (Index j = 0; j < q; ++j) m.col(p + j) = -b.basis()[static_cast<std::size_t>(j)];
  const Matrix ker = null_space(m);
  Subspace out(n);
  for (Index r = 0; r < ker.rows(); ++r) {
    Vector v = Vector::Zero(n);
    for (Index i = 0; i < p; ++i)
      if (!is_zero(ker(r, i))) v += ker(r, i) * a.basis()[static_cast<std::size_t>(i)];
    out.insert(v);
  }
  return out;
}

Subspace subspace_product(const Subspace& u, const Subspace& v, const Algebra& algebra) {
  if (u.ambient_dim() != algebra.dim() || v.ambient_dim() != algebra.dim())
    throw DimensionMismatch("subspace_product: ambient dimension differs from algebra");
  Subspace out(algebra.dim());
  for (const auto& a : u.basis())
    for (const auto& b : v.basis()) {
      out.insert(multiply(a, b, algebra));
      if (out.dim() == algebra.dim()) return out;
    }
  return out;
}

std::vector<Subspace> power_chain(const Subspace& u, const Algebra& algebra) {
  std::vector<Subspace> chain{u};
  while (!chain.back().is_zero()) {
    Subspace next = subspace_product(chain.back(), u, algebra);
    if (next == chain.back()) break;
    chain.push_back(std::move(next));
  }
  return chain;
}

Subspace center(const Algebra& algebra) {
  const Index d = algebra.dim();
  // x e_i - e_i x = 0 for every i; unknowns are the coordinates of x.
  SparseSystem<Rational> sys(d);
  for (Index i = 0; i < d; ++i) {
    std::map<Index, SparseSystem<Rational>::Row> rows;  // output coordinate -> row
    for (Index j = 0; j < d; ++j) {
      for (const auto& t : algebra.product(j, i)) rows[t.index].emplace_back(j, t.coeff);
      for (const auto& t : algebra.product(i, j)) rows[t.index].emplace_back(j, -t.coeff);
    }
    for (auto& [k, row] : rows) sys.add(std::move(row), Rational(0));
  }
  return Subspace::span(d, sys.kernel());
}

std::optional<Vector> find_unit(const Algebra& algebra) {
  const Index d = algebra.dim();
  if (algebra.unit()) return algebra.unit();
  if (d == 0) return Vector::Zero(0);
  // u e_j = e_j and e_j u = e_j.
  SparseSystem<Rational> sys(d);
  for (Index j = 0; j < d; ++j) {
    std::map<Index, SparseSystem<Rational>::Row> left, right;
    for (Index i = 0; i < d; ++i) {
      for (const auto& t : algebra.product(i, j)) left[t.index].emplace_back(i, t.coeff);
      for (const auto& t : algebra.product(j, i)) right[t.index].emplace_back(i, t.coeff);
    }
    for (Index k = 0; k < d; ++k) {
      const Rational rhs = (k == j) ? Rational(1) : Rational(0);
      sys.add(left.count(k) ? left[k] : SparseSystem<Rational>::Row{}, rhs);
      sys.add(right.count(k) ? right[k] : SparseSystem<Rational>::Row{}, rhs);
    }
  }
  return sys.solve();
}

Algebra unitization(const Algebra& algebra) {
  if (find_unit(algebra)) return algebra;
  const Index d = algebra.dim();
  auto entries = algebra.entries();
  for (Index i = 0; i < d; ++i) {
    entries.push_back({d, i, i, Rational(1)});
    entries.push_back({i, d, i, Rational(1)});
  }
  entries.push_back({d, d, d, Rational(1)});
  auto labels = algebra.labels();
  labels.push_back("1");
  Vector unit = Vector::Zero(d + 1);
  unit(d) = 1;
  return Algebra(d + 1, std::move(labels), entries, unit);
}

Matrix left_multiplication(const Algebra& algebra, const Vector& a) {
  const Index d = algebra.dim();
  Matrix m = Matrix::Zero(d, d);
  for (Index j = 0; j < d; ++j) m.col(j) = multiply_basis_right(a, j, algebra);
  return m;
}

Matrix right_multiplication(const Algebra& algebra, const Vector& a) {
  const Index d = algebra.dim();
  Matrix m = Matrix::Zero(d, d);
  for (Index j = 0; j < d; ++j) m.col(j) = multiply_basis_left(j, a, algebra);
  return m;
}

bool is_left_ideal(const Algebra& algebra, const Subspace& s) {
  for (const auto& v : s.basis())
    for (Index i = 0; i < algebra.dim(); ++i)
      if (!s.contains(multiply_basis_left(i, v, algebra))) return false;
  return true;
}

bool is_two_sided_ideal(const Algebra& algebra, const Subspace& s) {
  for (const auto& v : s.basis())
    for (Index i = 0; i < algebra.dim(); ++i) {
      if (!s.contains(multiply_basis_left(i, v, algebra))) return false;
      if (!s.contains(multiply_basis_right(v, i, algebra))) return false;
    }
  return true;
}

bool is_subalgebra(const Algebra& algebra, const Subspace& s) {
  for (const auto& a : s.basis())
    for (const auto& b : s.basis())
      if (!s.contains(multiply(a, b, algebra))) return false;
  return true;
}

namespace {

std::optional<Index> standard_index(const Vector& v) {
  std::optional<Index> idx;
  for (Index i = 0; i < v.size(); ++i) {
    if (is_zero(v(i))) continue;
    if (idx || v(i) != 1) return std::nullopt;
    idx = i;
  }
  return idx;
}

}  // namespace

Algebra restrict_to(const Algebra& algebra, const Subspace& s) {
  const Index r = s.dim();
  std::vector<StructureConstant> entries;
  for (Index a = 0; a < r; ++a)
    for (Index b = 0; b < r; ++b) {
      Vector p = multiply(s.basis()[static_cast<std::size_t>(a)], s.basis()[static_cast<std::size_t>(b)], algebra);
      if (!s.contains(p)) throw std::invalid_argument("restrict_to: subspace is not closed under multiplication");
      Vector c = s.coordinates(p);
      for (Index k = 0; k < r; ++k)
        if (!is_zero(c(k))) entries.push_back({a, b, k, c(k)});
    }
  std::vector<std::string> labels;
  for (Index a = 0; a < r; ++a) {
    auto idx = standard_index(s.basis()[static_cast<std::size_t>(a)]);
    labels.push_back(idx ? algebra.labels()[static_cast<std::size_t>(*idx)] : "s" + std::to_string(a + 1));
  }
  std::optional<Vector> unit;
  if (algebra.unit() && s.contains(*algebra.unit())) unit = s.coordinates(*algebra.unit());
  return Algebra(r, std::move(labels), entries, unit);
}

Matrix restrict_operator(const Matrix& op, const Subspace& s) {
  const Index r = s.dim();
  Matrix m(r, r);
  for (Index a = 0; a < r; ++a) {
    Vector image = op * s.basis()[static_cast<std::size_t>(a)];
    if (!s.contains(image)) throw std::invalid_argument("restrict_operator: subspace is not invariant");
    m.col(a) = s.coordinates(image);
  }
  return m;
}

Algebra opposite(const Algebra& algebra) {
  auto entries = algebra.entries();
  for (auto& e : entries) std::swap(e.left, e.right);
  auto labels = algebra.labels();
  for (auto& l : labels) l += "'";
  return Algebra(algebra.dim(), std::move(labels), entries, algebra.unit());
}

Algebra change_basis(const Algebra& algebra, const Matrix& basis) {
  const Index d = algebra.dim();
  if (basis.rows() != d || basis.cols() != d) throw DimensionMismatch("change_basis");
  const auto inv = inverse<Rational>(basis);
  if (!inv) throw std::invalid_argument("change_basis: basis matrix is singular");
  const Matrix to_new = inv->transpose();  // new coords = to_new * old coords
  std::vector<StructureConstant> entries;
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b) {
      Vector c = to_new * multiply(basis.row(a).transpose(), basis.row(b).transpose(), algebra);
      for (Index k = 0; k < d; ++k)
        if (!is_zero(c(k))) entries.push_back({a, b, k, c(k)});
    }
  std::optional<Vector> unit;
  if (algebra.unit()) unit = Vector(to_new * *algebra.unit());
  std::vector<std::string> labels;
  for (Index a = 0; a < d; ++a) labels.push_back("f" + std::to_string(a + 1));
  return Algebra(d, std::move(labels), entries, unit);
}

Algebra permute_basis(const Algebra& algebra, const std::vector<Index>& perm) {
  const Index d = algebra.dim();
  if (static_cast<Index>(perm.size()) != d) throw DimensionMismatch("permute_basis");
  std::vector<Index> to_new(static_cast<std::size_t>(d), -1);
  for (Index i = 0; i < d; ++i) {
    const Index old = perm[static_cast<std::size_t>(i)];
    if (old < 0 || old >= d || to_new[static_cast<std::size_t>(old)] >= 0)
      throw std::invalid_argument("permute_basis: not a permutation");
    to_new[static_cast<std::size_t>(old)] = i;
  }
  auto entries = algebra.entries();
  for (auto& e : entries) {
    e.left = to_new[static_cast<std::size_t>(e.left)];
    e.right = to_new[static_cast<std::size_t>(e.right)];
    e.result = to_new[static_cast<std::size_t>(e.result)];
  }
  std::vector<std::string> labels;
  for (Index i = 0; i < d; ++i) labels.push_back(algebra.labels()[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
  std::optional<Vector> unit;
  if (algebra.unit()) {
    unit = Vector::Zero(d);
    for (Index i = 0; i < d; ++i) (*unit)(i) = (*algebra.unit())(perm[static_cast<std::size_t>(i)]);
  }
  return Algebra(d, std::move(labels), entries, unit);
}

}  // namespace piexp
