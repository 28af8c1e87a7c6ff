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

#pragma once

#include "piexp/linalg.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace piexp {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// gamma_{left,right}^{result}: e_left * e_right has coefficient `value` on e_result.
struct StructureConstant {
  Index left = 0;
  Index right = 0;
  Index result = 0;
  Rational value;

  friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

struct Term {
  Index index = 0;
  Rational coeff;
};

/// Finite-dimensional algebra over Q given by sparse structure constants.
/// Immutable once built.
class Algebra {
 public:
  Algebra() = default;
  Algebra(Index dim, std::vector<std::string> labels, const std::vector<StructureConstant>& entries,
          std::optional<Vector> unit = std::nullopt);

  Index dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::optional<Vector>& unit() const noexcept { return unit_; }

  /// e_i * e_j as a sparse list of terms.
  std::span<const Term> product(Index i, Index j) const {
    return products_[static_cast<std::size_t>(i * dim_ + j)];
  }

  /// All nonzero structure constants, sorted by (left, right, result).
  std::vector<StructureConstant> entries() const;

  /// Same table (labels and unit ignored).
  bool same_table(const Algebra& other) const;

  Vector basis_vector(Index i) const;

 private:
  Index dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<Term>> products_;
  std::optional<Vector> unit_;
};

Vector multiply(const Vector& a, const Vector& b, const Algebra& algebra);

/// Product of a basis vector with a vector, cheaper than the dense route.
Vector multiply_basis_left(Index i, const Vector& b, const Algebra& algebra);
Vector multiply_basis_right(const Vector& a, Index j, const Algebra& algebra);

struct Violation {
  enum class Kind { associativity, unit };
  Kind kind = Kind::associativity;
  Index i = 0, j = 0, k = 0;  // k unused for unit violations
  Vector lhs;
  Vector rhs;
};

/// Empty when the table is associative and the unit (if any) is two-sided.
std::optional<Violation> validate(const Algebra& algebra);

/// Linear subspace of Q^n with a canonical reduced echelon basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Index ambient) : echelon_(ambient) {}

  static Subspace span(Index ambient, const std::vector<Vector>& vectors);
  static Subspace whole(Index ambient);

  Index ambient_dim() const noexcept { return echelon_.ambient(); }
  Index dim() const noexcept { return echelon_.rank(); }
  bool is_zero() const noexcept { return dim() == 0; }
  const std::vector<Vector>& basis() const noexcept { return echelon_.rows(); }
  const std::vector<Index>& pivots() const noexcept { return echelon_.pivots(); }

  bool contains(const Vector& v) const { return echelon_.contains(v); }
  bool contains(const Subspace& other) const;
  Vector reduce(const Vector& v) const { return echelon_.reduce(v); }
  /// Coordinates w.r.t. basis(); v must lie in the subspace.
  Vector coordinates(const Vector& v) const { return echelon_.coordinates(v); }
  bool insert(const Vector& v) { return echelon_.insert(v); }

  Matrix matrix() const { return echelon_.matrix(); }

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  Echelon<Rational> echelon_;
};

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

/// span{uv : u in basis(U), v in basis(V)}.
Subspace subspace_product(const Subspace& u, const Subspace& v, const Algebra& algebra);

/// U^1 = U, U^(k+1) = U^k * U until zero or stable. Element k holds U^(k+1).
std::vector<Subspace> power_chain(const Subspace& u, const Algebra& algebra);

Subspace center(const Algebra& algebra);

/// Adjoins a unit as the last basis vector; returns the algebra unchanged if unital.
Algebra unitization(const Algebra& algebra);

/// Matrix of x -> a x (column convention: (L a) * coords(x) = coords(a x)).
Matrix left_multiplication(const Algebra& algebra, const Vector& a);
Matrix right_multiplication(const Algebra& algebra, const Vector& a);

bool is_left_ideal(const Algebra& algebra, const Subspace& s);
bool is_two_sided_ideal(const Algebra& algebra, const Subspace& s);
bool is_subalgebra(const Algebra& algebra, const Subspace& s);

/// Structure constants of a subalgebra in the basis s.basis(). Labels are
/// "s1", "s2", ... unless the basis vectors are standard, in which case the
/// ambient labels are kept.
Algebra restrict_to(const Algebra& algebra, const Subspace& s);

/// Restriction of a linear operator to an invariant subspace, in the
/// coordinates of s.basis(). Throws if s is not invariant.
Matrix restrict_operator(const Matrix& op, const Subspace& s);

/// Finds a unit element, if one exists.
std::optional<Vector> find_unit(const Algebra& algebra);

Algebra opposite(const Algebra& algebra);

/// Rewrites the table in the basis given by the rows of `basis` (old
/// coordinates). The rows must be invertible.
Algebra change_basis(const Algebra& algebra, const Matrix& basis);

/// New basis vector i is old basis vector perm[i].
Algebra permute_basis(const Algebra& algebra, const std::vector<Index>& perm);

}  // namespace piexp
