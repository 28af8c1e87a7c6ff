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

#include "piexp/algebra.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace piexp {

/// Element of Z_{n_1} x ... x Z_{n_t}, one residue per factor.
using GroupElement = std::vector<int>;

/// Grading by a finite abelian group given by its cyclic factor orders.
/// Every basis vector is homogeneous.
struct Grading {
  std::vector<int> group;  // e.g. {2} for Z_2, {2, 2} for Z_2 x Z_2
  std::vector<GroupElement> degrees;

  std::size_t order() const;
  /// All group elements in lexicographic order.
  std::vector<GroupElement> elements() const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement identity() const { return GroupElement(group.size(), 0); }
  /// Position of g in elements().
  std::size_t element_index(const GroupElement& g) const;

  friend bool operator==(const Grading&, const Grading&) = default;
};

/// Linear anti-automorphism a -> a* of order two, acting on coordinate columns.
struct Involution {
  Matrix map;
};

using Structure = std::variant<std::monostate, Grading, Involution>;

struct StructuredAlgebra {
  std::string name;
  Algebra algebra;
  Structure structure;

  Index dim() const { return algebra.dim(); }
  const Grading* grading() const { return std::get_if<Grading>(&structure); }
  const Involution* involution() const { return std::get_if<Involution>(&structure); }
};

class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// nullopt when the grading is compatible with the table; otherwise a reason.
std::optional<std::string> check_grading(const Algebra& algebra, const Grading& grading);
std::optional<std::string> check_involution(const Algebra& algebra, const Involution& involution);

/// Throws ConstructionError on a broken table, grading or involution.
void check_structured(const StructuredAlgebra& a);

/// Projection onto the homogeneous component of degree g.
Matrix grading_projection(const Grading& grading, const GroupElement& g);

// Named families.
StructuredAlgebra upper_triangular(int n);
StructuredAlgebra full_matrix(int n);
/// deg E_ij = -g_i + g_j.
StructuredAlgebra full_matrix_elementary(int n, std::vector<int> group, const std::vector<GroupElement>& tuple);
StructuredAlgebra zero_algebra(int d);
StructuredAlgebra field();
/// Group algebra of Z_2^k with its natural grading. Other cyclic orders are rejected.
StructuredAlgebra group_algebra(const std::vector<int>& orders);
/// Incidence algebra of the partial order generated (reflexively and
/// transitively) by `relations` on {1..size}. Basis e_xy for x <= y.
StructuredAlgebra incidence(int size, const std::vector<std::pair<int, int>>& relations);
/// Exterior algebra on k generators with its Z_2-grading; basis words in shortlex order.
StructuredAlgebra grassmann_truncated(int k);

enum class InvolutionKind { transpose, symplectic };
Involution matrix_involution(int n, InvolutionKind kind);
/// x* of UT_n: reflection across the anti-diagonal, e_ij -> e_{n+1-j, n+1-i}.
Involution upper_triangular_reflection(int n);

/// Descriptor for build().
struct Family {
  enum class Kind { ut, full_matrix, zero, field, group_algebra, incidence, grassmann };
  Kind kind = Kind::field;
  int n = 1;
  std::vector<int> group;                      // full_matrix elementary grading / group_algebra orders
  std::vector<GroupElement> elementary;        // full_matrix only; empty = ungraded
  std::optional<InvolutionKind> involution;    // full_matrix only
  std::vector<std::pair<int, int>> relations;  // incidence only
};

StructuredAlgebra build(const Family& family);

StructuredAlgebra with_grading(StructuredAlgebra a, Grading grading);
StructuredAlgebra with_involution(StructuredAlgebra a, Involution involution);
StructuredAlgebra forget_structure(StructuredAlgebra a);

/// M_n(A): basis index = position * dim(A) + a, positions row-major.
StructuredAlgebra matrix_algebra(const StructuredAlgebra& a, int n);
/// A (x) B: basis index = a * dim(B) + b.
StructuredAlgebra tensor_product(const StructuredAlgebra& a, const StructuredAlgebra& b);
/// B_0 (x) G_0 + B_1 (x) G_1 inside B (x) G_k, basis ordered by (b, word).
StructuredAlgebra grassmann_envelope(const StructuredAlgebra& b, int k);
StructuredAlgebra direct_sum(const StructuredAlgebra& a, const StructuredAlgebra& b);
/// A + A^op with the exchange involution (a, b)* = (b, a).
StructuredAlgebra exchange_involution(const StructuredAlgebra& a);

}  // namespace piexp
