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

#include "piexp/structure.hpp"

#include <stdexcept>
#include <vector>

namespace piexp {

struct ExponentReport {
  Index value = 0;
  /// 1-based component indices, lexicographically smallest among the maximizers.
  std::vector<std::size_t> witness_sequence;
  /// b_1, u_1, b_2, ..., b_s with b_k in the k-th component, u_k in J, nonzero product.
  std::vector<Vector> witness_chain;
  std::vector<Index> component_dims;
};

/// Largest total dimension of distinct components B_i1, ..., B_is with
/// B_i1 J B_i2 J ... J B_is != 0.
ExponentReport admissible_max(const std::vector<Subspace>& components, const Subspace& radical, const Algebra& algebra);

/// radical -> complement -> components (under the structure's action) -> admissible_max.
ExponentReport pi_exponent(const StructuredAlgebra& a);

/// Exponent of the Grassmann envelope G(B) of a Z_2-graded algebra.
ExponentReport envelope_exponent(const StructuredAlgebra& b);

struct MatrixTheoremRow {
  int n = 0;
  Index lhs = 0;  // exp(M_n(A))
  Index rhs = 0;  // n^2 exp(A)
  bool skipped = false;
  bool equal() const { return !skipped && lhs == rhs; }
};

/// One independent pipeline run per n; rows with dim(M_n(A)) > max_dim are skipped.
std::vector<MatrixTheoremRow> matrix_theorem_check(const StructuredAlgebra& a, int n_max, Index max_dim = 0);

class SNotCentralSimple : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TensorTheoremResult {
  Index lhs = 0;  // exp of A (x) S under the product action
  Index dim_s = 0;
  Index exp_a = 0;
  Index rhs() const { return dim_s * exp_a; }
  bool equal() const { return lhs == rhs(); }
};

/// Requires S unital, certified action-simple, with one-dimensional center.
TensorTheoremResult tensor_theorem_check(const StructuredAlgebra& a, const StructuredAlgebra& s);

}  // namespace piexp
