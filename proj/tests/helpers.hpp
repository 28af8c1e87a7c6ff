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

#include <random>
#include <vector>

namespace piexp::testing {

inline Vector unit_vector(Index d, Index i) {
  Vector v = Vector::Zero(d);
  v(i) = Rational(1);
  return v;
}

inline Subspace span_of(Index d, const std::vector<Vector>& vs) { return Subspace::span(d, vs); }

/// Unitriangular-times-permutation matrices are always invertible.
inline Matrix random_basis_change(Index d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  Matrix upper = Matrix::Identity(d, d), lower = Matrix::Identity(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j) {
      upper(i, j) = coeff(rng);
      lower(j, i) = coeff(rng);
    }
  return Matrix(lower * upper);
}

}  // namespace piexp::testing
