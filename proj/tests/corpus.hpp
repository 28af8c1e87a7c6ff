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

#include "helpers.hpp"
#include "piexp/constructions.hpp"

#include <random>
#include <string>
#include <vector>

namespace piexp::testing {

/// Every algebra the suites exercise by name, structured ones included.
inline std::vector<StructuredAlgebra> corpus() {
  const auto ut2 = upper_triangular(2);
  std::vector<StructuredAlgebra> out{
      field(),
      zero_algebra(2),
      zero_algebra(3),
      ut2,
      upper_triangular(3),
      full_matrix(2),
      full_matrix(3),
      tensor_product(ut2, ut2),
      incidence(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}),
      incidence(3, {{1, 2}, {1, 3}}),
      group_algebra({2}),
      group_algebra({2, 2}),
      grassmann_truncated(2),
      grassmann_truncated(3),
      direct_sum(field(), field()),
      direct_sum(ut2, full_matrix(2)),
      matrix_algebra(ut2, 2),
      with_grading(ut2, Grading{{2}, {{0}, {1}, {0}}}),
      full_matrix_elementary(2, {2}, {{0}, {1}}),
      with_involution(full_matrix(2), matrix_involution(2, InvolutionKind::transpose)),
      with_involution(ut2, upper_triangular_reflection(2)),
      exchange_involution(ut2),
  };
  return out;
}

/// Small unstructured algebras assembled from named blocks by sums and tensor
/// products, then written in a random basis. Dimension stays at most max_dim.
inline StructuredAlgebra random_constructed(std::mt19937_64& rng, Index max_dim = 16) {
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  auto named = [&]() -> StructuredAlgebra {
    switch (pick(10)) {
      case 0: return field();
      case 1: return zero_algebra(1 + pick(2));
      case 2: return upper_triangular(2);
      case 3: return upper_triangular(3);
      case 4: return full_matrix(2);
      case 5: return grassmann_truncated(2);
      case 6: return group_algebra({2});
      case 7: return incidence(3, {{1, 2}, {2, 3}});
      case 8: return incidence(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
      default: {
        std::vector<std::pair<int, int>> rel;
        for (int i = 1; i <= 3; ++i)
          for (int j = i + 1; j <= 3; ++j)
            if (pick(2)) rel.emplace_back(i, j);
        return incidence(3, rel);
      }
    }
  };
  auto block = [&] { return forget_structure(named()); };
  StructuredAlgebra a = block();
  const int extra = pick(3);
  for (int k = 0; k < extra; ++k) {
    const auto b = block();
    if (pick(2) && a.dim() * b.dim() <= max_dim)
      a = tensor_product(a, b);
    else if (a.dim() + b.dim() <= max_dim)
      a = direct_sum(a, b);
  }
  StructuredAlgebra out;
  out.name = a.name + " (random basis)";
  out.algebra = change_basis(a.algebra, random_basis_change(a.dim(), rng));
  return out;
}

}  // namespace piexp::testing
