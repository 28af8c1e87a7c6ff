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

#include "corpus.hpp"
#include "oracles.hpp"
#include "piexp/exponent.hpp"
#include "piexp/identities.hpp"

#include <doctest.h>

using namespace piexp;

TEST_CASE("radical and complement postconditions on random algebras") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 24; ++trial) {
    const auto a = testing::random_constructed(rng, 16);
    INFO(a.name);
    REQUIRE(a.dim() <= 16);
    const Subspace j = radical(a.algebra);
    CHECK(j.dim() == oracle::trace_form_radical_dim(a.algebra));
    CHECK(is_two_sided_ideal(a.algebra, j));
    CHECK(check_radical(a.algebra, j).ok());

    // J is nilpotent: some power of products of its basis vanishes.
    std::vector<std::vector<Vector>> factors(static_cast<std::size_t>(a.dim()) + 1, j.basis());
    CHECK((j.is_zero() || oracle::chain_products(factors, a.algebra).empty()));

    const Subspace s = wedderburn_malcev(a.algebra);
    CHECK(is_subalgebra(a.algebra, s));
    CHECK(s.dim() + j.dim() == a.dim());
    CHECK(intersection(s, j).is_zero());
    CHECK(radical(restrict_to(a.algebra, s)).is_zero());
  }
}

TEST_CASE("admissible search agrees with brute force on the corpus") {
  for (const auto& a : testing::corpus()) {
    if (a.dim() > 12) continue;
    INFO(a.name);
    const auto rep = analyze(a);
    CHECK(admissible_max(rep.components, rep.radical, a.algebra).value ==
          oracle::exhaustive_admissible(rep.components, rep.radical, a.algebra));
  }
}

TEST_CASE("exponent and codimension survive five conjugations") {
  std::mt19937_64 rng(99);
  const auto poset = incidence(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
  const auto g = grassmann_truncated(3);
  const Index e = pi_exponent(poset).value;
  const Index c = codimension(g, 3).value;
  for (int trial = 0; trial < 5; ++trial) {
    const StructuredAlgebra p{"conj", change_basis(poset.algebra, testing::random_basis_change(poset.dim(), rng)), std::monostate{}};
    CHECK(pi_exponent(p).value == e);
    const StructuredAlgebra q{"conj", change_basis(g.algebra, testing::random_basis_change(g.dim(), rng)), std::monostate{}};
    CHECK(codimension(q, 3).value == c);
  }
}

TEST_CASE("codimension bounds on the corpus") {
  for (const auto& a : testing::corpus()) {
    if (a.dim() > 9) continue;
    INFO(a.name);
    CHECK(codimension(a, 1).value == 1);
    Index factorial = 1;
    for (int m = 1; m <= 3; ++m) {
      factorial *= m;
      CHECK(codimension(a, m).value <= factorial);
    }
  }
}

TEST_CASE("identities of A restrict to a corner copy of A") {
  // A sits in M_2(A) as the (1,1) corner, so every identity of M_2(A) is one of A.
  const auto ut2 = upper_triangular(2);
  const auto big = matrix_algebra(ut2, 2);
  for (int m = 1; m <= 3; ++m)
    for (const auto& f : identity_basis(big, m)) CHECK(is_identity(f, ut2).holds);
}

TEST_CASE("sampling recovers the exact codimension on the corpus") {
  for (const auto& a : testing::corpus()) {
    if (a.dim() > 9) continue;
    INFO(a.name);
    for (int m = 2; m <= 3; ++m) {
      const Index exact = codimension(a, m).value;
      for (std::uint64_t seed : {1u, 2u, 3u}) {
        CodimensionOptions o;
        o.strategy = Strategy::sampled;
        o.seed = seed;
        CHECK(codimension(a, m, o).value == exact);
      }
    }
  }
}
