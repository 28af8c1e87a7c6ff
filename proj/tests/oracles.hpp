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

// Slow reference computations, written without the library's search or
// elimination code so that they can be used to cross-check it.

#pragma once

#include "piexp/algebra.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace piexp::oracle {

/// Plain Gaussian elimination on a dense copy.
inline Index dense_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  Index r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<Index>(rows.size()); ++c) {
    std::size_t p = static_cast<std::size_t>(r);
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[static_cast<std::size_t>(r)]);
    const auto& pivot = rows[static_cast<std::size_t>(r)];
    for (std::size_t i = static_cast<std::size_t>(r) + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / pivot[c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * pivot[k];
    }
    ++r;
  }
  return r;
}

/// Every product x_1 x_2 ... x_k with x_i drawn from the given spanning sets.
inline std::vector<Vector> chain_products(const std::vector<std::vector<Vector>>& factors, const Algebra& a) {
  std::vector<Vector> current = factors.front();
  for (std::size_t f = 1; f < factors.size(); ++f) {
    std::vector<Vector> next;
    for (const auto& x : current)
      for (const auto& y : factors[f]) {
        Vector p = multiply(x, y, a);
        if (!is_zero_vector(p)) next.push_back(std::move(p));
      }
    current = std::move(next);
    if (current.empty()) break;
  }
  return current;
}

/// Maximum of sum(dims) over ALL sequences of distinct components with a
/// nonzero alternating product, evaluated without any pruning.
inline Index exhaustive_admissible(const std::vector<Subspace>& comps, const Subspace& j, const Algebra& a) {
  Index best = 0;
  const std::size_t n = comps.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    Index sum = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (1u << k)) {
        idx.push_back(k);
        sum += comps[k].dim();
      }
    if (sum <= best) continue;
    do {
      std::vector<std::vector<Vector>> factors;
      for (std::size_t t = 0; t < idx.size(); ++t) {
        if (t > 0) factors.push_back(j.basis());
        factors.push_back(comps[idx[t]].basis());
      }
      if (!chain_products(factors, a).empty()) {
        best = sum;
        break;
      }
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  return best;
}

/// c_m of an algebra with no extra structure: rank of the full evaluation
/// matrix of the m! monomials on every basis tuple.
inline Index naive_codimension(const Algebra& a, int m) {
  const Index d = a.dim();
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Rational>> rows;
  Index tuples = 1;
  for (int i = 0; i < m; ++i) tuples *= d;
  do {
    std::vector<Rational> row;
    for (Index t = 0; t < tuples; ++t) {
      std::vector<Index> choice(static_cast<std::size_t>(m));
      Index rest = t;
      for (int i = m; i-- > 0;) {
        choice[static_cast<std::size_t>(i)] = rest % d;
        rest /= d;
      }
      Vector v = a.basis_vector(choice[static_cast<std::size_t>(perm[0])]);
      for (int i = 1; i < m; ++i) v = multiply(v, a.basis_vector(choice[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]), a);
      for (Index k = 0; k < d; ++k) row.push_back(v(k));
    }
    rows.push_back(std::move(row));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return dense_rank(std::move(rows));
}

/// dim J(A) in characteristic zero: the corank of (x, y) -> tr L_{xy}, with
/// every trace taken from explicit products of basis vectors.
inline Index trace_form_radical_dim(const Algebra& a) {
  const Index d = a.dim();
  auto trace_of_left = [&](const Vector& x) {
    Rational t(0);
    for (Index k = 0; k < d; ++k) t += multiply(x, a.basis_vector(k), a)(k);
    return t;
  };
  std::vector<std::vector<Rational>> gram(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          trace_of_left(multiply(a.basis_vector(i), a.basis_vector(j), a));
  return d - dense_rank(std::move(gram));
}

}  // namespace piexp::oracle
