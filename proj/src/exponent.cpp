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

#include "piexp/exponent.hpp"

#include <algorithm>
#include <numeric>

namespace piexp {

namespace {

class AdmissibleSearch {
 public:
  AdmissibleSearch(const std::vector<Subspace>& components, const Subspace& radical, const Algebra& algebra)
      : components_(components), radical_(radical), algebra_(algebra), used_(components.size(), false) {
    for (const auto& c : components) dims_.push_back(c.dim());
    total_ = std::accumulate(dims_.begin(), dims_.end(), Index(0));
  }

  Index maximum() {
    std::vector<std::size_t> order(components_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dims_[a] > dims_[b]; });
    best_ = 0;
    for (std::size_t k : order) {
      if (components_[k].is_zero()) continue;
      used_[k] = true;
      bound(components_[k], dims_[k], total_ - dims_[k], order);
      used_[k] = false;
    }
    return best_;
  }

  /// Lexicographically smallest sequence reaching `target` (0-based indices).
  std::vector<std::size_t> smallest(Index target) {
    best_ = target;
    std::vector<std::size_t> seq;
    for (std::size_t k = 0; k < components_.size(); ++k) {
      if (components_[k].is_zero()) continue;
      used_[k] = true;
      seq.push_back(k);
      if (lex(components_[k], dims_[k], total_ - dims_[k], seq)) return seq;
      seq.pop_back();
      used_[k] = false;
    }
    return {};
  }

 private:
  void bound(const Subspace& v, Index sum, Index remaining, const std::vector<std::size_t>& order) {
    best_ = std::max(best_, sum);
    if (sum + remaining <= best_) return;
    const Subspace vj = subspace_product(v, radical_, algebra_);
    if (vj.is_zero()) return;
    for (std::size_t k : order) {
      if (used_[k]) continue;
      const Subspace w = subspace_product(vj, components_[k], algebra_);
      if (w.is_zero()) continue;
      used_[k] = true;
      bound(w, sum + dims_[k], remaining - dims_[k], order);
      used_[k] = false;
      if (sum + remaining <= best_) return;
    }
  }

  bool lex(const Subspace& v, Index sum, Index remaining, std::vector<std::size_t>& seq) {
    if (sum == best_) return true;
    if (sum + remaining < best_) return false;
    const Subspace vj = subspace_product(v, radical_, algebra_);
    if (vj.is_zero()) return false;
    for (std::size_t k = 0; k < components_.size(); ++k) {
      if (used_[k]) continue;
      const Subspace w = subspace_product(vj, components_[k], algebra_);
      if (w.is_zero()) continue;
      used_[k] = true;
      seq.push_back(k);
      if (lex(w, sum + dims_[k], remaining - dims_[k], seq)) return true;
      seq.pop_back();
      used_[k] = false;
    }
    return false;
  }

  const std::vector<Subspace>& components_;
  const Subspace& radical_;
  const Algebra& algebra_;
  std::vector<Index> dims_;
  std::vector<bool> used_;
  Index total_ = 0;
  Index best_ = 0;
};

bool annihilates(const Vector& p, const Subspace& s, const Algebra& a) {
  for (const auto& t : s.basis())
    if (!is_zero_vector(multiply(p, t, a))) return false;
  return true;
}

/// Basis elements b_1, u_1, ..., b_s whose product is nonzero.
std::vector<Vector> witness_chain(const std::vector<Subspace>& blocks, const Subspace& radical, const Algebra& a) {
  const std::size_t s = blocks.size();
  // tails[k] = B_k J B_{k+1} ... J B_s, and jtails[k] = J tails[k+1].
  std::vector<Subspace> tails(s), jtails(s);
  tails[s - 1] = blocks[s - 1];
  for (std::size_t k = s - 1; k-- > 0;) {
    jtails[k] = subspace_product(radical, tails[k + 1], a);
    tails[k] = subspace_product(blocks[k], jtails[k], a);
  }
  std::vector<Vector> chain;
  std::optional<Vector> prefix;
  auto extend = [&](const std::vector<Vector>& choices, const Subspace& rest) {
    for (const auto& c : choices) {
      const Vector p = prefix ? multiply(*prefix, c, a) : c;
      if (is_zero_vector(p)) continue;
      if (!rest.is_zero() && annihilates(p, rest, a)) continue;
      chain.push_back(c);
      prefix = p;
      return;
    }
    throw std::logic_error("witness chain extraction lost the nonzero product");
  };
  for (std::size_t k = 0; k < s; ++k) {
    const Subspace none(a.dim());
    extend(blocks[k].basis(), k + 1 < s ? jtails[k] : none);
    if (k + 1 < s) extend(radical.basis(), tails[k + 1]);
  }
  return chain;
}

ExponentReport exponent_of(const StructuredAlgebra& a) {
  const StructureReport r = analyze(a);
  return admissible_max(r.components, r.radical, a.algebra);
}

}  // namespace

ExponentReport admissible_max(const std::vector<Subspace>& components, const Subspace& radical, const Algebra& algebra) {
  ExponentReport report;
  for (const auto& c : components) report.component_dims.push_back(c.dim());
  AdmissibleSearch search(components, radical, algebra);
  report.value = search.maximum();
  if (report.value == 0) return report;
  const auto seq = search.smallest(report.value);
  std::vector<Subspace> blocks;
  for (std::size_t k : seq) {
    report.witness_sequence.push_back(k + 1);
    blocks.push_back(components[k]);
  }
  report.witness_chain = witness_chain(blocks, radical, algebra);
  return report;
}

ExponentReport pi_exponent(const StructuredAlgebra& a) { return exponent_of(a); }

ExponentReport envelope_exponent(const StructuredAlgebra& b) {
  const Grading* g = b.grading();
  if (!g || g->group != std::vector<int>{2})
    throw ConstructionError("envelope exponent needs a Z_2-graded algebra");
  return exponent_of(b);
}

std::vector<MatrixTheoremRow> matrix_theorem_check(const StructuredAlgebra& a, int n_max, Index max_dim) {
  const Index base = pi_exponent(a).value;
  std::vector<MatrixTheoremRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    MatrixTheoremRow row;
    row.n = n;
    row.rhs = static_cast<Index>(n) * n * base;
    if (max_dim > 0 && static_cast<Index>(n) * n * a.dim() > max_dim) {
      row.skipped = true;
    } else {
      row.lhs = pi_exponent(matrix_algebra(a, n)).value;
    }
    rows.push_back(row);
  }
  return rows;
}

TensorTheoremResult tensor_theorem_check(const StructuredAlgebra& a, const StructuredAlgebra& s) {
  if (!find_unit(s.algebra)) throw SNotCentralSimple(s.name + " is not unital");
  const auto cert = is_action_simple(s.algebra, action_set(s));
  if (cert.verdict != SimplicityCertificate::Verdict::certified_yes)
    throw SNotCentralSimple(s.name + " is not certified action-simple");
  if (center(s.algebra).dim() != 1) throw SNotCentralSimple(s.name + " has a center of dimension > 1");
  TensorTheoremResult r;
  r.dim_s = s.dim();
  r.exp_a = pi_exponent(a).value;
  r.lhs = pi_exponent(tensor_product(a, s)).value;
  return r;
}

}  // namespace piexp
