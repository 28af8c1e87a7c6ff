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

#include "piexp/structure.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace piexp {

// ---------------------------------------------------------------------------
// Actions

ActionSet identity_action(Index dim) { return {ActionSet::Kind::trivial, {Matrix::Identity(dim, dim)}}; }

ActionSet action_set(const StructuredAlgebra& a) {
  ActionSet out = identity_action(a.dim());
  if (const auto* g = a.grading()) {
    out.kind = ActionSet::Kind::grading;
    for (const auto& e : g->elements()) out.operators.push_back(grading_projection(*g, e));
  } else if (const auto* inv = a.involution()) {
    out.kind = ActionSet::Kind::involution;
    out.operators.push_back(inv->map);
  }
  return out;
}

ActionSet restrict_action(const ActionSet& actions, const Subspace& s) {
  ActionSet out{actions.kind, {}};
  for (const auto& op : actions.operators) out.operators.push_back(restrict_operator(op, s));
  return out;
}

std::optional<std::size_t> action_invariance_check(const Subspace& s, const ActionSet& actions) {
  for (std::size_t k = 0; k < actions.operators.size(); ++k)
    for (const auto& v : s.basis())
      if (!s.contains(Vector(actions.operators[k] * v))) return k;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Radical

namespace {

Vector left_traces(const Algebra& a) {
  Vector t = Vector::Zero(a.dim());
  for (Index l = 0; l < a.dim(); ++l)
    for (Index k = 0; k < a.dim(); ++k)
      for (const auto& term : a.product(l, k))
        if (term.index == k) t(l) += term.coeff;
  return t;
}

/// Rows: x -> tr L_x, and x -> tr L_{x e_j} for every j.
Matrix trace_form_rows(const Algebra& a) {
  const Index d = a.dim();
  const Vector t = left_traces(a);
  Matrix m = Matrix::Zero(d + 1, d);
  m.row(0) = t.transpose();
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (const auto& term : a.product(i, j)) m(j + 1, i) += term.coeff * t(term.index);
  return m;
}

std::vector<Index> free_columns(const Subspace& s) {
  std::vector<Index> out;
  std::size_t p = 0;
  for (Index c = 0; c < s.ambient_dim(); ++c) {
    if (p < s.pivots().size() && s.pivots()[p] == c) {
      ++p;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

/// A / s for an ideal s, using the standard vectors off the pivots of s as basis.
Algebra quotient(const Algebra& a, const Subspace& ideal) {
  const auto cols = free_columns(ideal);
  const Index q = static_cast<Index>(cols.size());
  std::vector<StructureConstant> entries;
  for (Index i = 0; i < q; ++i)
    for (Index j = 0; j < q; ++j) {
      const Vector r = ideal.reduce(multiply(a.basis_vector(cols[static_cast<std::size_t>(i)]),
                                             a.basis_vector(cols[static_cast<std::size_t>(j)]), a));
      for (Index k = 0; k < q; ++k)
        if (!is_zero(r(cols[static_cast<std::size_t>(k)]))) entries.push_back({i, j, k, r(cols[static_cast<std::size_t>(k)])});
    }
  return Algebra(q, {}, entries);
}

}  // namespace

Subspace radical(const Algebra& algebra) {
  const Matrix ker = null_space(trace_form_rows(algebra));
  Subspace j(algebra.dim());
  for (Index r = 0; r < ker.rows(); ++r) j.insert(ker.row(r).transpose());
  return j;
}

RadicalCheck check_radical(const Algebra& algebra, const Subspace& radical) {
  RadicalCheck c;
  c.ideal = is_two_sided_ideal(algebra, radical);
  c.nilpotent = power_chain(radical, algebra).back().is_zero();
  if (c.ideal) {
    const Algebra q = quotient(algebra, radical);
    // Semisimple iff the trace form of the regular representation is nondegenerate.
    const Vector t = left_traces(q);
    Matrix gram = Matrix::Zero(q.dim(), q.dim());
    for (Index i = 0; i < q.dim(); ++i)
      for (Index j = 0; j < q.dim(); ++j)
        for (const auto& term : q.product(i, j)) gram(i, j) += term.coeff * t(term.index);
    c.semisimple_quotient = rank(gram) == q.dim();
  }
  return c;
}

// ---------------------------------------------------------------------------
// Wedderburn-Malcev complement

namespace {

bool stable_subalgebra(const Algebra& a, const Subspace& s, const ActionSet& actions) {
  return is_subalgebra(a, s) && !action_invariance_check(s, actions);
}

}  // namespace

Subspace wedderburn_malcev(const Algebra& algebra, const Subspace& rad, const ActionSet& actions) {
  const Index d = algebra.dim();
  if (rad.ambient_dim() != d) throw DimensionMismatch("wedderburn_malcev: radical ambient dimension");
  if (!is_two_sided_ideal(algebra, rad)) throw std::invalid_argument("wedderburn_malcev: radical is not an ideal");
  if (auto k = action_invariance_check(rad, actions))
    throw RadicalNotInvariant("radical is not invariant under action operator " + std::to_string(*k));

  const auto cols = free_columns(rad);
  const Index q = static_cast<Index>(cols.size());
  std::vector<Vector> s;
  for (Index c : cols) s.push_back(algebra.basis_vector(c));
  {
    const Subspace initial = Subspace::span(d, s);
    if (stable_subalgebra(algebra, initial, actions)) return initial;
  }

  const auto chain = power_chain(rad, algebra);
  if (!chain.back().is_zero()) throw std::invalid_argument("wedderburn_malcev: radical is not nilpotent");
  const Index depth = static_cast<Index>(chain.size()) - 1;  // J^(depth+1) = 0

  // Adapted basis: W, then C_k with J^k = C_k + J^(k+1).
  std::vector<Vector> adapted = s;
  std::vector<Index> level_start{0, q};
  for (Index k = 0; k < depth; ++k) {
    Subspace acc = chain[static_cast<std::size_t>(k + 1)];
    for (const auto& v : chain[static_cast<std::size_t>(k)].basis())
      if (acc.insert(v)) adapted.push_back(v);
    level_start.push_back(static_cast<Index>(adapted.size()));
  }
  Matrix basis(d, d);
  for (Index r = 0; r < d; ++r) basis.row(r) = adapted[static_cast<std::size_t>(r)].transpose();
  const Matrix to_adapted = inverse<Rational>(basis)->transpose();
  auto coords = [&](const Vector& v) { return Vector(to_adapted * v); };

  // Quotient multiplication and induced action in W coordinates.
  std::vector<std::vector<Vector>> mu(static_cast<std::size_t>(q), std::vector<Vector>(static_cast<std::size_t>(q)));
  for (Index i = 0; i < q; ++i)
    for (Index j = 0; j < q; ++j)
      mu[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          coords(multiply(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)], algebra)).head(q);
  std::vector<Matrix> induced;
  for (const auto& op : actions.operators) {
    Matrix bar(q, q);
    for (Index i = 0; i < q; ++i) bar.col(i) = coords(op * s[static_cast<std::size_t>(i)]).head(q);
    induced.push_back(std::move(bar));
  }

  // Each round lifts from modulo J^a to modulo J^b, b = min(2a, depth + 1).
  for (Index a = 1; a <= depth;) {
    const Index b = std::min(2 * a, depth + 1);
    const Index lo = level_start[static_cast<std::size_t>(a)];
    const Index hi = level_start[static_cast<std::size_t>(b)];
    const Index nc = hi - lo;
    auto unknown = [&](Index i, Index c) { return i * nc + c; };
    auto block = [&](const Vector& v) {
      const Vector c = coords(v);
      for (Index k = q; k < lo; ++k)
        if (!is_zero(c(k))) throw ComplementNotFound("lifting residual left the expected radical power");
      return Vector(c.segment(lo, nc));
    };

    std::vector<std::vector<Vector>> lc(static_cast<std::size_t>(q)), rc(static_cast<std::size_t>(q));
    for (Index i = 0; i < q; ++i)
      for (Index c = 0; c < nc; ++c) {
        const Vector& cv = adapted[static_cast<std::size_t>(lo + c)];
        lc[static_cast<std::size_t>(i)].push_back(block(multiply(s[static_cast<std::size_t>(i)], cv, algebra)));
        rc[static_cast<std::size_t>(i)].push_back(block(multiply(cv, s[static_cast<std::size_t>(i)], algebra)));
      }

    SparseSystem<Rational> sys(q * nc);
    for (Index i = 0; i < q; ++i)
      for (Index j = 0; j < q; ++j) {
        const Vector& m = mu[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        Vector defect = multiply(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)], algebra);
        for (Index l = 0; l < q; ++l)
          if (!is_zero(m(l))) defect -= m(l) * s[static_cast<std::size_t>(l)];
        const Vector rhs = block(defect);
        for (Index t = 0; t < nc; ++t) {
          SparseSystem<Rational>::Row row;
          for (Index c = 0; c < nc; ++c) {
            const auto& l = lc[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)](t);
            if (!is_zero(l)) row.emplace_back(unknown(j, c), l);
            const auto& r = rc[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)](t);
            if (!is_zero(r)) row.emplace_back(unknown(i, c), r);
          }
          for (Index l = 0; l < q; ++l)
            if (!is_zero(m(l))) row.emplace_back(unknown(l, t), -m(l));
          sys.add(std::move(row), -rhs(t));
        }
      }
    for (std::size_t k = 1; k < actions.operators.size(); ++k) {
      const Matrix& op = actions.operators[k];
      const Matrix& bar = induced[k];
      std::vector<Vector> tc;
      for (Index c = 0; c < nc; ++c) tc.push_back(block(op * adapted[static_cast<std::size_t>(lo + c)]));
      for (Index i = 0; i < q; ++i) {
        Vector defect = op * s[static_cast<std::size_t>(i)];
        for (Index l = 0; l < q; ++l)
          if (!is_zero(bar(l, i))) defect -= bar(l, i) * s[static_cast<std::size_t>(l)];
        const Vector rhs = block(defect);
        for (Index t = 0; t < nc; ++t) {
          SparseSystem<Rational>::Row row;
          for (Index c = 0; c < nc; ++c)
            if (!is_zero(tc[static_cast<std::size_t>(c)](t))) row.emplace_back(unknown(i, c), tc[static_cast<std::size_t>(c)](t));
          for (Index l = 0; l < q; ++l)
            if (!is_zero(bar(l, i))) row.emplace_back(unknown(l, t), -bar(l, i));
          sys.add(std::move(row), -rhs(t));
        }
      }
    }
    const auto x = sys.solve();
    if (!x) throw ComplementNotFound("no action-stable multiplicative lifting modulo J^" + std::to_string(b));
    for (Index i = 0; i < q; ++i)
      for (Index c = 0; c < nc; ++c)
        if (!is_zero((*x)(unknown(i, c)))) s[static_cast<std::size_t>(i)] += (*x)(unknown(i, c)) * adapted[static_cast<std::size_t>(lo + c)];
    a = b;
  }

  const Subspace complement = Subspace::span(d, s);
  if (complement.dim() != q || (complement + rad).dim() != d || !stable_subalgebra(algebra, complement, actions))
    throw ComplementNotFound("lifted complement failed verification");
  return complement;
}

Subspace wedderburn_malcev(const Algebra& algebra) {
  return wedderburn_malcev(algebra, radical(algebra), identity_action(algebra.dim()));
}

// ---------------------------------------------------------------------------
// Rational roots

namespace {

Rational evaluate(const std::vector<Rational>& c, const Rational& x) {
  Rational v(0);
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

std::vector<Integer> integerize(const std::vector<Rational>& c) {
  Integer l(1);
  for (const auto& x : c) l = boost::multiprecision::lcm(l, Integer(denominator(x)));
  std::vector<Integer> out;
  Integer g(0);
  for (const auto& x : c) {
    out.push_back(Integer(numerator(x)) * (l / Integer(denominator(x))));
    g = boost::multiprecision::gcd(g, out.back());
  }
  if (g != 0)
    for (auto& v : out) v /= g;
  return out;
}

std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small, large;
  for (Integer k = 1; k * k <= n; ++k)
    if (n % k == 0) {
      small.push_back(k);
      if (k * k != n) large.push_back(n / k);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::optional<Rational> find_root(const std::vector<Rational>& c) {
  const std::size_t deg = c.size() - 1;
  if (deg == 1) return -c[0] / c[1];
  const auto z = integerize(c);
  static const Integer small_limit("1000000000000");
  if (abs(z.front()) <= small_limit && abs(z.back()) <= small_limit) {
    const auto ps = divisors(z.front());
    const auto qs = divisors(z.back());
    for (const auto& p : ps)
      for (const auto& qd : qs)
        for (int sign : {1, -1}) {
          const Rational r = Rational(p * sign) / Rational(qd);
          if (is_zero(evaluate(c, r))) return r;
        }
    return std::nullopt;  // rational root theorem: exhaustive
  }
  // Large coefficients: locate roots numerically, confirm exactly.
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Index>(deg), static_cast<Index>(deg));
  const double lead = c.back().convert_to<double>();
  for (std::size_t i = 0; i < deg; ++i) {
    if (i + 1 < deg) companion(static_cast<Index>(i + 1), static_cast<Index>(i)) = 1.0;
    companion(static_cast<Index>(i), static_cast<Index>(deg - 1)) = -c[i].convert_to<double>() / lead;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
  const Integer an = abs(z.back());
  std::vector<Integer> denominators = abs(an) <= small_limit ? divisors(an) : std::vector<Integer>{Integer(1), an};
  for (Index k = 0; k < es.eigenvalues().size(); ++k) {
    const auto ev = es.eigenvalues()(k);
    if (!std::isfinite(ev.real()) || std::abs(ev.imag()) > 1e-6 * std::max(1.0, std::abs(ev.real()))) continue;
    for (const auto& q : denominators) {
      // Integer Newton iteration on q^n f(p / q), started from the floating estimate.
      auto g = [&](const Integer& p, Integer& derivative) {
        Integer value(0);
        derivative = 0;
        for (std::size_t i = z.size(); i-- > 0;) {
          derivative = derivative * p + value;
          value = value * p + z[i] * boost::multiprecision::pow(q, static_cast<unsigned>(z.size() - 1 - i));
        }
        return value;
      };
      Integer p(std::round(ev.real() * q.convert_to<double>()));
      for (int it = 0; it < 200; ++it) {
        Integer dg;
        const Integer v = g(p, dg);
        if (v == 0) return Rational(p) / Rational(q);
        if (dg == 0) break;
        const Rational step = Rational(v) / Rational(dg);
        const Integer delta = Integer(numerator(step) / denominator(step));
        if (delta == 0) {
          Integer d2;
          for (const Integer& nb : {Integer(p + 1), Integer(p - 1)})
            if (g(nb, d2) == 0) return Rational(nb) / Rational(q);
          break;
        }
        p -= delta;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Rational> rational_roots(std::vector<Rational> c) {
  while (!c.empty() && is_zero(c.back())) c.pop_back();
  std::set<Rational> roots;
  if (c.size() < 2) return {};
  while (c.size() >= 2 && is_zero(c.front())) {
    roots.insert(Rational(0));
    c.erase(c.begin());
  }
  while (c.size() >= 2) {
    const auto r = find_root(c);
    if (!r) break;
    roots.insert(*r);
    // Synthetic division by (x - r).
    std::vector<Rational> q(c.size() - 1);
    Rational carry(0);
    for (std::size_t i = c.size(); i-- > 1;) {
      carry = carry * *r + c[i];
      q[i - 1] = carry;
    }
    c = std::move(q);
  }
  return {roots.begin(), roots.end()};
}

// ---------------------------------------------------------------------------
// Simplicity

namespace {

template <typename Scalar>
VectorX<Scalar> flatten(const MatrixX<Scalar>& m) {
  VectorX<Scalar> v(m.size());
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) v(r * m.cols() + c) = m(r, c);
  return v;
}

/// Dimension of the unital algebra generated by `gens`, seeded with `seeds`.
template <typename Scalar>
Index closure_dimension(const std::vector<MatrixX<Scalar>>& gens, const std::vector<MatrixX<Scalar>>& seeds, Index d) {
  const Index full = d * d;
  Echelon<Scalar> span(full);
  std::deque<MatrixX<Scalar>> queue;
  for (const auto& s : seeds)
    if (span.insert(flatten(s))) queue.push_back(s);
  while (!queue.empty() && span.rank() < full) {
    const MatrixX<Scalar> m = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      MatrixX<Scalar> p = g * m;
      if (span.insert(flatten(p))) queue.push_back(std::move(p));
      if (span.rank() == full) break;
    }
  }
  return span.rank();
}

template <typename Scalar>
Index burnside_dimension(const std::vector<Matrix>& lefts, const std::vector<Matrix>& rights,
                         const std::vector<Matrix>& ops, Index d, bool& ok) {
  auto convert = [&](const Matrix& m) {
    MatrixX<Scalar> out(m.rows(), m.cols());
    for (Index r = 0; r < m.rows(); ++r)
      for (Index c = 0; c < m.cols(); ++c) {
        if constexpr (std::is_same_v<Scalar, ModP>) {
          if (!reduce_mod_p(m(r, c), out(r, c))) ok = false;
        } else {
          out(r, c) = m(r, c);
        }
      }
    return out;
  };
  ok = true;
  std::vector<MatrixX<Scalar>> gens, seeds;
  std::vector<MatrixX<Scalar>> ls, rs;
  for (const auto& l : lefts) ls.push_back(convert(l));
  for (const auto& r : rights) rs.push_back(convert(r));
  if (!ok) return 0;
  seeds.push_back(MatrixX<Scalar>::Identity(d, d));
  for (const auto& l : ls) seeds.push_back(l);
  for (const auto& r : rs) seeds.push_back(r);
  // L_a and R_b commute, so products L_a R_b cover the multiplication algebra.
  for (const auto& l : ls)
    for (const auto& r : rs) seeds.push_back(l * r);
  gens = ls;
  gens.insert(gens.end(), rs.begin(), rs.end());
  for (const auto& op : ops) {
    gens.push_back(convert(op));
    seeds.push_back(gens.back());
  }
  if (!ok) return 0;
  return closure_dimension(gens, seeds, d);
}

/// Smallest subspace containing v and stable under all generators.
Subspace generated_ideal(const Vector& v, const std::vector<Matrix>& gens) {
  Subspace ideal(v.size());
  std::deque<Vector> queue;
  if (ideal.insert(v)) queue.push_back(v);
  while (!queue.empty()) {
    const Vector w = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Vector image = g * w;
      if (ideal.insert(image)) queue.push_back(std::move(image));
    }
  }
  return ideal;
}

}  // namespace

SimplicityCertificate is_action_simple(const Algebra& algebra, const ActionSet& actions, std::uint64_t seed) {
  const Index d = algebra.dim();
  SimplicityCertificate cert;
  if (d == 0) {
    cert.verdict = SimplicityCertificate::Verdict::no;
    cert.zero_product = true;
    cert.witness = Subspace(0);
    return cert;
  }
  cert.zero_product = algebra.entries().empty();
  std::vector<Matrix> lefts, rights, ops;
  for (Index i = 0; i < d; ++i) {
    lefts.push_back(left_multiplication(algebra, algebra.basis_vector(i)));
    rights.push_back(right_multiplication(algebra, algebra.basis_vector(i)));
  }
  for (std::size_t k = 1; k < actions.operators.size(); ++k) ops.push_back(actions.operators[k]);

  bool ok = false;
  Index dim = burnside_dimension<ModP>(lefts, rights, ops, d, ok);
  if (!ok || (dim < d * d && d <= 12)) dim = burnside_dimension<Rational>(lefts, rights, ops, d, ok);
  cert.span_dim = dim;
  if (!cert.zero_product && dim == d * d) {
    cert.verdict = SimplicityCertificate::Verdict::certified_yes;
    return cert;
  }
  if (cert.zero_product) {
    cert.verdict = SimplicityCertificate::Verdict::no;
    cert.witness = Subspace(d);
    return cert;
  }

  std::vector<Matrix> gens = lefts;
  gens.insert(gens.end(), rights.begin(), rights.end());
  gens.insert(gens.end(), ops.begin(), ops.end());
  std::vector<Vector> candidates;
  for (Index i = 0; i < d; ++i) candidates.push_back(algebra.basis_vector(i));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int k = 0; k < 8; ++k) {
    Vector v(d);
    for (Index i = 0; i < d; ++i) v(i) = coeff(rng);
    candidates.push_back(v);
  }
  for (const auto& v : candidates) {
    if (is_zero_vector(v)) continue;
    Subspace ideal = generated_ideal(v, gens);
    if (ideal.dim() < d && (!cert.witness || ideal.dim() < cert.witness->dim())) cert.witness = std::move(ideal);
  }
  cert.verdict = cert.witness ? SimplicityCertificate::Verdict::no : SimplicityCertificate::Verdict::inconclusive;
  return cert;
}

// ---------------------------------------------------------------------------
// Components

namespace {

/// Monic minimal polynomial of x in a unital algebra with unit e, low -> high.
std::vector<Rational> minimal_polynomial(const Vector& x, const Vector& e, const Algebra& a) {
  std::vector<Vector> powers{e};
  Echelon<Rational> span(a.dim());
  span.insert(e);
  while (true) {
    Vector next = multiply(powers.back(), x, a);
    if (!span.contains(next)) {
      span.insert(next);
      powers.push_back(std::move(next));
      continue;
    }
    const Index k = static_cast<Index>(powers.size());
    Matrix m(a.dim(), k);
    for (Index i = 0; i < k; ++i) m.col(i) = powers[static_cast<std::size_t>(i)];
    const auto c = solve<Rational>(m, next);
    std::vector<Rational> poly;
    for (Index i = 0; i < k; ++i) poly.push_back(-(*c)(i));
    poly.push_back(Rational(1));
    return poly;
  }
}

std::string poly_string(const std::vector<Rational>& p) {
  std::string s;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (is_zero(p[i])) continue;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(p[i]) + ")";
    if (i > 0) s += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return s;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<Subspace> simple_components(const Subspace& complement, const Algebra& algebra, const ActionSet& actions) {
  if (complement.is_zero()) return {};
  const Algebra s = restrict_to(algebra, complement);
  const Index r = s.dim();
  const auto unit = find_unit(s);
  if (!unit) throw SimplicityUnverified("complement has no unit element, so it is not semisimple");

  // Split the center into primitive idempotents.
  const Subspace z = center(s);
  std::vector<Vector> idempotents{*unit};
  for (const auto& zb : z.basis()) {
    std::vector<Vector> refined;
    for (const auto& e : idempotents) {
      const Vector x = multiply(e, zb, s);
      const auto poly = minimal_polynomial(x, e, s);
      if (poly.size() == 2) {
        refined.push_back(e);
        continue;
      }
      const auto roots = rational_roots(poly);
      if (roots.size() + 1 != poly.size())
        throw NonSplitError("central element has minimal polynomial " + poly_string(poly) +
                            " which does not split into distinct rational linear factors");
      for (const auto& lambda : roots) {
        Vector p = e;
        for (const auto& mu : roots) {
          if (mu == lambda) continue;
          p = multiply(p, Vector(x - mu * e), s) / (lambda - mu);
        }
        refined.push_back(std::move(p));
      }
    }
    idempotents = std::move(refined);
  }

  std::vector<Subspace> blocks;
  for (const auto& e : idempotents) {
    Subspace b(r);
    for (Index j = 0; j < r; ++j) b.insert(multiply_basis_right(e, j, s));
    blocks.push_back(std::move(b));
  }

  // Merge blocks that the action operators connect.
  const ActionSet local = restrict_action(actions, complement);
  UnionFind uf(blocks.size());
  for (std::size_t k = 0; k < blocks.size(); ++k)
    for (const auto& op : local.operators)
      for (const auto& v : blocks[k].basis()) {
        const Vector w = op * v;
        for (std::size_t j = 0; j < blocks.size(); ++j)
          if (uf.find(j) != uf.find(k) && !is_zero_vector(multiply(w, idempotents[j], s))) uf.unite(k, j);
      }

  std::map<std::size_t, Subspace> merged;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    auto [it, inserted] = merged.try_emplace(uf.find(k), algebra.dim());
    for (const auto& v : blocks[k].basis()) {
      Vector ambient = Vector::Zero(algebra.dim());
      for (Index a = 0; a < r; ++a)
        if (!is_zero(v(a))) ambient += v(a) * complement.basis()[static_cast<std::size_t>(a)];
      it->second.insert(ambient);
    }
  }

  std::vector<Subspace> components;
  for (auto& [root, c] : merged) {
    const Algebra ca = restrict_to(algebra, c);
    const auto cert = is_action_simple(ca, restrict_action(actions, c));
    if (cert.verdict != SimplicityCertificate::Verdict::certified_yes)
      throw SimplicityUnverified("component of dimension " + std::to_string(c.dim()) +
                                 " has Burnside span " + std::to_string(cert.span_dim) + " < " +
                                 std::to_string(c.dim() * c.dim()));
    components.push_back(std::move(c));
  }
  std::sort(components.begin(), components.end(),
            [](const Subspace& a, const Subspace& b) { return a.pivots().front() < b.pivots().front(); });
  return components;
}

StructureReport analyze(const StructuredAlgebra& a) {
  const ActionSet actions = action_set(a);
  StructureReport report;
  report.radical = radical(a.algebra);
  if (auto k = action_invariance_check(report.radical, actions))
    throw RadicalNotInvariant("radical of " + a.name + " is not invariant under action operator " + std::to_string(*k));
  report.radical_powers = power_chain(report.radical, a.algebra);
  report.complement = wedderburn_malcev(a.algebra, report.radical, actions);
  report.components = simple_components(report.complement, a.algebra, actions);
  for (const auto& c : report.components) report.component_dims.push_back(c.dim());
  return report;
}

}  // namespace piexp
