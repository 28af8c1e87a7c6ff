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

#include "piexp/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace piexp {

namespace {

std::string pair_label(int i, int j, int n) {
  if (n < 10) return "e" + std::to_string(i) + std::to_string(j);
  return "e" + std::to_string(i) + "," + std::to_string(j);
}

std::string degree_string(const GroupElement& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

Vector unit_from_indices(Index dim, const std::vector<Index>& idx) {
  Vector u = Vector::Zero(dim);
  for (Index i : idx) u(i) = 1;
  return u;
}

std::vector<std::vector<int>> grassmann_words(int k) {
  std::vector<std::vector<int>> words;
  for (int len = 0; len <= k; ++len) {
    std::vector<bool> pick(static_cast<std::size_t>(k), false);
    std::fill(pick.begin(), pick.begin() + len, true);
    do {
      std::vector<int> w;
      for (int i = 0; i < k; ++i)
        if (pick[static_cast<std::size_t>(i)]) w.push_back(i);
      words.push_back(std::move(w));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return words;
}

}  // namespace

std::size_t Grading::order() const {
  std::size_t n = 1;
  for (int f : group) n *= static_cast<std::size_t>(f);
  return n;
}

std::vector<GroupElement> Grading::elements() const {
  std::vector<GroupElement> out;
  GroupElement g(group.size(), 0);
  for (std::size_t c = 0; c < order(); ++c) {
    out.push_back(g);
    for (std::size_t i = group.size(); i-- > 0;) {
      if (++g[i] < group[i]) break;
      g[i] = 0;
    }
  }
  return out;
}

GroupElement Grading::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement c(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) c[i] = (a[i] + b[i]) % group[i];
  return c;
}

GroupElement Grading::negate(const GroupElement& a) const {
  GroupElement c(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) c[i] = (group[i] - a[i] % group[i]) % group[i];
  return c;
}

std::size_t Grading::element_index(const GroupElement& g) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < group.size(); ++i) idx = idx * static_cast<std::size_t>(group[i]) + static_cast<std::size_t>(g[i]);
  return idx;
}

std::optional<std::string> check_grading(const Algebra& algebra, const Grading& grading) {
  for (int f : grading.group)
    if (f < 1) return "group factor orders must be positive";
  if (static_cast<Index>(grading.degrees.size()) != algebra.dim())
    return "grading assigns " + std::to_string(grading.degrees.size()) + " degrees to a dimension " +
           std::to_string(algebra.dim()) + " algebra";
  for (std::size_t i = 0; i < grading.degrees.size(); ++i) {
    const auto& g = grading.degrees[i];
    if (g.size() != grading.group.size()) return "degree of basis " + std::to_string(i) + " has wrong arity";
    for (std::size_t c = 0; c < g.size(); ++c)
      if (g[c] < 0 || g[c] >= grading.group[c]) return "degree of basis " + std::to_string(i) + " out of range";
  }
  for (const auto& e : algebra.entries()) {
    const auto expect = grading.add(grading.degrees[static_cast<std::size_t>(e.left)],
                                    grading.degrees[static_cast<std::size_t>(e.right)]);
    if (grading.degrees[static_cast<std::size_t>(e.result)] != expect)
      return "product e" + std::to_string(e.left + 1) + "*e" + std::to_string(e.right + 1) + " has a component on e" +
             std::to_string(e.result + 1) + " of degree " +
             degree_string(grading.degrees[static_cast<std::size_t>(e.result)]) + ", expected " + degree_string(expect);
  }
  return std::nullopt;
}

std::optional<std::string> check_involution(const Algebra& algebra, const Involution& involution) {
  const Index d = algebra.dim();
  const Matrix& m = involution.map;
  if (m.rows() != d || m.cols() != d) return "involution matrix has wrong shape";
  if (Matrix(m * m) != Matrix::Identity(d, d)) return "involution does not square to the identity";
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      Vector lhs = m * multiply(algebra.basis_vector(i), algebra.basis_vector(j), algebra);
      Vector rhs = multiply(m.col(j), m.col(i), algebra);
      if (lhs != rhs)
        return "(e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1) + ")* differs from e" +
               std::to_string(j + 1) + "* e" + std::to_string(i + 1) + "*";
    }
  return std::nullopt;
}

void check_structured(const StructuredAlgebra& a) {
  if (auto v = validate(a.algebra)) {
    if (v->kind == Violation::Kind::unit)
      throw ConstructionError("unit does not act as identity on e" + std::to_string(v->i + 1));
    throw ConstructionError("associativity fails at (e" + std::to_string(v->i + 1) + ", e" + std::to_string(v->j + 1) +
                            ", e" + std::to_string(v->k + 1) + ")");
  }
  if (auto g = a.grading())
    if (auto err = check_grading(a.algebra, *g)) throw ConstructionError("grading: " + *err);
  if (auto inv = a.involution())
    if (auto err = check_involution(a.algebra, *inv)) throw ConstructionError("involution: " + *err);
}

Matrix grading_projection(const Grading& grading, const GroupElement& g) {
  const Index d = static_cast<Index>(grading.degrees.size());
  Matrix p = Matrix::Zero(d, d);
  for (Index i = 0; i < d; ++i)
    if (grading.degrees[static_cast<std::size_t>(i)] == g) p(i, i) = 1;
  return p;
}

StructuredAlgebra incidence(int size, const std::vector<std::pair<int, int>>& relations) {
  if (size < 1) throw ConstructionError("poset must be nonempty");
  const auto n = static_cast<std::size_t>(size);
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) le[x][x] = true;
  for (auto [x, y] : relations) {
    if (x < 1 || y < 1 || x > size || y > size)
      throw ConstructionError("poset relation (" + std::to_string(x) + "," + std::to_string(y) + ") out of range");
    le[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y - 1)] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (le[x][k] && le[k][y]) le[x][y] = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (le[x][y] && le[y][x])
        throw ConstructionError("relations contain a cycle through " + std::to_string(x + 1) + " and " +
                                std::to_string(y + 1));

  std::map<std::pair<std::size_t, std::size_t>, Index> index;
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (le[x][y]) {
        index[{x, y}] = static_cast<Index>(labels.size());
        labels.push_back(pair_label(static_cast<int>(x + 1), static_cast<int>(y + 1), size));
      }
  std::vector<StructureConstant> entries;
  std::vector<Index> diagonal;
  for (auto& [xy, i] : index) {
    if (xy.first == xy.second) diagonal.push_back(i);
    for (auto& [zw, j] : index)
      if (xy.second == zw.first) entries.push_back({i, j, index.at({xy.first, zw.second}), Rational(1)});
  }
  const Index d = static_cast<Index>(labels.size());
  return {"I(X)", Algebra(d, std::move(labels), entries, unit_from_indices(d, diagonal)), {}};
}

StructuredAlgebra upper_triangular(int n) {
  if (n < 1) throw ConstructionError("ut(n) needs n >= 1");
  std::vector<std::pair<int, int>> chain;
  for (int i = 1; i < n; ++i) chain.emplace_back(i, i + 1);
  auto a = incidence(n, chain);
  a.name = "UT" + std::to_string(n);
  return a;
}

StructuredAlgebra full_matrix(int n) {
  if (n < 1) throw ConstructionError("full_matrix(n) needs n >= 1");
  std::vector<StructureConstant> entries;
  std::vector<std::string> labels;
  std::vector<Index> diagonal;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      labels.push_back(pair_label(i + 1, j + 1, n));
      if (i == j) diagonal.push_back(i * n + j);
      for (int l = 0; l < n; ++l) entries.push_back({i * n + j, j * n + l, i * n + l, Rational(1)});
    }
  const Index d = static_cast<Index>(n) * n;
  return {"M" + std::to_string(n), Algebra(d, std::move(labels), entries, unit_from_indices(d, diagonal)), {}};
}

StructuredAlgebra full_matrix_elementary(int n, std::vector<int> group, const std::vector<GroupElement>& tuple) {
  if (static_cast<int>(tuple.size()) != n) throw ConstructionError("elementary grading tuple must have n entries");
  auto a = full_matrix(n);
  Grading g{std::move(group), {}};
  for (const auto& t : tuple)
    if (t.size() != g.group.size()) throw ConstructionError("elementary grading entry has wrong arity");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      GroupElement gi = tuple[static_cast<std::size_t>(i)], gj = tuple[static_cast<std::size_t>(j)];
      for (std::size_t c = 0; c < gi.size(); ++c) {
        gi[c] = ((gi[c] % g.group[c]) + g.group[c]) % g.group[c];
        gj[c] = ((gj[c] % g.group[c]) + g.group[c]) % g.group[c];
      }
      g.degrees.push_back(g.add(g.negate(gi), gj));
    }
  return with_grading(std::move(a), std::move(g));
}

StructuredAlgebra zero_algebra(int d) {
  if (d < 0) throw ConstructionError("zero(d) needs d >= 0");
  std::vector<std::string> labels;
  for (int i = 0; i < d; ++i) labels.push_back("r" + std::to_string(i + 1));
  return {"R" + std::to_string(d), Algebra(d, std::move(labels), {}), {}};
}

StructuredAlgebra field() {
  Vector u(1);
  u(0) = 1;
  return {"F", Algebra(1, {"1"}, {{0, 0, 0, Rational(1)}}, u), {}};
}

StructuredAlgebra group_algebra(const std::vector<int>& orders) {
  for (int o : orders)
    if (o != 2)
      throw ConstructionError("group_algebra: cyclic factor of order " + std::to_string(o) +
                              " is not split over the rationals; only Z_2 factors are supported");
  Grading grading{orders, {}};
  const auto elements = grading.elements();
  std::vector<std::string> labels;
  for (const auto& g : elements) {
    std::string l;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i]) l += orders.size() == 1 ? "c" : "c" + std::to_string(i + 1);
    labels.push_back(l.empty() ? "1" : l);
  }
  std::vector<StructureConstant> entries;
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = 0; b < elements.size(); ++b)
      entries.push_back({static_cast<Index>(a), static_cast<Index>(b),
                         static_cast<Index>(grading.element_index(grading.add(elements[a], elements[b]))), Rational(1)});
  grading.degrees = elements;
  const Index d = static_cast<Index>(elements.size());
  return {"FZ2^" + std::to_string(orders.size()), Algebra(d, std::move(labels), entries, unit_from_indices(d, {0})),
          std::move(grading)};
}

StructuredAlgebra grassmann_truncated(int k) {
  if (k < 1) throw ConstructionError("grassmann_truncated(k) needs k >= 1");
  const auto words = grassmann_words(k);
  std::map<std::vector<int>, Index> index;
  std::vector<std::string> labels;
  Grading grading{{2}, {}};
  for (const auto& w : words) {
    index[w] = static_cast<Index>(labels.size());
    std::string l;
    for (int g : w) l += "g" + std::to_string(g + 1);
    labels.push_back(l.empty() ? "1" : l);
    grading.degrees.push_back({static_cast<int>(w.size() % 2)});
  }
  std::vector<StructureConstant> entries;
  for (const auto& u : words)
    for (const auto& v : words) {
      std::vector<int> merged;
      std::set_union(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(merged));
      if (merged.size() != u.size() + v.size()) continue;
      int inversions = 0;
      for (int a : u)
        for (int b : v)
          if (a > b) ++inversions;
      entries.push_back({index[u], index[v], index[merged], Rational(inversions % 2 ? -1 : 1)});
    }
  const Index d = static_cast<Index>(words.size());
  return {"G" + std::to_string(k), Algebra(d, std::move(labels), entries, unit_from_indices(d, {0})),
          std::move(grading)};
}

Involution matrix_involution(int n, InvolutionKind kind) {
  const Index d = static_cast<Index>(n) * n;
  Matrix omega = Matrix::Identity(n, n);
  if (kind == InvolutionKind::symplectic) {
    if (n % 2) throw ConstructionError("symplectic involution needs even n");
    const int h = n / 2;
    omega = Matrix::Zero(n, n);
    for (int i = 0; i < h; ++i) {
      omega(i, h + i) = 1;
      omega(h + i, i) = -1;
    }
  }
  const Matrix omega_inv = *inverse<Rational>(omega);
  Involution inv{Matrix::Zero(d, d)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix e = Matrix::Zero(n, n);
      e(j, i) = 1;  // transpose of E_ij
      const Matrix image = omega * e * omega_inv;
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.map(r * n + c, i * n + j) = image(r, c);
    }
  return inv;
}

Involution upper_triangular_reflection(int n) {
  auto ut = upper_triangular(n);
  const Index d = ut.dim();
  std::map<std::pair<int, int>, Index> index;
  Index next = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) index[{i, j}] = next++;
  Involution inv{Matrix::Zero(d, d)};
  for (auto& [ij, k] : index) inv.map(index.at({n + 1 - ij.second, n + 1 - ij.first}), k) = 1;
  return inv;
}

StructuredAlgebra build(const Family& f) {
  StructuredAlgebra a;
  switch (f.kind) {
    case Family::Kind::ut:
      return upper_triangular(f.n);
    case Family::Kind::full_matrix:
      a = f.elementary.empty() ? full_matrix(f.n) : full_matrix_elementary(f.n, f.group, f.elementary);
      if (f.involution) {
        if (!f.elementary.empty()) throw ConstructionError("full_matrix: grading and involution are exclusive");
        a = with_involution(std::move(a), matrix_involution(f.n, *f.involution));
      }
      return a;
    case Family::Kind::zero:
      return zero_algebra(f.n);
    case Family::Kind::field:
      return field();
    case Family::Kind::group_algebra:
      return group_algebra(f.group);
    case Family::Kind::incidence:
      return incidence(f.n, f.relations);
    case Family::Kind::grassmann:
      return grassmann_truncated(f.n);
  }
  throw ConstructionError("unknown family");
}

StructuredAlgebra with_grading(StructuredAlgebra a, Grading grading) {
  if (auto err = check_grading(a.algebra, grading)) throw ConstructionError("grading: " + *err);
  a.structure = std::move(grading);
  return a;
}

StructuredAlgebra with_involution(StructuredAlgebra a, Involution involution) {
  if (auto err = check_involution(a.algebra, involution)) throw ConstructionError("involution: " + *err);
  a.structure = std::move(involution);
  return a;
}

StructuredAlgebra forget_structure(StructuredAlgebra a) {
  a.structure = std::monostate{};
  return a;
}

StructuredAlgebra matrix_algebra(const StructuredAlgebra& a, int n) {
  if (n < 1) throw ConstructionError("matrix_algebra needs n >= 1");
  const Index da = a.dim();
  const Index d = static_cast<Index>(n) * n * da;
  auto idx = [&](int i, int j, Index x) { return (static_cast<Index>(i) * n + j) * da + x; };
  const auto base = a.algebra.entries();
  std::vector<StructureConstant> entries;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (Index x = 0; x < da; ++x)
        labels.push_back("E" + std::to_string(i + 1) + (n < 10 ? "" : ",") + std::to_string(j + 1) + "[" +
                         a.algebra.labels()[static_cast<std::size_t>(x)] + "]");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        for (const auto& e : base) entries.push_back({idx(i, j, e.left), idx(j, l, e.right), idx(i, l, e.result), e.value});
  std::optional<Vector> unit;
  if (auto u = find_unit(a.algebra); u && da > 0) {
    unit = Vector::Zero(d);
    for (int i = 0; i < n; ++i)
      for (Index x = 0; x < da; ++x) (*unit)(idx(i, i, x)) = (*u)(x);
  }
  StructuredAlgebra out{"M" + std::to_string(n) + "(" + a.name + ")", Algebra(d, std::move(labels), entries, unit), {}};
  if (auto g = a.grading()) {
    Grading mg{g->group, {}};
    for (int p = 0; p < n * n; ++p)
      for (Index x = 0; x < da; ++x) mg.degrees.push_back(g->degrees[static_cast<std::size_t>(x)]);
    out.structure = std::move(mg);
  } else if (auto inv = a.involution()) {
    Involution mi{Matrix::Zero(d, d)};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (Index x = 0; x < da; ++x)
          for (Index y = 0; y < da; ++y) mi.map(idx(j, i, y), idx(i, j, x)) = inv->map(y, x);
    out.structure = std::move(mi);
  }
  return out;
}

StructuredAlgebra tensor_product(const StructuredAlgebra& a, const StructuredAlgebra& b) {
  const Index da = a.dim(), db = b.dim();
  const Index d = da * db;
  const auto ea = a.algebra.entries();
  const auto eb = b.algebra.entries();
  std::vector<StructureConstant> entries;
  entries.reserve(ea.size() * eb.size());
  for (const auto& x : ea)
    for (const auto& y : eb)
      entries.push_back({x.left * db + y.left, x.right * db + y.right, x.result * db + y.result, x.value * y.value});
  std::vector<std::string> labels;
  for (const auto& la : a.algebra.labels())
    for (const auto& lb : b.algebra.labels()) labels.push_back(la + "⊗" + lb);
  std::optional<Vector> unit;
  auto ua = find_unit(a.algebra), ub = find_unit(b.algebra);
  if (ua && ub && d > 0) {
    unit = Vector::Zero(d);
    for (Index x = 0; x < da; ++x)
      for (Index y = 0; y < db; ++y) (*unit)(x * db + y) = (*ua)(x) * (*ub)(y);
  }
  StructuredAlgebra out{"(" + a.name + "⊗" + b.name + ")", Algebra(d, std::move(labels), entries, unit), {}};

  const auto* ga = a.grading();
  const auto* gb = b.grading();
  const auto* ia = a.involution();
  const auto* ib = b.involution();
  if ((ga && ib) || (ia && gb)) throw ConstructionError("tensor_product: cannot combine a grading with an involution");
  if (ga || gb) {
    Grading g;
    if (ga) g.group = ga->group;
    if (gb) g.group.insert(g.group.end(), gb->group.begin(), gb->group.end());
    for (Index x = 0; x < da; ++x)
      for (Index y = 0; y < db; ++y) {
        GroupElement deg;
        if (ga) deg = ga->degrees[static_cast<std::size_t>(x)];
        if (gb) deg.insert(deg.end(), gb->degrees[static_cast<std::size_t>(y)].begin(),
                           gb->degrees[static_cast<std::size_t>(y)].end());
        g.degrees.push_back(std::move(deg));
      }
    out.structure = std::move(g);
  } else if (ia || ib) {
    if (!(ia && ib)) throw ConstructionError("tensor_product: involution needed on both factors");
    Involution inv{Matrix::Zero(d, d)};
    for (Index x = 0; x < da; ++x)
      for (Index y = 0; y < db; ++y)
        for (Index x2 = 0; x2 < da; ++x2) {
          if (is_zero(ia->map(x2, x))) continue;
          for (Index y2 = 0; y2 < db; ++y2)
            if (!is_zero(ib->map(y2, y))) inv.map(x2 * db + y2, x * db + y) = ia->map(x2, x) * ib->map(y2, y);
        }
    out.structure = std::move(inv);
  }
  return out;
}

StructuredAlgebra grassmann_envelope(const StructuredAlgebra& b, int k) {
  const auto* g = b.grading();
  if (!g || g->group != std::vector<int>{2}) throw ConstructionError("grassmann_envelope needs a Z_2-graded algebra");
  const auto gk = grassmann_truncated(k);
  const auto* gg = gk.grading();
  const Index dg = gk.dim();
  std::map<std::pair<Index, Index>, Index> index;
  std::vector<std::string> labels;
  Grading eg{{2}, {}};
  for (Index x = 0; x < b.dim(); ++x)
    for (Index w = 0; w < dg; ++w)
      if (g->degrees[static_cast<std::size_t>(x)] == gg->degrees[static_cast<std::size_t>(w)]) {
        index[{x, w}] = static_cast<Index>(labels.size());
        labels.push_back(b.algebra.labels()[static_cast<std::size_t>(x)] + "⊗" +
                         gk.algebra.labels()[static_cast<std::size_t>(w)]);
        eg.degrees.push_back(g->degrees[static_cast<std::size_t>(x)]);
      }
  std::vector<StructureConstant> entries;
  for (auto& [xw, i] : index)
    for (auto& [yv, j] : index)
      for (const auto& tb : b.algebra.product(xw.first, yv.first))
        for (const auto& tg : gk.algebra.product(xw.second, yv.second))
          entries.push_back({i, j, index.at({tb.index, tg.index}), tb.coeff * tg.coeff});
  const Index d = static_cast<Index>(labels.size());
  std::optional<Vector> unit;
  if (auto u = find_unit(b.algebra)) {
    unit = Vector::Zero(d);
    for (Index x = 0; x < b.dim(); ++x)
      if (!is_zero((*u)(x))) {
        auto it = index.find({x, 0});
        if (it == index.end()) {
          unit.reset();
          break;
        }
        (*unit)(it->second) = (*u)(x);
      }
  }
  return {"G(" + b.name + ")", Algebra(d, std::move(labels), entries, unit), std::move(eg)};
}

StructuredAlgebra direct_sum(const StructuredAlgebra& a, const StructuredAlgebra& b) {
  const Index da = a.dim(), db = b.dim();
  const Index d = da + db;
  auto entries = a.algebra.entries();
  for (auto e : b.algebra.entries()) entries.push_back({e.left + da, e.right + da, e.result + da, e.value});
  auto labels = a.algebra.labels();
  for (const auto& l : b.algebra.labels()) labels.push_back(l + (std::count(labels.begin(), labels.end(), l) ? "'" : ""));
  std::optional<Vector> unit;
  auto ua = find_unit(a.algebra), ub = find_unit(b.algebra);
  if (ua && ub) {
    unit = Vector::Zero(d);
    unit->head(da) = *ua;
    unit->tail(db) = *ub;
  }
  StructuredAlgebra out{"(" + a.name + "⊕" + b.name + ")", Algebra(d, std::move(labels), entries, unit), {}};
  const auto* ga = a.grading();
  const auto* gb = b.grading();
  const auto* ia = a.involution();
  const auto* ib = b.involution();
  if (ga || gb) {
    if (!(ga && gb) || ga->group != gb->group) throw ConstructionError("direct_sum: incompatible gradings");
    Grading g{ga->group, ga->degrees};
    g.degrees.insert(g.degrees.end(), gb->degrees.begin(), gb->degrees.end());
    out.structure = std::move(g);
  } else if (ia || ib) {
    if (!(ia && ib)) throw ConstructionError("direct_sum: involution needed on both summands");
    Involution inv{Matrix::Zero(d, d)};
    inv.map.topLeftCorner(da, da) = ia->map;
    inv.map.bottomRightCorner(db, db) = ib->map;
    out.structure = std::move(inv);
  }
  return out;
}

StructuredAlgebra exchange_involution(const StructuredAlgebra& a) {
  const auto plain = forget_structure(a);
  StructuredAlgebra op{a.name + "^op", opposite(a.algebra), {}};
  auto sum = direct_sum(plain, op);
  const Index da = a.dim();
  Involution swap{Matrix::Zero(2 * da, 2 * da)};
  for (Index i = 0; i < da; ++i) {
    swap.map(da + i, i) = 1;
    swap.map(i, da + i) = 1;
  }
  sum.name = "(" + a.name + "⊕" + a.name + "^op)";
  return with_involution(std::move(sum), std::move(swap));
}

}  // namespace piexp
