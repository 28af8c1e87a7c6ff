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

#include "piexp/identities.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>
#include <unordered_set>

namespace piexp {

// ---------------------------------------------------------------------------
// Polynomials

DecorationKind MultilinearPolynomial::kind() const {
  for (const auto& [m, c] : terms)
    for (const auto& t : m.tags) {
      if (std::holds_alternative<GroupElement>(t)) return DecorationKind::graded;
      if (std::holds_alternative<Star>(t)) return DecorationKind::involutive;
    }
  return DecorationKind::plain;
}

void MultilinearPolynomial::add(const MultilinearMonomial& m, const Rational& c) {
  if (m.degree() != degree) throw std::invalid_argument("monomial degree differs from polynomial degree");
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) it->second += c;
  if (piexp::is_zero(it->second)) terms.erase(it);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  MultilinearPolynomial parse() {
    struct Raw {
      Rational coeff;
      std::vector<std::pair<int, Tag>> letters;
    };
    std::vector<Raw> raw;
    skip();
    int sign = 1;
    if (accept_sign(sign)) skip();
    while (true) {
      Raw term{Rational(sign), {}};
      if (std::isdigit(peek())) {
        term.coeff *= rational_literal();
        skip();
        if (peek() == '*') {
          ++pos_;
          skip();
        }
      }
      while (peek() == 'x') term.letters.push_back(variable());
      if (term.letters.empty()) fail("expected a variable");
      raw.push_back(std::move(term));
      skip();
      if (pos_ == s_.size()) break;
      if (!accept_sign(sign)) fail("expected '+' or '-'");
      skip();
    }

    int m = 0;
    for (const auto& t : raw)
      for (const auto& [v, tag] : t.letters) m = std::max(m, v + 1);
    MultilinearPolynomial f;
    f.degree = m;
    std::optional<std::size_t> tuple_size;
    bool graded = false, starred = false;
    for (const auto& t : raw) {
      if (static_cast<int>(t.letters.size()) != m) fail("every term must contain x1..x" + std::to_string(m) + " exactly once");
      MultilinearMonomial mono;
      mono.tags.assign(static_cast<std::size_t>(m), std::monostate{});
      std::vector<bool> seen(static_cast<std::size_t>(m), false);
      for (const auto& [v, tag] : t.letters) {
        if (seen[static_cast<std::size_t>(v)]) fail("variable x" + std::to_string(v + 1) + " repeated in a term");
        seen[static_cast<std::size_t>(v)] = true;
        mono.sequence.push_back(v);
        mono.tags[static_cast<std::size_t>(v)] = tag;
        if (const auto* g = std::get_if<GroupElement>(&tag)) {
          graded = true;
          if (tuple_size && *tuple_size != g->size()) fail("degree tuples of different lengths");
          tuple_size = g->size();
        }
        if (std::holds_alternative<Star>(tag)) starred = true;
      }
      if (graded && starred) fail("graded and involution decorations cannot be mixed");
      f.add(mono, t.coeff);
    }
    return f;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw PolynomialParseError("polynomial, offset " + std::to_string(pos_) + ": " + what);
  }

  bool accept_sign(int& sign) {
    if (peek() == '+') {
      sign = 1;
      ++pos_;
      return true;
    }
    if (peek() == '-') {
      sign = -1;
      ++pos_;
      return true;
    }
    static constexpr std::string_view minus = "\xE2\x88\x92";  // U+2212
    if (s_.substr(pos_, minus.size()) == minus) {
      sign = -1;
      pos_ += minus.size();
      return true;
    }
    return false;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (std::isdigit(peek())) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  Rational rational_literal() {
    std::string lit = digits();
    if (peek() == '/') {
      ++pos_;
      lit += "/" + digits();
    }
    try {
      return parse_rational(lit);
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }

  std::pair<int, Tag> variable() {
    ++pos_;  // 'x'
    const int v = std::stoi(digits());
    if (v < 1) fail("variables are numbered from x1");
    Tag tag;
    if (peek() == '^') {
      ++pos_;
      if (peek() != 'g') fail("expected 'g' after '^'");
      ++pos_;
      GroupElement g;
      if (peek() == '(') {
        ++pos_;
        while (true) {
          skip();
          g.push_back(std::stoi(digits()));
          skip();
          if (peek() == ',') {
            ++pos_;
            continue;
          }
          if (peek() != ')') fail("expected ')'");
          ++pos_;
          break;
        }
      } else {
        g.push_back(std::stoi(digits()));
      }
      tag = g;
    } else if (peek() == '\'') {
      ++pos_;
      tag = Star{};
    }
    skip();
    return {v - 1, tag};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string tag_string(const Tag& t) {
  if (const auto* g = std::get_if<GroupElement>(&t)) {
    if (g->size() == 1) return "^g" + std::to_string(g->front());
    std::string s = "^g(";
    for (std::size_t i = 0; i < g->size(); ++i) s += (i ? "," : "") + std::to_string((*g)[i]);
    return s + ")";
  }
  if (std::holds_alternative<Star>(t)) return "'";
  return "";
}

long long factorial(int m) {
  long long f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace

MultilinearPolynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const MultilinearPolynomial& f) {
  if (f.terms.empty()) return "0";
  std::string out;
  for (const auto& [mono, c] : f.terms) {
    const bool negative = c < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const Rational a = negative ? Rational(-c) : c;
    if (a != 1) out += to_string(a) + " * ";
    for (std::size_t k = 0; k < mono.sequence.size(); ++k) {
      const int v = mono.sequence[k];
      out += (k ? " x" : "x") + std::to_string(v + 1) + tag_string(mono.tags[static_cast<std::size_t>(v)]);
    }
  }
  return out;
}

MultilinearPolynomial standard_polynomial(int n) {
  MultilinearPolynomial f;
  f.degree = n;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    f.add({perm, std::vector<Tag>(static_cast<std::size_t>(n))}, Rational(inversions % 2 ? -1 : 1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return f;
}

MultilinearPolynomial commutator_product(int pairs) {
  MultilinearPolynomial f;
  f.degree = 2 * pairs;
  for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
    std::vector<int> seq;
    int sign = 1;
    for (int p = 0; p < pairs; ++p) {
      const bool swapped = mask & (1u << p);
      seq.push_back(2 * p + (swapped ? 1 : 0));
      seq.push_back(2 * p + (swapped ? 0 : 1));
      if (swapped) sign = -sign;
    }
    f.add({seq, std::vector<Tag>(static_cast<std::size_t>(2 * pairs))}, Rational(sign));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Decorations

namespace {

Matrix tag_operator(const Tag& t, const StructuredAlgebra& a) {
  const Index d = a.dim();
  if (const auto* g = std::get_if<GroupElement>(&t)) {
    const Grading* grading = a.grading();
    if (!grading) throw DecorationMismatch(a.name + " carries no grading");
    if (g->size() != grading->group.size()) throw DecorationMismatch("degree tuple length differs from the group rank");
    for (std::size_t i = 0; i < g->size(); ++i)
      if ((*g)[i] < 0 || (*g)[i] >= grading->group[i]) throw DecorationMismatch("degree outside the grading group");
    return grading_projection(*grading, *g);
  }
  if (std::holds_alternative<Star>(t)) {
    const Involution* inv = a.involution();
    if (!inv) throw DecorationMismatch(a.name + " carries no involution");
    return inv->map;
  }
  return Matrix::Identity(d, d);
}

/// Distinct tags of f, and each variable's index into that list, per monomial.
struct ResolvedPolynomial {
  std::vector<Matrix> ops;
  struct Term {
    std::vector<int> sequence;
    std::vector<std::size_t> op;  // per variable
    Rational coeff;
  };
  std::vector<Term> terms;
};

ResolvedPolynomial resolve(const MultilinearPolynomial& f, const StructuredAlgebra& a) {
  ResolvedPolynomial r;
  std::vector<Tag> seen;
  for (const auto& [mono, c] : f.terms) {
    ResolvedPolynomial::Term t{mono.sequence, {}, c};
    for (const auto& tag : mono.tags) {
      auto it = std::find(seen.begin(), seen.end(), tag);
      if (it == seen.end()) {
        r.ops.push_back(tag_operator(tag, a));
        seen.push_back(tag);
        it = seen.end() - 1;
      }
      t.op.push_back(static_cast<std::size_t>(it - seen.begin()));
    }
    r.terms.push_back(std::move(t));
  }
  return r;
}

}  // namespace

Vector evaluate(const MultilinearPolynomial& f, const std::vector<Vector>& subs, const StructuredAlgebra& a) {
  if (static_cast<int>(subs.size()) != f.degree) throw DimensionMismatch("evaluate: need one substitution per variable");
  for (const auto& s : subs)
    if (s.size() != a.dim()) throw DimensionMismatch("evaluate: substitution length differs from the algebra dimension");
  const auto r = resolve(f, a);
  Vector out = Vector::Zero(a.dim());
  for (const auto& t : r.terms) {
    Vector p = r.ops[t.op[static_cast<std::size_t>(t.sequence[0])]] * subs[static_cast<std::size_t>(t.sequence[0])];
    for (std::size_t k = 1; k < t.sequence.size() && !is_zero_vector(p); ++k) {
      const auto v = static_cast<std::size_t>(t.sequence[k]);
      p = multiply(p, Vector(r.ops[t.op[v]] * subs[v]), a.algebra);
    }
    out += t.coeff * p;
  }
  return out;
}

std::vector<Tag> tag_set(const StructuredAlgebra& a, bool decorated) {
  if (!decorated) return {std::monostate{}};
  if (const auto* g = a.grading()) {
    std::vector<Tag> out;
    for (const auto& e : g->elements()) out.emplace_back(e);
    return out;
  }
  if (a.involution()) return {std::monostate{}, Star{}};
  return {std::monostate{}};
}

std::vector<MultilinearMonomial> monomial_basis(int m, const std::vector<Tag>& tags) {
  std::vector<MultilinearMonomial> out;
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  const std::size_t t = tags.size();
  std::size_t combos = 1;
  for (int i = 0; i < m; ++i) combos *= t;
  do {
    for (std::size_t c = 0; c < combos; ++c) {
      MultilinearMonomial mono{perm, std::vector<Tag>(static_cast<std::size_t>(m))};
      std::size_t rest = c;
      for (int v = m; v-- > 0;) {
        mono.tags[static_cast<std::size_t>(v)] = tags[rest % t];
        rest /= t;
      }
      out.push_back(std::move(mono));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation matrices

namespace {

/// Column space of the evaluation matrix, accumulated column by column.
/// Duplicate columns (up to scaling) are skipped before elimination.
class ColumnSpace {
 public:
  explicit ColumnSpace(std::size_t rows) : echelon_(static_cast<Index>(rows)), rows_(rows) {}

  bool full() const { return static_cast<std::size_t>(echelon_.rank()) == rows_; }
  const Echelon<Rational>& echelon() const { return echelon_; }

  /// entries: (row, value), rows strictly increasing, values nonzero.
  void add(const std::vector<std::pair<std::size_t, Rational>>& entries) {
    if (entries.empty() || full()) return;
    const Rational lead = entries.front().second;
    std::string key;
    for (const auto& [r, v] : entries) {
      key += std::to_string(r);
      key += ':';
      key += to_string(v / lead);
      key += ';';
    }
    if (seen_.size() < kMaxRemembered) {
      if (!seen_.insert(key).second) return;
    } else if (seen_.count(key)) {
      return;
    }
    Vector col = Vector::Zero(static_cast<Index>(rows_));
    for (const auto& [r, v] : entries) col(static_cast<Index>(r)) = v;
    echelon_.insert(std::move(col));
  }

  void merge(const ColumnSpace& other) {
    for (const auto& row : other.echelon_.rows()) {
      if (full()) return;
      echelon_.insert(row);
    }
  }

 private:
  static constexpr std::size_t kMaxRemembered = 1u << 18;
  Echelon<Rational> echelon_;
  std::size_t rows_;
  std::unordered_set<std::string> seen_;
};

using SparseVector = std::vector<std::pair<Index, Rational>>;

SparseVector sparse(const Vector& v) {
  SparseVector out;
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) out.emplace_back(i, v(i));
  return out;
}

/// Product of sparse vectors through the structure constants, sorted by index.
void sparse_multiply(const SparseVector& x, const SparseVector& y, const Algebra& a, SparseVector& out) {
  out.clear();
  for (const auto& [i, xi] : x)
    for (const auto& [j, yj] : y) {
      const auto terms = a.product(i, j);
      if (terms.empty()) continue;
      const Rational c = xi * yj;
      for (const auto& t : terms) out.emplace_back(t.index, c * t.coeff);
    }
  if (out.size() < 2) return;
  std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < out.size(); ++r) {
    if (w > 0 && out[w - 1].first == out[r].first) {
      out[w - 1].second += out[r].second;
    } else {
      if (w > 0 && is_zero(out[w - 1].second)) --w;
      out[w++] = std::move(out[r]);
    }
  }
  if (w > 0 && is_zero(out[w - 1].second)) --w;
  out.resize(w);
}

class EvaluationMatrix {
 public:
  EvaluationMatrix(const StructuredAlgebra& a, int m, const std::vector<Tag>& tags)
      : a_(a), m_(m), t_(tags.size()), d_(a.dim()) {
    if (m < 1) throw std::invalid_argument("degree must be at least 1");
    if (m > 20) throw std::invalid_argument("degree too large for multilinear enumeration");
    for (const auto& tag : tags) ops_.push_back(tag_operator(tag, a));
    rows_ = static_cast<std::size_t>(factorial(m));
    tag_combos_ = 1;
    for (int i = 0; i < m; ++i) tag_combos_ *= t_;
    rows_ *= tag_combos_;
    for (int k = 0; k < m; ++k) fact_.push_back(static_cast<std::size_t>(factorial(m - 1 - k)));
    tag_weight_.assign(static_cast<std::size_t>(m), 1);
    for (int v = m - 1; v-- > 0;) tag_weight_[static_cast<std::size_t>(v)] = tag_weight_[static_cast<std::size_t>(v + 1)] * t_;
    for (const auto& op : ops_) {
      std::vector<SparseVector> images;
      for (Index i = 0; i < d_; ++i) images.push_back(sparse(op.col(i)));
      basis_images_.push_back(std::move(images));
    }
  }

  std::size_t rows() const { return rows_; }

  /// Accumulates the columns of basis tuples [begin, end).
  void exact_columns(std::size_t begin, std::size_t end, ColumnSpace& out) const {
    Images images(static_cast<std::size_t>(m_), std::vector<const SparseVector*>(t_));
    Scratch scratch(static_cast<std::size_t>(m_) + 1);
    for (std::size_t tuple = begin; tuple < end && !out.full(); ++tuple) {
      std::size_t rest = tuple;
      for (int v = m_; v-- > 0;) {
        const auto i = static_cast<std::size_t>(rest % static_cast<std::size_t>(d_));
        rest /= static_cast<std::size_t>(d_);
        for (std::size_t g = 0; g < t_; ++g) images[static_cast<std::size_t>(v)][g] = &basis_images_[g][i];
      }
      emit_columns(images, scratch, out);
    }
  }

  /// Accumulates the columns of random tuples [begin, end).
  void sampled_columns(std::uint64_t seed, std::size_t begin, std::size_t end, ColumnSpace& out) const {
    std::vector<std::vector<SparseVector>> store(static_cast<std::size_t>(m_), std::vector<SparseVector>(t_));
    Images images(static_cast<std::size_t>(m_), std::vector<const SparseVector*>(t_));
    Scratch scratch(static_cast<std::size_t>(m_) + 1);
    for (std::size_t s = begin; s < end && !out.full(); ++s) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32)};
      std::mt19937_64 rng(seq);
      std::uniform_int_distribution<int> entry(-9, 9);
      for (int v = 0; v < m_; ++v) {
        Vector x(d_);
        for (Index i = 0; i < d_; ++i) x(i) = entry(rng);
        for (std::size_t g = 0; g < t_; ++g) {
          store[static_cast<std::size_t>(v)][g] = sparse(ops_[g] * x);
          images[static_cast<std::size_t>(v)][g] = &store[static_cast<std::size_t>(v)][g];
        }
      }
      emit_columns(images, scratch, out);
    }
  }

 private:
  using Images = std::vector<std::vector<const SparseVector*>>;
  using Scratch = std::vector<std::vector<SparseVector>>;  // per depth, per branch
  using Emission = std::vector<std::vector<std::pair<std::size_t, Rational>>>;

  void emit_columns(const Images& images, Scratch& scratch, ColumnSpace& out) const {
    Emission cols(static_cast<std::size_t>(d_));
    bool any = false;
    walk(images, scratch, 0, 0u, nullptr, 0, 0, cols, any);
    if (!any) return;
    for (auto& c : cols) {
      if (c.empty()) continue;
      std::sort(c.begin(), c.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      out.add(c);
    }
  }

  void walk(const Images& images, Scratch& scratch, int depth, unsigned used, const SparseVector* partial,
            std::size_t perm_rank, std::size_t tag_index, Emission& cols, bool& any) const {
    if (depth == m_) {
      const std::size_t row = perm_rank * tag_combos_ + tag_index;
      for (const auto& [k, v] : *partial) cols[static_cast<std::size_t>(k)].emplace_back(row, v);
      any = true;
      return;
    }
    auto& next = scratch[static_cast<std::size_t>(depth)];
    if (next.empty()) next.resize(1);
    std::size_t j = 0;
    for (int v = 0; v < m_; ++v) {
      if (used & (1u << v)) continue;
      for (std::size_t g = 0; g < t_; ++g) {
        const SparseVector* img = images[static_cast<std::size_t>(v)][g];
        if (img->empty()) continue;
        const SparseVector* product = img;
        if (partial) {
          sparse_multiply(*partial, *img, a_.algebra, next[0]);
          if (next[0].empty()) continue;
          product = &next[0];
        }
        walk(images, scratch, depth + 1, used | (1u << v), product, perm_rank + j * fact_[static_cast<std::size_t>(depth)],
             tag_index + g * tag_weight_[static_cast<std::size_t>(v)], cols, any);
      }
      ++j;
    }
  }

  const StructuredAlgebra& a_;
  int m_;
  std::size_t t_;
  Index d_;
  std::vector<Matrix> ops_;
  std::vector<std::vector<SparseVector>> basis_images_;
  std::size_t rows_ = 0, tag_combos_ = 1;
  std::vector<std::size_t> fact_, tag_weight_;
};

unsigned worker_count(unsigned requested, std::size_t work) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(work, 1)));
}

/// Splits [0, total) into contiguous chunks, one ColumnSpace per worker, and
/// joins them in chunk order.
template <typename Fill>
ColumnSpace parallel_columns(std::size_t rows, std::size_t total, unsigned threads, Fill fill) {
  const unsigned n = worker_count(threads, total);
  std::vector<ColumnSpace> parts(n, ColumnSpace(rows));
  auto chunk = [&](unsigned w) {
    const std::size_t lo = total * w / n, hi = total * (w + 1) / n;
    fill(lo, hi, parts[w]);
  };
  if (n == 1) {
    chunk(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < n; ++w) pool.emplace_back(chunk, w);
    for (auto& t : pool) t.join();
  }
  ColumnSpace merged(rows);
  for (const auto& p : parts) merged.merge(p);
  return merged;
}

struct Evaluated {
  std::vector<MultilinearMonomial> monomials;
  ColumnSpace space;
  std::size_t samples = 0;
};

Evaluated evaluation_space(const StructuredAlgebra& a, int m, const CodimensionOptions& options) {
  const auto tags = tag_set(a, options.decorated);
  EvaluationMatrix ev(a, m, tags);
  const double d = static_cast<double>(a.dim());
  if (options.strategy == Strategy::exact) {
    const double cost = static_cast<double>(factorial(m)) * std::pow(d, m + 1) * std::pow(static_cast<double>(tags.size()), m);
    if (cost > options.budget)
      throw BudgetExceeded("exact evaluation of degree " + std::to_string(m) + " on " + a.name + " needs " +
                           std::to_string(static_cast<long long>(cost)) + " operations, budget is " +
                           std::to_string(static_cast<long long>(options.budget)));
    std::size_t tuples = 1;
    for (int i = 0; i < m; ++i) tuples *= static_cast<std::size_t>(a.dim());
    auto space = parallel_columns(ev.rows(), tuples, options.threads,
                                  [&](std::size_t lo, std::size_t hi, ColumnSpace& out) { ev.exact_columns(lo, hi, out); });
    return {monomial_basis(m, tags), std::move(space), 0};
  }
  std::size_t n = options.samples;
  if (n == 0) n = 2 * static_cast<std::size_t>(factorial(m)) * static_cast<std::size_t>(a.dim());
  auto space = parallel_columns(ev.rows(), n, options.threads, [&](std::size_t lo, std::size_t hi, ColumnSpace& out) {
    ev.sampled_columns(options.seed, lo, hi, out);
  });
  return {monomial_basis(m, tags), std::move(space), n};
}

std::vector<Vector> kernel_vectors(const ColumnSpace& space, std::size_t rows) {
  const auto& e = space.echelon();
  std::vector<bool> pivot(rows, false);
  for (Index p : e.pivots()) pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < rows; ++f) {
    if (pivot[f]) continue;
    // Orthogonal to every echelon row: free coordinate f = 1, pivot coordinates fixed by the rows.
    Vector x = Vector::Zero(static_cast<Index>(rows));
    x(static_cast<Index>(f)) = Rational(1);
    for (std::size_t r = 0; r < e.rows().size(); ++r) {
      const Rational& c = e.rows()[r](static_cast<Index>(f));
      if (!is_zero(c)) x(e.pivots()[r]) = -c;
    }
    out.push_back(std::move(x));
  }
  return out;
}

MultilinearPolynomial as_polynomial(const Vector& v, const std::vector<MultilinearMonomial>& monomials, int m) {
  MultilinearPolynomial f;
  f.degree = m;
  for (Index r = 0; r < v.size(); ++r)
    if (!is_zero(v(r))) f.add(monomials[static_cast<std::size_t>(r)], v(r));
  return f;
}

}  // namespace

CodimensionResult codimension(const StructuredAlgebra& a, int m, const CodimensionOptions& options) {
  const auto ev = evaluation_space(a, m, options);
  CodimensionResult r;
  r.value = ev.space.echelon().rank();
  r.strategy = options.strategy;
  r.lower_bound = options.strategy == Strategy::sampled;
  r.rows = ev.monomials.size();
  r.samples = ev.samples;
  return r;
}

std::vector<MultilinearPolynomial> identity_basis(const StructuredAlgebra& a, int m, const CodimensionOptions& options) {
  CodimensionOptions exact = options;
  exact.strategy = Strategy::exact;
  const auto ev = evaluation_space(a, m, exact);
  std::vector<MultilinearPolynomial> out;
  for (const auto& v : kernel_vectors(ev.space, ev.monomials.size())) out.push_back(as_polynomial(v, ev.monomials, m));
  return out;
}

IdentityCheck is_identity(const MultilinearPolynomial& f, const StructuredAlgebra& a) {
  IdentityCheck out;
  const int m = f.degree;
  if (m == 0) {
    out.holds = f.is_zero();
    return out;
  }
  const auto r = resolve(f, a);
  const Index d = a.dim();
  std::vector<std::vector<Vector>> images;  // [op][basis index]
  for (const auto& op : r.ops) {
    std::vector<Vector> col;
    for (Index i = 0; i < d; ++i) col.push_back(op.col(i));
    images.push_back(std::move(col));
  }
  std::vector<Index> tuple(static_cast<std::size_t>(m), 0);
  while (true) {
    Vector value = Vector::Zero(d);
    for (const auto& t : r.terms) {
      const auto v0 = static_cast<std::size_t>(t.sequence[0]);
      Vector p = images[t.op[v0]][static_cast<std::size_t>(tuple[v0])];
      for (std::size_t k = 1; k < t.sequence.size() && !is_zero_vector(p); ++k) {
        const auto v = static_cast<std::size_t>(t.sequence[k]);
        p = multiply(p, images[t.op[v]][static_cast<std::size_t>(tuple[v])], a.algebra);
      }
      if (!is_zero_vector(p)) value += t.coeff * p;
    }
    if (!is_zero_vector(value)) {
      out.holds = false;
      out.witness = tuple;
      out.value = value;
      return out;
    }
    int k = m - 1;
    while (k >= 0 && ++tuple[static_cast<std::size_t>(k)] == d) tuple[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
  }
  return out;
}

ContainmentResult containment_at_degree(const StructuredAlgebra& a, const StructuredAlgebra& b, int m,
                                        const CodimensionOptions& options) {
  CodimensionOptions exact = options;
  exact.strategy = Strategy::exact;
  if (tag_set(a, exact.decorated) != tag_set(b, exact.decorated))
    throw DecorationMismatch("containment needs the same decorations on both algebras");
  const auto ea = evaluation_space(a, m, exact);
  const auto eb = evaluation_space(b, m, exact);
  ContainmentResult out;
  const auto kernel = kernel_vectors(ea.space, ea.monomials.size());
  out.kernel_dim = static_cast<Index>(kernel.size());
  for (const auto& k : kernel) {
    for (const auto& row : eb.space.echelon().rows()) {
      Rational dot(0);
      for (Index i = 0; i < row.size(); ++i)
        if (!is_zero(row(i)) && !is_zero(k(i))) dot += row(i) * k(i);
      if (!is_zero(dot)) {
        out.holds = false;
        out.counterexample = as_polynomial(k, ea.monomials, m);
        return out;
      }
    }
  }
  return out;
}

RegevCheck regev_bound_check(const StructuredAlgebra& a, const StructuredAlgebra& b, int m,
                             const CodimensionOptions& options) {
  CodimensionOptions plain = options;
  plain.strategy = Strategy::exact;
  plain.decorated = false;
  const auto pa = forget_structure(a), pb = forget_structure(b);
  RegevCheck r;
  r.factor_a = codimension(pa, m, plain).value;
  r.factor_b = codimension(pb, m, plain).value;
  r.tensor = codimension(tensor_product(pa, pb), m, plain).value;
  return r;
}

}  // namespace piexp
