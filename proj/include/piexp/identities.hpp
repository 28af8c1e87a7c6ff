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

#include "piexp/constructions.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace piexp {

struct Star {
  friend auto operator<=>(const Star&, const Star&) = default;
};

/// Decoration of a single variable: none (identity operator), a homogeneous
/// degree (grading projection), or the involution.
using Tag = std::variant<std::monostate, GroupElement, Star>;

enum class DecorationKind { plain, graded, involutive };

struct MultilinearMonomial {
  std::vector<int> sequence;  // variables (0-based) in product order
  std::vector<Tag> tags;      // indexed by variable

  int degree() const { return static_cast<int>(sequence.size()); }
  friend auto operator<=>(const MultilinearMonomial&, const MultilinearMonomial&) = default;
};

struct MultilinearPolynomial {
  int degree = 0;
  std::map<MultilinearMonomial, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  DecorationKind kind() const;
  void add(const MultilinearMonomial& m, const Rational& c);
  friend bool operator==(const MultilinearPolynomial&, const MultilinearPolynomial&) = default;
};

class PolynomialParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DecorationMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Grammar: term = [rational '*'] var+, var = 'x' INT ['^g' TUPLE | '\''],
/// TUPLE = INT | '(' INT (',' INT)* ')'; terms joined by '+' or '-'.
MultilinearPolynomial parse_polynomial(std::string_view text);
std::string to_string(const MultilinearPolynomial& f);

/// s_n = sum over permutations of sgn(sigma) x_sigma(1) ... x_sigma(n).
MultilinearPolynomial standard_polynomial(int n);
/// [x_1, x_2] [x_3, x_4] ... [x_{2k-1}, x_{2k}].
MultilinearPolynomial commutator_product(int pairs);

/// f(subs[0], ..., subs[m-1]); decorations act through the algebra's structure.
Vector evaluate(const MultilinearPolynomial& f, const std::vector<Vector>& subs, const StructuredAlgebra& a);

enum class Strategy { exact, sampled };

struct CodimensionOptions {
  Strategy strategy = Strategy::exact;
  /// Use the structure's decorations (graded or involutive codimensions).
  bool decorated = false;
  /// Sampled mode; 0 means 2 * m! * dim.
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  /// Exact mode refuses when m! * d^(m+1) * t^m exceeds this.
  double budget = 2e8;
  /// 0 means hardware concurrency.
  unsigned threads = 0;
};

struct CodimensionResult {
  Index value = 0;
  Strategy strategy = Strategy::exact;
  /// Sampled ranks are lower bounds.
  bool lower_bound = false;
  std::size_t rows = 0;
  std::size_t samples = 0;
};

/// Decorations available for a structure: plain [none]; graded: every degree;
/// involutive: [none, star].
std::vector<Tag> tag_set(const StructuredAlgebra& a, bool decorated);

/// Monomials of P_m (or P_m^H) in row order: permutations lexicographically,
/// then tag tuples lexicographically by variable.
std::vector<MultilinearMonomial> monomial_basis(int m, const std::vector<Tag>& tags);

CodimensionResult codimension(const StructuredAlgebra& a, int m, const CodimensionOptions& options = {});

/// Basis of the multilinear identities of degree m (exact mode).
std::vector<MultilinearPolynomial> identity_basis(const StructuredAlgebra& a, int m, const CodimensionOptions& options = {});

struct IdentityCheck {
  bool holds = true;
  std::vector<Index> witness;  // basis indices of a tuple with nonzero value
  Vector value;
};

/// Exhaustive over basis tuples, complete by multilinearity.
IdentityCheck is_identity(const MultilinearPolynomial& f, const StructuredAlgebra& a);

struct ContainmentResult {
  bool holds = true;
  Index kernel_dim = 0;
  std::optional<MultilinearPolynomial> counterexample;  // identity of A failing on B
};

/// Whether every degree-m multilinear identity of A is an identity of B.
ContainmentResult containment_at_degree(const StructuredAlgebra& a, const StructuredAlgebra& b, int m,
                                        const CodimensionOptions& options = {});

struct RegevCheck {
  Index tensor = 0;   // c_m(A (x) B)
  Index factor_a = 0;
  Index factor_b = 0;
  Index product() const { return factor_a * factor_b; }
  bool holds() const { return tensor <= product(); }
};

RegevCheck regev_bound_check(const StructuredAlgebra& a, const StructuredAlgebra& b, int m,
                             const CodimensionOptions& options = {});

}  // namespace piexp
