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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace piexp {

/// The algebra needs a field extension to split (out of scope).
class NonSplitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A candidate simple block could not be certified by the Burnside span.
class SimplicityUnverified : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RadicalNotInvariant : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The equivariant lifting system for a complement had no solution.
class ComplementNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Distinct rational roots of sum coeffs[i] x^i, ascending.
std::vector<Rational> rational_roots(std::vector<Rational> coeffs);

/// Linear operators through which the extra structure acts. operators[0]
/// is always the identity.
struct ActionSet {
  enum class Kind { trivial, grading, involution };
  Kind kind = Kind::trivial;
  std::vector<Matrix> operators;
};

ActionSet identity_action(Index dim);
/// trivial: {Id}; grading: {Id, pi_g for every g}; involution: {Id, *}.
ActionSet action_set(const StructuredAlgebra& a);
/// Every operator restricted to an invariant subspace.
ActionSet restrict_action(const ActionSet& actions, const Subspace& s);

/// Null space of the trace form (x, a) -> tr L_{xa} on the unitization.
Subspace radical(const Algebra& algebra);

/// Index of the first operator that does not map s into itself.
std::optional<std::size_t> action_invariance_check(const Subspace& s, const ActionSet& actions);

/// Action-stable subalgebra S with A = S + J, S and J independent.
/// Throws if J is not an action-stable ideal or the lifting system is inconsistent.
Subspace wedderburn_malcev(const Algebra& algebra, const Subspace& radical, const ActionSet& actions);
Subspace wedderburn_malcev(const Algebra& algebra);

/// Decomposition of a complement into action-simple two-sided ideals,
/// ordered by leading pivot. Throws NonSplitError / SimplicityUnverified.
std::vector<Subspace> simple_components(const Subspace& complement, const Algebra& algebra, const ActionSet& actions);

struct SimplicityCertificate {
  enum class Verdict { certified_yes, no, inconclusive };
  Verdict verdict = Verdict::inconclusive;
  /// Dimension of the operator algebra generated by multiplications and the action.
  Index span_dim = 0;
  bool zero_product = false;
  /// Proper nonzero invariant ideal when verdict == no (empty subspace when A^2 = 0).
  std::optional<Subspace> witness;
};

/// Burnside test: certified_yes iff A^2 != 0 and the unital operator algebra
/// generated by all L_a, R_a and the action operators is all of End(A).
SimplicityCertificate is_action_simple(const Algebra& algebra, const ActionSet& actions, std::uint64_t seed = 1);

struct StructureReport {
  Subspace radical;
  std::vector<Subspace> radical_powers;  // J, J^2, ..., ending at 0
  Subspace complement;
  std::vector<Subspace> components;
  std::vector<Index> component_dims;
};

/// radical -> invariance check -> Wedderburn-Malcev -> components.
StructureReport analyze(const StructuredAlgebra& a);

/// Postconditions of radical(): ideal, nilpotent, semisimple quotient.
struct RadicalCheck {
  bool ideal = false;
  bool nilpotent = false;
  bool semisimple_quotient = false;
  bool ok() const { return ideal && nilpotent && semisimple_quotient; }
};
RadicalCheck check_radical(const Algebra& algebra, const Subspace& radical);

}  // namespace piexp
