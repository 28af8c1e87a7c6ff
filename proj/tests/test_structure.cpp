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

#include "doctest.h"
#include "helpers.hpp"
#include "piexp/structure.hpp"

using namespace piexp;
using piexp::testing::span_of;
using piexp::testing::unit_vector;

TEST_CASE("radical of named families") {
  CHECK(radical(full_matrix(2).algebra).is_zero());
  CHECK(radical(full_matrix(3).algebra).is_zero());
  CHECK(radical(zero_algebra(3).algebra).dim() == 3);

  const auto ut2 = upper_triangular(2);
  const Subspace j = radical(ut2.algebra);
  CHECK(j == span_of(3, {unit_vector(3, 1)}));
  CHECK(check_radical(ut2.algebra, j).ok());

  const auto t = tensor_product(ut2, ut2);
  const Subspace jt = radical(t.algebra);
  CHECK(jt.dim() == 5);
  CHECK(check_radical(t.algebra, jt).ok());
  const auto chain = power_chain(jt, t.algebra);
  REQUIRE(chain.size() == 3);
  CHECK(chain[1].dim() == 1);
  CHECK(chain[2].is_zero());
}

TEST_CASE("radical postconditions fail for a wrong candidate") {
  const auto ut2 = upper_triangular(2);
  const auto bad = span_of(3, {unit_vector(3, 0)});
  CHECK_FALSE(check_radical(ut2.algebra, bad).ok());
  CHECK_FALSE(check_radical(ut2.algebra, Subspace(3)).ok());
}

TEST_CASE("action invariance of radicals") {
  const auto ut2 = upper_triangular(2);
  const Subspace j = radical(ut2.algebra);
  CHECK_FALSE(action_invariance_check(j, identity_action(3)));

  const auto graded = with_grading(ut2, Grading{{2}, {{0}, {1}, {0}}});
  CHECK_FALSE(action_invariance_check(j, action_set(graded)));

  const auto reflected = with_involution(ut2, upper_triangular_reflection(2));
  CHECK_FALSE(action_invariance_check(j, action_set(reflected)));

  // Transpose on M_2 maps e12 to e21, leaving span{e12}.
  const auto m2 = with_involution(full_matrix(2), matrix_involution(2, InvolutionKind::transpose));
  const auto e12 = span_of(4, {unit_vector(4, 1)});
  const auto k = action_invariance_check(e12, action_set(m2));
  REQUIRE(k);
  CHECK(*k == 1);
}

TEST_CASE("Wedderburn-Malcev complements") {
  const auto ut2 = upper_triangular(2);
  CHECK(wedderburn_malcev(ut2.algebra) == span_of(3, {unit_vector(3, 0), unit_vector(3, 2)}));

  const auto t = tensor_product(ut2, ut2);
  const Subspace s = wedderburn_malcev(t.algebra);
  // Diagonal of the incidence picture: e11 (x) e11, e11 (x) e22, e22 (x) e11, e22 (x) e22.
  CHECK(s == span_of(9, {unit_vector(9, 0), unit_vector(9, 2), unit_vector(9, 6), unit_vector(9, 8)}));

  CHECK(wedderburn_malcev(full_matrix(3).algebra).dim() == 9);
  CHECK(wedderburn_malcev(zero_algebra(2).algebra).is_zero());
}

TEST_CASE("complement lifting in a twisted basis") {
  // Conjugate UT_3 by a dense change of basis so the fast path fails.
  const auto ut3 = upper_triangular(3);
  const Index d = ut3.dim();
  Matrix basis = Matrix::Identity(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j) basis(i, j) = make_rational(static_cast<long>(i + 2 * j) % 5 - 2, 3);
  const Algebra twisted = change_basis(ut3.algebra, basis);
  const Subspace j = radical(twisted);
  CHECK(j.dim() == 3);
  const Subspace s = wedderburn_malcev(twisted, j, identity_action(d));
  CHECK(s.dim() == 3);
  CHECK(is_subalgebra(twisted, s));
  CHECK(intersection(s, j).is_zero());
  CHECK(simple_components(s, twisted, identity_action(d)).size() == 3);
}

TEST_CASE("simple components") {
  const auto t = tensor_product(upper_triangular(2), upper_triangular(2));
  const auto report = analyze(t);
  CHECK(report.component_dims == std::vector<Index>{1, 1, 1, 1});

  const auto m2ut2 = matrix_algebra(upper_triangular(2), 2);
  const auto mr = analyze(m2ut2);
  CHECK(mr.component_dims == std::vector<Index>{4, 4});
  Index total = 0;
  for (const auto& c : mr.components) total += c.dim();
  CHECK(total == mr.complement.dim());
  for (std::size_t a = 0; a < mr.components.size(); ++a)
    for (std::size_t b = 0; b < mr.components.size(); ++b) {
      const auto p = subspace_product(mr.components[a], mr.components[b], m2ut2.algebra);
      if (a == b)
        CHECK_FALSE(p.is_zero());
      else
        CHECK(p.is_zero());
    }

  const auto z2 = group_algebra({2});
  const auto zr = analyze(z2);
  CHECK(zr.component_dims == std::vector<Index>{2});
  CHECK(analyze(forget_structure(z2)).component_dims == std::vector<Index>{1, 1});
}

TEST_CASE("non-split centers are rejected") {
  // Q[Z_3]: the center contains c with minimal polynomial x^3 - 1.
  std::vector<StructureConstant> entries;
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) entries.push_back({i, j, (i + j) % 3, Rational(1)});
  const StructuredAlgebra a{"Z3", Algebra(3, {}, entries), std::monostate{}};
  CHECK_THROWS_AS(analyze(a), NonSplitError);
}

TEST_CASE("rational roots") {
  using R = Rational;
  CHECK(rational_roots({R(-1), R(0), R(1)}) == std::vector<R>{R(-1), R(1)});
  CHECK(rational_roots({R(1), R(1), R(1)}).empty());
  CHECK(rational_roots({R(0), R(-1), R(1)}) == std::vector<R>{R(0), R(1)});
  CHECK(rational_roots({make_rational(-1, 4), R(0), R(1)}) == std::vector<R>{make_rational(-1, 2), make_rational(1, 2)});
  const Integer big("1000000000000000003");
  // (x - big)(3x - 1) = 3x^2 - (3 big + 1) x + big
  const auto r = rational_roots({R(big), -R(3 * big + 1), R(3)});
  CHECK(r == std::vector<R>{make_rational(1, 3), R(big)});
}

TEST_CASE("Burnside simplicity certificates") {
  const auto m2 = full_matrix(2);
  const auto c = is_action_simple(m2.algebra, action_set(m2));
  CHECK(c.verdict == SimplicityCertificate::Verdict::certified_yes);
  CHECK(c.span_dim == 16);

  const auto z2 = group_algebra({2});
  const auto cz = is_action_simple(z2.algebra, action_set(z2));
  CHECK(cz.verdict == SimplicityCertificate::Verdict::certified_yes);
  CHECK(cz.span_dim == 4);
  CHECK(is_action_simple(z2.algebra, identity_action(2)).verdict == SimplicityCertificate::Verdict::no);

  const auto ut2 = upper_triangular(2);
  for (const auto& s : {ut2, with_grading(ut2, Grading{{2}, {{0}, {1}, {0}}}),
                        with_involution(ut2, upper_triangular_reflection(2))}) {
    const auto cu = is_action_simple(s.algebra, action_set(s));
    CHECK(cu.verdict == SimplicityCertificate::Verdict::no);
    REQUIRE(cu.witness);
    CHECK(*cu.witness == span_of(3, {unit_vector(3, 1)}));
  }

  const auto zero = is_action_simple(zero_algebra(2).algebra, identity_action(2));
  CHECK(zero.verdict == SimplicityCertificate::Verdict::no);
  CHECK(zero.zero_product);

  const auto graded = full_matrix_elementary(2, {2}, {{0}, {1}});
  const auto product = tensor_product(graded, with_grading(full_matrix(2), Grading{{2}, {{0}, {0}, {0}, {0}}}));
  const auto cp = is_action_simple(product.algebra, action_set(product));
  CHECK(cp.verdict == SimplicityCertificate::Verdict::certified_yes);
  CHECK(cp.span_dim == 256);
}

TEST_CASE("matrix radical transfer") {
  for (const auto& a : {upper_triangular(2), upper_triangular(3), zero_algebra(2),
                        direct_sum(field(), upper_triangular(2))}) {
    const Index da = a.dim();
    const Subspace ja = radical(a.algebra);
    const auto m = matrix_algebra(a, 2);
    std::vector<Vector> image;
    for (Index pos = 0; pos < 4; ++pos)
      for (const auto& v : ja.basis()) {
        Vector w = Vector::Zero(m.dim());
        w.segment(pos * da, da) = v;
        image.push_back(w);
      }
    CHECK(radical(m.algebra) == Subspace::span(m.dim(), image));
  }
}
