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

// End-to-end acceptance run: one PASS/FAIL line per criterion, exit status 1
// if any criterion fails or runs over its time limit.

#include "corpus.hpp"
#include "oracles.hpp"
#include "piexp/cli.hpp"
#include "piexp/identities.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace piexp;

namespace {

/// Collects failed sub-checks; a criterion passes when none were recorded.
class Ledger {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    if (ok()) return std::to_string(checks_) + " checks";
    std::string s = std::to_string(failures_.size()) + "/" + std::to_string(checks_) + " failed: " + failures_.front();
    if (failures_.size() > 1) s += " (+" + std::to_string(failures_.size() - 1) + " more)";
    return s;
  }

 private:
  int checks_ = 0;
  std::vector<std::string> failures_;
};

std::string str(Index v) { return std::to_string(v); }

void example_criterion(Ledger& l) {
  bool ok = false;
  const auto report = example_suite({}, ok);
  for (const auto& c : report["checks"]) l.expect(c["pass"].get<bool>(), c["check"].get<std::string>() + " = " + c["actual"].dump());
  // Independent of the pinned table: the chain product itself.
  const auto poset = incidence(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
  const auto r = pi_exponent(poset);
  std::vector<std::vector<Vector>> factors;
  for (const auto& v : r.witness_chain) factors.push_back({v});
  const auto products = oracle::chain_products(factors, poset.algebra);
  l.expect(products.size() == 1 && !is_zero_vector(products.front()), "witness chain multiplies to zero");
  const auto t = analyze(tensor_product(upper_triangular(2), upper_triangular(2)));
  l.expect(t.radical_powers.size() == 3 && !t.radical_powers[1].is_zero() && t.radical_powers[2].is_zero(), "J^2 != 0 = J^3");
}

void main_theorem(Ledger& l) {
  const auto ut2 = upper_triangular(2);
  const std::vector<StructuredAlgebra> bases{field(), ut2, upper_triangular(3), full_matrix(2), tensor_product(ut2, ut2),
                                             zero_algebra(2)};
  for (const auto& a : bases)
    for (const auto& row : matrix_theorem_check(a, 3, 120)) {
      if (row.skipped) continue;
      l.expect(row.equal(), a.name + " n=" + std::to_string(row.n) + ": " + str(row.lhs) + " vs " + str(row.rhs));
    }
}

void tensor_theorem(Ledger& l) {
  const auto a = with_grading(upper_triangular(2), Grading{{2}, {{0}, {1}, {0}}});
  const auto s = full_matrix_elementary(2, {2}, {{0}, {1}});
  const auto r = tensor_theorem_check(a, s);
  l.expect(r.equal(), "graded: " + str(r.lhs) + " vs " + str(r.rhs()));
  l.expect(r.lhs == 8 && r.dim_s == 4 && r.exp_a == 2, "graded values " + str(r.lhs) + " = " + str(r.dim_s) + " * " + str(r.exp_a));

  const auto b = exchange_involution(upper_triangular(2));
  const auto t = with_involution(full_matrix(2), matrix_involution(2, InvolutionKind::transpose));
  const auto q = tensor_theorem_check(b, t);
  l.expect(q.equal(), "involution: " + str(q.lhs) + " vs " + str(q.rhs()));
}

void tensor_simplicity(Ledger& l) {
  const auto st = tensor_product(full_matrix_elementary(2, {2}, {{0}, {1}}), full_matrix(2));
  const auto c = is_action_simple(st.algebra, action_set(st));
  l.expect(c.verdict == SimplicityCertificate::Verdict::certified_yes, "tensor product not certified");
  l.expect(c.span_dim == st.dim() * st.dim(), "Burnside span " + str(c.span_dim));

  const auto ut2 = upper_triangular(2);
  for (const auto& a : {ut2, with_grading(ut2, Grading{{2}, {{0}, {1}, {0}}}), with_involution(ut2, upper_triangular_reflection(2))}) {
    const auto acts = action_set(a);
    const auto w = is_action_simple(a.algebra, acts);
    l.expect(w.verdict == SimplicityCertificate::Verdict::no, "ut2 not rejected");
    l.expect(w.witness && !w.witness->is_zero() && w.witness->dim() < a.dim() && is_two_sided_ideal(a.algebra, *w.witness) &&
                 !action_invariance_check(*w.witness, acts),
             "ut2 witness is not a proper invariant ideal");
  }
}

CodimensionOptions sampled(std::uint64_t seed) {
  CodimensionOptions o;
  o.strategy = Strategy::sampled;
  o.seed = seed;
  return o;
}

void codimension_suite(Ledger& l) {
  struct Case {
    StructuredAlgebra a;
    int m;
    Index expected;
  };
  std::vector<Case> cases;
  for (int m = 1; m <= 6; ++m) cases.push_back({field(), m, 1});
  for (int m = 2; m <= 5; ++m) cases.push_back({zero_algebra(3), m, 0});
  cases.push_back({upper_triangular(2), 2, 2});
  cases.push_back({upper_triangular(2), 3, 6});
  cases.push_back({upper_triangular(2), 4, 18});
  for (int m = 2; m <= 4; ++m) cases.push_back({grassmann_truncated(m), m, Index(1) << (m - 1)});
  for (const auto& c : cases) {
    const std::string tag = c.a.name + " m=" + std::to_string(c.m);
    const Index exact = codimension(c.a, c.m).value;
    l.expect(exact == c.expected, tag + ": " + str(exact));
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const Index s = codimension(c.a, c.m, sampled(seed)).value;
      l.expect(s == exact, tag + " seed " + std::to_string(seed) + ": sampled " + str(s));
    }
  }
}

void identity_suite(Ledger& l) {
  const auto ut2 = upper_triangular(2);
  const auto big = matrix_algebra(ut2, 2);
  l.expect(is_identity(standard_polynomial(4), full_matrix(2)).holds, "s4 on M2");
  l.expect(is_identity(commutator_product(2), ut2).holds, "[x1,x2][x3,x4] on UT2");
  l.expect(!is_identity(commutator_product(2), big).holds, "[x1,x2][x3,x4] on M2(UT2)");
  for (int m = 1; m <= 3; ++m) l.expect(containment_at_degree(big, ut2, m).holds, "M2(UT2) -> UT2 at m=" + std::to_string(m));
  const auto back = containment_at_degree(ut2, big, 4);
  l.expect(!back.holds && back.counterexample.has_value(), "reverse containment at m=4");
  if (back.counterexample) {
    l.expect(is_identity(*back.counterexample, ut2).holds, "counterexample is an identity of UT2");
    l.expect(!is_identity(*back.counterexample, big).holds, "counterexample fails on M2(UT2)");
  }
}

void regev_suite(Ledger& l) {
  const auto ut2 = upper_triangular(2);
  for (const auto& b : {ut2, field()})
    for (int m = 1; m <= 3; ++m) {
      const auto r = regev_bound_check(ut2, b, m);
      l.expect(r.holds(), "UT2 (x) " + b.name + " m=" + std::to_string(m) + ": " + str(r.tensor) + " > " + str(r.product()));
    }
}

std::string cli_output(std::vector<std::string> args) {
  std::ostringstream out, err;
  run_cli(args, out, err);
  return out.str();
}

void property_suite(Ledger& l) {
  std::mt19937_64 rng(20260417);
  for (int trial = 0; trial < 24; ++trial) {
    const auto a = testing::random_constructed(rng, 16);
    const std::string tag = "random #" + std::to_string(trial) + " (" + a.name + ")";
    const auto j = radical(a.algebra);
    l.expect(check_radical(a.algebra, j).ok(), tag + ": radical postconditions");
    const auto s = wedderburn_malcev(a.algebra);
    l.expect(is_subalgebra(a.algebra, s), tag + ": complement not closed");
    l.expect(s.dim() + j.dim() == a.dim() && intersection(s, j).is_zero(), tag + ": complement not transversal");
  }

  for (const auto& a : testing::corpus()) {
    if (a.dim() > 12) continue;
    const auto rep = analyze(a);
    const Index dfs = admissible_max(rep.components, rep.radical, a.algebra).value;
    const Index brute = oracle::exhaustive_admissible(rep.components, rep.radical, a.algebra);
    l.expect(dfs == brute, a.name + ": DFS " + str(dfs) + " vs exhaustive " + str(brute));
  }

  const auto ut2 = upper_triangular(2);
  const auto poset = incidence(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
  const Index exp_poset = pi_exponent(poset).value;
  const Index c4 = codimension(ut2, 4).value;
  for (int trial = 0; trial < 5; ++trial) {
    const StructuredAlgebra p{"conj", change_basis(poset.algebra, testing::random_basis_change(poset.dim(), rng)), std::monostate{}};
    l.expect(pi_exponent(p).value == exp_poset, "exponent changed under conjugation " + std::to_string(trial));
    const StructuredAlgebra u{"conj", change_basis(ut2.algebra, testing::random_basis_change(3, rng)), std::monostate{}};
    l.expect(codimension(u, 4).value == c4, "codimension changed under conjugation " + std::to_string(trial));
  }

  const std::string data = PIEXP_DATA_DIR;
  const std::vector<std::vector<std::string>> commands{
      {"codim", "-m", "4", data + "/ut2.json"},
      {"codim", "-m", "4", data + "/ut2_tensor.json", "--strategy", "sampled", "--seed", "9"},
      {"contain", "-m", "4", data + "/ut2.json", data + "/ut2_tensor.json"},
      {"verify", "regev", "-m", "3", data + "/ut2.json", data + "/ut2.json"},
      {"verify", "paper-examples"},
  };
  for (const auto& cmd : commands) {
    auto single = cmd;
    single.insert(single.begin(), {"--threads", "1"});
    const std::string a = cli_output(single), b = cli_output(cmd);
    l.expect(!a.empty() && a == b, "reports differ with --threads 1: " + cmd.front());
  }
}

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Ledger&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "example suite for UT2 (x) UT2", 10, example_criterion},
      {2, "exp(M_n(A)) = n^2 exp(A)", 300, main_theorem},
      {3, "exp(A (x) S) = dim S * exp(A), graded and involution", 120, tensor_theorem},
      {4, "action simplicity of tensor products", 60, tensor_simplicity},
      {5, "codimensions, exact and sampled", 300, codimension_suite},
      {6, "identities and bounded containment", 300, identity_suite},
      {7, "Regev bound", 120, regev_suite},
      {8, "randomized property suites", 600, property_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Ledger l;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(l);
    } catch (const std::exception& e) {
      l.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = l.ok() && in_time;
    if (!pass) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, c.limit_seconds);
    std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  [" << l.summary() << ", "
              << timing << (in_time ? "" : ", over time") << "]" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
