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

#include "piexp/cli.hpp"

#include "piexp/identities.hpp"
#include "piexp/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace piexp {

using nlohmann::json;

namespace {

json basis_json(const Subspace& s, const Algebra& a) {
  json out = json::array();
  for (const auto& v : s.basis()) out.push_back(vector_string(v, a.labels()));
  return out;
}

json dims_json(const std::vector<Subspace>& chain) {
  json out = json::array();
  for (const auto& s : chain) out.push_back(s.dim());
  return out;
}

json exponent_json(const ExponentReport& r, const Algebra& a) {
  json chain = json::array();
  for (const auto& v : r.witness_chain) chain.push_back(vector_string(v, a.labels()));
  json out{{"value", r.value}, {"witness_sequence", r.witness_sequence}, {"witness_chain", chain},
           {"component_dims", r.component_dims}};
  if (!r.witness_chain.empty()) {
    Vector p = r.witness_chain.front();
    for (std::size_t k = 1; k < r.witness_chain.size(); ++k) p = multiply(p, r.witness_chain[k], a);
    out["chain_product"] = vector_string(p, a.labels());
  }
  return out;
}

std::string structure_name(const StructuredAlgebra& a) {
  if (a.grading()) return "grading";
  if (a.involution()) return "involution";
  return "none";
}

json check(const std::string& name, const json& expected, const json& actual) {
  return {{"check", name}, {"expected", expected}, {"actual", actual}, {"pass", expected == actual}};
}

struct AlgebraSummary {
  Index dim = 0;
  json radical_powers;
  json component_dims;
  Index exponent = 0;
  json codimensions;
};

AlgebraSummary summarize(const StructuredAlgebra& a, int max_m) {
  const auto rep = analyze(a);
  AlgebraSummary s;
  s.dim = a.dim();
  s.radical_powers = dims_json(rep.radical_powers);
  s.component_dims = rep.component_dims;
  s.exponent = admissible_max(rep.components, rep.radical, a.algebra).value;
  s.codimensions = json::array();
  for (int m = 1; m <= max_m; ++m) s.codimensions.push_back(codimension(a, m).value);
  return s;
}

}  // namespace

json example_suite(const ExampleExpectations& e, bool& ok) {
  json checks = json::array();
  const auto ut2 = upper_triangular(2);
  const auto tensor = tensor_product(ut2, ut2);
  const auto poset = incidence(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});

  checks.push_back(check("exp(UT2)", e.exp_ut2, pi_exponent(ut2).value));

  const auto rt = pi_exponent(tensor);
  checks.push_back(check("exp(UT2 (x) UT2)", e.exp_tensor, rt.value));

  const auto rp = pi_exponent(poset);
  checks.push_back(check("witness sequence", e.witness_sequence, rp.witness_sequence));
  json labels = json::array();
  for (const auto& v : rp.witness_chain) labels.push_back(vector_string(v, poset.algebra.labels()));
  checks.push_back(check("witness chain", e.witness_chain, labels));
  Vector product = rp.witness_chain.empty() ? Vector::Zero(poset.dim()) : rp.witness_chain.front();
  for (std::size_t k = 1; k < rp.witness_chain.size(); ++k) product = multiply(product, rp.witness_chain[k], poset.algebra);
  checks.push_back(check("witness chain product is nonzero", true, !is_zero_vector(product)));

  const auto st = analyze(tensor);
  checks.push_back(check("dim J", e.radical_dim, st.radical.dim()));
  const auto& powers = st.radical_powers;
  checks.push_back(check("dim J^2", e.radical_square_dim, powers.size() > 1 ? powers[1].dim() : Index(0)));
  std::size_t index = 1;
  while (index <= powers.size() && !powers[index - 1].is_zero()) ++index;
  checks.push_back(check("nilpotency index of J", e.nilpotency_index, index));
  checks.push_back(check("semisimple component dims", e.semisimple_dims, st.component_dims));
  json diagonal = json::array();
  const auto sp = analyze(poset);
  for (const auto& v : sp.complement.basis()) diagonal.push_back(vector_string(v, poset.algebra.labels()));
  checks.push_back(check("incidence complement", json{"e11", "e22", "e33", "e44"}, diagonal));

  const auto a = summarize(tensor, e.codimension_degree);
  const auto b = summarize(poset, e.codimension_degree);
  checks.push_back(check("incidence vs tensor: dim", a.dim, b.dim));
  checks.push_back(check("incidence vs tensor: radical powers", a.radical_powers, b.radical_powers));
  checks.push_back(check("incidence vs tensor: component dims", a.component_dims, b.component_dims));
  checks.push_back(check("incidence vs tensor: exponent", a.exponent, b.exponent));
  checks.push_back(check("incidence vs tensor: codimensions", a.codimensions, b.codimensions));

  ok = true;
  for (const auto& c : checks) ok = ok && c["pass"].get<bool>();
  return {{"checks", checks}, {"all_pass", ok}};
}

namespace {

void render(const json& j, const std::string& prefix, std::ostringstream& out) {
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  if (j.is_array()) {
    bool flat = true;
    for (const auto& v : j) flat = flat && !v.is_structured();
    if (flat) {
      out << prefix << ": [";
      for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << scalar(j[i]);
      out << "]\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) render(j[i], prefix + "[" + std::to_string(i + 1) + "]", out);
    return;
  }
  out << prefix << ": " << scalar(j) << "\n";
}

struct Session {
  unsigned threads = 0;
  std::string format = "json";
  bool timings = false;
  json inputs = json::array();
  json seeds;

  StructuredAlgebra load_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    if (in) ss << in.rdbuf();
    inputs.push_back({{"path", path}, {"digest", fnv1a_hex(ss.str())}});
    return load(path);
  }

  CodimensionOptions options() const {
    CodimensionOptions o;
    o.threads = threads;
    return o;
  }
};

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream out;
  render(report, "", out);
  return out.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const ExampleExpectations& expectations) {
  CLI::App app{"Exact structure theory, PI-exponents and codimensions of finite-dimensional algebras", "piexp"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  Session session;
  app.add_option("--threads", session.threads, "Worker threads (0 = hardware)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", session.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timings", session.timings, "Include wall-clock timings in the report");

  json results;
  bool ok = true;
  std::function<void()> action;
  std::string raw_output;  // canonicalize prints a document, not a report

  std::string file, file_b, poly_file, poly_text, strategy = "exact";
  int degree = 1, nmax = 3;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  double budget = 2e8;
  long long max_dim = 0;
  bool decorated = false, envelope = false, expand = false;

  auto* validate_cmd = app.add_subcommand("validate", "Load and validate an algebra document");
  validate_cmd->add_option("file", file, "Algebra JSON")->required();
  validate_cmd->callback([&] {
    action = [&] {
      const auto a = session.load_input(file);
      results = {{"name", a.name}, {"dim", a.dim()}, {"entries", a.algebra.entries().size()},
                 {"unital", a.algebra.unit().has_value()}, {"structure", structure_name(a)}, {"valid", true}};
    };
  });

  auto* info_cmd = app.add_subcommand("info", "Radical, complement and simple components");
  info_cmd->add_option("file", file, "Algebra JSON")->required();
  info_cmd->callback([&] {
    action = [&] {
      const auto a = session.load_input(file);
      const auto rep = analyze(a);
      json comps = json::array();
      for (std::size_t i = 0; i < rep.components.size(); ++i)
        comps.push_back({{"index", i + 1}, {"dim", rep.components[i].dim()}, {"basis", basis_json(rep.components[i], a.algebra)}});
      results = {{"name", a.name},
                 {"dim", a.dim()},
                 {"structure", structure_name(a)},
                 {"radical", {{"dim", rep.radical.dim()}, {"basis", basis_json(rep.radical, a.algebra)}}},
                 {"radical_power_dims", dims_json(rep.radical_powers)},
                 {"complement", {{"dim", rep.complement.dim()}, {"basis", basis_json(rep.complement, a.algebra)}}},
                 {"components", comps},
                 {"component_dims", rep.component_dims}};
    };
  });

  auto* exp_cmd = app.add_subcommand("exponent", "PI-exponent with a witness admissible sequence");
  exp_cmd->add_option("file", file, "Algebra JSON")->required();
  exp_cmd->add_flag("--envelope", envelope, "Report exp(G(B)) for a Z_2-graded B");
  exp_cmd->callback([&] {
    action = [&] {
      const auto a = session.load_input(file);
      const auto r = envelope ? envelope_exponent(a) : pi_exponent(a);
      results = exponent_json(r, a.algebra);
      results["name"] = a.name;
      results["mode"] = envelope ? "envelope" : (a.grading() || a.involution() ? "structured" : "ordinary");
    };
  });

  auto* codim_cmd = app.add_subcommand("codim", "Codimension c_m by evaluation-matrix rank");
  codim_cmd->add_option("file", file, "Algebra JSON")->required();
  codim_cmd->add_option("-m", degree, "Degree")->required()->check(CLI::Range(1, 12));
  codim_cmd->add_option("--strategy", strategy, "exact or sampled")->check(CLI::IsMember({"exact", "sampled"}));
  codim_cmd->add_option("--samples", samples, "Sampled tuples (0 = 2 m! dim)");
  codim_cmd->add_option("--seed", seed, "Sampling seed");
  codim_cmd->add_option("--budget", budget, "Exact-mode operation budget");
  codim_cmd->add_flag("--decorated", decorated, "Graded or involution codimension");
  codim_cmd->callback([&] {
    action = [&] {
      const auto a = session.load_input(file);
      auto o = session.options();
      o.strategy = strategy == "sampled" ? Strategy::sampled : Strategy::exact;
      o.samples = samples;
      o.seed = seed;
      o.budget = budget;
      o.decorated = decorated;
      const auto r = codimension(a, degree, o);
      results = {{"name", a.name},     {"m", degree},          {"value", r.value}, {"strategy", strategy},
                 {"lower_bound", r.lower_bound}, {"rows", r.rows}, {"decorated", decorated}};
      if (o.strategy == Strategy::sampled) {
        results["samples"] = r.samples;
        session.seeds = json::array({seed});
      }
    };
  });

  auto* id_cmd = app.add_subcommand("identity", "Decide whether a multilinear polynomial is an identity");
  id_cmd->add_option("file", file, "Algebra JSON")->required();
  auto* poly_opt = id_cmd->add_option("--poly", poly_file, "Polynomial text file");
  id_cmd->add_option("--text", poly_text, "Polynomial text")->excludes(poly_opt);
  id_cmd->callback([&] {
    action = [&] {
      const auto a = session.load_input(file);
      std::string text = poly_text;
      if (!poly_file.empty()) {
        std::ifstream in(poly_file);
        if (!in) throw InputError(poly_file + ": cannot open");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
        session.inputs.push_back({{"path", poly_file}, {"digest", fnv1a_hex(text)}});
      }
      if (text.empty()) throw InputError("identity: give --poly FILE or --text POLYNOMIAL");
      const auto f = parse_polynomial(text);
      const auto r = is_identity(f, a);
      results = {{"name", a.name}, {"polynomial", to_string(f)}, {"degree", f.degree}, {"holds", r.holds}};
      if (!r.holds) {
        json w = json::array();
        for (Index i : r.witness) w.push_back(a.algebra.labels()[static_cast<std::size_t>(i)]);
        results["witness"] = w;
        results["value"] = vector_string(r.value, a.algebra.labels());
      }
      ok = r.holds;
    };
  });

  auto* contain_cmd = app.add_subcommand("contain", "Degree-bounded containment Id(A) in Id(B)");
  contain_cmd->add_option("-m", degree, "Largest degree")->required()->check(CLI::Range(1, 12));
  contain_cmd->add_option("a", file, "Algebra A")->required();
  contain_cmd->add_option("b", file_b, "Algebra B")->required();
  contain_cmd->add_flag("--decorated", decorated, "Use graded or involution polynomials");
  contain_cmd->callback([&] {
    action = [&] {
      const auto a = session.load_input(file);
      const auto b = session.load_input(file_b);
      auto o = session.options();
      o.decorated = decorated;
      json rows = json::array();
      for (int m = 1; m <= degree && ok; ++m) {
        const auto r = containment_at_degree(a, b, m, o);
        json row{{"m", m}, {"holds", r.holds}, {"identities_of_a", r.kernel_dim}};
        if (r.counterexample) row["counterexample"] = to_string(*r.counterexample);
        rows.push_back(row);
        ok = r.holds;
      }
      results = {{"a", a.name}, {"b", b.name}, {"degrees", rows}, {"holds", ok}};
    };
  });

  auto* canon_cmd = app.add_subcommand("canonicalize", "Print the canonical form of a document");
  canon_cmd->add_option("file", file, "Algebra JSON")->required();
  canon_cmd->add_flag("--expand", expand, "Replace a family descriptor by its explicit table");
  canon_cmd->callback([&] {
    action = [&] {
      const auto doc = read_document(file);
      const auto a = realize(doc);
      raw_output = canonical_text(expand ? to_document(a) : doc);
    };
  });

  auto* verify = app.add_subcommand("verify", "Theorem and example verification suites");
  verify->require_subcommand(1);

  auto* main_cmd = verify->add_subcommand("main-theorem", "exp(M_n(A)) = n^2 exp(A)");
  main_cmd->add_option("--base", file, "Algebra A")->required();
  main_cmd->add_option("--nmax", nmax, "Largest n")->check(CLI::Range(1, 8));
  main_cmd->add_option("--max-dim", max_dim, "Skip n with dim M_n(A) above this (0 = no limit)");
  main_cmd->callback([&] {
    action = [&] {
      const auto a = session.load_input(file);
      json rows = json::array();
      for (const auto& r : matrix_theorem_check(a, nmax, max_dim)) {
        json row{{"n", r.n}, {"rhs", r.rhs}, {"skipped", r.skipped}};
        if (!r.skipped) {
          row["lhs"] = r.lhs;
          row["equal"] = r.equal();
          ok = ok && r.equal();
        }
        rows.push_back(row);
      }
      results = {{"base", a.name}, {"rows", rows}, {"all_equal", ok}};
    };
  });

  std::string file_s;
  auto* tensor_cmd = verify->add_subcommand("tensor-theorem", "exp(A (x) S) = dim S * exp(A) for central simple S");
  tensor_cmd->add_option("--a", file, "Algebra A")->required();
  tensor_cmd->add_option("--s", file_s, "Central simple S")->required();
  tensor_cmd->callback([&] {
    action = [&] {
      const auto a = session.load_input(file);
      const auto s = session.load_input(file_s);
      const auto r = tensor_theorem_check(a, s);
      results = {{"a", a.name}, {"s", s.name},       {"lhs", r.lhs},         {"dim_s", r.dim_s},
                 {"exp_a", r.exp_a}, {"rhs", r.rhs()}, {"equal", r.equal()}};
      ok = r.equal();
    };
  });

  auto* examples_cmd = verify->add_subcommand("paper-examples", "UT_2 (x) UT_2 example suite");
  examples_cmd->callback([&] { action = [&] { results = example_suite(expectations, ok); }; });

  auto* regev_cmd = verify->add_subcommand("regev", "c_m(A (x) B) <= c_m(A) c_m(B) for all degrees up to m");
  regev_cmd->add_option("-m", degree, "Largest degree")->required()->check(CLI::Range(1, 12));
  regev_cmd->add_option("a", file, "Algebra A")->required();
  regev_cmd->add_option("b", file_b, "Algebra B")->required();
  regev_cmd->callback([&] {
    action = [&] {
      const auto a = session.load_input(file);
      const auto b = session.load_input(file_b);
      json rows = json::array();
      for (int m = 1; m <= degree; ++m) {
        const auto r = regev_bound_check(a, b, m, session.options());
        rows.push_back({{"m", m}, {"tensor", r.tensor}, {"c_a", r.factor_a}, {"c_b", r.factor_b}, {"product", r.product()},
                        {"holds", r.holds()}});
        ok = ok && r.holds();
      }
      results = {{"a", a.name}, {"b", b.name}, {"rows", rows}, {"holds", ok}};
    };
  });

  // Echo without the flags that must not change the report.
  std::vector<std::string> echo;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--threads" || args[i] == "--format") {
      ++i;
      continue;
    }
    if (args[i] == "--timings" || args[i].rfind("--threads=", 0) == 0 || args[i].rfind("--format=", 0) == 0) continue;
    echo.push_back(args[i]);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  json report{{"tool", "piexp"}, {"version", kVersion}};
  std::string command;
  for (const auto& a : echo) command += (command.empty() ? "" : " ") + a;
  report["command"] = command;
  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    action();
    if (!raw_output.empty()) {
      out << raw_output;
      return kExitOk;
    }
    code = ok ? kExitOk : kExitCheckFailed;
    report["results"] = results;
  } catch (const NonSplitError& e) {
    code = kExitUnsupported;
    report["error"] = {{"kind", "NonSplit"}, {"message", e.what()}};
  } catch (const SimplicityUnverified& e) {
    code = kExitUnsupported;
    report["error"] = {{"kind", "SimplicityUnverified"}, {"message", e.what()}};
  } catch (const RadicalNotInvariant& e) {
    code = kExitUnsupported;
    report["error"] = {{"kind", "RadicalNotInvariant"}, {"message", e.what()}};
  } catch (const ComplementNotFound& e) {
    code = kExitUnsupported;
    report["error"] = {{"kind", "ComplementNotFound"}, {"message", e.what()}};
  } catch (const BudgetExceeded& e) {
    code = kExitInput;
    report["error"] = {{"kind", "BudgetExceeded"}, {"message", e.what()}};
  } catch (const SNotCentralSimple& e) {
    code = kExitInput;
    report["error"] = {{"kind", "SNotCentralSimple"}, {"message", e.what()}};
  } catch (const InputError& e) {
    code = kExitInput;
    report["error"] = {{"kind", "InputError"}, {"message", e.what()}};
  } catch (const std::invalid_argument& e) {
    code = kExitInput;
    report["error"] = {{"kind", "InvalidInput"}, {"message", e.what()}};
  } catch (const std::exception& e) {
    code = kExitCheckFailed;
    report["error"] = {{"kind", "Internal"}, {"message", e.what()}};
  }
  report["inputs"] = session.inputs;
  if (!session.seeds.is_null()) report["seeds"] = session.seeds;
  report["status"] = code == kExitOk ? "ok" : (code == kExitCheckFailed ? "check_failed" : "error");
  report["exit_code"] = code;
  if (session.timings)
    report["timings"] = {{"total_ms", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count()}};
  if (report.contains("error")) err << "piexp: " << report["error"]["message"].get<std::string>() << "\n";
  if (session.format == "json")
    out << report.dump(2) << "\n";
  else
    out << render_text(report);
  return code;
}

}  // namespace piexp
