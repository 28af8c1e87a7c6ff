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

#include "piexp/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace piexp {

using nlohmann::json;

namespace {

Rational rational_from(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(j.get<long long>()));
  } catch (const std::exception& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected a rational string \"p/q\" or an integer");
}

long long integer_from(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
  return j.get<long long>();
}

const json& field_of(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

GroupElement element_from(const json& j, const std::string& where) {
  if (j.is_number_integer()) return {static_cast<int>(j.get<long long>())};
  if (!j.is_array()) throw InputError(where + ": expected a group element tuple");
  GroupElement g;
  for (std::size_t i = 0; i < j.size(); ++i) g.push_back(static_cast<int>(integer_from(j[i], where)));
  return g;
}

Grading grading_from(const json& j, const std::string& where) {
  Grading g;
  const json& group = field_of(j, "group", where);
  if (!group.is_array()) throw InputError(where + ".group: expected a list of factor orders");
  for (std::size_t i = 0; i < group.size(); ++i)
    g.group.push_back(static_cast<int>(integer_from(group[i], where + ".group[" + std::to_string(i) + "]")));
  const json& degrees = field_of(j, "degrees", where);
  if (!degrees.is_array()) throw InputError(where + ".degrees: expected a list");
  for (std::size_t i = 0; i < degrees.size(); ++i)
    g.degrees.push_back(element_from(degrees[i], where + ".degrees[" + std::to_string(i) + "]"));
  return g;
}

json element_json(const GroupElement& g) { return json(g); }

std::string violation_text(const Violation& v, const Algebra& a) {
  auto label = [&](Index i) { return a.labels()[static_cast<std::size_t>(i)] + " (index " + std::to_string(i) + ")"; };
  if (v.kind == Violation::Kind::unit)
    return "unit does not act as identity on " + label(v.i) + ": got " + vector_string(v.lhs, a.labels());
  return "associativity fails on " + label(v.i) + ", " + label(v.j) + ", " + label(v.k) + ": (xy)z = " +
         vector_string(v.lhs, a.labels()) + " but x(yz) = " + vector_string(v.rhs, a.labels());
}

template <typename F>
StructuredAlgebra guarded(F&& build) {
  try {
    return build();
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

int small_int(const json& j, const std::string& where) { return static_cast<int>(integer_from(j, where)); }

std::vector<StructuredAlgebra> family_list(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() < 2) throw InputError(where + ": expected a list of at least two descriptors");
  std::vector<StructuredAlgebra> out;
  for (const auto& d : j) out.push_back(from_family(d));
  return out;
}

}  // namespace

std::string vector_string(const Vector& v, const std::vector<std::string>& labels) {
  std::string out;
  for (Index i = 0; i < v.size(); ++i) {
    if (is_zero(v(i))) continue;
    const bool negative = v(i) < 0;
    const Rational a = negative ? Rational(-v(i)) : v(i);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (a != 1) out += to_string(a) + "*";
    out += i < static_cast<Index>(labels.size()) ? labels[static_cast<std::size_t>(i)] : "e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

AlgebraDocument parse_document(const json& j) {
  if (!j.is_object()) throw InputError("document: expected a JSON object");
  for (const auto& [key, value] : j.items())
    if (key != "name" && key != "dim" && key != "basis" && key != "table" && key != "unit" && key != "grading" &&
        key != "involution" && key != "family")
      throw InputError("document: unknown field \"" + key + "\"");
  AlgebraDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InputError("name: expected a string");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("table") == j.contains("family")) throw InputError("document: exactly one of \"table\" and \"family\" is required");
  if (j.contains("dim")) {
    const long long d = integer_from(j["dim"], "dim");
    if (d < 0) throw InputError("dim: must be non-negative");
    doc.dim = d;
  }
  if (j.contains("basis")) {
    if (!j["basis"].is_array()) throw InputError("basis: expected a list of labels");
    for (std::size_t i = 0; i < j["basis"].size(); ++i) {
      if (!j["basis"][i].is_string()) throw InputError("basis[" + std::to_string(i) + "]: expected a string");
      doc.basis.push_back(j["basis"][i].get<std::string>());
    }
  }
  if (j.contains("table")) {
    if (!doc.dim) throw InputError("dim: required with an explicit table");
    const json& t = j["table"];
    if (!t.is_array()) throw InputError("table: expected a list of [i, j, k, \"p/q\"] entries");
    std::vector<StructureConstant> entries;
    for (std::size_t n = 0; n < t.size(); ++n) {
      const std::string where = "table[" + std::to_string(n) + "]";
      if (!t[n].is_array() || t[n].size() != 4) throw InputError(where + ": expected [i, j, k, \"p/q\"]");
      StructureConstant c;
      Index* idx[3] = {&c.left, &c.right, &c.result};
      for (int p = 0; p < 3; ++p) {
        const long long v = integer_from(t[n][static_cast<std::size_t>(p)], where);
        if (v < 0 || v >= *doc.dim)
          throw InputError(where + ": index " + std::to_string(v) + " out of range for dim " + std::to_string(*doc.dim));
        *idx[p] = v;
      }
      c.value = rational_from(t[n][3], where);
      entries.push_back(std::move(c));
    }
    doc.table = std::move(entries);
  }
  if (j.contains("unit")) {
    if (!j["unit"].is_array()) throw InputError("unit: expected a coordinate list");
    std::vector<Rational> u;
    for (std::size_t i = 0; i < j["unit"].size(); ++i) u.push_back(rational_from(j["unit"][i], "unit[" + std::to_string(i) + "]"));
    doc.unit = std::move(u);
  }
  if (j.contains("grading")) doc.grading = grading_from(j["grading"], "grading");
  if (j.contains("involution")) {
    const json& m = j["involution"];
    if (!m.is_array()) throw InputError("involution: expected a row-major matrix");
    const Index n = static_cast<Index>(m.size());
    Matrix map(n, n);
    for (Index r = 0; r < n; ++r) {
      const json& row = m[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Index>(row.size()) != n)
        throw InputError("involution[" + std::to_string(r) + "]: expected a row of length " + std::to_string(n));
      for (Index c = 0; c < n; ++c)
        map(r, c) = rational_from(row[static_cast<std::size_t>(c)],
                                  "involution[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    doc.involution = std::move(map);
  }
  if (j.contains("family")) doc.family = j["family"];
  if (doc.grading && doc.involution) throw InputError("document: a grading and an involution cannot both be attached");
  return doc;
}

AlgebraDocument read_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  json j;
  try {
    j = json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return parse_document(j);
}

json to_json(const AlgebraDocument& doc) {
  json j = json::object();
  j["name"] = doc.name;
  if (doc.dim) j["dim"] = *doc.dim;
  if (!doc.basis.empty()) j["basis"] = doc.basis;
  if (doc.table) {
    std::map<std::tuple<Index, Index, Index>, Rational> merged;
    for (const auto& c : *doc.table) merged[{c.left, c.right, c.result}] += c.value;
    json t = json::array();
    for (const auto& [key, v] : merged) {
      if (is_zero(v)) continue;
      const auto& [l, r, k] = key;
      t.push_back(json::array({l, r, k, to_string(v)}));
    }
    j["table"] = std::move(t);
  }
  if (doc.unit) {
    json u = json::array();
    for (const auto& x : *doc.unit) u.push_back(to_string(x));
    j["unit"] = std::move(u);
  }
  if (doc.grading) {
    json degrees = json::array();
    for (const auto& g : doc.grading->degrees) degrees.push_back(element_json(g));
    j["grading"] = {{"group", doc.grading->group}, {"degrees", degrees}};
  }
  if (doc.involution) {
    json rows = json::array();
    for (Index r = 0; r < doc.involution->rows(); ++r) {
      json row = json::array();
      for (Index c = 0; c < doc.involution->cols(); ++c) row.push_back(to_string((*doc.involution)(r, c)));
      rows.push_back(std::move(row));
    }
    j["involution"] = std::move(rows);
  }
  if (doc.family) j["family"] = *doc.family;
  return j;
}

namespace {

// Like dump(2), but arrays of scalars stay on one line so tables read row by row.
void write_compact(const json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t n = 0;
    for (const auto& [k, v] : j.items()) {
      out += inner + json(k).dump() + ": ";
      write_compact(v, indent + 2, out);
      out += ++n < j.size() ? ",\n" : "\n";
    }
    out += pad + "}";
  } else if (j.is_array()) {
    bool flat = true;
    for (const auto& v : j) flat = flat && !v.is_structured();
    if (flat) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += inner;
      write_compact(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string canonical_text(const AlgebraDocument& doc) {
  std::string out;
  write_compact(to_json(doc), 0, out);
  return out + "\n";
}

StructuredAlgebra realize(const AlgebraDocument& doc) {
  StructuredAlgebra a;
  if (doc.family) {
    a = from_family(*doc.family);
    if (doc.dim && *doc.dim != a.dim())
      throw InputError("dim: " + std::to_string(*doc.dim) + " does not match the family's dimension " + std::to_string(a.dim()));
    if (!doc.basis.empty() || doc.unit) {
      if (!doc.basis.empty() && static_cast<Index>(doc.basis.size()) != a.dim())
        throw InputError("basis: expected " + std::to_string(a.dim()) + " labels");
      std::optional<Vector> unit = a.algebra.unit();
      if (doc.unit) {
        if (static_cast<Index>(doc.unit->size()) != a.dim()) throw InputError("unit: expected " + std::to_string(a.dim()) + " coordinates");
        unit = Vector(a.dim());
        for (Index i = 0; i < a.dim(); ++i) (*unit)(i) = (*doc.unit)[static_cast<std::size_t>(i)];
      }
      a.algebra = Algebra(a.dim(), doc.basis.empty() ? a.algebra.labels() : doc.basis, a.algebra.entries(), unit);
    }
  } else {
    const Index d = *doc.dim;
    if (!doc.basis.empty() && static_cast<Index>(doc.basis.size()) != d)
      throw InputError("basis: expected " + std::to_string(d) + " labels");
    std::optional<Vector> unit;
    if (doc.unit) {
      if (static_cast<Index>(doc.unit->size()) != d) throw InputError("unit: expected " + std::to_string(d) + " coordinates");
      unit = Vector(d);
      for (Index i = 0; i < d; ++i) (*unit)(i) = (*doc.unit)[static_cast<std::size_t>(i)];
    }
    a.algebra = Algebra(d, doc.basis, *doc.table, unit);
  }
  if (!doc.name.empty()) a.name = doc.name;
  if (a.name.empty()) a.name = "A";
  if (auto v = validate(a.algebra)) throw InputError(violation_text(*v, a.algebra));
  if (doc.grading) {
    if (auto err = check_grading(a.algebra, *doc.grading)) throw InputError("grading: " + *err);
    a.structure = *doc.grading;
  }
  if (doc.involution) {
    if (doc.involution->rows() != a.dim()) throw InputError("involution: expected a " + std::to_string(a.dim()) + "x" + std::to_string(a.dim()) + " matrix");
    const Involution inv{*doc.involution};
    if (auto err = check_involution(a.algebra, inv)) throw InputError("involution: " + *err);
    a.structure = inv;
  }
  return a;
}

StructuredAlgebra load(const std::filesystem::path& path) {
  const AlgebraDocument doc = read_document(path);
  try {
    return realize(doc);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

AlgebraDocument to_document(const StructuredAlgebra& a) {
  AlgebraDocument doc;
  doc.name = a.name;
  doc.dim = a.dim();
  doc.basis = a.algebra.labels();
  doc.table = a.algebra.entries();
  if (a.algebra.unit()) doc.unit = std::vector<Rational>(a.algebra.unit()->begin(), a.algebra.unit()->end());
  if (const auto* g = a.grading()) doc.grading = *g;
  if (const auto* inv = a.involution()) doc.involution = inv->map;
  return doc;
}

void save(const StructuredAlgebra& a, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path.string() + ": cannot write");
  out << canonical_text(to_document(a));
}

StructuredAlgebra from_family(const json& d) {
  if (d.is_string()) {
    if (d.get<std::string>() == "field") return field();
    throw InputError("family: unknown descriptor \"" + d.get<std::string>() + "\"");
  }
  if (!d.is_object() || d.size() != 1) throw InputError("family: expected an object with a single key");
  const std::string kind = d.begin().key();
  const json& arg = d.begin().value();
  const std::string where = "family." + kind;
  return guarded([&]() -> StructuredAlgebra {
    if (kind == "field") return field();
    if (kind == "ut") return upper_triangular(small_int(arg, where));
    if (kind == "zero") return zero_algebra(small_int(arg, where));
    if (kind == "grassmann") return grassmann_truncated(small_int(arg, where));
    if (kind == "group_algebra") {
      if (arg.is_number_integer()) return group_algebra(std::vector<int>(static_cast<std::size_t>(small_int(arg, where)), 2));
      std::vector<int> orders;
      for (const auto& o : arg) orders.push_back(small_int(o, where));
      return group_algebra(orders);
    }
    if (kind == "full_matrix") {
      if (arg.is_number_integer()) return full_matrix(small_int(arg, where));
      const int n = small_int(field_of(arg, "n", where), where + ".n");
      StructuredAlgebra a = full_matrix(n);
      if (arg.contains("grading")) {
        const json& g = arg["grading"];
        std::vector<int> group;
        for (const auto& o : field_of(g, "group", where + ".grading")) group.push_back(small_int(o, where + ".grading.group"));
        std::vector<GroupElement> tuple;
        for (const auto& e : field_of(g, "tuple", where + ".grading")) tuple.push_back(element_from(e, where + ".grading.tuple"));
        a = full_matrix_elementary(n, group, tuple);
      }
      if (arg.contains("involution")) {
        if (arg.contains("grading")) throw InputError(where + ": a grading and an involution cannot both be attached");
        const std::string k = arg["involution"].is_string() ? arg["involution"].get<std::string>() : "";
        if (k == "transpose")
          a = with_involution(a, matrix_involution(n, InvolutionKind::transpose));
        else if (k == "symplectic")
          a = with_involution(a, matrix_involution(n, InvolutionKind::symplectic));
        else
          throw InputError(where + ".involution: expected \"transpose\" or \"symplectic\"");
      }
      return a;
    }
    if (kind == "incidence") {
      const int size = small_int(field_of(arg, "size", where), where + ".size");
      std::vector<std::pair<int, int>> relations;
      for (const auto& r : field_of(arg, "relations", where)) {
        if (!r.is_array() || r.size() != 2) throw InputError(where + ".relations: expected pairs [x, y]");
        relations.emplace_back(small_int(r[0], where), small_int(r[1], where));
      }
      return incidence(size, relations);
    }
    if (kind == "tensor") {
      auto parts = family_list(arg, where);
      StructuredAlgebra a = parts.front();
      for (std::size_t i = 1; i < parts.size(); ++i) a = tensor_product(a, parts[i]);
      return a;
    }
    if (kind == "direct_sum") {
      auto parts = family_list(arg, where);
      StructuredAlgebra a = parts.front();
      for (std::size_t i = 1; i < parts.size(); ++i) a = direct_sum(a, parts[i]);
      return a;
    }
    if (kind == "matrix") return matrix_algebra(from_family(field_of(arg, "of", where)), small_int(field_of(arg, "n", where), where + ".n"));
    if (kind == "envelope")
      return grassmann_envelope(from_family(field_of(arg, "of", where)), small_int(field_of(arg, "k", where), where + ".k"));
    if (kind == "exchange") return exchange_involution(from_family(arg));
    if (kind == "graded") {
      StructuredAlgebra a = from_family(field_of(arg, "of", where));
      return with_grading(a, grading_from(arg, where));
    }
    if (kind == "reflection") {
      StructuredAlgebra a = from_family(arg);
      if (a.name.rfind("UT", 0) != 0) throw InputError(where + ": the reflection involution needs a ut(n) algebra");
      return with_involution(a, upper_triangular_reflection(static_cast<int>(std::lround(std::sqrt(8.0 * a.dim() + 1) - 1) / 2)));
    }
    if (kind == "plain") return forget_structure(from_family(arg));
    throw InputError("family: unknown kind \"" + kind + "\"");
  });
}

}  // namespace piexp
