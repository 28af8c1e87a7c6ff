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

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace piexp {

/// Malformed or invalid input document.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// On-disk form of an algebra. Exactly one of `table` and `family` describes
/// the multiplication; indices are 0-based.
struct AlgebraDocument {
  std::string name;
  std::optional<Index> dim;
  std::vector<std::string> basis;
  std::optional<std::vector<StructureConstant>> table;
  std::optional<std::vector<Rational>> unit;
  std::optional<Grading> grading;
  std::optional<Matrix> involution;
  std::optional<nlohmann::json> family;
};

AlgebraDocument parse_document(const nlohmann::json& j);
AlgebraDocument read_document(const std::filesystem::path& path);

/// Canonical form: sorted entries with zero entries merged away, reduced rationals.
nlohmann::json to_json(const AlgebraDocument& doc);
std::string canonical_text(const AlgebraDocument& doc);

/// Builds and validates; throws InputError naming the offending entry.
StructuredAlgebra realize(const AlgebraDocument& doc);
StructuredAlgebra load(const std::filesystem::path& path);

/// Explicit-table document for an algebra.
AlgebraDocument to_document(const StructuredAlgebra& a);
void save(const StructuredAlgebra& a, const std::filesystem::path& path);

/// Named-family descriptor, e.g. {"ut": 2} or {"tensor": [{"ut": 2}, {"ut": 2}]}.
StructuredAlgebra from_family(const nlohmann::json& descriptor);

/// Basis-labelled rendering such as "e11 - 2*e12".
std::string vector_string(const Vector& v, const std::vector<std::string>& labels);

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace piexp
