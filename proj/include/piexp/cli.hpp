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

#include "piexp/exponent.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace piexp {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInput = 2,
  kExitUnsupported = 3,  // non-split, unverified simplicity, non-invariant radical, no complement
};

/// Values pinned by `verify paper-examples`. UT_2 (x) UT_2 is compared with the
/// incidence algebra of 1 <= 2, 3 <= 4.
struct ExampleExpectations {
  Index exp_ut2 = 2;
  Index exp_tensor = 3;
  std::vector<std::size_t> witness_sequence{1, 2, 4};
  std::vector<std::string> witness_chain{"e11", "e12", "e22", "e24", "e44"};
  Index radical_dim = 5;
  Index radical_square_dim = 1;
  std::size_t nilpotency_index = 3;  // smallest k with J^k = 0
  std::vector<Index> semisimple_dims{1, 1, 1, 1};
  int codimension_degree = 4;        // incidence vs tensor compared for m <= this
};

/// Runs every pinned check; `ok` is false if any disagrees.
nlohmann::json example_suite(const ExampleExpectations& expected, bool& ok);

/// Text rendering of a report, with the same values as its JSON form.
std::string render_text(const nlohmann::json& report);

/// args excludes the program name. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const ExampleExpectations& expectations = {});

}  // namespace piexp
