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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <regex>
#include <set>
#include <sstream>

using namespace piexp;
using nlohmann::json;

namespace {

const std::string kData = PIEXP_DATA_DIR;

struct Run {
  int code = -1;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(const std::vector<std::string>& args, const ExampleExpectations& e = {}) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err, e);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string write_temp(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "piexp_test_cli";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << content;
  return path.string();
}

// Every number appearing in a rendering, in order of appearance.
std::multiset<std::string> numbers(const std::string& text) {
  std::multiset<std::string> out;
  const std::regex number(R"(-?\d+(/\d+)?)");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), number); it != std::sregex_iterator(); ++it) out.insert(it->str());
  return out;
}

}  // namespace

TEST_CASE("example suite exits 0 and reports the pinned values") {
  const auto r = run({"verify", "paper-examples"});
  REQUIRE(r.code == kExitOk);
  const json j = r.report();
  CHECK(j["status"] == "ok");
  CHECK(j["tool"] == "piexp");
  CHECK(j["results"]["all_pass"] == true);
  std::map<std::string, json> actual;
  for (const auto& c : j["results"]["checks"]) actual[c["check"].get<std::string>()] = c["actual"];
  CHECK(actual["exp(UT2 (x) UT2)"] == 3);
  CHECK(actual["nilpotency index of J"] == 3);
  CHECK(actual["semisimple component dims"] == json({1, 1, 1, 1}));
  CHECK(actual["witness sequence"] == json({1, 2, 4}));
}

TEST_CASE("mutated expectations never exit 0") {
  std::vector<std::function<void(ExampleExpectations&)>> mutations{
      [](ExampleExpectations& e) { e.exp_ut2 = 3; },
      [](ExampleExpectations& e) { e.exp_tensor = 4; },
      [](ExampleExpectations& e) { e.exp_tensor = 2; },
      [](ExampleExpectations& e) { e.witness_sequence = {1, 3, 4}; },
      [](ExampleExpectations& e) { e.witness_sequence = {1, 2}; },
      [](ExampleExpectations& e) { e.witness_chain[1] = "e13"; },
      [](ExampleExpectations& e) { e.radical_dim = 4; },
      [](ExampleExpectations& e) { e.radical_square_dim = 0; },
      [](ExampleExpectations& e) { e.nilpotency_index = 2; },
      [](ExampleExpectations& e) { e.semisimple_dims = {4}; },
      [](ExampleExpectations& e) { e.semisimple_dims = {1, 1, 2}; },
  };
  for (std::size_t k = 0; k < mutations.size(); ++k) {
    ExampleExpectations e;
    mutations[k](e);
    const auto r = run({"verify", "paper-examples"}, e);
    INFO("mutation " << k);
    CHECK(r.code == kExitCheckFailed);
    CHECK(r.report()["status"] == "check_failed");
    CHECK(r.report()["results"]["all_pass"] == false);
  }
}

TEST_CASE("exit codes") {
  CHECK(run({"validate", data("ut2.json")}).code == kExitOk);
  CHECK(run({"validate", data("bad_assoc.json")}).code == kExitInput);
  CHECK(run({"validate", data("missing.json")}).code == kExitInput);
  CHECK(run({"no-such-command"}).code == kExitInput);
  CHECK(run({"codim", data("ut2.json")}).code == kExitInput);

  const auto ns = run({"exponent", data("nonsplit.json")});
  CHECK(ns.code == kExitUnsupported);
  CHECK(ns.report()["error"]["kind"] == "NonSplit");
  CHECK_FALSE(ns.err.empty());

  CHECK(run({"codim", "-m", "6", data("ut2_tensor.json"), "--budget", "1000"}).code == kExitInput);
  CHECK(run({"verify", "tensor-theorem", "--a", data("ut2.json"), "--s", data("ut2.json")}).code == kExitInput);
  CHECK(run({"exponent", "--envelope", data("ut2.json")}).code == kExitInput);
  CHECK(run({"identity", data("ut2.json"), "--text", "x1 x2 +"}).code == kExitInput);
  CHECK(run({"identity", data("ut2.json"), "--text", "x1^g(1) x2"}).code == kExitInput);

  CHECK(run({"identity", data("m2.json"), "--text", "x1 x2 - x2 x1"}).code == kExitCheckFailed);
  CHECK(run({"contain", "-m", "4", data("ut2.json"), data("ut2_tensor.json")}).code == kExitCheckFailed);
  CHECK(run({"contain", "-m", "3", data("ut2_tensor.json"), data("ut2.json")}).code == kExitOk);
}

TEST_CASE("theorem commands") {
  const auto main = run({"verify", "main-theorem", "--base", data("ut2.json"), "--nmax", "3"});
  REQUIRE(main.code == kExitOk);
  const json rows = main.report()["results"]["rows"];
  REQUIRE(rows.size() == 3);
  for (int n = 1; n <= 3; ++n) {
    CHECK(rows[n - 1]["lhs"] == 2 * n * n);
    CHECK(rows[n - 1]["equal"] == true);
  }
  const auto skipped = run({"verify", "main-theorem", "--base", data("ut2_tensor.json"), "--nmax", "3", "--max-dim", "40"});
  CHECK(skipped.code == kExitOk);
  CHECK(skipped.report()["results"]["rows"][2]["skipped"] == true);

  const auto graded = run({"verify", "tensor-theorem", "--a", data("ut2_graded.json"), "--s", data("m2_elementary.json")});
  REQUIRE(graded.code == kExitOk);
  CHECK(graded.report()["results"]["lhs"] == 8);

  const auto regev = run({"verify", "regev", "-m", "3", data("ut2.json"), data("ut2.json")});
  REQUIRE(regev.code == kExitOk);
  CHECK(regev.report()["results"]["rows"][2]["product"] == 36);
}

TEST_CASE("info, exponent and codim reports") {
  const auto info = run({"info", data("poset_x.json")});
  REQUIRE(info.code == kExitOk);
  const json i = info.report()["results"];
  CHECK(i["radical"]["dim"] == 5);
  CHECK(i["radical_power_dims"] == json({5, 1, 0}));
  CHECK(i["component_dims"] == json({1, 1, 1, 1}));

  const auto e = run({"exponent", data("poset_x.json")});
  REQUIRE(e.code == kExitOk);
  CHECK(e.report()["results"]["witness_chain"] == json({"e11", "e12", "e22", "e24", "e44"}));
  CHECK(e.report()["results"]["chain_product"] == "e14");

  const auto c = run({"codim", "-m", "4", data("ut2.json"), "--strategy", "sampled", "--seed", "3"});
  REQUIRE(c.code == kExitOk);
  CHECK(c.report()["results"]["value"] == 18);
  CHECK(c.report()["seeds"] == json({3}));
  const auto poly = write_temp("s4.txt", to_string(standard_polynomial(4)) + "\n");
  CHECK(run({"identity", data("m2.json"), "--poly", poly}).code == kExitOk);
}

TEST_CASE("reports are deterministic and independent of thread count") {
  const std::vector<std::vector<std::string>> commands{
      {"codim", "-m", "4", data("ut2_tensor.json")},
      {"codim", "-m", "3", data("ut2_tensor.json"), "--strategy", "sampled", "--seed", "11"},
      {"contain", "-m", "4", data("ut2.json"), data("ut2_tensor.json")},
      {"info", data("ut2_exchange.json")},
      {"verify", "paper-examples"},
  };
  for (const auto& cmd : commands) {
    const auto base = run(cmd);
    auto one = cmd;
    one.insert(one.begin(), {"--threads", "1"});
    auto four = cmd;
    four.insert(four.end(), {"--threads", "4"});
    CHECK(run(cmd).out == base.out);
    CHECK(run(one).out == base.out);
    CHECK(run(four).out == base.out);
  }
  const auto timed = run({"--timings", "codim", "-m", "2", data("ut2.json")});
  CHECK(timed.report().contains("timings"));
  CHECK_FALSE(run({"codim", "-m", "2", data("ut2.json")}).report().contains("timings"));
}

TEST_CASE("text and json renderings carry the same numbers") {
  for (const auto& cmd : std::vector<std::vector<std::string>>{{"info", data("ut2_tensor.json")},
                                                               {"verify", "main-theorem", "--base", data("ut2.json")},
                                                               {"exponent", data("poset_x.json")}}) {
    const auto j = run(cmd);
    auto t_args = cmd;
    t_args.insert(t_args.end(), {"--format", "text"});
    const auto t = run(t_args);
    CHECK(j.code == t.code);
    CHECK(render_text(j.report()) == t.out);
    // Array positions are rendered 1-based in text; the values themselves match.
    std::string stripped = std::regex_replace(t.out, std::regex(R"(\[\d+\])"), "");
    CHECK(numbers(stripped) == numbers(j.out));
  }
}

TEST_CASE("canonicalize round trip") {
  const auto first = run({"canonicalize", data("nonsplit.json")});
  REQUIRE(first.code == kExitOk);
  const auto path = write_temp("canon.json", first.out);
  CHECK(run({"canonicalize", path}).out == first.out);
  const auto expanded = run({"canonicalize", "--expand", data("ut2.json")});
  const auto doc = parse_document(json::parse(expanded.out));
  CHECK(doc.table);
  CHECK(doc.table->size() == 4);
}
