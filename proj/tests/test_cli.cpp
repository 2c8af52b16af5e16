/*
 * Copyright 2026 The crossconn Authors
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

#include <filesystem>  // for temp_directory_path
#include <fstream>     // for ifstream, ofstream
#include <sstream>     // for ostringstream

#include "doctest.h"
#include "json.hpp"

#include "crossconn/cli.hpp"
#include "crossconn/fixtures.hpp"

using namespace crossconn;
namespace fs = std::filesystem;

namespace {

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int const          code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string slurp(fs::path const& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path scratch(std::string const& name) {
    auto const dir = fs::temp_directory_path() / ("crossconn_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
  }

}  // namespace

TEST_CASE("build") {
  auto const dir = scratch("build");
  auto const r   = run({"build", "--fixture", "cl5", "--out", dir.string()});
  CHECK(r.code == exit_ok);
  auto const summary = nlohmann::json::parse(slurp(dir / "summary.json"));
  CHECK(summary["order"] == 5);
  CHECK(summary["clifford"] == true);
  CHECK(slurp(dir / "table.txt").starts_with("5\n"));

  auto const b2 = run({"build", "--fixture", "b2", "--format", "json"});
  CHECK(b2.code == exit_ok);
  auto const j = nlohmann::json::parse(b2.out);
  CHECK(j["order"] == 5);
  CHECK(j["clifford"] == false);
}

TEST_CASE("build round trip through --table") {
  for (auto const* name : {"cl5", "b2", "s3", "diamond"}) {
    auto const a = scratch(std::string("rt_a_") + name);
    auto const b = scratch(std::string("rt_b_") + name);
    REQUIRE(run({"build", "--fixture", name, "--out", a.string()}).code == 0);
    REQUIRE(run({"build", "--table", (a / "table.txt").string(), "--out", b.string()}).code
            == 0);
    CHECK(slurp(a / "summary.json") == slurp(b / "summary.json"));
    CHECK(slurp(a / "table.txt") == slurp(b / "table.txt"));
  }
}

TEST_CASE("bad strong semilattice spec") {
  auto const dir  = scratch("slg");
  auto const path = dir / "spec.json";
  std::ofstream(path) << R"({"semilattice": [[0,1],[1,1]],
    "groups": [[[0,1],[1,0]], [[0,1,2],[1,2,0],[2,0,1]]],
    "homs": [{"from": 0, "to": 1, "map": [0, 1]}]})";
  auto const r = run({"build", "--slg", path.string()});
  CHECK(r.code == exit_input_error);
  CHECK(r.err.find("BadHom") != std::string::npos);
  CHECK(r.err.find("/homs/0/map") != std::string::npos);
}

TEST_CASE("input errors") {
  CHECK(run({"build"}).code == exit_input_error);
  CHECK(run({"build", "--fixture", "c2", "--fixture", "c3"}).code == exit_input_error);
  CHECK(run({"build", "--fixture", "c2", "--table", "x"}).code == exit_input_error);
  CHECK(run({"build", "--fixture", "nope"}).code == exit_input_error);
  CHECK(run({"build", "--fixture", "c2", "--format", "xml"}).code == exit_input_error);
  CHECK(run({"verify", "--fixture", "c2", "--budget", "0"}).code == exit_input_error);
  CHECK(run({"frobnicate"}).code == exit_input_error);
  CHECK(run({"--help"}).code == exit_ok);

  auto const dir = scratch("nonregular");
  std::ofstream(dir / "null.txt") << "2\n0 0\n0 0\n";
  auto const r = run({"category", "--table", (dir / "null.txt").string()});
  CHECK(r.code == exit_input_error);
  CHECK(r.err.find("NotRegular") != std::string::npos);
}

TEST_CASE("budget exhaustion") {
  auto const r = run({"verify", "--fixture", "cl5", "--budget", "1"});
  CHECK(r.code == exit_budget);
  CHECK(r.err.find("EnumerationBudgetExceeded") != std::string::npos);
  CHECK(run({"cones", "--fixture", "s3", "--budget", "1"}).code == exit_budget);
}

TEST_CASE("category") {
  auto const dir = scratch("category");
  auto const r   = run({"category", "--fixture", "b2", "--out", dir.string()});
  CHECK(r.code == exit_ok);
  for (auto const* f : {"L.json", "R.json", "L.dot", "R.dot", "category.txt"}) {
    CHECK(fs::exists(dir / f));
  }
  auto const L = nlohmann::json::parse(slurp(dir / "L.json"));
  CHECK(L["objects"].size() == 3);
}

TEST_CASE("cones") {
  auto const r = run({"cones", "--fixture", "c2", "--format", "json"});
  CHECK(r.code == exit_ok);
  auto const j = nlohmann::json::parse(r.out);
  CHECK(j["num_cones"] == 2);
  for (auto const& c : j["cones"]) {
    CHECK(c["principal"] == true);
  }
  auto const b2 = nlohmann::json::parse(run({"cones", "--fixture", "b2", "--format", "json"}).out);
  CHECK(b2["num_cones"] == 7);
  auto const right = run({"cones", "--fixture", "b2", "--side", "right", "--format", "json"});
  CHECK(nlohmann::json::parse(right.out)["num_cones"] == 7);
  CHECK(run({"cones", "--fixture", "b2", "--side", "up"}).code == exit_input_error);
}

TEST_CASE("verify") {
  auto const cl5 = run({"verify", "--fixture", "cl5", "--format", "json"});
  CHECK(cl5.code == exit_ok);
  auto const j = nlohmann::json::parse(cl5.out);
  for (auto const& row : j["rows"]) {
    CAPTURE(row["name"].get<std::string>());
    if (row["name"] == "semilattice") {
      CHECK(row["status"] == "N-A");
    } else {
      CHECK(row["status"] == "PASS");
    }
  }
  std::vector<std::string> names;
  for (auto const& row : j["rows"]) {
    names.push_back(row["name"]);
  }
  CHECK(names == std::vector<std::string>{"prop2", "prop3", "prop4", "prop5", "theorem6",
                                          "theorem7", "theorem8", "degeneration",
                                          "semilattice", "homomorphism", "tl_wellformed"});

  auto const b2 = run({"verify", "--fixture", "b2"});
  CHECK(b2.code == exit_ok);
  CHECK(b2.out.find("|TL| = 7") != std::string::npos);
  auto const bj = nlohmann::json::parse(run({"verify", "--fixture", "b2", "--format", "json"}).out);
  CHECK(bj["rows"][0]["status"] == "N-A");
  CHECK(bj["rows"][0]["detail"]["holds"] == false);
  CHECK(bj["tl"]["order"] == 7);

  auto const c2 = nlohmann::json::parse(run({"verify", "--fixture", "c2", "--format", "json"}).out);
  CHECK(c2["rows"][8]["status"] == "PASS");
}

TEST_CASE("verify output is byte deterministic") {
  for (auto const& name : fixture_names()) {
    CAPTURE(name);
    auto const a = run({"verify", "--fixture", name, "--format", "json,text"});
    auto const b = run({"verify", "--fixture", name, "--format", "json,text", "--jobs", "2"});
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("fixtures listing") {
  auto const r = run({"fixtures"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("cl5\n") != std::string::npos);
}
