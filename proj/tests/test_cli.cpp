// Copyright 2026 The Multiplicity Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"
#include "multiplicity/cli.hpp"

using namespace multiplicity;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "multiplicity");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "multiplicity_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string write_file(const std::string& name, const std::string& body) {
  const auto path = scratch(name);
  std::ofstream(path) << body;
  return path.string();
}

std::string generated(const std::string& name, std::vector<std::string> args) {
  const Run r = cli(args);
  REQUIRE(r.code == 0);
  return write_file(name, r.out);
}

}  // namespace

TEST_CASE("gen emits points with provenance and config") {
  const Run r = cli({"gen", "double-chain", "--n", "10", "--k", "0"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["points"].size() == 10);
  CHECK(doc["provenance"]["kind"] == "double-chain");
  CHECK(doc["version"] == std::string(kVersion));
  CHECK(doc.contains("config"));
}

TEST_CASE("count and enumerate") {
  const std::string convex = generated("convex12.json", {"gen", "convex", "--n", "12"});
  const Run tri = cli({"count", convex, "--class", "triangulation"});
  REQUIRE(tri.code == 0);
  CHECK(json::parse(tri.out)["result"]["count"] == "16796");

  const std::string hexagon = generated("convex6.json", {"gen", "convex", "--n", "6"});
  const Run lines = cli({"enumerate", hexagon, "--class", "triangulation", "--format", "jsonl"});
  REQUIRE(lines.code == 0);
  std::istringstream in(lines.out);
  std::string line;
  int count = 0;
  std::getline(in, line);
  CHECK(json::parse(line)["count"] == 14);
  while (std::getline(in, line)) {
    CHECK(json::parse(line).size() == 9);
    ++count;
  }
  CHECK(count == 14);
}

TEST_CASE("extremal and tour reports") {
  const std::string s4 = generated("s4.json", {"gen", "s4-matching", "--n", "8"});
  const Run m = cli({"extremal", s4, "--class", "perfect-matching", "--objective", "max"});
  REQUIRE(m.code == 0);
  CHECK(json::parse(m.out)["result"]["multiplicity"] == 4);

  const std::string ten = generated("abstract10.json", {"gen", "convex-abstract", "--n", "10"});
  const Run t = cli({"tour", ten, "--objective", "longest"});
  REQUIRE(t.code == 0);
  CHECK(json::parse(t.out)["result"]["multiplicity"] == 5);
}

TEST_CASE("exit codes") {
  CHECK(cli({"count", "/nonexistent/points.json", "--class", "triangulation"}).code == 2);
  CHECK(cli({"gen", "no-such-kind", "--n", "5"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  const std::string bad = write_file("collinear.json", R"({"mode": "exact", "points": [{"x": "0", "y": "0"}, {"x": "1", "y": "1"}, {"x": "2", "y": "2"}, {"x": "3", "y": "0"}]})");
  CHECK(cli({"count", bad, "--class", "triangulation"}).code == 2);
  const std::string big = generated("convex20.json", {"gen", "convex", "--n", "20"});
  CHECK(cli({"count", big, "--class", "spanning-tree"}).code == 3);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("bound reports are byte-identical for a seed") {
  const std::vector<std::string> args{"bound", "st", "--order", "2", "--restarts", "2", "--seed", "7"};
  const Run a = cli(args);
  const Run b = cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const json doc = json::parse(a.out);
  CHECK(doc["config"]["seed"] == 7);
  CHECK(std::abs(doc["result"]["base"].get<double>() - 11.611) < 0.005);
}

TEST_CASE("verify runs a suite") {
  const Run r = cli({"verify", "--suite", "enumeration"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).contains("result"));
}

TEST_CASE("the binary honours the size limit from the environment") {
  const char* binary = std::getenv("MULTIPLICITY_CLI");
  if (!binary) return;
  const std::string nine = generated("convex9.json", {"gen", "convex", "--n", "9"});
  const std::string cmd = "MULTIPLICITY_LIMIT_N=8 " + std::string(binary) + " count " + nine +
                          " --class triangulation > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 3);
  const std::string ok = std::string(binary) + " count " + nine +
                         " --class triangulation > /dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(ok.c_str())) == 0);
}
