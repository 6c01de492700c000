// Copyright 2026 The gapsieve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gapsieve/cli.hpp"

using namespace gapsieve;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch() {
  static const auto dir = [] {
    auto d = std::filesystem::temp_directory_path() / "gapsieve-cli-test";
    std::filesystem::remove_all(d);
    std::filesystem::create_directories(d);
    ::setenv(cli::kCacheDirEnv, d.c_str(), 1);
    return d;
  }();
  return dir;
}

}  // namespace

TEST_CASE("cycle enumerate") {
  const auto r = run({"cycle", "enumerate", "--p", "5"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "6 4 2 4 2 4 6 2\n");
  CHECK(run({"cycle", "enumerate", "--p", "7", "--fused"}).out == run({"cycle", "enumerate", "--p", "7"}).out);
}

TEST_CASE("usage and runtime errors") {
  CHECK(run({"bogus"}).code == cli::kUsage);
  CHECK(run({"cycle", "enumerate"}).code == cli::kUsage);
  const auto bad = run({"cycle", "enumerate", "--p", "9"});
  CHECK(bad.code == cli::kRuntimeError);
  CHECK(!bad.err.empty());
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("census and propagation through files") {
  const auto dir = scratch();
  const auto cen = (dir / "c13.txt").string();
  const auto prop = (dir / "p17.txt").string();
  REQUIRE(run({"cycle", "census", "--p", "13", "--gmax", "40", "--out", cen}).code == cli::kOk);
  const auto r = run({"dynamics", "propagate", "--census", cen, "--to", "17", "--out", prop});
  CHECK(r.code == cli::kOk);
  std::ifstream in(prop);
  std::string first;
  std::getline(in, first);
  CHECK(first == "PROPAGATED from=13 to=17 mode=exact steps=1");
  const auto direct = run({"cycle", "census", "--p", "17", "--gmax", "20"});
  CHECK(direct.out.find("CENSUS v1 p=17") == 0);
  CHECK(run({"dynamics", "propagate", "--census", cen, "--to", "101", "--step-limit", "2"}).code ==
        cli::kRuntimeError);
}

TEST_CASE("lambda subcommand") {
  const auto r = run({"dynamics", "lambda", "--p0", "37", "--pk", "1000000"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("0.2701479") != std::string::npos);
  const auto far = run({"dynamics", "lambda", "--p0", "37", "--pk", "1e15"});
  CHECK(far.code == cli::kOk);
  const auto inv = run({"dynamics", "lambda", "--p0", "37", "--invert", "0.0365"});
  CHECK(inv.code == cli::kOk);
  CHECK(inv.out.find("e+43") != std::string::npos);
}

TEST_CASE("pairs, tables and curves") {
  const auto dir = scratch();
  const auto pairs = run({"sieve", "pairs", "--n", "10", "--base", "10", "--window", "first"});
  CHECK(pairs.code == cli::kOk);
  CHECK(pairs.out.find("#skipped=3") != std::string::npos);
  const auto tab = run({"residue", "table", "--base", "10", "--csv"});
  CHECK(tab.code == cli::kOk);
  CHECK(tab.out.rfind("base,h,pairs", 0) == 0);
  const auto cen = (dir / "c13-curves.txt").string();
  REQUIRE(run({"cycle", "census", "--p", "13", "--gmax", "60", "--out", cen}).code == cli::kOk);
  const auto cur = run({"curves", "--census", cen, "--gmax", "60", "--model-prime", "13", "--lambda-grid", "0.5,1"});
  CHECK(cur.code == cli::kOk);
  CHECK(cur.out.find("lambda,p_low,p_high,W_2") != std::string::npos);
  CHECK(run({"curves", "--census", cen, "--lambda-grid", "2"}).code == cli::kRuntimeError);
}

TEST_CASE("compare exit codes") {
  scratch();
  const auto ok = run({"compare", "--table", "t3"});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.out.find("overall: PASS") != std::string::npos);
  CHECK(run({"compare", "--table", "nope"}).code == cli::kUsage);
}
