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

#include <sstream>

#include "gapsieve/compare.hpp"
#include "gapsieve/reference.hpp"

using namespace gapsieve;
using namespace gapsieve::compare;

TEST_CASE("report rows") {
  ComparisonReport r;
  r.table = "demo";
  r.add_exact("a", BigInt(5), BigInt(5));
  r.add_exact("b", Rational(1, 3), Rational(1, 3));
  r.add_abs("c", 1.0, 1.0004, 5e-4);
  r.add_rel("d", 100.0, 109.0, 0.10);
  CHECK(r.pass());
  CHECK(r.failures() == 0);
  r.add_abs("e", 1.0, 1.1, 5e-4, false);
  CHECK(r.pass());
  r.add_exact("f", BigInt(5), BigInt(6));
  CHECK(!r.pass());
  CHECK(r.failures() == 1);
  std::ostringstream os;
  write_report(os, r);
  const auto s = os.str();
  CHECK(s.find("deviates (reported)") != std::string::npos);
  CHECK(s.find("FAIL") != std::string::npos);
  CHECK(s.find("overall: FAIL (1 failing of 5 asserted rows)") != std::string::npos);
}

TEST_CASE("exactness of carried counts") {
  CHECK(carried_exactly(44, 19));
  CHECK(!carried_exactly(46, 19));
  CHECK(!carried_exactly(58, 19));
  CHECK(carried_exactly(42, 19));
}

TEST_CASE("reference tables are well formed") {
  CHECK(reference::last_digit_pairs().size() == 16);
  std::uint64_t total = 0;
  for (const auto& row : reference::last_digit_pairs()) total += row.count;
  CHECK(total == 100'000'000);
  CHECK(reference::populations_37().size() == 33);
  CHECK(reference::class_means_base10().size() == 50);
}

TEST_CASE("asymptotic means table") {
  const auto r = class_means();
  CHECK(r.pass());
  CHECK(r.rows.size() > 50);
}

TEST_CASE("observed ratios from a short census") {
  const auto c = primesieve::pair_census(1000, 10, primesieve::PairWindow::after_base);
  const auto r = last_digit_pairs(c);
  CHECK(r.rows.size() >= 16);
  CHECK(!r.pass());
}
