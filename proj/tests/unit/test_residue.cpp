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

#include "gapsieve/residue.hpp"

using namespace gapsieve;
using namespace gapsieve::residue;

TEST_CASE("asymptotic gap ratios") {
  CHECK(w_infinity(2) == 1);
  CHECK(w_infinity(6) == 2);
  CHECK(w_infinity(30) == Rational(8, 3));
  CHECK(w_infinity(64) == 1);
  CHECK(w_infinity(210) == Rational(16, 5));
  CHECK_THROWS_AS(w_infinity(7), DomainError);
  CHECK_THROWS_AS(w_infinity(0), DomainError);
}

TEST_CASE("digit pair classes") {
  const auto s10 = digit_pair_classes(10);
  CHECK(s10.digits == std::vector<unsigned>{1, 3, 7, 9});
  CHECK(s10.classes.size() == 5);
  CHECK(s10.pair_count(0) == 4);
  CHECK(s10.pair_count(2) == 3);
  CHECK(s10.pair_count(8) == 3);
  CHECK(s10.normalizing_class() == 2);
  CHECK(s10.class_of_pair(9, 1) == 2);
  CHECK(s10.class_of_gap(38) == 8);

  const auto s3 = digit_pair_classes(3);
  CHECK(s3.digits == std::vector<unsigned>{1, 2});
  // Base 3 gaps fall in classes 0, 1, 2 and h = 1 collects g = 4, 10, ...
  CHECK(s3.is_gap_class(1));
  CHECK(s3.class_of_gap(4) == 1);
  CHECK_THROWS_AS(digit_pair_classes(1), DomainError);
}

TEST_CASE("class gaps and asymptotic means") {
  CHECK(class_gaps(10, 2, 3) == std::vector<std::uint64_t>{2, 12, 22});
  CHECK(class_gaps(10, 0, 2) == std::vector<std::uint64_t>{10, 20});
  // Base 3 and base 6 see the same even gaps in corresponding classes.
  CHECK(class_gaps(3, 1, 4) == class_gaps(6, 4, 4));
  CHECK(class_gaps(3, 2, 4) == class_gaps(6, 2, 4));
  CHECK(class_gaps(3, 0, 4) == class_gaps(6, 0, 4));
  const auto m = class_mean_asymptotic(10, 0, 1);
  CHECK(m == Rational(4, 3));
}

TEST_CASE("class aggregation") {
  std::map<std::uint64_t, Rational> v{{2, 1}, {4, 1}, {6, 2}, {12, 1}};
  const auto agg = class_ratios(v, 10);
  CHECK(agg.normalizing_class == 2);
  CHECK(agg.totals.at(2) == 2);
  CHECK(agg.ratios.at(6) == 1);
  CHECK(agg.ratios.at(0) == 0);
  std::map<std::uint64_t, double> only4{{4, 1.0}};
  CHECK_THROWS_AS(class_ratios(only4, 10), DomainError);
}

TEST_CASE("display order") {
  ClassAggregate<double> agg;
  agg.base = 10;
  agg.normalizing_class = 2;
  for (unsigned h : {0u, 2u, 4u, 6u, 8u}) agg.ratios[h] = 1.0;
  CHECK(display_order(agg) == std::vector<unsigned>{2, 4, 6, 8, 0});
}

TEST_CASE("table writers") {
  const auto scheme = digit_pair_classes(10);
  const auto inf = class_ratios(asymptotic_values(200), 10);
  std::ostringstream csv;
  write_class_csv(csv, scheme, nullptr, inf);
  CHECK(csv.str().find("W_infinity") != std::string::npos);
  std::ostringstream txt;
  write_class_table(txt, scheme, &inf, inf);
  CHECK(!txt.str().empty());
}
