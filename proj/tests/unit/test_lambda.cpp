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

#include <cmath>

#include "gapsieve/dynamics.hpp"

using namespace gapsieve;
using namespace gapsieve::dynamics;

TEST_CASE("lambda over a single prime") {
  const auto one = lambda_exact(37, 41);
  CHECK(one.factors == 1);
  REQUIRE(one.exact.has_value());
  CHECK(*one.exact == Rational(38, 39));
  CHECK(one.value == doctest::Approx(38.0 / 39.0).epsilon(1e-15));
  const auto none = lambda_exact(37, 40);
  CHECK(none.factors == 0);
  CHECK(none.value == 1.0);
}

TEST_CASE("Mertens constant of the base") {
  CHECK(mertens_c0(3) == Rational(3));
  CHECK(mertens_c0(37) == Rational(3212440751, 477757440));
  CHECK(mertens_c0(37).get_d() == doctest::Approx(6.72399942).epsilon(1e-8));
  CHECK_THROWS_AS(mertens_c0(9), DomainError);
}

TEST_CASE("exact product and compensated sum agree") {
  const auto l = lambda_exact(37, 1'000'000);
  REQUIRE(l.exact.has_value());
  CHECK(l.value == doctest::Approx(l.exact->get_d()).epsilon(1e-13));
  CHECK(l.value == doctest::Approx(0.27014795).epsilon(1e-7));
  CHECK(lambda_exact(37, 1993).value == doctest::Approx(0.490290).epsilon(1e-5));
}

TEST_CASE("one pass along several targets") {
  const std::uint64_t targets[] = {100, 1000, 100000};
  const auto path = lambda_exact_path(37, targets);
  REQUIRE(path.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(path[i].value == doctest::Approx(lambda_exact(37, targets[i]).value).epsilon(1e-15));
    if (i > 0) CHECK(path[i].value < path[i - 1].value);
  }
  const std::uint64_t bad[] = {1000, 100};
  CHECK_THROWS_AS(lambda_exact_path(37, bad), DomainError);
}

TEST_CASE("capacity and argument checks") {
  LambdaOptions o;
  o.ceiling = 10000;
  CHECK_THROWS_AS(lambda_exact(37, 10001, o), CapacityError);
  CHECK_THROWS_AS(lambda_exact(36, 100), DomainError);
  CHECK_THROWS_AS(lambda_exact(2, 100), DomainError);
  o.exact_ceiling = 0;
  o.ceiling = 100000;
  CHECK(!lambda_exact(37, 1000, o).exact.has_value());
}

TEST_CASE("bounds bracket the exact value") {
  for (std::uint64_t pk : {1'000'000ull, 10'000'000ull}) {
    const auto b = lambda_bounds(37, static_cast<double>(pk));
    const double v = lambda_exact(37, pk).value;
    CHECK(b.lower < v);
    CHECK(v < b.upper);
    CHECK(b.lower == doctest::Approx(b.upper * 36.0 / 37.0));
  }
  const auto far = lambda_bounds(37, 1e15);
  CHECK(far.lower == doctest::Approx(0.106351).epsilon(1e-5));
  CHECK(far.upper == doctest::Approx(0.109304).epsilon(1e-5));
  CHECK(!far.note.empty());
}

TEST_CASE("inversion") {
  const auto iv = lambda_invert(0.0365, 37);
  CHECK(iv.log10_low == doctest::Approx(43.706).epsilon(1e-4));
  CHECK(iv.log10_high == doctest::Approx(44.920).epsilon(1e-4));
  // Round trip: the bounds at the interval's ends return lambda.
  CHECK(lambda_bounds(37, std::pow(10.0, iv.log10_high)).upper == doctest::Approx(0.0365).epsilon(1e-9));
  CHECK(lambda_bounds(37, std::pow(10.0, iv.log10_low)).lower == doctest::Approx(0.0365).epsilon(1e-9));
  CHECK_THROWS_AS(lambda_invert(0.0, 37), DomainError);
  CHECK_THROWS_AS(lambda_invert(1.0, 37), DomainError);
  CHECK_THROWS_AS(lambda_invert(-0.5, 37), DomainError);
}
