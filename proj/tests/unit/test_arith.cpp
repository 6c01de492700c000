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

#include "gapsieve/arith.hpp"
#include "gapsieve/error.hpp"

using namespace gapsieve;

TEST_CASE("primality helpers") {
  CHECK(!is_prime(0));
  CHECK(!is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(1993));
  CHECK(!is_prime(1995));
  CHECK(is_prime(2038074743));
  CHECK(next_prime(19) == 23);
  CHECK(next_prime(1) == 2);
  CHECK(prev_prime(23) == 19);
  CHECK_THROWS_AS(prev_prime(2), DomainError);
  CHECK(small_primes(30) == std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("primorials") {
  CHECK(primorial(5) == 30);
  CHECK(primorial(19) == 9699690);
  CHECK(primorial_totient(7) == 48);
  CHECK(primorial_totient(19) == 1658880);
  CHECK(primorial_big(37) == BigInt("7420738134810"));
  CHECK(primorial(47) == 614889782588491410ULL);
  CHECK_THROWS_AS(primorial(53), CapacityError);
}

TEST_CASE("factors and binomials") {
  CHECK(prime_factors(420) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(prime_factors(1).empty());
  CHECK(prime_factors(2 * 23 * 23) == std::vector<std::uint64_t>{2, 23});
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(64, 32) == BigInt("1832624140942590534"));
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("number formatting") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0 / 3.0, 6) == "0.333333");
  CHECK(format_pow10(2.0) == "1.000000e+02");
  CHECK(format_pow10(45.0492180226701) == "1.120000e+45");
  CHECK(format_pow10(-3.0) == "1.000000e-03");
  // The mantissa rounds up into the next decade.
  CHECK(format_pow10(2.9999999999) == "1.000000e+03");
  CHECK(format_pow10(1e13).find("e+10000000000000") != std::string::npos);
}
