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

#include <random>

#include "gapsieve/dynamics.hpp"
#include "gapsieve/primesieve.hpp"

using namespace gapsieve;
using namespace gapsieve::dynamics;

TEST_CASE("Pascal factors invert each other") {
  for (std::size_t dim : {1u, 2u, 5u, 12u, 24u}) {
    const auto e = eigen_basis(dim);
    CHECK(e.left * e.right == Matrix<Rational>::identity(dim));
    CHECK(e.right * e.left == Matrix<Rational>::identity(dim));
  }
  CHECK_THROWS_AS(eigen_basis(0), DomainError);
}

TEST_CASE("M(p) = R diag(a) L") {
  for (std::size_t dim : {1u, 3u, 8u, 16u}) {
    const auto e = eigen_basis(dim);
    for (std::uint64_t p = next_prime(dim + 1); p < 60; p = next_prime(p)) {
      CHECK(e.reconstruct(p) == TransferMatrix(p, dim).rational_form());
    }
  }
}

TEST_CASE("eigenvalues") {
  const auto a = eigenvalues(7, 4);
  CHECK(a[0] == 1);
  CHECK(a[1] == Rational(4, 5));
  CHECK(a[3] == Rational(2, 5));
  const std::uint64_t ps[] = {7, 11};
  const auto prod = eigen_products(ps, 3);
  CHECK(prod[1] == Rational(4, 5) * Rational(8, 9));
  CHECK(eigen_products({}, 3) == std::vector<Rational>(3, Rational(1)));
}

TEST_CASE("closed form of a single step") {
  const auto c5 = cycle::census_driving_terms(cycle::materialize_gap_cycle(5), 12, 6);
  const auto w = ratios_of(c5, 6);
  CHECK(w.entries == std::vector<Rational>{Rational(2, 3), Rational(4, 3)});
  const std::uint64_t ps[] = {7};
  CHECK(closed_form_w1(w, eigen_products(ps, 2)) == Rational(14, 15));
  CHECK_THROWS_AS(closed_form_w1(w, eigen_products(ps, 1)), DomainError);
}

TEST_CASE("closed form equals iterated propagation") {
  const auto cen = cycle::census_driving_terms(cycle::materialize_gap_cycle(13), 60, 30);
  std::vector<std::uint64_t> gaps;
  for (std::uint32_t g = 2; g <= 60; g += 2) {
    const auto len = cen.longest_term(g);
    if (len > 0 && len + 1 <= 17) gaps.push_back(g);
  }
  std::vector<std::uint64_t> primes;
  primesieve::for_each_prime(17, 199, [&](std::span<const std::uint64_t> b) { primes.insert(primes.end(), b.begin(), b.end()); });
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 25; ++trial) {
    const std::uint64_t g = gaps[rng() % gaps.size()];
    const std::size_t k = 1 + rng() % primes.size();
    PopulationVector pop = population_of(cen, g);
    for (std::size_t i = 0; i < k; ++i) pop = transfer_step(pop, primes[i]);
    const Rational iterated = make_rational(pop.entries[0], [&] {
      PopulationVector twin = population_of(cen, 2);
      for (std::size_t i = 0; i < k; ++i) twin = transfer_step(twin, primes[i]);
      return twin.entries[0];
    }());
    const auto w = ratios_of(cen, g);
    const auto prod = eigen_products(std::span(primes).first(k), w.entries.size());
    CAPTURE(g);
    CAPTURE(k);
    CHECK(closed_form_w1(w, prod) == iterated);
  }
}

TEST_CASE("polynomial model") {
  const auto cen = cycle::census_driving_terms(cycle::materialize_gap_cycle(13), 60, 30);
  const auto w = ratios_of(cen, 30);
  const std::size_t full = w.entries.size() - 1;
  const auto m = poly_model(w, full);
  Rational total = 0;
  for (const auto& e : w.entries) total += e;
  CHECK(m.coefficients[0] == total);
  CHECK(poly_eval(m, Rational(0)) == total);
  CHECK(poly_eval(m, Rational(1)) == w.entries[0]);
  CHECK(poly_eval(m, 1.0) == doctest::Approx(w.entries[0].get_d()));
  CHECK_THROWS_AS(poly_model(w, full + 1), DomainError);
  // Full degree equals sum_j w_j (1 - lambda)^(j-1).
  const Rational lam(3, 7);
  Rational direct = 0, pw = 1;
  for (const auto& e : w.entries) {
    direct += e * pw;
    pw *= 1 - lam;
  }
  CHECK(poly_eval(m, lam) == direct);
}

TEST_CASE("large factor correction") {
  CHECK(large_factor_correction(46, 19) == Rational(22, 21));
  CHECK(large_factor_correction(30, 37) == 1);
  CHECK(large_factor_correction(2 * 23 * 29, 19) == Rational(22, 21) * Rational(28, 27));
  CHECK(large_factor_correction(64, 3) == 1);
}
