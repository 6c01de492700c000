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
#include <sstream>

#include "gapsieve/dynamics.hpp"
#include "gapsieve/residue.hpp"

using namespace gapsieve;
using namespace gapsieve::dynamics;

namespace {

const cycle::DrivingTermCensus& census13() {
  static const auto c = cycle::census_driving_terms(cycle::materialize_gap_cycle(13), 60, 30);
  return c;
}

}  // namespace

TEST_CASE("transfer matrix entries") {
  TransferMatrix m(7, 3);
  CHECK(m.integer_entry(1, 1) == 5);
  CHECK(m.integer_entry(1, 2) == 1);
  CHECK(m.integer_entry(2, 3) == 2);
  CHECK(m.integer_entry(2, 1) == 0);
  CHECK(m.diagonal(2) == Rational(4, 5));
  CHECK(m.superdiagonal(1) == Rational(1, 5));
  CHECK_THROWS_AS(m.integer_entry(4, 4), DomainError);
  // Columns of M(p) sum to one.
  const auto r = TransferMatrix(11, 6).rational_form();
  for (std::size_t j = 1; j < 6; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < 6; ++i) s += r(i, j);
    CHECK(s == 1);
  }
}

TEST_CASE("one exact step") {
  PopulationVector v{6, 5, {BigInt(2), BigInt(4)}};
  const auto next = transfer_step(v, 7);
  CHECK(next.entries == std::vector<BigInt>{BigInt(14), BigInt(16)});
  CHECK(next.stage_prime == 7);
  CHECK(next.total() == 5 * v.total());
  CHECK_THROWS_AS(transfer_step(v, 11), DomainError);
  CHECK_NOTHROW(transfer_step(v, 11, false));
  CHECK_THROWS_AS(transfer_step(v, 5), DomainError);
  CHECK_THROWS_AS(transfer_step(v, 9, false), DomainError);
  PopulationVector longrow{40, 5, std::vector<BigInt>(7, BigInt(1))};
  CHECK_THROWS_AS(transfer_step(longrow, 7), DomainError);
}

TEST_CASE("step agrees with the next census") {
  const auto c5 = cycle::census_driving_terms(cycle::materialize_gap_cycle(5), 12, 6);
  const auto c7 = cycle::census_driving_terms(cycle::materialize_gap_cycle(7), 12, 6);
  for (std::uint64_t g : {2u, 4u, 6u, 8u}) {
    const auto stepped = transfer_step(population_of(c5, g), 7);
    for (std::size_t j = 1; j <= stepped.entries.size(); ++j) CHECK(stepped.entries[j - 1] == c7.at(g, j));
  }
}

TEST_CASE("propagation matches direct censuses where exact") {
  const auto c17 = cycle::census_driving_terms(cycle::materialize_gap_cycle(17), 60, 30);
  const auto r = propagate_range(census13(), 17);
  CHECK(r.steps == 1);
  CHECK(r.to_prime == 17);
  for (std::uint32_t g = 2; g < 2 * 17; g += 2) {
    bool small_factors = true;
    for (auto q : prime_factors(g)) small_factors = small_factors && q <= 13;
    if (!small_factors) continue;
    for (std::uint32_t j = 1; j <= 30; ++j) REQUIRE(r.exact.at(g, j) == c17.at(g, j));
  }
}

TEST_CASE("propagation conserves the sum of driving terms") {
  const auto r = propagate_range(census13(), 101);
  for (std::uint32_t g = 2; g <= 60; g += 2) {
    if (std::find(r.dropped_gaps.begin(), r.dropped_gaps.end(), g) != r.dropped_gaps.end()) continue;
    BigInt before = 0, after = 0;
    for (std::uint32_t j = 1; j <= 30; ++j) {
      before += census13().at(g, j);
      after += r.exact.at(g, j);
    }
    CHECK(make_rational(after, r.exact.at(2, 1)) == make_rational(before, census13().at(2, 1)));
  }
}

TEST_CASE("over-long rows are dropped and listed") {
  const auto c7 = cycle::census_driving_terms(cycle::materialize_gap_cycle(7), 60, 30);
  const auto r = propagate_range(c7, 11);
  for (std::uint32_t g = 2; g <= 60; g += 2) {
    const bool dropped = std::find(r.dropped_gaps.begin(), r.dropped_gaps.end(), g) != r.dropped_gaps.end();
    CHECK(dropped == (c7.longest_term(g) + 1 > 11));
    if (dropped) CHECK(r.exact.longest_term(g) == 0);
  }
  CHECK(!r.dropped_gaps.empty());
}

TEST_CASE("exact step limit and bad targets") {
  PropagationOptions o;
  o.exact_step_limit = 3;
  CHECK_THROWS_AS(propagate_range(census13(), 101, o), CapacityError);
  CHECK_THROWS_AS(propagate_range(census13(), 13), DomainError);
  o.mode = Mode::normalized;
  CHECK_NOTHROW(propagate_range(census13(), 101, o));
}

TEST_CASE("normalized mode tracks exact mode") {
  const auto exact = propagate_range(census13(), 199);
  PropagationOptions o;
  o.mode = Mode::normalized;
  const auto norm = propagate_range(census13(), 199, o);
  CHECK(norm.dropped_gaps == exact.dropped_gaps);
  const BigInt twins = exact.exact.at(2, 1);
  for (std::uint32_t g = 2; g <= 60; g += 2) {
    for (std::uint32_t j = 1; j <= 30; ++j) {
      const double want = make_rational(exact.exact.at(g, j), twins).get_d();
      REQUIRE(norm.normalized.at(g, j) == doctest::Approx(want).epsilon(1e-12));
    }
  }
  CHECK(norm.normalized.at(2, 1) == 1.0);
}

TEST_CASE("provenance line and persistence") {
  const auto r = propagate_range(census13(), 23);
  CHECK(r.provenance() == "PROPAGATED from=13 to=23 mode=exact steps=3");
  std::stringstream ss;
  write_propagation(ss, r);
  const auto back = cycle::read_census(ss);
  CHECK(back.counts == r.exact.counts);
  CHECK(back.stage_prime == 23);
}

TEST_CASE("normalized propagator") {
  NormalizedPropagator prop(census13(), {2, 6, 30});
  CHECK(prop.ratio(2) == 1.0);
  prop.step(17);
  prop.step(19);
  CHECK(prop.stage_prime() == 19);
  CHECK(prop.ratio(6, 40) == 0.0);
  CHECK_THROWS_AS(prop.ratio(8), DomainError);
  CHECK_THROWS_AS(prop.step(19), DomainError);
}

TEST_CASE("crossover search") {
  const auto c19 = cycle::census_driving_terms(19, 60, 30);
  const auto early = find_crossover(c19, 6, 2, 100);
  CHECK(early.found);
  CHECK(early.prime == 19);
  CHECK(early.steps == 0);
  const auto none = find_crossover(c19, 30, 2, 10000);
  CHECK(!none.found);
}

TEST_CASE("sum of driving terms over the twin count") {
  // (sum_j n_{g,j}) / n_{2,1} = prod over odd q | g of (q-1)/(q-2), for g < 2p.
  for (std::uint32_t p : {11u, 13u}) {
    const auto cen = cycle::census_driving_terms(cycle::materialize_gap_cycle(p), 2 * p, p);
    for (std::uint32_t g = 2; g < 2 * p; g += 2) {
      BigInt s = 0;
      for (std::uint32_t j = 1; j <= p; ++j) s += cen.at(g, j);
      CHECK(make_rational(s, cen.at(2, 1)) == residue::w_infinity(g));
    }
  }
}
