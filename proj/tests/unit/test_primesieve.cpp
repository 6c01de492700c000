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

#include "gapsieve/arith.hpp"
#include "gapsieve/primesieve.hpp"

using namespace gapsieve;
using namespace gapsieve::primesieve;

namespace {

std::vector<std::uint64_t> collect(std::uint64_t lo, std::uint64_t hi, std::size_t segment_bits = kDefaultSegmentBits) {
  std::vector<std::uint64_t> out;
  SieveOptions o;
  o.segment_bits = segment_bits;
  for_each_prime(lo, hi, [&](std::span<const std::uint64_t> b) { out.insert(out.end(), b.begin(), b.end()); }, o);
  return out;
}

}  // namespace

TEST_CASE("small ranges") {
  CHECK(collect(0, 30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(collect(38, 60) == std::vector<std::uint64_t>{41, 43, 47, 53, 59});
  CHECK(collect(37, 37) == std::vector<std::uint64_t>{37});
  CHECK(collect(24, 28).empty());
  CHECK(collect(10, 5).empty());
}

TEST_CASE("counts and segment independence") {
  CHECK(collect(0, 1'000'000).size() == 78498);
  const auto a = collect(999'000, 1'200'000);
  const auto b = collect(999'000, 1'200'000, 64);
  CHECK(a == b);
  for (std::uint64_t p : a) REQUIRE(is_prime(p));
  CHECK(a.size() == collect(0, 1'200'000).size() - collect(0, 998'999).size());
}

TEST_CASE("first n primes") {
  const auto p = first_n_primes(10);
  CHECK(p == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(first_n_primes(100000).back() == 1299709);
  CHECK_THROWS_AS(first_n_primes(11, [](std::span<const std::uint64_t>) {}, {}, 10), CapacityError);
}

TEST_CASE("pair census windows") {
  // First ten primes: pairs (2,3) (3,5) (5,7) skipped, then 7-1,1-3,3-7,7-9,9-3,3-9.
  const auto first = pair_census(10, 10, PairWindow::first_primes);
  CHECK(first.skipped == 3);
  CHECK(first.total() == 6);
  CHECK(first.count(7, 1) == 1);
  CHECK(first.count(3, 9) == 1);
  CHECK(first.counts.size() == 16);
  // After the base: ten pairs from 11 onward.
  const auto after = pair_census(10, 10, PairWindow::after_base);
  CHECK(after.skipped == 0);
  CHECK(after.total() == 10);
  CHECK(after.count(1, 3) == 2);
  CHECK(after.count(3, 7) == 2);
  CHECK_THROWS_AS(pair_census(100, 10, PairWindow::first_primes, {}, 50), CapacityError);
}

TEST_CASE("observed class ratios") {
  const auto c = pair_census(100000, 10, PairWindow::after_base);
  const auto totals = observed_class_totals(c);
  std::uint64_t sum = 0;
  for (const auto& [h, t] : totals) sum += t;
  CHECK(sum == c.total());
  const auto r = observed_class_ratios(c);
  CHECK(r.ratios.at(2) == 1.0);
  CHECK(r.ratios.at(0) < r.ratios.at(2));
  std::ostringstream os;
  write_pair_census_csv(os, c);
  CHECK(os.str().rfind("a,b,count\n", 0) == 0);
  CHECK(os.str().find("#skipped=0") != std::string::npos);
}
