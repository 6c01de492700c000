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

#pragma once

// Segmented, odd-only, bit-packed sieve of Eratosthenes and the last-digit
// pair census of consecutive primes built on it.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <span>
#include <vector>

#include "gapsieve/residue.hpp"

namespace gapsieve::primesieve {

inline constexpr std::uint64_t kDefaultPrimeCountCeiling = 200'000'000;
inline constexpr std::size_t kDefaultSegmentBits = std::size_t{1} << 22;

struct SieveOptions {
  /// Odd candidates per segment; rounded up to a multiple of 64.
  std::size_t segment_bits = kDefaultSegmentBits;
};

/// Receives consecutive ascending batches of primes.
using PrimeBatchFn = std::function<void(std::span<const std::uint64_t>)>;

/// Every prime in [lo, hi], ascending, in batches of at most one segment.
void for_each_prime(std::uint64_t lo, std::uint64_t hi, const PrimeBatchFn& fn, const SieveOptions& opts = {});

/// Upper bound on the n-th prime (Rosser): n (ln n + ln ln n) for n >= 6.
std::uint64_t nth_prime_upper_bound(std::uint64_t n);

/// p_1 = 2, p_2 = 3, ..., p_n in order. Memory is bounded by the segment
/// size. Throws CapacityError when n exceeds `ceiling`.
void first_n_primes(std::uint64_t n, const PrimeBatchFn& fn, const SieveOptions& opts = {},
                    std::uint64_t ceiling = kDefaultPrimeCountCeiling);

/// Materialized convenience for small n.
std::vector<std::uint64_t> first_n_primes(std::uint64_t n);

/// Which consecutive pairs a census covers.
enum class PairWindow {
  /// The n - 1 pairs among the first n primes, 2 included.
  first_primes,
  /// n pairs starting at the smallest prime above the base. This is the
  /// convention of the published base-10 table for the first 10^8 primes
  /// (pairs p_5 = 11 through p_{10^8+5}).
  after_base,
};

/// Consecutive-prime last-digit pairs.
struct PairCensus {
  unsigned base = 0;
  std::uint64_t n = 0;
  PairWindow window = PairWindow::first_primes;
  /// Every ordered unit pair is present, zero counts included.
  std::map<residue::DigitPair, std::uint64_t> counts;
  /// Consecutive pairs in which either prime divides the base.
  std::uint64_t skipped = 0;

  std::uint64_t count(unsigned a, unsigned b) const;
  std::uint64_t total() const;
};

/// Tallies (p_k mod B, p_{k+1} mod B) over the pairs selected by `window`.
/// With first_primes, counts + skipped == n - 1 (n >= 1).
PairCensus pair_census(std::uint64_t n, unsigned base, PairWindow window = PairWindow::first_primes,
                       const SieveOptions& opts = {}, std::uint64_t ceiling = kDefaultPrimeCountCeiling);

/// `a,b,count` rows (ascending a, then b) and a `#skipped=<n>` footer.
void write_pair_census_csv(std::ostream& os, const PairCensus& census);

/// Class sums over h = (b - a) mod B, normalized by the class of gap 2.
residue::ClassAggregate<double> observed_class_ratios(const PairCensus& census);

/// Integer class sums behind observed_class_ratios.
std::map<unsigned, std::uint64_t> observed_class_totals(const PairCensus& census);

}  // namespace gapsieve::primesieve
