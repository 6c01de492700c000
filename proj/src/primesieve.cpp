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

#include "gapsieve/primesieve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gapsieve/arith.hpp"
#include "gapsieve/error.hpp"
#include "gapsieve/presieve.hpp"

namespace gapsieve::primesieve {
namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Sieves odd numbers segment by segment. Bit i of the global stream is 2i+1.
class OddSieve {
 public:
  OddSieve(std::uint64_t hi, const SieveOptions& opts)
      : hi_(hi), presieve_(Presieve::kLargestPrime) {
    const std::size_t words = std::max<std::size_t>(1, (opts.segment_bits + 63) / 64);
    segment_.resize(words);
    batch_.reserve(words * 16);
    for (std::uint32_t q : small_primes(static_cast<std::uint32_t>(isqrt(hi) + 1))) {
      if (q <= Presieve::kLargestPrime) continue;
      // First odd multiple worth striking is q*q.
      strikers_.push_back({q, (static_cast<std::uint64_t>(q) * q - 1) / 2});
    }
  }

  // Emits primes in [lo, hi_] in batches; returns false if fn asked to stop.
  template <class Emit>
  void run(std::uint64_t lo, Emit&& emit) {
    if (lo <= 2 && hi_ >= 2) {
      const std::uint64_t two = 2;
      if (!emit(std::span<const std::uint64_t>(&two, 1))) return;
    }
    if (hi_ < 3) return;
    const std::uint64_t first_bit = std::max<std::uint64_t>(lo, 3) / 2;
    const std::uint64_t last_bit = (hi_ % 2 == 0 ? hi_ - 1 : hi_) / 2;
    const std::uint64_t seg_bits = segment_.size() * 64;
    std::uint64_t start = (first_bit / 64) * 64;
    for (auto& s : strikers_) {
      if (s.next < start) s.next += ((start - s.next + s.prime - 1) / s.prime) * s.prime;
    }
    while (start <= last_bit) {
      std::span<std::uint64_t> seg(segment_);
      presieve_.fill(seg, start / 64);
      const std::uint64_t end = start + seg_bits;
      for (auto& s : strikers_) {
        std::uint64_t i = s.next;
        for (; i < end; i += s.prime) {
          const std::uint64_t off = i - start;
          seg[off / 64] &= ~(std::uint64_t{1} << (off % 64));
        }
        s.next = i;
      }
      batch_.clear();
      if (start == 0) {
        // The presieve struck 3..29 themselves and left 1 standing.
        for (std::uint32_t q : presieve_.primes()) {
          if (q >= lo && q <= hi_) batch_.push_back(q);
        }
        seg[0] &= ~std::uint64_t{1};
      }
      for_each_set_bit(std::span<const std::uint64_t>(seg), [&](std::uint64_t bit) {
        const std::uint64_t gbit = start + bit;
        if (gbit < first_bit || gbit > last_bit) return;
        batch_.push_back(2 * gbit + 1);
      });
      if (start == 0) std::sort(batch_.begin(), batch_.end());
      if (!batch_.empty() && !emit(std::span<const std::uint64_t>(batch_))) return;
      start = end;
    }
  }

 private:
  struct Striker {
    std::uint64_t prime;
    std::uint64_t next;  // next bit index to clear
  };
  std::uint64_t hi_;
  Presieve presieve_;
  std::vector<std::uint64_t> segment_;
  std::vector<std::uint64_t> batch_;
  std::vector<Striker> strikers_;
};

}  // namespace

void for_each_prime(std::uint64_t lo, std::uint64_t hi, const PrimeBatchFn& fn, const SieveOptions& opts) {
  if (hi < lo || hi < 2) return;
  OddSieve sieve(hi, opts);
  sieve.run(lo, [&](std::span<const std::uint64_t> batch) {
    fn(batch);
    return true;
  });
}

std::uint64_t nth_prime_upper_bound(std::uint64_t n) {
  if (n < 6) return 13;
  const double x = static_cast<double>(n);
  return static_cast<std::uint64_t>(x * (std::log(x) + std::log(std::log(x)))) + 1;
}

void first_n_primes(std::uint64_t n, const PrimeBatchFn& fn, const SieveOptions& opts, std::uint64_t ceiling) {
  if (n > ceiling) {
    throw CapacityError("first_n_primes: " + std::to_string(n) + " primes requested, ceiling is " +
                        std::to_string(ceiling) + "; sieving to ~" + std::to_string(nth_prime_upper_bound(n)) +
                        " would be required");
  }
  if (n == 0) return;
  std::uint64_t remaining = n;
  OddSieve sieve(nth_prime_upper_bound(n), opts);
  sieve.run(0, [&](std::span<const std::uint64_t> batch) {
    const std::size_t take = static_cast<std::size_t>(std::min<std::uint64_t>(remaining, batch.size()));
    fn(batch.first(take));
    remaining -= take;
    return remaining > 0;
  });
}

std::vector<std::uint64_t> first_n_primes(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(n));
  first_n_primes(n, [&](std::span<const std::uint64_t> b) { out.insert(out.end(), b.begin(), b.end()); });
  return out;
}

std::uint64_t PairCensus::count(unsigned a, unsigned b) const {
  auto it = counts.find({a, b});
  return it == counts.end() ? 0 : it->second;
}

std::uint64_t PairCensus::total() const {
  std::uint64_t t = 0;
  for (const auto& [_, c] : counts) t += c;
  return t;
}

PairCensus pair_census(std::uint64_t n, unsigned base, PairWindow window, const SieveOptions& opts,
                       std::uint64_t ceiling) {
  const residue::ResidueScheme scheme = residue::digit_pair_classes(base);
  PairCensus census;
  census.base = base;
  census.n = n;
  census.window = window;
  for (unsigned a : scheme.digits) {
    for (unsigned b : scheme.digits) census.counts[{a, b}] = 0;
  }
  // Dense table indexed by residue; non-units are flagged with is_unit = 0.
  std::vector<char> is_unit(base, 0);
  for (unsigned d : scheme.digits) is_unit[d] = 1;
  std::vector<std::uint64_t> table(static_cast<std::size_t>(base) * base, 0);

  // Primes to draw and how many leading ones only open the window.
  std::uint64_t draw = n;
  std::uint64_t lead = 0;
  if (window == PairWindow::after_base) {
    lead = small_primes(base).size();
    draw = n == 0 ? 0 : lead + n + 1;
  }
  if (draw > ceiling) {
    throw CapacityError("pair_census: needs " + std::to_string(draw) + " primes, ceiling is " + std::to_string(ceiling));
  }

  bool have_prev = false;
  unsigned prev = 0;
  std::uint64_t index = 0;
  first_n_primes(
      draw,
      [&](std::span<const std::uint64_t> batch) {
        for (std::uint64_t p : batch) {
          if (index++ < lead) continue;
          const auto r = static_cast<unsigned>(p % base);
          if (have_prev) {
            if (is_unit[prev] && is_unit[r]) {
              ++table[static_cast<std::size_t>(prev) * base + r];
            } else {
              ++census.skipped;
            }
          }
          prev = r;
          have_prev = true;
        }
      },
      opts, draw);

  for (auto& [pair, c] : census.counts) c = table[static_cast<std::size_t>(pair.first) * base + pair.second];
  return census;
}

void write_pair_census_csv(std::ostream& os, const PairCensus& census) {
  os << "a,b,count\n";
  for (const auto& [pair, c] : census.counts) os << pair.first << ',' << pair.second << ',' << c << '\n';
  os << "#skipped=" << census.skipped << '\n';
}

std::map<unsigned, std::uint64_t> observed_class_totals(const PairCensus& census) {
  const residue::ResidueScheme scheme = residue::digit_pair_classes(census.base);
  std::map<unsigned, std::uint64_t> totals;
  for (const auto& [h, _] : scheme.classes) totals[h] = 0;
  for (const auto& [pair, c] : census.counts) totals[scheme.class_of_pair(pair.first, pair.second)] += c;
  return totals;
}

residue::ClassAggregate<double> observed_class_ratios(const PairCensus& census) {
  if (census.counts.empty()) throw DomainError("observed_class_ratios: empty census");
  std::map<unsigned, double> totals;
  for (const auto& [h, c] : observed_class_totals(census)) totals[h] = static_cast<double>(c);
  return residue::detail::normalize(census.base, std::move(totals));
}

}  // namespace gapsieve::primesieve
