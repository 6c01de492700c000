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

// Residue classes of gaps and of last-digit pairs in an arbitrary base.

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "gapsieve/arith.hpp"
#include "gapsieve/error.hpp"

namespace gapsieve::residue {

/// Asymptotic ratio of gap g to gap 2: product of (q-1)/(q-2) over the odd
/// primes q dividing g. Throws DomainError for odd or nonpositive g.
Rational w_infinity(std::uint64_t g);

using DigitPair = std::pair<unsigned, unsigned>;

struct ResidueScheme {
  unsigned base = 0;
  std::vector<unsigned> digits;  // units mod base, ascending
  std::map<unsigned, std::vector<DigitPair>> classes;  // h -> pairs (a,b) with b-a == h

  unsigned class_of_gap(std::uint64_t g) const { return static_cast<unsigned>(g % base); }
  unsigned class_of_pair(unsigned a, unsigned b) const { return (b + base - a) % base; }
  /// Class that holds gap 2; every table is normalized by it.
  unsigned normalizing_class() const { return 2 % base; }
  /// True when h collects even gaps (odd h is impossible for even bases).
  bool is_gap_class(unsigned h) const;
  std::size_t pair_count(unsigned h) const;
};

/// Throws DomainError for base < 3.
ResidueScheme digit_pair_classes(unsigned base);

/// The first n positive even gaps g with g == h (mod base), ascending.
std::vector<std::uint64_t> class_gaps(unsigned base, unsigned h, std::size_t n);

/// Mean of w_infinity over class_gaps(base, h, n).
Rational class_mean_asymptotic(unsigned base, unsigned h, std::size_t n);

template <class T>
struct ClassAggregate {
  unsigned base = 0;
  unsigned normalizing_class = 0;
  std::map<unsigned, T> totals;
  std::map<unsigned, T> ratios;  // W_h = totals[h] / totals[normalizing_class]
};

namespace detail {
template <class T>
ClassAggregate<T> normalize(unsigned base, std::map<unsigned, T> totals) {
  ClassAggregate<T> out;
  out.base = base;
  out.normalizing_class = 2 % base;
  auto it = totals.find(out.normalizing_class);
  if (it == totals.end() || it->second == 0) {
    throw DomainError("class ratios: normalizing class " + std::to_string(out.normalizing_class) + " is empty");
  }
  const T norm = it->second;
  for (const auto& [h, total] : totals) out.ratios[h] = T(total / norm);
  out.totals = std::move(totals);
  return out;
}
}  // namespace detail

/// Sums values[g] per class g mod base and normalizes by the class of gap 2.
/// Every gap class of the base's scheme appears in the result, with zero
/// totals when no value falls into it.
template <class T>
ClassAggregate<T> class_ratios(const std::map<std::uint64_t, T>& values, unsigned base) {
  if (values.empty()) throw DomainError("class ratios: no values");
  const ResidueScheme scheme = digit_pair_classes(base);
  std::map<unsigned, T> totals;
  for (const auto& [h, pairs] : scheme.classes) {
    if (scheme.is_gap_class(h)) totals[h] = T(0);
  }
  for (const auto& [g, v] : values) totals[scheme.class_of_gap(g)] += v;
  return detail::normalize(base, std::move(totals));
}

/// Aligned text table: h, pair count, pairs, W_current (optional), W_infinity.
/// `current` may be null.
/// Table order: the normalizing class first, then ascending with 0 last.
std::vector<unsigned> display_order(const ClassAggregate<double>& agg);

void write_class_table(std::ostream& os, const ResidueScheme& scheme, const ClassAggregate<double>* current,
                       const ClassAggregate<double>& infinity);

/// CSV with header `base,h,pairs,W_current,W_infinity`; W_current is empty
/// when `current` is null.
void write_class_csv(std::ostream& os, const ResidueScheme& scheme, const ClassAggregate<double>* current,
                     const ClassAggregate<double>& infinity);

/// w_infinity(g) for even g in [2, gmax], as doubles keyed by g.
std::map<std::uint64_t, double> asymptotic_values(std::uint64_t gmax);

}  // namespace gapsieve::residue
