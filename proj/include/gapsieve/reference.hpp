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

// Published values used by the comparison reports.

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace gapsieve::reference {

/// Counts of consecutive-prime last-digit pairs (a, b) over 10^8 pairs.
struct PairCount {
  unsigned a, b;
  std::uint64_t count;
};
std::span<const PairCount> last_digit_pairs();

/// Per-class totals and ratios for the same sample, base 10.
struct ObservedClass {
  unsigned h;
  std::uint64_t total;
  double ratio;
};
std::span<const ObservedClass> observed_classes();

/// n_{g,j}(37#) for j = 1..4 (0 where not listed), w_{g,1}(37#) and w_g(inf).
struct PopulationRow {
  unsigned g;
  std::array<std::string_view, 4> counts;
  double w_current;
  std::string_view w_infinity;
};
std::span<const PopulationRow> populations_37();

/// Class means of w_g(inf) in base 10, as printed (three decimals).
struct ClassMeanRow {
  unsigned h;
  unsigned g;  // last gap in the running mean; 0 marks the blank first row of h = 0
  std::string_view w_infinity;
  double mean;
};
std::span<const ClassMeanRow> class_means_base10();

/// W_h at 1993# (model) and W_h(inf) over 2 <= g <= 420.
struct ClassRatioRow {
  unsigned h;
  double w_1993;  // negative when not published
  double w_infinity;
};
std::span<const ClassRatioRow> class_ratios(unsigned base);

inline constexpr std::uint64_t kPairSample = 100'000'000;
inline constexpr std::uint32_t kSampleGmax = 420;
inline constexpr std::uint64_t kPopulationStage = 37;
inline constexpr std::uint64_t kModelTarget = 1993;

}  // namespace gapsieve::reference
