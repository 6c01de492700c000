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

// Side-by-side reports of computed values against published tables.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gapsieve/arith.hpp"
#include "gapsieve/curves.hpp"
#include "gapsieve/cycle.hpp"
#include "gapsieve/primesieve.hpp"

namespace gapsieve::compare {

struct ComparisonRow {
  std::string label;
  std::string expected;
  std::string computed;
  double abs_dev = 0;
  double rel_dev = 0;
  std::string tolerance;
  bool pass = false;
  /// Reported rows are shown but do not affect the overall verdict.
  bool asserted = true;
};

struct ComparisonReport {
  std::string table;
  std::vector<ComparisonRow> rows;

  /// True when every asserted row passes.
  bool pass() const;
  std::size_t failures() const;

  void add_exact(const std::string& label, const BigInt& expected, const BigInt& computed, bool asserted = true);
  void add_exact(const std::string& label, const Rational& expected, const Rational& computed,
                 bool asserted = true);
  void add_abs(const std::string& label, double expected, double computed, double tol, bool asserted = true);
  void add_rel(const std::string& label, double expected, double computed, double tol, bool asserted = true);
  void add_check(const std::string& label, const std::string& expected, const std::string& computed, bool pass,
                 const std::string& tolerance, bool asserted = true);
};

/// Aligned text, one row per line, ending with an `overall:` line.
void write_report(std::ostream& os, const ComparisonReport& report);

inline constexpr double kRatioTolerance = 5e-7;
inline constexpr double kAsymptoticTolerance = 0.0005;
inline constexpr double kMeanTolerance = 0.001;
inline constexpr double kModelTolerance = 0.10;

/// Gap counts carried from stage `census_prime` are exact where every step
/// has g < 2p and g has no odd prime factor above `census_prime`.
bool carried_exactly(std::uint64_t g, std::uint64_t census_prime);

/// t1: the 16 last-digit pair counts, exact.
ComparisonReport last_digit_pairs(const primesieve::PairCensus& census);

/// Class totals (exact) and W_h (to kRatioTolerance) of the same sample.
ComparisonReport observed_ratios(const primesieve::PairCensus& census);

/// t2: populations against counts at 37#: n_{g,j} for j <= 4 exact, w_{g,1} to
/// kRatioTolerance, w_g(inf) exact. Count and w rows are asserted only for
/// gaps carried exactly from `census_prime`.
ComparisonReport populations(const cycle::DrivingTermCensus& at_37, std::uint64_t census_prime);

/// t3: class means and the base-10 W_h(inf) list: w_g(inf) exact, running class
/// means to kMeanTolerance, W_h(inf) over g <= 420 to kAsymptoticTolerance.
ComparisonReport class_means();

/// A base table: W_h(inf) to kAsymptoticTolerance and, with a model, W_h at
/// 1993# to kModelTolerance (relative).
ComparisonReport class_table(unsigned base, const curves::CurveModel* model);

}  // namespace gapsieve::compare
