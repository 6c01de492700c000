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

// Residue-class population curves from the polynomial convergence model.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "gapsieve/cycle.hpp"
#include "gapsieve/dynamics.hpp"
#include "gapsieve/residue.hpp"

namespace gapsieve::curves {

inline constexpr std::size_t kDefaultDegree = 11;
inline constexpr std::uint64_t kDefaultModelPrime = 37;

struct CurveOptions {
  unsigned base = 10;
  std::size_t degree = kDefaultDegree;
  /// Stage that lambda is measured from. Gaps whose counts can be carried
  /// exactly from the census stage start here; the rest keep census-stage
  /// initial conditions and see lambda scaled by a_2 over the skipped primes.
  std::uint64_t model_prime = kDefaultModelPrime;
  /// Multiply by prod (q-1)/(q-2) over odd q | g above the census stage.
  bool correction = false;
  /// Largest stage lambda_at will sieve to.
  std::uint64_t lambda_ceiling = 4'000'000'000;
};

struct GapModel {
  std::uint64_t gap = 0;
  std::size_t length = 0;  // longest driving term at the initial stage
  double lambda_scale = 1.0;
  double correction = 1.0;
  dynamics::PolynomialModel poly;
};

class CurveModel {
 public:
  CurveModel(const cycle::DrivingTermCensus& census, const CurveOptions& opts);

  const CurveOptions& options() const { return opts_; }
  std::uint64_t census_prime() const { return census_prime_; }
  std::uint32_t gmax() const { return gmax_; }
  const std::vector<GapModel>& gaps() const { return gaps_; }

  /// Gaps evaluated below the requested degree because their driving terms are short.
  std::vector<std::uint64_t> clamped() const;
  /// Gaps that keep census-stage initial conditions.
  std::vector<std::uint64_t> carried_from_census() const;

  std::map<std::uint64_t, double> values(double lambda) const;
  residue::ClassAggregate<double> class_ratios(double lambda) const;

  /// lambda for stage p measured from model_prime.
  double lambda_at(std::uint64_t p) const;

 private:
  CurveOptions opts_;
  std::uint64_t census_prime_ = 0;
  std::uint32_t gmax_ = 0;
  std::vector<GapModel> gaps_;
};

/// `v1,v2,...`, `lin:a:b:n` or `log:a:b:n`; every value in (0, 1].
std::vector<double> parse_lambda_grid(const std::string& spec);

/// Comment header (`# ...`), then `lambda,p_low,p_high,W_<h>...` with classes in
/// table order. p_low/p_high are blank where lambda_invert has no answer.
void write_curves_csv(std::ostream& os, const CurveModel& model, const std::vector<double>& grid);

}  // namespace gapsieve::curves
