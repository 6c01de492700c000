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

// Exact propagation of gap populations across sieve stages.
//
// Between consecutive stages p_{k-1} -> p_k, the counts of a gap g and its
// driving terms obey
//
//   n_j' = (p_k - j - 1) n_j + j n_{j+1}
//
// exactly whenever g < 2 p_k. Dividing by the twin count n_{2,1}, which
// grows by (p_k - 2), gives the banded system matrix M(p) with diagonal
// a_j = (p-j-1)/(p-2) and superdiagonal b_j = j/(p-2). M(p) = R Lambda L
// where R and L are signed and unsigned upper Pascal matrices independent
// of p, so k steps act as R diag(a_j^k) L with a_j^k the product of a_j
// over the primes traversed.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gapsieve/arith.hpp"
#include "gapsieve/cycle.hpp"
#include "gapsieve/matrix.hpp"

namespace gapsieve::dynamics {

using cycle::DrivingTermCensus;
using cycle::RatioCensus;

enum class Mode { exact, normalized };

std::string to_string(Mode mode);

/// Raw counts n_{g,1..J} at one stage. J is the longest driving term.
struct PopulationVector {
  std::uint64_t gap = 0;
  std::uint64_t stage_prime = 0;
  std::vector<BigInt> entries;

  BigInt total() const;
};

/// Ratios w_{g,j} = n_{g,j} / n_{2,1}.
struct RatioVector {
  std::uint64_t gap = 0;
  std::uint64_t stage_prime = 0;
  std::vector<Rational> entries;
};

PopulationVector population_of(const DrivingTermCensus& census, std::uint64_t g);
RatioVector ratios_of(const DrivingTermCensus& census, std::uint64_t g);
RatioVector to_ratios(const PopulationVector& pop, const BigInt& twin_count);

/// M(p) restricted to J rows. Indices are 1-based, as in n_{g,j}.
class TransferMatrix {
 public:
  TransferMatrix(std::uint64_t prime, std::size_t dim);

  std::uint64_t prime() const { return prime_; }
  std::size_t dim() const { return dim_; }

  /// (p - 2) M(p): diagonal p - j - 1, superdiagonal j.
  BigInt integer_entry(std::size_t i, std::size_t j) const;
  Rational entry(std::size_t i, std::size_t j) const;
  Rational diagonal(std::size_t j) const { return entry(j, j); }
  Rational superdiagonal(std::size_t j) const { return entry(j, j + 1); }

  Matrix<BigInt> integer_form() const;
  Matrix<Rational> rational_form() const;

 private:
  std::uint64_t prime_;
  std::size_t dim_;
};

/// One exact stage. Rejects p_next <= stage_prime, a non-consecutive p_next
/// when `require_consecutive`, and any row j with p_next - j - 1 < 0.
PopulationVector transfer_step(const PopulationVector& pop, std::uint64_t p_next, bool require_consecutive = true);

inline constexpr std::size_t kDefaultExactStepLimit = 5000;

struct PropagationOptions {
  Mode mode = Mode::exact;
  std::size_t exact_step_limit = kDefaultExactStepLimit;
};

struct PropagationResult {
  std::uint64_t from_prime = 0;
  std::uint64_t to_prime = 0;
  Mode mode = Mode::exact;
  std::size_t steps = 0;
  DrivingTermCensus exact;   // counts, exact mode
  RatioCensus normalized;    // w_{g,j}, normalized mode
  /// Gaps whose driving terms are too long for the first stage's matrix
  /// (some row j with p - j - 1 < 0); their rows are left at zero.
  std::vector<std::uint64_t> dropped_gaps;

  /// `PROPAGATED from=<p0> to=<pk> mode=<exact|normalized> steps=<k>`
  std::string provenance() const;
};

/// Applies the recurrence for every prime in (census.stage_prime, p_target].
/// Exact mode carries big integers and refuses more than exact_step_limit
/// steps; normalized mode carries w_{g,j} as doubles.
PropagationResult propagate_range(const DrivingTermCensus& census, std::uint64_t p_target,
                                  const PropagationOptions& opts = {});

/// Provenance line followed by the census in CENSUS v1 format.
void write_propagation(std::ostream& os, const PropagationResult& result);

/// Normalized state for a set of gaps, advanced one prime at a time.
class NormalizedPropagator {
 public:
  /// Tracks the listed gaps (all nonzero gaps of the census when empty).
  explicit NormalizedPropagator(const DrivingTermCensus& census, std::vector<std::uint64_t> gaps = {});

  /// Advances to prime p; p must exceed the current stage.
  void step(std::uint64_t p);

  std::uint64_t stage_prime() const { return stage_; }
  const std::vector<std::uint64_t>& gaps() const { return gaps_; }
  /// w_{g,j} at the current stage; zero for j beyond the tracked length.
  double ratio(std::uint64_t g, std::size_t j = 1) const;
  std::span<const double> vector(std::uint64_t g) const;

 private:
  std::size_t slot(std::uint64_t g) const;

  std::uint64_t stage_;
  std::vector<std::uint64_t> gaps_;
  std::vector<std::vector<double>> state_;
  std::vector<double> scratch_;
};

struct Crossover {
  bool found = false;
  std::uint64_t prime = 0;  // first stage with n_{g,1} > n_{ref,1}
  double ratio = 0;         // w_{g,1} / w_{ref,1} at that stage
  std::size_t steps = 0;
};

/// First prime up to p_limit at which gap g outnumbers gap `reference`,
/// by normalized propagation from the census stage.
Crossover find_crossover(const DrivingTermCensus& census, std::uint64_t g, std::uint64_t reference,
                         std::uint64_t p_limit);

// ---------------------------------------------------------------------------
// Eigensystem

struct EigenSystem {
  std::size_t dim = 0;
  Matrix<Rational> right;  // R_ij = (-1)^(i+j) C(j-1, i-1), i <= j
  Matrix<Rational> left;   // L_ij = C(j-1, i-1), i <= j

  /// R diag(1, a_2(p), ..., a_J(p)) L.
  Matrix<Rational> reconstruct(std::uint64_t p) const;
};

EigenSystem eigen_basis(std::size_t dim);

/// a_1(p), ..., a_J(p) with a_j = (p - j - 1)/(p - 2).
std::vector<Rational> eigenvalues(std::uint64_t p, std::size_t dim);

/// a_j^k = product over `primes` of a_j(p), j = 1..dim.
std::vector<Rational> eigen_products(std::span<const std::uint64_t> primes, std::size_t dim);

/// L_i . w0 for 1-based i (zero when i exceeds the vector length).
Rational left_projection(std::size_t i, std::span<const Rational> w0);

/// Exact w_{g,1} after the steps summarized by eigen_products:
/// sum_i (-1)^(i+1) a_i^k (L_i . w0).
Rational closed_form_w1(const RatioVector& w0, std::span<const Rational> eigen_products);

/// prod over odd primes q | g with q > p0 of (q-1)/(q-2): the factor by
/// which an initial census at p0 underrepresents gaps with larger factors.
Rational large_factor_correction(std::uint64_t g, std::uint64_t p0);

struct PolynomialModel {
  std::uint64_t gap = 0;
  std::uint64_t base_prime = 0;
  std::size_t degree = 0;
  std::vector<Rational> coefficients;  // l_1 .. l_{degree+1}
  std::vector<double> coefficients_f;  // same, as doubles
};

/// l_i = L_i . w0 for i = 1..degree+1; rejects degree + 1 > J.
PolynomialModel poly_model(const RatioVector& w0, std::size_t degree);

/// sum_i (-1)^(i+1) l_i lambda^(i-1).
double poly_eval(const PolynomialModel& model, double lambda);
Rational poly_eval(const PolynomialModel& model, const Rational& lambda);

// ---------------------------------------------------------------------------
// Decay parameter lambda = a_2^k

inline constexpr double kEulerGamma = 0.5772156649015329;
inline constexpr std::uint64_t kDefaultLambdaCeiling = 1'000'000'000;
inline constexpr std::uint64_t kDefaultExactLambdaCeiling = 1'000'000;

struct LambdaOptions {
  std::uint64_t ceiling = kDefaultLambdaCeiling;
  /// Above this target the exact rational is skipped (it would have
  /// millions of digits); the float is always computed.
  std::uint64_t exact_ceiling = kDefaultExactLambdaCeiling;
};

struct LambdaPath {
  std::uint64_t base_prime = 0;
  std::uint64_t target = 0;
  std::uint64_t factors = 0;      // primes in (base, target]
  std::optional<Rational> exact;  // prod (p-3)/(p-2)
  double value = 1.0;
  double log_value = 0.0;
  Rational c0;                    // prod_{q <= base} q/(q-1)
  double gamma = kEulerGamma;
};

/// prod of (p-3)/(p-2) over primes p in (p0, pk]. Throws CapacityError
/// above opts.ceiling; use lambda_bounds there.
LambdaPath lambda_exact(std::uint64_t p0, std::uint64_t pk, const LambdaOptions& opts = {});

/// lambda_exact at several ascending targets from one sieve pass.
std::vector<LambdaPath> lambda_exact_path(std::uint64_t p0, std::span<const std::uint64_t> targets,
                                          const LambdaOptions& opts = {});

Rational mertens_c0(std::uint64_t p0);

struct LambdaBounds {
  double lower = 0;
  double upper = 0;
  Rational c0;
  std::string note;
};

/// (p0-1)/p0 c0 e^-gamma / ln pk  <  a_2^k  <  c0 e^-gamma / ln pk, with the
/// o(1) term dropped and p_{k-1} replaced by pk in the lower bound.
LambdaBounds lambda_bounds(std::uint64_t p0, double pk);

struct PrimeInterval {
  double log10_low = 0;
  double log10_high = 0;
  bool contains(double log10_value) const { return log10_value >= log10_low && log10_value <= log10_high; }
};

/// Prime magnitudes consistent with lambda under each bound of
/// lambda_bounds: p = exp(c e^-gamma / lambda). Rejects lambda outside (0,1)
/// and lambda so large that the interval falls below p0.
PrimeInterval lambda_invert(double lambda, std::uint64_t p0);

}  // namespace gapsieve::dynamics
