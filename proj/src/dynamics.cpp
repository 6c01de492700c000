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

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>

#include "gapsieve/dynamics.hpp"
#include "gapsieve/primesieve.hpp"
#include "gapsieve/simd/kernels.hpp"

namespace gapsieve::dynamics {
namespace {

std::vector<std::uint64_t> primes_between(std::uint64_t lo_exclusive, std::uint64_t hi_inclusive) {
  std::vector<std::uint64_t> out;
  if (hi_inclusive <= lo_exclusive) return out;
  primesieve::for_each_prime(lo_exclusive + 1, hi_inclusive,
                             [&](std::span<const std::uint64_t> b) { out.insert(out.end(), b.begin(), b.end()); });
  return out;
}

void check_rows(std::uint64_t gap, std::size_t length, std::uint64_t p) {
  if (length + 1 > p) {
    throw DomainError("transfer_step: row j=" + std::to_string(length) + " of gap " + std::to_string(gap) +
                      " has negative diagonal p-j-1 at p=" + std::to_string(p));
  }
}

}  // namespace

std::string to_string(Mode mode) { return mode == Mode::exact ? "exact" : "normalized"; }

BigInt PopulationVector::total() const {
  BigInt t = 0;
  for (const auto& e : entries) t += e;
  return t;
}

PopulationVector population_of(const DrivingTermCensus& census, std::uint64_t g) {
  PopulationVector pop;
  pop.gap = g;
  pop.stage_prime = census.stage_prime;
  const std::uint32_t len = census.longest_term(g);
  for (std::uint32_t j = 1; j <= len; ++j) pop.entries.push_back(census.at(g, j));
  return pop;
}

RatioVector to_ratios(const PopulationVector& pop, const BigInt& twin_count) {
  if (twin_count == 0) throw DomainError("ratios: twin count is zero");
  RatioVector r;
  r.gap = pop.gap;
  r.stage_prime = pop.stage_prime;
  for (const auto& e : pop.entries) {
    Rational q(e, twin_count);
    q.canonicalize();
    r.entries.push_back(q);
  }
  return r;
}

RatioVector ratios_of(const DrivingTermCensus& census, std::uint64_t g) {
  return to_ratios(population_of(census, g), census.at(2, 1));
}

TransferMatrix::TransferMatrix(std::uint64_t prime, std::size_t dim) : prime_(prime), dim_(dim) {
  if (prime < 3) throw DomainError("transfer matrix needs p >= 3");
}

BigInt TransferMatrix::integer_entry(std::size_t i, std::size_t j) const {
  if (i < 1 || j < 1 || i > dim_ || j > dim_) throw DomainError("transfer matrix index out of range");
  if (j == i) return BigInt(static_cast<long>(prime_) - static_cast<long>(i) - 1);
  if (j == i + 1) return BigInt(static_cast<unsigned long>(i));
  return BigInt(0);
}

Rational TransferMatrix::entry(std::size_t i, std::size_t j) const {
  Rational r(integer_entry(i, j), BigInt(static_cast<unsigned long>(prime_ - 2)));
  r.canonicalize();
  return r;
}

Matrix<BigInt> TransferMatrix::integer_form() const {
  Matrix<BigInt> m(dim_, dim_);
  for (std::size_t i = 1; i <= dim_; ++i) {
    m(i - 1, i - 1) = integer_entry(i, i);
    if (i < dim_) m(i - 1, i) = integer_entry(i, i + 1);
  }
  return m;
}

Matrix<Rational> TransferMatrix::rational_form() const {
  Matrix<Rational> m(dim_, dim_);
  for (std::size_t i = 1; i <= dim_; ++i) {
    m(i - 1, i - 1) = entry(i, i);
    if (i < dim_) m(i - 1, i) = entry(i, i + 1);
  }
  return m;
}

PopulationVector transfer_step(const PopulationVector& pop, std::uint64_t p_next, bool require_consecutive) {
  if (p_next <= pop.stage_prime) {
    throw DomainError("transfer_step: next prime " + std::to_string(p_next) + " does not exceed stage " +
                      std::to_string(pop.stage_prime));
  }
  if (!is_prime(p_next)) throw DomainError("transfer_step: " + std::to_string(p_next) + " is not prime");
  if (require_consecutive && next_prime(pop.stage_prime) != p_next) {
    throw DomainError("transfer_step: " + std::to_string(p_next) + " is not the prime after " +
                      std::to_string(pop.stage_prime));
  }
  const std::size_t n = pop.entries.size();
  for (std::size_t j = 1; j <= n; ++j) {
    if (p_next < j + 1) {
      throw DomainError("transfer_step: row j=" + std::to_string(j) + " of gap " + std::to_string(pop.gap) +
                        " has negative diagonal p-j-1 at p=" + std::to_string(p_next));
    }
  }
  PopulationVector out;
  out.gap = pop.gap;
  out.stage_prime = p_next;
  out.entries.resize(n);
  for (std::size_t j = 1; j <= n; ++j) {
    BigInt v = pop.entries[j - 1] * static_cast<unsigned long>(p_next - j - 1);
    if (j < n) v += pop.entries[j] * static_cast<unsigned long>(j);
    out.entries[j - 1] = std::move(v);
  }
  return out;
}

std::string PropagationResult::provenance() const {
  std::ostringstream os;
  os << "PROPAGATED from=" << from_prime << " to=" << to_prime << " mode=" << to_string(mode) << " steps=" << steps;
  return os.str();
}

PropagationResult propagate_range(const DrivingTermCensus& census, std::uint64_t p_target,
                                  const PropagationOptions& opts) {
  if (p_target <= census.stage_prime) {
    throw DomainError("propagate_range: target " + std::to_string(p_target) + " does not exceed stage " +
                      std::to_string(census.stage_prime));
  }
  if (census.at(2, 1) == 0) throw DomainError("propagate_range: census has no twin gaps");
  if (p_target > UINT32_MAX) throw DomainError("propagate_range: target exceeds 2^32");
  const std::vector<std::uint64_t> primes = primes_between(census.stage_prime, p_target);
  if (opts.mode == Mode::exact && primes.size() > opts.exact_step_limit) {
    throw CapacityError("propagate_range: " + std::to_string(primes.size()) + " exact steps exceed the limit of " +
                        std::to_string(opts.exact_step_limit) + "; use normalized mode");
  }

  PropagationResult result;
  result.from_prime = census.stage_prime;
  result.to_prime = primes.empty() ? census.stage_prime : primes.back();
  result.mode = opts.mode;
  result.steps = primes.size();
  const std::uint64_t first = primes.empty() ? census.stage_prime : primes.front();

  std::vector<std::uint64_t> kept;
  for (std::uint32_t g = 2; g <= census.gmax; g += 2) {
    const std::uint32_t len = census.longest_term(g);
    if (len == 0) continue;
    if (len + 1 > first) {
      result.dropped_gaps.push_back(g);
    } else {
      kept.push_back(g);
    }
  }

  const auto stage = static_cast<std::uint32_t>(result.to_prime);
  if (opts.mode == Mode::exact) {
    result.exact = DrivingTermCensus(stage, census.gmax, census.jmax);
    result.exact.truncated = census.truncated;
    for (std::uint64_t g : kept) {
      PopulationVector pop = population_of(census, g);
      for (std::uint64_t p : primes) pop = transfer_step(pop, p, false);
      for (std::size_t j = 0; j < pop.entries.size(); ++j) result.exact.at(g, j + 1) = pop.entries[j];
    }
  } else {
    result.normalized = RatioCensus(stage, census.gmax, census.jmax);
    result.normalized.truncated = census.truncated;
    NormalizedPropagator prop(census, kept);
    for (std::uint64_t p : primes) prop.step(p);
    for (std::uint64_t g : kept) {
      const auto v = prop.vector(g);
      for (std::size_t j = 0; j < v.size(); ++j) result.normalized.at(g, j + 1) = v[j];
    }
  }
  return result;
}

void write_propagation(std::ostream& os, const PropagationResult& result) {
  os << result.provenance() << '\n';
  if (result.mode == Mode::exact) {
    cycle::write_census(os, result.exact);
  } else {
    cycle::write_census(os, result.normalized);
  }
}

NormalizedPropagator::NormalizedPropagator(const DrivingTermCensus& census, std::vector<std::uint64_t> gaps)
    : stage_(census.stage_prime), gaps_(std::move(gaps)) {
  if (census.at(2, 1) == 0) throw DomainError("normalized propagation: census has no twin gaps");
  if (gaps_.empty()) {
    for (std::uint32_t g = 2; g <= census.gmax; g += 2) {
      if (census.longest_term(g) > 0) gaps_.push_back(g);
    }
  }
  std::sort(gaps_.begin(), gaps_.end());
  std::size_t widest = 0;
  for (std::uint64_t g : gaps_) {
    const RatioVector w = ratios_of(census, g);
    std::vector<double> v;
    v.reserve(w.entries.size());
    for (const auto& e : w.entries) v.push_back(e.get_d());
    widest = std::max(widest, v.size());
    state_.push_back(std::move(v));
  }
  scratch_.resize(widest);
}

void NormalizedPropagator::step(std::uint64_t p) {
  if (p <= stage_) throw DomainError("normalized propagation: primes must increase");
  for (std::size_t k = 0; k < gaps_.size(); ++k) {
    auto& v = state_[k];
    check_rows(gaps_[k], v.size(), p);
    std::span<double> out(scratch_.data(), v.size());
    // Applying M(p) equals one raw step divided by the twin count's growth.
    simd::transfer_step(v, out, static_cast<double>(p));
    std::copy(out.begin(), out.end(), v.begin());
  }
  stage_ = p;
}

std::size_t NormalizedPropagator::slot(std::uint64_t g) const {
  auto it = std::lower_bound(gaps_.begin(), gaps_.end(), g);
  if (it == gaps_.end() || *it != g) throw DomainError("normalized propagation: gap " + std::to_string(g) + " not tracked");
  return static_cast<std::size_t>(it - gaps_.begin());
}

double NormalizedPropagator::ratio(std::uint64_t g, std::size_t j) const {
  const auto& v = state_[slot(g)];
  return j >= 1 && j <= v.size() ? v[j - 1] : 0.0;
}

std::span<const double> NormalizedPropagator::vector(std::uint64_t g) const { return state_[slot(g)]; }

Crossover find_crossover(const DrivingTermCensus& census, std::uint64_t g, std::uint64_t reference,
                         std::uint64_t p_limit) {
  std::vector<std::uint64_t> gaps{g};
  if (reference != g) gaps.push_back(reference);
  NormalizedPropagator prop(census, gaps);
  Crossover result;
  if (prop.ratio(g) > prop.ratio(reference)) {
    result.found = true;
    result.prime = census.stage_prime;
    result.ratio = prop.ratio(g) / prop.ratio(reference);
    return result;
  }
  // Walk in blocks so the prime list stays small however far the limit is.
  constexpr std::uint64_t kBlock = 1u << 22;
  std::uint64_t lo = census.stage_prime;
  while (lo < p_limit && !result.found) {
    const std::uint64_t hi = std::min(p_limit, lo + kBlock);
    primesieve::for_each_prime(lo + 1, hi, [&](std::span<const std::uint64_t> batch) {
      for (std::uint64_t p : batch) {
        if (result.found) return;
        prop.step(p);
        ++result.steps;
        if (prop.ratio(g) > prop.ratio(reference)) {
          result.found = true;
          result.prime = p;
          result.ratio = prop.ratio(g) / prop.ratio(reference);
        }
      }
    });
    lo = hi;
  }
  return result;
}

}  // namespace gapsieve::dynamics
