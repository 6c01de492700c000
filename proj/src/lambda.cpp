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
#include <cmath>
#include <cstdint>

#include "gapsieve/dynamics.hpp"
#include "gapsieve/primesieve.hpp"

namespace gapsieve::dynamics {
namespace {

// Compensated sum of log a_2(p); millions of tiny terms.
class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0;
  double comp_ = 0;
};

BigInt product_tree(std::vector<BigInt>& v) {
  if (v.empty()) return 1;
  while (v.size() > 1) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size(); i += 2) {
      if (i + 1 < v.size()) {
        v[out++] = v[i] * v[i + 1];
      } else {
        v[out++] = std::move(v[i]);
      }
    }
    v.resize(out);
  }
  return v.front();
}

void check_base(std::uint64_t p0) {
  if (p0 < 3 || !is_prime(p0)) throw DomainError("lambda: base " + std::to_string(p0) + " must be an odd prime");
}

}  // namespace

Rational mertens_c0(std::uint64_t p0) {
  if (p0 < 2 || !is_prime(p0)) throw DomainError("mertens_c0: base " + std::to_string(p0) + " is not prime");
  BigInt num = 1, den = 1;
  for (std::uint64_t q = 2; q <= p0; q = next_prime(q)) {
    num *= static_cast<unsigned long>(q);
    den *= static_cast<unsigned long>(q - 1);
  }
  Rational c(num, den);
  c.canonicalize();
  return c;
}

std::vector<LambdaPath> lambda_exact_path(std::uint64_t p0, std::span<const std::uint64_t> targets,
                                          const LambdaOptions& opts) {
  check_base(p0);
  if (!std::is_sorted(targets.begin(), targets.end())) throw DomainError("lambda: targets must ascend");
  std::vector<LambdaPath> out;
  if (targets.empty()) return out;
  if (targets.front() < p0) throw DomainError("lambda: target below base prime");
  if (targets.back() > opts.ceiling) {
    throw CapacityError("lambda: target " + std::to_string(targets.back()) + " exceeds the sieve ceiling " +
                        std::to_string(opts.ceiling) + "; use the Mertens bounds");
  }
  const Rational c0 = mertens_c0(p0);

  NeumaierSum log_sum;
  std::uint64_t factors = 0;
  std::vector<BigInt> nums, dens;
  std::size_t next = 0;
  auto record = [&](void) {
    LambdaPath path;
    path.base_prime = p0;
    path.target = targets[next];
    path.factors = factors;
    path.log_value = log_sum.value();
    path.value = std::exp(path.log_value);
    path.c0 = c0;
    if (targets[next] <= opts.exact_ceiling) {
      std::vector<BigInt> n = nums, d = dens;
      Rational r(product_tree(n), product_tree(d));
      r.canonicalize();
      path.exact = r;
    }
    out.push_back(std::move(path));
    ++next;
  };
  while (next < targets.size() && targets[next] <= p0) record();
  if (next < targets.size()) {
    primesieve::for_each_prime(p0 + 1, targets.back(), [&](std::span<const std::uint64_t> batch) {
      for (std::uint64_t p : batch) {
        while (next < targets.size() && targets[next] < p) record();
        log_sum.add(std::log1p(-1.0 / static_cast<double>(p - 2)));
        ++factors;
        if (p <= opts.exact_ceiling) {
          nums.emplace_back(static_cast<unsigned long>(p - 3));
          dens.emplace_back(static_cast<unsigned long>(p - 2));
        }
      }
    });
    while (next < targets.size()) record();
  }
  return out;
}

LambdaPath lambda_exact(std::uint64_t p0, std::uint64_t pk, const LambdaOptions& opts) {
  const std::uint64_t t[1] = {pk};
  return lambda_exact_path(p0, t, opts).front();
}

LambdaBounds lambda_bounds(std::uint64_t p0, double pk) {
  check_base(p0);
  if (!(pk > static_cast<double>(p0))) throw DomainError("lambda_bounds: target must exceed the base prime");
  LambdaBounds b;
  b.c0 = mertens_c0(p0);
  const double c = b.c0.get_d() * std::exp(-kEulerGamma) / std::log(pk);
  b.upper = c;
  b.lower = c * static_cast<double>(p0 - 1) / static_cast<double>(p0);
  b.note = "asymptotic; o(1) term dropped";
  return b;
}

PrimeInterval lambda_invert(double lambda, std::uint64_t p0) {
  check_base(p0);
  if (!(lambda > 0 && lambda < 1)) throw DomainError("lambda_invert: lambda must lie in (0, 1)");
  const double c = mertens_c0(p0).get_d() * std::exp(-kEulerGamma);
  PrimeInterval r;
  r.log10_high = c / (lambda * std::log(10.0));
  r.log10_low = r.log10_high * static_cast<double>(p0 - 1) / static_cast<double>(p0);
  if (r.log10_high <= std::log10(static_cast<double>(p0))) {
    throw DomainError("lambda_invert: lambda too large for base " + std::to_string(p0));
  }
  return r;
}

}  // namespace gapsieve::dynamics
