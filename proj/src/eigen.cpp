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

#include <cstdint>

#include "gapsieve/dynamics.hpp"

namespace gapsieve::dynamics {

Matrix<Rational> EigenSystem::reconstruct(std::uint64_t p) const {
  const std::vector<Rational> a = eigenvalues(p, dim);
  Matrix<Rational> scaled = left;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) scaled(i, j) *= a[i];
  }
  return right * scaled;
}

EigenSystem eigen_basis(std::size_t dim) {
  if (dim == 0) throw DomainError("eigen_basis: dimension must be positive");
  EigenSystem e;
  e.dim = dim;
  e.right = Matrix<Rational>(dim, dim);
  e.left = Matrix<Rational>(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      const BigInt c = binomial(static_cast<unsigned>(j), static_cast<unsigned>(i));
      e.left(i, j) = Rational(c);
      e.right(i, j) = Rational((i + j) % 2 == 0 ? c : BigInt(-c));
    }
  }
  return e;
}

std::vector<Rational> eigenvalues(std::uint64_t p, std::size_t dim) {
  if (p < 3) throw DomainError("eigenvalues: p must be at least 3");
  std::vector<Rational> a;
  a.reserve(dim);
  const BigInt den(static_cast<unsigned long>(p - 2));
  for (std::size_t j = 1; j <= dim; ++j) {
    Rational r(BigInt(static_cast<long>(p) - static_cast<long>(j) - 1), den);
    r.canonicalize();
    a.push_back(r);
  }
  return a;
}

std::vector<Rational> eigen_products(std::span<const std::uint64_t> primes, std::size_t dim) {
  std::vector<BigInt> num(dim, BigInt(1));
  BigInt den = 1;
  for (std::uint64_t p : primes) {
    if (p < 3) throw DomainError("eigen_products: primes must be at least 3");
    den *= static_cast<unsigned long>(p - 2);
    for (std::size_t j = 1; j <= dim; ++j) num[j - 1] *= BigInt(static_cast<long>(p) - static_cast<long>(j) - 1);
  }
  std::vector<Rational> out;
  out.reserve(dim);
  for (auto& n : num) {
    Rational r(n, den);
    r.canonicalize();
    out.push_back(std::move(r));
  }
  return out;
}

Rational left_projection(std::size_t i, std::span<const Rational> w0) {
  if (i == 0) throw DomainError("left_projection: index is 1-based");
  Rational s = 0;
  for (std::size_t j = i; j <= w0.size(); ++j) {
    s += Rational(binomial(static_cast<unsigned>(j - 1), static_cast<unsigned>(i - 1))) * w0[j - 1];
  }
  return s;
}

Rational closed_form_w1(const RatioVector& w0, std::span<const Rational> products) {
  const std::size_t n = w0.entries.size();
  if (products.size() < n) {
    throw DomainError("closed_form_w1: " + std::to_string(products.size()) + " eigen products for " +
                      std::to_string(n) + " driving-term lengths");
  }
  Rational s = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const Rational term = products[i - 1] * left_projection(i, w0.entries);
    if (i % 2 == 1) {
      s += term;
    } else {
      s -= term;
    }
  }
  return s;
}

Rational large_factor_correction(std::uint64_t g, std::uint64_t p0) {
  if (g == 0) throw DomainError("large_factor_correction: gap must be positive");
  Rational c = 1;
  for (std::uint64_t q : prime_factors(g)) {
    if (q == 2 || q <= p0) continue;
    c *= Rational(BigInt(static_cast<unsigned long>(q - 1)), BigInt(static_cast<unsigned long>(q - 2)));
  }
  c.canonicalize();
  return c;
}

PolynomialModel poly_model(const RatioVector& w0, std::size_t degree) {
  const std::size_t n = w0.entries.size();
  if (degree + 1 > n) {
    throw DomainError("poly_model: degree " + std::to_string(degree) + " needs " + std::to_string(degree + 1) +
                      " driving-term lengths, gap " + std::to_string(w0.gap) + " has " + std::to_string(n));
  }
  PolynomialModel m;
  m.gap = w0.gap;
  m.base_prime = w0.stage_prime;
  m.degree = degree;
  for (std::size_t i = 1; i <= degree + 1; ++i) {
    m.coefficients.push_back(left_projection(i, w0.entries));
    m.coefficients_f.push_back(m.coefficients.back().get_d());
  }
  return m;
}

double poly_eval(const PolynomialModel& model, double lambda) {
  double acc = 0;
  for (auto it = model.coefficients_f.rbegin(); it != model.coefficients_f.rend(); ++it) acc = acc * -lambda + *it;
  return acc;
}

Rational poly_eval(const PolynomialModel& model, const Rational& lambda) {
  Rational acc = 0;
  const Rational x = -lambda;
  for (auto it = model.coefficients.rbegin(); it != model.coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace gapsieve::dynamics
