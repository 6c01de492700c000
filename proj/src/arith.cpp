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

#include "gapsieve/arith.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string>

#include "gapsieve/error.hpp"

namespace gapsieve {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::uint64_t prev_prime(std::uint64_t n) {
  if (n <= 2) throw DomainError("no prime below " + std::to_string(n));
  std::uint64_t c = n - 1;
  while (!is_prime(c)) --c;
  return c;
}

std::vector<std::uint32_t> small_primes(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<char> composite(static_cast<std::size_t>(limit) + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t m = i * i; m <= limit; m += i) composite[m] = 1;
  }
  return out;
}

std::uint64_t primorial(std::uint32_t p) {
  std::uint64_t acc = 1;
  for (std::uint32_t q : small_primes(p)) {
    if (acc > std::numeric_limits<std::uint64_t>::max() / q) {
      throw CapacityError(std::to_string(p) + "# does not fit in 64 bits");
    }
    acc *= q;
  }
  return acc;
}

BigInt primorial_big(std::uint32_t p) {
  BigInt acc = 1;
  for (std::uint32_t q : small_primes(p)) acc *= q;
  return acc;
}

std::uint64_t primorial_totient(std::uint32_t p) {
  std::uint64_t acc = 1;
  for (std::uint32_t q : small_primes(p)) {
    if (acc > std::numeric_limits<std::uint64_t>::max() / (q - 1)) {
      throw CapacityError("phi(" + std::to_string(p) + "#) does not fit in 64 bits");
    }
    acc *= q - 1;
  }
  return acc;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::string format_double(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

std::string format_pow10(double log10_value, int digits) {
  if (!std::isfinite(log10_value)) return log10_value > 0 ? "inf" : "0";
  double e = std::floor(log10_value);
  // Past 2^53 the fractional part is lost; the mantissa is then meaningless.
  double m = std::fabs(log10_value) < 9.0e15 ? std::pow(10.0, log10_value - e) : 1.0;
  // Rounding the mantissa can carry into the next decade.
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, m);
  if (std::atof(buf) >= 10.0) {
    m /= 10.0;
    e += 1.0;
    std::snprintf(buf, sizeof buf, "%.*f", digits, m);
  }
  char out[96];
  std::snprintf(out, sizeof out, "%se%+03.0f", buf, e);
  return out;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace gapsieve
