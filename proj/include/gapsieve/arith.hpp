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

// Exact-arithmetic aliases and small-prime helpers shared by every module.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gapsieve {

using BigInt = mpz_class;
using Rational = mpq_class;

bool is_prime(std::uint64_t n);

/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// Largest prime strictly below n; throws DomainError when n <= 2.
std::uint64_t prev_prime(std::uint64_t n);

/// All primes q <= limit, ascending. Intended for small limits (trial-free
/// Eratosthenes over a byte array).
std::vector<std::uint32_t> small_primes(std::uint32_t limit);

/// p# = product of primes <= p. Throws CapacityError on 64-bit overflow.
std::uint64_t primorial(std::uint32_t p);
BigInt primorial_big(std::uint32_t p);

/// phi(p#) = product of (q - 1) over primes q <= p.
std::uint64_t primorial_totient(std::uint32_t p);

/// Distinct prime factors of n in ascending order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

BigInt binomial(unsigned n, unsigned k);

/// Shortest decimal rendering of a double that round-trips ("%.17g"),
/// C-locale regardless of the global locale.
std::string format_double(double v, int precision = 17);

/// Renders 10^log10_value as "m.mmmmmme+XX" without overflowing a double.
std::string format_pow10(double log10_value, int digits = 6);

/// num/den in lowest terms; den must be nonzero.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Converts a rational to double with correct rounding for large operands.
double to_double(const Rational& r);

}  // namespace gapsieve
