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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gapsieve {

/// Periodic bitmap over the odd integers: bit i of the stream stands for
/// 2i+1 and is cleared when 2i+1 is divisible by one of the mask's primes.
/// Since the primes are odd the period in 64-bit words equals their product.
class PresieveMask {
 public:
  explicit PresieveMask(std::span<const std::uint32_t> primes);

  std::size_t period_words() const { return words_.size(); }
  const std::vector<std::uint32_t>& primes() const { return primes_; }

  /// Writes (overwrite) or ANDs words [first_word, first_word + dst.size())
  /// of the infinite stream into dst.
  void apply(std::span<std::uint64_t> dst, std::uint64_t first_word, bool overwrite) const;

 private:
  std::vector<std::uint32_t> primes_;
  std::vector<std::uint64_t> words_;
};

/// The odd primes up to 29 split into masks of modest period
/// ({3..13}: 15015 words, {17,19}: 323, {23}, {29}). Filling a segment is one
/// copy plus a few vector ANDs instead of striking each prime separately.
class Presieve {
 public:
  static constexpr std::uint32_t kLargestPrime = 29;

  /// Uses the odd primes <= min(max_prime, 29).
  explicit Presieve(std::uint32_t max_prime);

  /// Fills dst with words [first_word, ...) of the combined stream.
  void fill(std::span<std::uint64_t> dst, std::uint64_t first_word) const;

  const std::vector<std::uint32_t>& primes() const { return primes_; }

 private:
  std::vector<PresieveMask> masks_;
  std::vector<std::uint32_t> primes_;
};

/// Calls fn(bit_index) for every set bit, ascending. bit_index counts from
/// the start of `words`.
template <class Fn>
void for_each_set_bit(std::span<const std::uint64_t> words, Fn&& fn) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t bits = words[w];
    while (bits != 0) {
      const int b = __builtin_ctzll(bits);
      fn(static_cast<std::uint64_t>(w) * 64 + static_cast<std::uint64_t>(b));
      bits &= bits - 1;
    }
  }
}

}  // namespace gapsieve
