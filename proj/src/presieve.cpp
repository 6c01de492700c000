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

#include "gapsieve/presieve.hpp"

#include <algorithm>
#include <cstring>

#include "gapsieve/error.hpp"
#include "gapsieve/simd/kernels.hpp"

namespace gapsieve {

PresieveMask::PresieveMask(std::span<const std::uint32_t> primes) : primes_(primes.begin(), primes.end()) {
  std::size_t period = 1;
  for (std::uint32_t q : primes_) {
    if (q < 3 || q % 2 == 0) throw DomainError("presieve mask needs odd primes");
    period *= q;
  }
  words_.assign(period, ~std::uint64_t{0});
  const std::uint64_t bits = static_cast<std::uint64_t>(period) * 64;
  for (std::uint32_t q : primes_) {
    // 2i+1 == 0 (mod q)  <=>  i == (q-1)/2 (mod q).
    for (std::uint64_t i = (q - 1) / 2; i < bits; i += q) {
      words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    }
  }
}

void PresieveMask::apply(std::span<std::uint64_t> dst, std::uint64_t first_word, bool overwrite) const {
  const std::size_t period = words_.size();
  std::size_t offset = static_cast<std::size_t>(first_word % period);
  std::size_t pos = 0;
  while (pos < dst.size()) {
    const std::size_t run = std::min(dst.size() - pos, period - offset);
    if (overwrite) {
      std::memcpy(dst.data() + pos, words_.data() + offset, run * sizeof(std::uint64_t));
    } else {
      simd::and_into(dst.subspan(pos, run), std::span<const std::uint64_t>(words_.data() + offset, run));
    }
    pos += run;
    offset = 0;
  }
}

Presieve::Presieve(std::uint32_t max_prime) {
  static constexpr std::uint32_t kGroups[][5] = {{3, 5, 7, 11, 13}, {17, 19}, {23}, {29}};
  for (const auto& group : kGroups) {
    std::vector<std::uint32_t> chosen;
    for (std::uint32_t q : group) {
      if (q != 0 && q <= max_prime) chosen.push_back(q);
    }
    if (chosen.empty()) continue;
    primes_.insert(primes_.end(), chosen.begin(), chosen.end());
    masks_.emplace_back(chosen);
  }
}

void Presieve::fill(std::span<std::uint64_t> dst, std::uint64_t first_word) const {
  if (masks_.empty()) {
    std::fill(dst.begin(), dst.end(), ~std::uint64_t{0});
    return;
  }
  masks_.front().apply(dst, first_word, true);
  for (std::size_t m = 1; m < masks_.size(); ++m) masks_[m].apply(dst, first_word, false);
}

}  // namespace gapsieve
