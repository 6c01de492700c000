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

#include "gapsieve/simd/kernels.hpp"

namespace gapsieve::simd::scalar {

void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] &= src[i];
}

void transfer_step(const double* in, double* out, std::size_t n, double prime) {
  if (n == 0) return;
  const double q = prime - 2.0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double jd = static_cast<double>(j);
    out[j] = ((q - jd) * in[j] + (jd + 1.0) * in[j + 1]) / q;
  }
  const double last = static_cast<double>(n - 1);
  out[n - 1] = ((q - last) * in[n - 1]) / q;
}

}  // namespace gapsieve::simd::scalar
