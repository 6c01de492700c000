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

#include <immintrin.h>

namespace gapsieve::simd::avx2 {

__attribute__((target("avx2"))) void and_into(std::uint64_t* dst, const std::uint64_t* src,
                                              std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst + i);
    const auto* s = reinterpret_cast<const __m256i*>(src + i);
    _mm256_storeu_si256(d, _mm256_and_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
  }
  for (; i < words; ++i) dst[i] &= src[i];
}

// No FMA: the separate multiply and add round exactly like the scalar loop,
// so both variants produce bit-identical output.
__attribute__((target("avx2"))) void transfer_step(const double* in, double* out, std::size_t n,
                                                   double prime) {
  if (n == 0) return;
  const double q = prime - 2.0;
  const __m256d qv = _mm256_set1_pd(q);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d four = _mm256_set1_pd(4.0);
  __m256d jv = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
  std::size_t j = 0;
  // in[j + 4] must exist, so the vector loop stops one lane short of n.
  for (; j + 4 < n; j += 4) {
    const __m256d x = _mm256_loadu_pd(in + j);
    const __m256d y = _mm256_loadu_pd(in + j + 1);
    const __m256d diag = _mm256_sub_pd(qv, jv);
    const __m256d sup = _mm256_add_pd(jv, one);
    const __m256d sum = _mm256_add_pd(_mm256_mul_pd(diag, x), _mm256_mul_pd(sup, y));
    _mm256_storeu_pd(out + j, _mm256_div_pd(sum, qv));
    jv = _mm256_add_pd(jv, four);
  }
  for (; j + 1 < n; ++j) {
    const double jd = static_cast<double>(j);
    out[j] = ((q - jd) * in[j] + (jd + 1.0) * in[j + 1]) / q;
  }
  const double last = static_cast<double>(n - 1);
  out[n - 1] = ((q - last) * in[n - 1]) / q;
}

}  // namespace gapsieve::simd::avx2
