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

#include <arm_neon.h>

namespace gapsieve::simd::neon {

void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    vst1q_u64(dst + i, vandq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  }
  for (; i < words; ++i) dst[i] &= src[i];
}

void transfer_step(const double* in, double* out, std::size_t n, double prime) {
  if (n == 0) return;
  const double q = prime - 2.0;
  const float64x2_t qv = vdupq_n_f64(q);
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t two = vdupq_n_f64(2.0);
  const double init[2] = {0.0, 1.0};
  float64x2_t jv = vld1q_f64(init);
  std::size_t j = 0;
  for (; j + 2 < n; j += 2) {
    const float64x2_t x = vld1q_f64(in + j);
    const float64x2_t y = vld1q_f64(in + j + 1);
    const float64x2_t diag = vsubq_f64(qv, jv);
    const float64x2_t sup = vaddq_f64(jv, one);
    // vmulq + vaddq rather than vfmaq keeps rounding identical to scalar.
    const float64x2_t sum = vaddq_f64(vmulq_f64(diag, x), vmulq_f64(sup, y));
    vst1q_f64(out + j, vdivq_f64(sum, qv));
    jv = vaddq_f64(jv, two);
  }
  for (; j + 1 < n; ++j) {
    const double jd = static_cast<double>(j);
    out[j] = ((q - jd) * in[j] + (jd + 1.0) * in[j + 1]) / q;
  }
  const double last = static_cast<double>(n - 1);
  out[n - 1] = ((q - last) * in[n - 1]) / q;
}

}  // namespace gapsieve::simd::neon
