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

// Data-parallel inner loops. The free functions dispatch to the active ISA;
// the per-ISA namespaces are exposed so tests can compare variants directly.

#include <cstddef>
#include <cstdint>
#include <span>

namespace gapsieve::simd {

/// dst[i] &= src[i]. Spans must have equal length.
void and_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);

/// One step of the normalized banded recurrence at `prime`:
///   out[j] = ((prime-2-j) * in[j] + (j+1) * in[j+1]) / (prime-2)
/// with 0-based j and in[n] taken as zero. `in` and `out` must not alias and
/// prime - 2 - j must be nonnegative for every row (checked by callers).
void transfer_step(std::span<const double> in, std::span<double> out, double prime);

namespace scalar {
void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
void transfer_step(const double* in, double* out, std::size_t n, double prime);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define GAPSIEVE_HAVE_AVX2_KERNELS 1
namespace avx2 {
void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
void transfer_step(const double* in, double* out, std::size_t n, double prime);
}  // namespace avx2
#endif

#if defined(__aarch64__)
#define GAPSIEVE_HAVE_NEON_KERNELS 1
namespace neon {
void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
void transfer_step(const double* in, double* out, std::size_t n, double prime);
}  // namespace neon
#endif

}  // namespace gapsieve::simd
