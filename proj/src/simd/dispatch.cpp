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

#include "gapsieve/simd/dispatch.hpp"

#include <cstdlib>
#include <string>

#include "gapsieve/error.hpp"
#include "gapsieve/simd/kernels.hpp"

namespace gapsieve::simd {
namespace {

constexpr KernelTable kScalar{Isa::scalar, &scalar::and_into, &scalar::transfer_step};
#ifdef GAPSIEVE_HAVE_AVX2_KERNELS
constexpr KernelTable kAvx2{Isa::avx2, &avx2::and_into, &avx2::transfer_step};
#endif
#ifdef GAPSIEVE_HAVE_NEON_KERNELS
constexpr KernelTable kNeon{Isa::neon, &neon::and_into, &neon::transfer_step};
#endif

Isa select_active() {
  if (const char* env = std::getenv("GAPSIEVE_ISA")) {
    const std::string_view name(env);
    if (name != "auto" && !name.empty()) {
      auto isa = parse_isa(name);
      if (!isa) throw DomainError("GAPSIEVE_ISA: unknown instruction set '" + std::string(name) + "'");
      if (!supported(*isa)) {
        throw DomainError("GAPSIEVE_ISA: " + std::string(name) + " is not available on this machine");
      }
      return *isa;
    }
  }
  return best_available();
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

std::optional<Isa> parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::scalar;
  if (name == "avx2") return Isa::avx2;
  if (name == "neon") return Isa::neon;
  return std::nullopt;
}

bool supported(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#ifdef GAPSIEVE_HAVE_AVX2_KERNELS
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#ifdef GAPSIEVE_HAVE_NEON_KERNELS
      return true;  // Advanced SIMD is mandatory on AArch64.
#else
      return false;
#endif
  }
  return false;
}

std::vector<Isa> available() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
    if (supported(isa)) out.push_back(isa);
  }
  return out;
}

Isa best_available() {
  if (supported(Isa::avx2)) return Isa::avx2;
  if (supported(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

Isa active() {
  static const Isa isa = select_active();
  return isa;
}

const KernelTable& kernels_for(Isa isa) {
  if (!supported(isa)) throw DomainError("instruction set not available: " + std::string(to_string(isa)));
  switch (isa) {
#ifdef GAPSIEVE_HAVE_AVX2_KERNELS
    case Isa::avx2: return kAvx2;
#endif
#ifdef GAPSIEVE_HAVE_NEON_KERNELS
    case Isa::neon: return kNeon;
#endif
    default: return kScalar;
  }
}

const KernelTable& kernels() {
  static const KernelTable& table = kernels_for(active());
  return table;
}

void and_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  if (dst.size() != src.size()) throw DomainError("and_into: span lengths differ");
  kernels().and_into(dst.data(), src.data(), dst.size());
}

void transfer_step(std::span<const double> in, std::span<double> out, double prime) {
  if (in.size() != out.size()) throw DomainError("transfer_step: span lengths differ");
  kernels().transfer_step(in.data(), out.data(), in.size(), prime);
}

}  // namespace gapsieve::simd
