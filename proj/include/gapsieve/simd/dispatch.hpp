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

// Runtime instruction-set selection for the data-parallel kernels.
//
// Every kernel has a scalar reference implementation. Vector variants are
// compiled with per-function target attributes, so one binary runs on any
// CPU of the architecture; the variant is picked once at first use. Set
// GAPSIEVE_ISA=scalar|avx2|neon to force a specific variant.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace gapsieve::simd {

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa);
std::optional<Isa> parse_isa(std::string_view name);

/// True when this build contains the variant and the CPU can execute it.
bool supported(Isa isa);

/// Every variant usable on this machine, scalar first.
std::vector<Isa> available();

Isa best_available();

/// The variant used by the dispatching entry points.
Isa active();

struct KernelTable {
  Isa isa;
  void (*and_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
  void (*transfer_step)(const double* in, double* out, std::size_t n, double prime);
};

const KernelTable& kernels();

/// Throws DomainError if `isa` is not supported here.
const KernelTable& kernels_for(Isa isa);

}  // namespace gapsieve::simd
