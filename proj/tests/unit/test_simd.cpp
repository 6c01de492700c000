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

#include <doctest.h>

#include <cstring>
#include <random>

#include "gapsieve/simd/dispatch.hpp"
#include "gapsieve/simd/kernels.hpp"

using namespace gapsieve;
using namespace gapsieve::simd;

TEST_CASE("dispatch table") {
  CHECK(supported(Isa::scalar));
  CHECK(parse_isa("avx2") == Isa::avx2);
  CHECK(!parse_isa("sse9").has_value());
  CHECK(to_string(Isa::neon) == "neon");
  CHECK(supported(best_available()));
  CHECK(kernels_for(Isa::scalar).isa == Isa::scalar);
  for (Isa isa : {Isa::avx2, Isa::neon}) {
    if (!supported(isa)) CHECK_THROWS(kernels_for(isa));
  }
}

TEST_CASE("mask AND matches scalar on every ISA") {
  std::mt19937_64 rng(7);
  for (std::size_t words : {0u, 1u, 3u, 4u, 7u, 64u, 129u}) {
    std::vector<std::uint64_t> src(words), dst(words);
    for (auto& w : src) w = rng();
    for (auto& w : dst) w = rng();
    auto want = dst;
    scalar::and_into(want.data(), src.data(), words);
    for (Isa isa : available()) {
      auto got = dst;
      kernels_for(isa).and_into(got.data(), src.data(), words);
      CAPTURE(to_string(isa));
      CHECK(got == want);
    }
  }
}

TEST_CASE("bidiagonal step is bit-identical on every ISA") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 8u, 17u, 63u}) {
    std::vector<double> in(n);
    for (auto& x : in) x = u(rng);
    std::vector<double> want(n);
    scalar::transfer_step(in.data(), want.data(), n, 1993.0);
    for (Isa isa : available()) {
      std::vector<double> got(n, -1.0);
      kernels_for(isa).transfer_step(in.data(), got.data(), n, 1993.0);
      CAPTURE(to_string(isa));
      CAPTURE(n);
      CHECK(std::memcmp(got.data(), want.data(), n * sizeof(double)) == 0);
    }
  }
}

TEST_CASE("bidiagonal step arithmetic") {
  // w' = ((p-j-1) w_j + j w_{j+1}) / (p-2) with p = 7, w = (2, 4)/... as doubles.
  const double in[] = {2.0, 4.0};
  double out[2];
  scalar::transfer_step(in, out, 2, 7.0);
  CHECK(out[0] == doctest::Approx(14.0 / 5.0));
  CHECK(out[1] == doctest::Approx(16.0 / 5.0));
}
