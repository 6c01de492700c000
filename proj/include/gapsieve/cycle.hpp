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

// The cycle of gaps G(p#) among the units of Z mod p#, its two independent
// constructions, and exact censuses of gaps and their driving terms.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gapsieve/arith.hpp"
#include "gapsieve/error.hpp"

namespace gapsieve::cycle {

using Gap = std::uint32_t;

inline constexpr std::uint32_t kDefaultCeiling = 29;
/// Largest stage stored as a whole vector (G(19#) has 1,658,880 gaps).
inline constexpr std::uint32_t kMaterializeCeiling = 19;
inline constexpr std::size_t kDefaultSegmentSize = std::size_t{1} << 24;
inline constexpr std::uint32_t kDefaultJmax = 128;

/// A fully materialized cycle; gaps start with the gap from generator 1.
struct GapCycle {
  std::uint32_t stage_prime = 0;
  std::vector<Gap> gaps;

  std::uint64_t sum() const;
};

struct EnumerateOptions {
  /// Odd candidates sieved per segment.
  std::size_t segment_size = kDefaultSegmentSize;
  std::uint32_t ceiling = kDefaultCeiling;
};

using GapChunkFn = std::function<void(std::span<const Gap>)>;

/// Streams G(p#) in order, one chunk per sieve segment: the gaps between
/// consecutive integers in [1, p#+1] coprime to p#, closing with the gap
/// from the last generator to p#+1.
void enumerate_gap_cycle(std::uint32_t p, const GapChunkFn& fn, const EnumerateOptions& opts = {});

/// enumerate_gap_cycle collected into a vector; p <= kMaterializeCeiling.
GapCycle materialize_gap_cycle(std::uint32_t p, const EnumerateOptions& opts = {});

/// Builds G(p_k#) from G(p_{k-1}#): concatenates p_k copies of `prev` and
/// fuses the two gaps around each candidate p_k * c, c a generator of
/// `prev`. Rejects a `next_prime` that does not immediately follow
/// prev.stage_prime.
GapCycle fuse_cycle(const GapCycle& prev, std::uint32_t next_prime);

/// G(p#) by repeated fusion starting from G(3#) = 4, 2.
GapCycle fuse_chain(std::uint32_t p);

/// n_{g,j}: number of cyclic positions where j consecutive gaps sum to g.
/// Stored densely for even g in [2, gmax] and j in [1, jmax].
template <class Count>
struct BasicCensus {
  std::uint32_t stage_prime = 0;
  std::uint32_t gmax = 0;
  std::uint32_t jmax = 0;
  /// Some run summing to <= gmax is longer than jmax, so counts undercount.
  bool truncated = false;
  std::vector<Count> counts;

  BasicCensus() = default;
  BasicCensus(std::uint32_t p, std::uint32_t g_max, std::uint32_t j_max)
      : stage_prime(p), gmax(g_max - g_max % 2), jmax(j_max),
        counts(static_cast<std::size_t>(gmax / 2) * j_max, Count(0)) {}

  bool tracks(std::uint64_t g, std::uint64_t j) const {
    return g >= 2 && g % 2 == 0 && g <= gmax && j >= 1 && j <= jmax;
  }
  const Count& at(std::uint64_t g, std::uint64_t j) const { return counts[index(g, j)]; }
  Count& at(std::uint64_t g, std::uint64_t j) { return counts[index(g, j)]; }
  /// Zero for untracked (g, j).
  Count get(std::uint64_t g, std::uint64_t j) const { return tracks(g, j) ? at(g, j) : Count(0); }

  /// Largest j with a nonzero count for g (0 if g never occurs).
  std::uint32_t longest_term(std::uint64_t g) const {
    for (std::uint32_t j = jmax; j >= 1; --j) {
      if (at(g, j) != 0) return j;
    }
    return 0;
  }

 private:
  std::size_t index(std::uint64_t g, std::uint64_t j) const {
    if (!tracks(g, j)) {
      throw DomainError("census does not track (g=" + std::to_string(g) + ", j=" + std::to_string(j) + ")");
    }
    return static_cast<std::size_t>((g / 2 - 1) * jmax + (j - 1));
  }
};

using DrivingTermCensus = BasicCensus<BigInt>;
using RatioCensus = BasicCensus<double>;

/// Incremental census over a stream of gaps. Windows that run past the end
/// of the stream continue into the start of the cycle.
class CensusAccumulator {
 public:
  CensusAccumulator(std::uint32_t gmax, std::uint32_t jmax);

  void consume(std::span<const Gap> chunk);
  /// Closes the cycle and returns counts attributed to `stage_prime`.
  DrivingTermCensus finish(std::uint32_t stage_prime);

  std::uint64_t gaps_seen() const { return seen_; }

 private:
  void process_ready();
  void count_from(std::size_t start);

  std::uint32_t gmax_;
  std::uint32_t jmax_;
  std::vector<std::uint64_t> counts_;
  std::vector<Gap> head_;  // first jmax + 1 gaps of the cycle
  std::vector<Gap> buf_;   // unprocessed starts followed by lookahead
  std::size_t next_start_ = 0;
  std::uint64_t seen_ = 0;
  bool truncated_ = false;
};

/// Census of a materialized cycle.
DrivingTermCensus census_driving_terms(const GapCycle& cycle, std::uint32_t gmax, std::uint32_t jmax);

/// Census restricted to window start positions [begin, end); windows read
/// past `end` (and around the wrap) as needed. Partial censuses over a
/// partition of [0, size) merge into the full census.
DrivingTermCensus census_positions(const GapCycle& cycle, std::uint32_t gmax, std::uint32_t jmax,
                                   std::size_t begin, std::size_t end);

/// Streaming census of G(p#) without materializing the cycle.
DrivingTermCensus census_driving_terms(std::uint32_t p, std::uint32_t gmax, std::uint32_t jmax,
                                       const EnumerateOptions& opts = {});

/// Pointwise sum of two censuses of the same shape.
DrivingTermCensus merge(const DrivingTermCensus& a, const DrivingTermCensus& b);

/// Text persistence. Header
///   CENSUS v1 p=<prime> gmax=<int> jmax=<int> truncated=<0|1>
/// then `<g> <j> <count>` per nonzero entry, ascending g then j.
void write_census(std::ostream& os, const DrivingTermCensus& census);
void write_census(std::ostream& os, const RatioCensus& census);

/// Reads a census, skipping an optional leading PROPAGATED line. Throws
/// FormatError on malformed input.
DrivingTermCensus read_census(std::istream& is);
RatioCensus read_ratio_census(std::istream& is);

}  // namespace gapsieve::cycle
