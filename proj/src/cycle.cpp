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

#include "gapsieve/cycle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "gapsieve/presieve.hpp"

namespace gapsieve::cycle {
namespace {

void check_stage(std::uint32_t p, std::uint32_t ceiling) {
  if (!is_prime(p)) throw DomainError("stage " + std::to_string(p) + " is not prime");
  if (p < 3) throw DomainError("cycles of gaps start at p = 3");
  if (p > ceiling) {
    const double candidates = primorial_big(p).get_d() / 2.0;
    double gaps = 1;
    for (std::uint32_t q : small_primes(p)) gaps *= q - 1;
    char msg[320];
    std::snprintf(msg, sizeof msg,
                  "G(%u#) exceeds the configured ceiling p <= %u: it means sieving %.3g odd candidates "
                  "(~%.0f s at 1e9 candidates/s) and streaming %.3g gaps (%.3g GB if stored as 32-bit)",
                  p, ceiling, candidates, candidates / 1e9, gaps, gaps * 4 / 1e9);
    throw CapacityError(msg);
  }
}

}  // namespace

std::uint64_t GapCycle::sum() const {
  std::uint64_t s = 0;
  for (Gap g : gaps) s += g;
  return s;
}

void enumerate_gap_cycle(std::uint32_t p, const GapChunkFn& fn, const EnumerateOptions& opts) {
  check_stage(p, opts.ceiling);
  const std::uint64_t modulus = primorial(p);
  const Presieve presieve(p);
  // Primes above the presieve range are struck one by one.
  struct Striker {
    std::uint64_t prime;
    std::uint64_t next;
  };
  std::vector<Striker> strikers;
  for (std::uint32_t q : small_primes(p)) {
    if (q > Presieve::kLargestPrime) strikers.push_back({q, (q - 1) / 2});
  }

  const std::uint64_t total_bits = modulus / 2;  // odd numbers 1 .. p#-1
  const std::size_t words = std::max<std::size_t>(1, (opts.segment_size + 63) / 64);
  std::vector<std::uint64_t> segment(words);
  std::vector<Gap> chunk;
  chunk.reserve(words * 16);
  std::uint64_t last = 0;  // previous generator; 0 until 1 is seen

  for (std::uint64_t start = 0; start < total_bits; start += words * 64) {
    std::span<std::uint64_t> seg(segment);
    presieve.fill(seg, start / 64);
    const std::uint64_t end = start + words * 64;
    for (auto& s : strikers) {
      std::uint64_t i = s.next;
      for (; i < end; i += s.prime) {
        const std::uint64_t off = i - start;
        seg[off / 64] &= ~(std::uint64_t{1} << (off % 64));
      }
      s.next = i;
    }
    const std::uint64_t valid = std::min<std::uint64_t>(total_bits - start, words * 64);
    chunk.clear();
    for_each_set_bit(std::span<const std::uint64_t>(seg), [&](std::uint64_t bit) {
      if (bit >= valid) return;
      const std::uint64_t value = 2 * (start + bit) + 1;
      if (last != 0) chunk.push_back(static_cast<Gap>(value - last));
      last = value;
    });
    if (end >= total_bits) chunk.push_back(static_cast<Gap>(modulus + 1 - last));
    if (!chunk.empty()) fn(std::span<const Gap>(chunk));
  }
}

GapCycle materialize_gap_cycle(std::uint32_t p, const EnumerateOptions& opts) {
  check_stage(p, std::min(opts.ceiling, kMaterializeCeiling));
  GapCycle cycle;
  cycle.stage_prime = p;
  cycle.gaps.reserve(static_cast<std::size_t>(primorial_totient(p)));
  enumerate_gap_cycle(
      p, [&](std::span<const Gap> c) { cycle.gaps.insert(cycle.gaps.end(), c.begin(), c.end()); }, opts);
  return cycle;
}

GapCycle fuse_cycle(const GapCycle& prev, std::uint32_t next_prime) {
  if (prev.gaps.empty() || prev.stage_prime < 3) throw DomainError("fuse_cycle: previous cycle is empty");
  if (!is_prime(next_prime) || gapsieve::next_prime(prev.stage_prime) != next_prime) {
    throw DomainError("fuse_cycle: " + std::to_string(next_prime) + " is not the prime after " +
                      std::to_string(prev.stage_prime));
  }
  if (next_prime > kMaterializeCeiling) {
    throw CapacityError("fuse_cycle: materialized cycles stop at p = " + std::to_string(kMaterializeCeiling));
  }
  const std::uint64_t p = next_prime;

  // Candidates to remove: p * c for the generators c of prev, ascending.
  std::vector<std::uint64_t> removals;
  removals.reserve(prev.gaps.size());
  std::uint64_t c = 1;
  for (Gap g : prev.gaps) {
    removals.push_back(p * c);
    c += g;
  }

  GapCycle out;
  out.stage_prime = next_prime;
  out.gaps.reserve(prev.gaps.size() * (p - 1));
  std::uint64_t x = 1;
  std::uint64_t pending = 0;
  std::size_t r = 0;
  for (std::uint64_t copy = 0; copy < p; ++copy) {
    for (Gap g : prev.gaps) {
      x += g;
      pending += g;
      if (r < removals.size() && x == removals[r]) {
        ++r;  // fuse: the gap continues past the removed candidate
        continue;
      }
      out.gaps.push_back(static_cast<Gap>(pending));
      pending = 0;
    }
  }
  if (r != removals.size() || pending != 0) throw std::logic_error("fuse_cycle: removal walk out of step");
  return out;
}

GapCycle fuse_chain(std::uint32_t p) {
  if (!is_prime(p) || p < 3) throw DomainError("fuse_chain: stage must be a prime >= 3");
  GapCycle cycle{3, {4, 2}};
  while (cycle.stage_prime < p) {
    cycle = fuse_cycle(cycle, static_cast<std::uint32_t>(next_prime(cycle.stage_prime)));
  }
  return cycle;
}

// ---------------------------------------------------------------------------
// Census

CensusAccumulator::CensusAccumulator(std::uint32_t gmax, std::uint32_t jmax)
    : gmax_(gmax - gmax % 2), jmax_(jmax) {
  if (gmax_ < 2) throw DomainError("census: gmax must be at least 2");
  if (jmax_ < 1) throw DomainError("census: jmax must be at least 1");
  counts_.assign(static_cast<std::size_t>(gmax_ / 2) * jmax_, 0);
}

void CensusAccumulator::count_from(std::size_t s) {
  const Gap* run = buf_.data() + s;
  std::uint64_t sum = 0;
  std::uint32_t j = 0;
  while (j < jmax_) {
    sum += run[j];
    if (sum > gmax_) return;
    ++j;
    ++counts_[(sum / 2 - 1) * jmax_ + (j - 1)];
  }
  if (sum + run[jmax_] <= gmax_) truncated_ = true;
}

void CensusAccumulator::process_ready() {
  const std::size_t need = static_cast<std::size_t>(jmax_) + 1;
  while (buf_.size() >= next_start_ + need) count_from(next_start_++);
  // Drop fully processed starts once they dominate the buffer.
  if (next_start_ > 0 && next_start_ >= buf_.size() / 2) {
    buf_.erase(buf_.begin(), buf_.begin() + static_cast<std::ptrdiff_t>(next_start_));
    next_start_ = 0;
  }
}

void CensusAccumulator::consume(std::span<const Gap> chunk) {
  const std::size_t need = static_cast<std::size_t>(jmax_) + 1;
  for (Gap g : chunk) {
    if (g % 2 != 0) throw DomainError("census: odd gap in cycle");
  }
  if (head_.size() < need) {
    const std::size_t take = std::min(need - head_.size(), chunk.size());
    head_.insert(head_.end(), chunk.begin(), chunk.begin() + static_cast<std::ptrdiff_t>(take));
  }
  buf_.insert(buf_.end(), chunk.begin(), chunk.end());
  seen_ += chunk.size();
  process_ready();
}

DrivingTermCensus CensusAccumulator::finish(std::uint32_t stage_prime) {
  if (seen_ == 0) throw DomainError("census: empty cycle");
  const std::size_t need = static_cast<std::size_t>(jmax_) + 1;
  const std::size_t remaining = buf_.size() - next_start_;
  // Periodic extension: the cycle's head, repeated when the cycle is shorter
  // than a window.
  while (buf_.size() < next_start_ + remaining + need) {
    const std::size_t take = std::min(head_.size(), next_start_ + remaining + need - buf_.size());
    buf_.insert(buf_.end(), head_.begin(), head_.begin() + static_cast<std::ptrdiff_t>(take));
  }
  const std::size_t stop = next_start_ + remaining;
  while (next_start_ < stop) count_from(next_start_++);

  DrivingTermCensus census(stage_prime, gmax_, jmax_);
  census.truncated = truncated_;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] != 0) census.counts[i] = BigInt(static_cast<unsigned long>(counts_[i]));
  }
  return census;
}

DrivingTermCensus census_driving_terms(const GapCycle& cycle, std::uint32_t gmax, std::uint32_t jmax) {
  CensusAccumulator acc(gmax, jmax);
  acc.consume(cycle.gaps);
  return acc.finish(cycle.stage_prime);
}

DrivingTermCensus census_positions(const GapCycle& cycle, std::uint32_t gmax, std::uint32_t jmax,
                                   std::size_t begin, std::size_t end) {
  const std::size_t n = cycle.gaps.size();
  if (begin > end || end > n) throw DomainError("census_positions: bad start range");
  if (jmax < 1) throw DomainError("census: jmax must be at least 1");
  DrivingTermCensus partial(cycle.stage_prime, gmax, jmax);
  if (partial.gmax < 2) throw DomainError("census: gmax must be at least 2");
  const std::uint32_t limit = partial.gmax;
  std::vector<std::uint64_t> counts(partial.counts.size(), 0);
  for (std::size_t s = begin; s < end; ++s) {
    std::uint64_t sum = 0;
    std::uint32_t j = 0;
    for (; j < jmax; ++j) {
      sum += cycle.gaps[(s + j) % n];
      if (sum > limit) break;
      ++counts[(sum / 2 - 1) * jmax + j];
    }
    if (j == jmax && sum + cycle.gaps[(s + jmax) % n] <= limit) partial.truncated = true;
  }
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] != 0) partial.counts[i] = BigInt(static_cast<unsigned long>(counts[i]));
  }
  return partial;
}

DrivingTermCensus census_driving_terms(std::uint32_t p, std::uint32_t gmax, std::uint32_t jmax,
                                       const EnumerateOptions& opts) {
  CensusAccumulator acc(gmax, jmax);
  enumerate_gap_cycle(p, [&](std::span<const Gap> chunk) { acc.consume(chunk); }, opts);
  return acc.finish(p);
}

DrivingTermCensus merge(const DrivingTermCensus& a, const DrivingTermCensus& b) {
  if (a.stage_prime != b.stage_prime || a.gmax != b.gmax || a.jmax != b.jmax) {
    throw DomainError("merge: censuses differ in shape");
  }
  DrivingTermCensus out = a;
  out.truncated = a.truncated || b.truncated;
  for (std::size_t i = 0; i < out.counts.size(); ++i) out.counts[i] += b.counts[i];
  return out;
}

// ---------------------------------------------------------------------------
// Persistence

namespace {

template <class Count, class Render>
void write_any(std::ostream& os, const BasicCensus<Count>& c, Render render) {
  os << "CENSUS v1 p=" << c.stage_prime << " gmax=" << c.gmax << " jmax=" << c.jmax
     << " truncated=" << (c.truncated ? 1 : 0) << '\n';
  for (std::uint32_t g = 2; g <= c.gmax; g += 2) {
    for (std::uint32_t j = 1; j <= c.jmax; ++j) {
      const Count& v = c.at(g, j);
      if (v != 0) os << g << ' ' << j << ' ' << render(v) << '\n';
    }
  }
}

std::uint64_t parse_field(const std::string& token, const std::string& key) {
  const std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0) throw FormatError("census header: expected " + prefix + "..., got '" + token + "'");
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(token.substr(prefix.size()), &used);
    if (used != token.size() - prefix.size()) throw FormatError("census header: trailing junk in '" + token + "'");
    return v;
  } catch (const std::logic_error&) {
    throw FormatError("census header: bad number in '" + token + "'");
  }
}

template <class Count, class Parse>
BasicCensus<Count> read_any(std::istream& is, Parse parse) {
  std::string line;
  if (!std::getline(is, line)) throw FormatError("census: empty input");
  if (line.rfind("PROPAGATED", 0) == 0 && !std::getline(is, line)) throw FormatError("census: missing header");
  std::istringstream header(line);
  std::string magic, version, tp, tg, tj, tt, extra;
  header >> magic >> version >> tp >> tg >> tj >> tt;
  if (magic != "CENSUS" || version != "v1" || tt.empty() || (header >> extra)) {
    throw FormatError("census: bad header '" + line + "'");
  }
  const auto p = parse_field(tp, "p");
  const auto gmax = parse_field(tg, "gmax");
  const auto jmax = parse_field(tj, "jmax");
  const auto truncated = parse_field(tt, "truncated");
  if (truncated > 1 || gmax < 2 || jmax < 1 || gmax > (1u << 20) || jmax > (1u << 20)) {
    throw FormatError("census: header values out of range '" + line + "'");
  }
  BasicCensus<Count> c(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(gmax),
                       static_cast<std::uint32_t>(jmax));
  c.truncated = truncated == 1;
  std::uint64_t prev_g = 0, prev_j = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::uint64_t g = 0, j = 0;
    std::string value;
    if (!(row >> g >> j >> value) || (row >> extra)) throw FormatError("census: bad row '" + line + "'");
    if (!c.tracks(g, j)) throw FormatError("census: row outside gmax/jmax '" + line + "'");
    if (g < prev_g || (g == prev_g && j <= prev_j)) throw FormatError("census: rows out of order at '" + line + "'");
    prev_g = g;
    prev_j = j;
    c.at(g, j) = parse(value, line);
  }
  return c;
}

}  // namespace

void write_census(std::ostream& os, const DrivingTermCensus& census) {
  write_any(os, census, [](const BigInt& v) { return v.get_str(); });
}

void write_census(std::ostream& os, const RatioCensus& census) {
  write_any(os, census, [](double v) { return format_double(v); });
}

DrivingTermCensus read_census(std::istream& is) {
  return read_any<BigInt>(is, [](const std::string& s, const std::string& line) {
    BigInt v;
    if (s.empty() || s[0] == '-' || v.set_str(s, 10) != 0) throw FormatError("census: bad count in '" + line + "'");
    return v;
  });
}

RatioCensus read_ratio_census(std::istream& is) {
  return read_any<double>(is, [](const std::string& s, const std::string& line) {
    std::istringstream in(s);
    in.imbue(std::locale::classic());
    double v = 0;
    if (!(in >> v) || v < 0) throw FormatError("census: bad value in '" + line + "'");
    return v;
  });
}

}  // namespace gapsieve::cycle
