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

#include "gapsieve/residue.hpp"

#include <cstdio>
#include <numeric>
#include <string>

namespace gapsieve::residue {

Rational w_infinity(std::uint64_t g) {
  if (g == 0 || g % 2 != 0) throw DomainError("w_infinity: gap must be even and positive, got " + std::to_string(g));
  Rational r = 1;
  for (std::uint64_t q : prime_factors(g)) {
    if (q > 2) r *= Rational(BigInt(static_cast<unsigned long>(q - 1)), BigInt(static_cast<unsigned long>(q - 2)));
  }
  r.canonicalize();
  return r;
}

bool ResidueScheme::is_gap_class(unsigned h) const { return base % 2 != 0 || h % 2 == 0; }

std::size_t ResidueScheme::pair_count(unsigned h) const {
  auto it = classes.find(h);
  return it == classes.end() ? 0 : it->second.size();
}

ResidueScheme digit_pair_classes(unsigned base) {
  if (base < 3) throw DomainError("residue scheme needs base >= 3, got " + std::to_string(base));
  ResidueScheme s;
  s.base = base;
  for (unsigned d = 1; d < base; ++d) {
    if (std::gcd(d, base) == 1) s.digits.push_back(d);
  }
  for (unsigned a : s.digits) {
    for (unsigned b : s.digits) s.classes[s.class_of_pair(a, b)].emplace_back(a, b);
  }
  return s;
}

std::vector<std::uint64_t> class_gaps(unsigned base, unsigned h, std::size_t n) {
  if (base < 3) throw DomainError("class_gaps: base must be >= 3");
  if (h >= base) throw DomainError("class_gaps: class " + std::to_string(h) + " out of range for base " + std::to_string(base));
  if (base % 2 == 0 && h % 2 != 0) {
    throw DomainError("class " + std::to_string(h) + " holds no gaps in even base " + std::to_string(base));
  }
  // Even g == h (mod base): for even bases the step is base, for odd bases 2*base.
  const std::uint64_t step = base % 2 == 0 ? base : 2ull * base;
  std::uint64_t first = h;
  while (first == 0 || first % 2 != 0) first += base;
  std::vector<std::uint64_t> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(first + i * step);
  return out;
}

Rational class_mean_asymptotic(unsigned base, unsigned h, std::size_t n) {
  if (n == 0) throw DomainError("class_mean_asymptotic: need at least one gap");
  Rational sum = 0;
  for (std::uint64_t g : class_gaps(base, h, n)) sum += w_infinity(g);
  Rational mean = sum / Rational(static_cast<unsigned long>(n));
  mean.canonicalize();
  return mean;
}

std::map<std::uint64_t, double> asymptotic_values(std::uint64_t gmax) {
  std::map<std::uint64_t, double> out;
  for (std::uint64_t g = 2; g <= gmax; g += 2) out[g] = w_infinity(g).get_d();
  return out;
}

namespace {

std::string pair_list(const std::vector<DigitPair>& pairs) {
  std::string s;
  for (const auto& [a, b] : pairs) {
    if (!s.empty()) s += ' ';
    s += '(' + std::to_string(a) + ',' + std::to_string(b) + ')';
  }
  return s;
}

}  // namespace

std::vector<unsigned> display_order(const ClassAggregate<double>& agg) {
  std::vector<unsigned> order{agg.normalizing_class};
  for (const auto& [h, _] : agg.ratios) {
    if (h != agg.normalizing_class && h != 0) order.push_back(h);
  }
  if (agg.normalizing_class != 0 && agg.ratios.count(0)) order.push_back(0);
  return order;
}

void write_class_table(std::ostream& os, const ResidueScheme& scheme, const ClassAggregate<double>* current,
                       const ClassAggregate<double>& infinity) {
  char line[512];
  std::snprintf(line, sizeof line, "%4s  %5s  %-12s  %-12s  %s\n", "h", "pairs", "W_current", "W_infinity",
                "(a,b)");
  os << line;
  for (unsigned h : display_order(infinity)) {
    const std::string cur = current ? format_double(current->ratios.at(h), 6) : "-";
    std::snprintf(line, sizeof line, "%4u  %5zu  %-12s  %-12.6f  %s\n", h, scheme.pair_count(h), cur.c_str(),
                  infinity.ratios.at(h), pair_list(scheme.classes.count(h) ? scheme.classes.at(h)
                                                                           : std::vector<DigitPair>{})
                                             .c_str());
    os << line;
  }
}

void write_class_csv(std::ostream& os, const ResidueScheme& scheme, const ClassAggregate<double>* current,
                     const ClassAggregate<double>& infinity) {
  os << "base,h,pairs,W_current,W_infinity\n";
  for (unsigned h : display_order(infinity)) {
    os << scheme.base << ',' << h << ',' << scheme.pair_count(h) << ','
       << (current ? format_double(current->ratios.at(h)) : std::string()) << ','
       << format_double(infinity.ratios.at(h)) << '\n';
  }
}

}  // namespace gapsieve::residue
