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

#include "gapsieve/compare.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>

#include "gapsieve/reference.hpp"
#include "gapsieve/residue.hpp"

namespace gapsieve::compare {
namespace {

std::string pair_label(unsigned a, unsigned b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string percent(double v) { return fixed(v * 100.0, 1) + "%"; }

Rational parse_rational(std::string_view text) {
  Rational r{std::string(text)};
  r.canonicalize();
  return r;
}

}  // namespace

bool ComparisonReport::pass() const { return failures() == 0; }

std::size_t ComparisonReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const ComparisonRow& r) { return r.asserted && !r.pass; }));
}

void ComparisonReport::add_exact(const std::string& label, const BigInt& expected, const BigInt& computed,
                                 bool asserted) {
  ComparisonRow r;
  r.label = label;
  r.expected = expected.get_str();
  r.computed = computed.get_str();
  const BigInt d = abs(BigInt(computed - expected));
  r.abs_dev = d.get_d();
  r.rel_dev = expected == 0 ? (d == 0 ? 0.0 : INFINITY) : r.abs_dev / std::fabs(expected.get_d());
  r.tolerance = "exact";
  r.pass = d == 0;
  r.asserted = asserted;
  rows.push_back(std::move(r));
}

void ComparisonReport::add_exact(const std::string& label, const Rational& expected, const Rational& computed,
                                 bool asserted) {
  ComparisonRow r;
  r.label = label;
  r.expected = expected.get_str();
  r.computed = computed.get_str();
  const Rational d = abs(Rational(computed - expected));
  r.abs_dev = d.get_d();
  r.rel_dev = expected == 0 ? (d == 0 ? 0.0 : INFINITY) : r.abs_dev / std::fabs(expected.get_d());
  r.tolerance = "exact";
  r.pass = d == 0;
  r.asserted = asserted;
  rows.push_back(std::move(r));
}

void ComparisonReport::add_abs(const std::string& label, double expected, double computed, double tol,
                               bool asserted) {
  ComparisonRow r;
  r.label = label;
  r.expected = format_double(expected, 7);
  r.computed = format_double(computed, 7);
  r.abs_dev = std::fabs(computed - expected);
  r.rel_dev = expected == 0 ? (r.abs_dev == 0 ? 0.0 : INFINITY) : r.abs_dev / std::fabs(expected);
  r.tolerance = "abs " + format_double(tol, 3);
  r.pass = r.abs_dev <= tol;
  r.asserted = asserted;
  rows.push_back(std::move(r));
}

void ComparisonReport::add_rel(const std::string& label, double expected, double computed, double tol,
                               bool asserted) {
  ComparisonRow r;
  r.label = label;
  r.expected = format_double(expected, 7);
  r.computed = format_double(computed, 7);
  r.abs_dev = std::fabs(computed - expected);
  r.rel_dev = expected == 0 ? (r.abs_dev == 0 ? 0.0 : INFINITY) : r.abs_dev / std::fabs(expected);
  r.tolerance = "rel " + percent(tol);
  r.pass = r.rel_dev <= tol;
  r.asserted = asserted;
  rows.push_back(std::move(r));
}

void ComparisonReport::add_check(const std::string& label, const std::string& expected, const std::string& computed,
                                 bool pass, const std::string& tolerance, bool asserted) {
  ComparisonRow r;
  r.label = label;
  r.expected = expected;
  r.computed = computed;
  r.abs_dev = NAN;
  r.rel_dev = NAN;
  r.tolerance = tolerance;
  r.pass = pass;
  r.asserted = asserted;
  rows.push_back(std::move(r));
}

void write_report(std::ostream& os, const ComparisonReport& report) {
  std::size_t wl = 5, we = 8, wc = 8;
  for (const auto& r : report.rows) {
    wl = std::max(wl, r.label.size());
    we = std::max(we, r.expected.size());
    wc = std::max(wc, r.computed.size());
  }
  char buf[1024];
  os << "table " << report.table << '\n';
  std::snprintf(buf, sizeof buf, "%-*s  %*s  %*s  %11s  %9s  %-12s  %s\n", static_cast<int>(wl), "label",
                static_cast<int>(we), "expected", static_cast<int>(wc), "computed", "abs_dev", "rel_dev",
                "tolerance", "status");
  os << buf;
  for (const auto& r : report.rows) {
    const std::string ad = std::isnan(r.abs_dev) ? "-" : format_double(r.abs_dev, 4);
    const std::string rd = std::isnan(r.rel_dev) ? "-" : format_double(r.rel_dev, 3);
    const char* status = r.pass ? "pass" : (r.asserted ? "FAIL" : "deviates (reported)");
    std::snprintf(buf, sizeof buf, "%-*s  %*s  %*s  %11s  %9s  %-12s  %s\n", static_cast<int>(wl),
                  r.label.c_str(), static_cast<int>(we), r.expected.c_str(), static_cast<int>(wc),
                  r.computed.c_str(), ad.c_str(), rd.c_str(), r.tolerance.c_str(), status);
    os << buf;
  }
  os << "overall: " << (report.pass() ? "PASS" : "FAIL") << " (" << report.failures() << " failing of "
     << std::count_if(report.rows.begin(), report.rows.end(), [](const ComparisonRow& r) { return r.asserted; })
     << " asserted rows)\n";
}

bool carried_exactly(std::uint64_t g, std::uint64_t census_prime) {
  if (g >= 2 * next_prime(census_prime)) return false;
  for (std::uint64_t q : prime_factors(g)) {
    if (q > census_prime) return false;
  }
  return true;
}

ComparisonReport last_digit_pairs(const primesieve::PairCensus& census) {
  ComparisonReport rep;
  rep.table = "t1";
  for (const auto& row : reference::last_digit_pairs()) {
    rep.add_exact(pair_label(row.a, row.b), BigInt(static_cast<unsigned long>(row.count)),
                  BigInt(static_cast<unsigned long>(census.count(row.a, row.b))));
  }
  return rep;
}

ComparisonReport observed_ratios(const primesieve::PairCensus& census) {
  ComparisonReport rep;
  rep.table = "os-ratios";
  const auto totals = primesieve::observed_class_totals(census);
  const auto ratios = primesieve::observed_class_ratios(census);
  for (const auto& row : reference::observed_classes()) {
    const std::string h = std::to_string(row.h);
    rep.add_exact("total h=" + h, BigInt(static_cast<unsigned long>(row.total)),
                  BigInt(static_cast<unsigned long>(totals.at(row.h))));
  }
  for (const auto& row : reference::observed_classes()) {
    rep.add_abs("W_" + std::to_string(row.h), row.ratio, ratios.ratios.at(row.h), kRatioTolerance);
  }
  return rep;
}

ComparisonReport populations(const cycle::DrivingTermCensus& at_37, std::uint64_t census_prime) {
  if (at_37.stage_prime != reference::kPopulationStage) {
    throw DomainError("populations: counts must be at stage 37, got " + std::to_string(at_37.stage_prime));
  }
  ComparisonReport rep;
  rep.table = "t2";
  const BigInt twins = at_37.get(2, 1);
  for (const auto& row : reference::populations_37()) {
    const bool exact = carried_exactly(row.g, census_prime);
    const std::string g = std::to_string(row.g);
    for (std::size_t j = 1; j <= 4; ++j) {
      rep.add_exact("n(" + g + "," + std::to_string(j) + ")", BigInt(std::string(row.counts[j - 1])),
                    at_37.get(row.g, j), exact);
    }
    const double w = twins == 0 ? 0.0 : Rational(at_37.get(row.g, 1), twins).get_d();
    rep.add_abs("w(" + g + ")", row.w_current, w, kRatioTolerance, exact);
    rep.add_exact("w_inf(" + g + ")", parse_rational(row.w_infinity), residue::w_infinity(row.g));
  }
  return rep;
}

ComparisonReport class_means() {
  ComparisonReport rep;
  rep.table = "t3";
  std::map<unsigned, std::size_t> seen;
  for (const auto& row : reference::class_means_base10()) {
    const std::string h = std::to_string(row.h);
    if (row.g == 0) {
      rep.add_abs("mu_" + h + " (no gap)", row.mean, 0.0, kMeanTolerance);
      continue;
    }
    const std::size_t n = ++seen[row.h];
    rep.add_exact("w_inf(" + std::to_string(row.g) + ")", parse_rational(row.w_infinity), residue::w_infinity(row.g));
    rep.add_abs("mu_" + h + " to g=" + std::to_string(row.g), row.mean,
                residue::class_mean_asymptotic(10, row.h, n).get_d(), kMeanTolerance);
  }
  const auto inf = residue::class_ratios(residue::asymptotic_values(reference::kSampleGmax), 10);
  for (const auto& row : reference::class_ratios(10)) {
    rep.add_abs("W_" + std::to_string(row.h) + "(inf)", row.w_infinity, inf.ratios.at(row.h), kAsymptoticTolerance);
  }
  return rep;
}

ComparisonReport class_table(unsigned base, const curves::CurveModel* model) {
  ComparisonReport rep;
  rep.table = base == 30 ? "t4" : "base" + std::to_string(base);
  const auto inf = residue::class_ratios(residue::asymptotic_values(reference::kSampleGmax), base);
  std::optional<residue::ClassAggregate<double>> current;
  if (model) {
    if (model->options().base != base) throw DomainError("class_table: model base does not match");
    current = model->class_ratios(model->lambda_at(reference::kModelTarget));
  }
  for (const auto& row : reference::class_ratios(base)) {
    const std::string h = std::to_string(row.h);
    rep.add_abs("W_" + h + "(inf)", row.w_infinity, inf.ratios.at(row.h), kAsymptoticTolerance);
    if (current && row.w_1993 >= 0) rep.add_rel("W_" + h + "(1993#)", row.w_1993, current->ratios.at(row.h), kModelTolerance);
  }
  return rep;
}

}  // namespace gapsieve::compare
