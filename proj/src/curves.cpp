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

#include "gapsieve/curves.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "gapsieve/arith.hpp"
#include "gapsieve/error.hpp"

namespace gapsieve::curves {
namespace {

double parse_number(const std::string& text, const std::string& spec) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) throw DomainError("lambda grid: bad number '" + text + "' in " + spec);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::uint64_t g : v) {
    if (!s.empty()) s += ' ';
    s += std::to_string(g);
  }
  return s.empty() ? "none" : s;
}

}  // namespace

CurveModel::CurveModel(const cycle::DrivingTermCensus& census, const CurveOptions& opts)
    : opts_(opts), census_prime_(census.stage_prime), gmax_(census.gmax) {
  if (opts.model_prime < census.stage_prime || !is_prime(opts.model_prime)) {
    throw DomainError("curves: model prime " + std::to_string(opts.model_prime) +
                      " must be a prime no smaller than the census stage " + std::to_string(census.stage_prime));
  }
  if (census.truncated) throw DomainError("curves: census is truncated; raise jmax");
  residue::digit_pair_classes(opts.base);

  cycle::DrivingTermCensus start;
  double skipped_lambda = 1.0;
  std::vector<std::uint64_t> dropped;
  if (opts.model_prime > census.stage_prime) {
    auto carried = dynamics::propagate_range(census, opts.model_prime);
    start = std::move(carried.exact);
    dropped = std::move(carried.dropped_gaps);
    skipped_lambda = dynamics::lambda_exact(census.stage_prime, opts.model_prime).value;
  }

  for (std::uint32_t g = 2; g <= census.gmax; g += 2) {
    if (census.longest_term(g) == 0) continue;
    const bool from_census = opts.model_prime == census.stage_prime ||
                             std::binary_search(dropped.begin(), dropped.end(), g);
    const auto& src = from_census ? census : start;
    const dynamics::RatioVector w = dynamics::ratios_of(src, g);
    GapModel m;
    m.gap = g;
    m.length = w.entries.size();
    m.lambda_scale = from_census ? skipped_lambda : 1.0;
    m.correction = opts.correction ? dynamics::large_factor_correction(g, census.stage_prime).get_d() : 1.0;
    m.poly = dynamics::poly_model(w, std::min(opts.degree, m.length - 1));
    gaps_.push_back(std::move(m));
  }
}

std::vector<std::uint64_t> CurveModel::clamped() const {
  std::vector<std::uint64_t> out;
  for (const auto& m : gaps_) {
    if (m.poly.degree < opts_.degree) out.push_back(m.gap);
  }
  return out;
}

std::vector<std::uint64_t> CurveModel::carried_from_census() const {
  std::vector<std::uint64_t> out;
  for (const auto& m : gaps_) {
    if (m.lambda_scale != 1.0) out.push_back(m.gap);
  }
  return out;
}

std::map<std::uint64_t, double> CurveModel::values(double lambda) const {
  std::map<std::uint64_t, double> out;
  for (const auto& m : gaps_) out[m.gap] = dynamics::poly_eval(m.poly, lambda * m.lambda_scale) * m.correction;
  return out;
}

residue::ClassAggregate<double> CurveModel::class_ratios(double lambda) const {
  return residue::class_ratios(values(lambda), opts_.base);
}

double CurveModel::lambda_at(std::uint64_t p) const {
  dynamics::LambdaOptions lo;
  lo.ceiling = opts_.lambda_ceiling;
  lo.exact_ceiling = 0;
  return dynamics::lambda_exact(opts_.model_prime, p, lo).value;
}

std::vector<double> parse_lambda_grid(const std::string& spec) {
  std::vector<double> grid;
  if (spec.rfind("lin:", 0) == 0 || spec.rfind("log:", 0) == 0) {
    const auto parts = split(spec, ':');
    if (parts.size() != 4) throw DomainError("lambda grid: expected " + parts[0] + ":a:b:n, got " + spec);
    const double a = parse_number(parts[1], spec);
    const double b = parse_number(parts[2], spec);
    const double nd = parse_number(parts[3], spec);
    if (nd < 1 || nd != std::floor(nd)) throw DomainError("lambda grid: point count must be a positive integer");
    const auto n = static_cast<std::size_t>(nd);
    const bool log_scale = parts[0] == "log";
    if (log_scale && (a <= 0 || b <= 0)) throw DomainError("lambda grid: log spacing needs positive ends");
    for (std::size_t i = 0; i < n; ++i) {
      const double t = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
      grid.push_back(log_scale ? std::exp(std::log(a) + t * (std::log(b) - std::log(a))) : a + t * (b - a));
    }
  } else {
    for (const auto& item : split(spec, ',')) grid.push_back(parse_number(item, spec));
  }
  if (grid.empty()) throw DomainError("lambda grid: no points in " + spec);
  for (double v : grid) {
    if (!(v > 0 && v <= 1)) throw DomainError("lambda grid: " + format_double(v) + " is outside (0, 1]");
  }
  return grid;
}

void write_curves_csv(std::ostream& os, const CurveModel& model, const std::vector<double>& grid) {
  const auto& o = model.options();
  os << "# base=" << o.base << " gmax=" << model.gmax() << " degree=" << o.degree
     << " census=" << model.census_prime() << " model_prime=" << o.model_prime
     << " correction=" << (o.correction ? "on" : "off") << '\n';
  os << "# degree clamped to J-1 for g: " << join(model.clamped()) << '\n';
  os << "# initial conditions from census stage for g: " << join(model.carried_from_census()) << '\n';

  const auto first = model.class_ratios(grid.front());
  const auto order = residue::display_order(first);
  os << "lambda,p_low,p_high";
  for (unsigned h : order) os << ",W_" << h;
  os << '\n';
  for (double lambda : grid) {
    const auto agg = model.class_ratios(lambda);
    os << format_double(lambda) << ',';
    try {
      const auto iv = dynamics::lambda_invert(lambda, o.model_prime);
      os << format_pow10(iv.log10_low, 6) << ',' << format_pow10(iv.log10_high, 6);
    } catch (const DomainError&) {
      os << ',';
    }
    for (unsigned h : order) os << ',' << format_double(agg.ratios.at(h));
    os << '\n';
  }
}

}  // namespace gapsieve::curves
