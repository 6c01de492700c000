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

#include "gapsieve/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "gapsieve/compare.hpp"
#include "gapsieve/curves.hpp"
#include "gapsieve/cycle.hpp"
#include "gapsieve/dynamics.hpp"
#include "gapsieve/primesieve.hpp"
#include "gapsieve/reference.hpp"
#include "gapsieve/residue.hpp"

namespace gapsieve::cli {
namespace {

namespace fs = std::filesystem;

constexpr std::uint32_t kDefaultCensusStage = 19;
constexpr std::uint32_t kLargeCensusStage = 23;

struct CensusSource {
  std::string file;
  bool large = false;  // G(23#) instead of G(19#)
  std::uint32_t gmax = 420;
  std::uint32_t jmax = 0;  // 0: gmax / 2

  void add_options(CLI::App* app, bool with_gmax) {
    app->add_option("--census", file, "census file (CENSUS v1); built when omitted");
    app->add_flag("--large-census", large, "build initial conditions from G(23#) instead of G(19#)");
    if (with_gmax) app->add_option("--gmax", gmax, "largest gap sampled")->check(CLI::Range(2u, 100000u));
    app->add_option("--jmax", jmax, "longest driving term tracked (default gmax/2)");
  }
};

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw CapacityError("cannot write " + path);
  return f;
}

cycle::DrivingTermCensus load_census_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw FormatError("cannot read census file " + path);
  return cycle::read_census(f);
}

// The census named on the command line, else a cached or freshly built one.
cycle::DrivingTermCensus obtain_census(const CensusSource& src, std::ostream& err) {
  if (!src.file.empty()) return load_census_file(src.file);
  const std::uint32_t stage = src.large ? kLargeCensusStage : kDefaultCensusStage;
  const std::uint32_t jmax = src.jmax ? src.jmax : std::max<std::uint32_t>(1, src.gmax / 2);
  std::optional<fs::path> cached;
  if (const char* dir = std::getenv(kCacheDirEnv); dir && *dir) {
    cached = fs::path(dir) / ("census-p" + std::to_string(stage) + "-g" + std::to_string(src.gmax) + "-j" +
                              std::to_string(jmax) + ".txt");
    if (fs::exists(*cached)) return load_census_file(cached->string());
  }
  auto census = cycle::census_driving_terms(stage, src.gmax, jmax);
  if (cached) {
    fs::create_directories(cached->parent_path());
    const fs::path tmp = cached->string() + ".tmp";
    {
      auto f = open_out(tmp.string());
      cycle::write_census(f, census);
    }
    fs::rename(tmp, *cached);
    err << "cached census at " << cached->string() << '\n';
  }
  return census;
}

void write_lines_or_file(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& fn) {
  if (path.empty() || path == "-") {
    fn(out);
  } else {
    auto f = open_out(path);
    fn(f);
  }
}

std::string join_gaps(const std::vector<std::uint64_t>& gaps) {
  std::string s;
  for (auto g : gaps) s += (s.empty() ? "" : " ") + std::to_string(g);
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"gapsieve: gap populations across stages of Eratosthenes sieve", "gapsieve"};
  app.require_subcommand(1);
  app.fallthrough(false);

  // cycle
  auto* cycle_cmd = app.add_subcommand("cycle", "cycles of gaps G(p#)");
  cycle_cmd->require_subcommand(1);
  std::uint32_t cyc_p = 0;
  auto* enumerate = cycle_cmd->add_subcommand("enumerate", "print G(p#) starting from generator 1");
  enumerate->add_option("--p", cyc_p, "stage prime")->required();
  bool enum_fused = false;
  enumerate->add_flag("--fused", enum_fused, "build by fusion instead of sieving (p <= 19)");

  auto* census_cmd = cycle_cmd->add_subcommand("census", "count gaps and driving terms of G(p#)");
  std::uint32_t cen_gmax = 420, cen_jmax = 0;
  std::string cen_out;
  census_cmd->add_option("--p", cyc_p, "stage prime")->required();
  census_cmd->add_option("--gmax", cen_gmax, "largest gap counted");
  census_cmd->add_option("--jmax", cen_jmax, "longest driving term counted (default gmax/2)");
  census_cmd->add_option("--out", cen_out, "output file (stdout when omitted)");

  // dynamics
  auto* dyn = app.add_subcommand("dynamics", "propagation and the decay parameter");
  dyn->require_subcommand(1);
  auto* prop = dyn->add_subcommand("propagate", "carry a census to a later stage");
  std::string prop_census, prop_out, prop_mode = "exact";
  std::uint64_t prop_to = 0;
  std::size_t prop_limit = dynamics::kDefaultExactStepLimit;
  prop->add_option("--census", prop_census, "census file")->required();
  prop->add_option("--to", prop_to, "target prime")->required();
  prop->add_option("--mode", prop_mode, "exact or normalized")->check(CLI::IsMember({"exact", "normalized"}));
  prop->add_option("--step-limit", prop_limit, "largest number of exact steps");
  prop->add_option("--out", prop_out, "output file (stdout when omitted)");

  auto* lam = dyn->add_subcommand("lambda", "a_2 over the primes in (p0, pk], bounds and inversion");
  std::uint64_t lam_p0 = 37;
  std::optional<double> lam_pk, lam_inv;
  std::uint64_t lam_ceiling = dynamics::kDefaultLambdaCeiling;
  lam->add_option("--p0", lam_p0, "base prime");
  lam->add_option("--pk", lam_pk, "target stage (may be beyond the sieve ceiling, e.g. 1e15)");
  lam->add_option("--invert", lam_inv, "report prime magnitudes consistent with this lambda");
  lam->add_option("--ceiling", lam_ceiling, "largest stage computed by sieving");

  // residue
  auto* res = app.add_subcommand("residue", "residue classes of gaps and digit pairs");
  res->require_subcommand(1);
  auto* table = res->add_subcommand("table", "class ratios W_h for a base");
  unsigned res_base = 10;
  std::optional<std::uint64_t> res_at;
  bool res_inf = false, res_csv = false, res_corr = false;
  std::size_t res_degree = curves::kDefaultDegree;
  std::uint64_t res_model = curves::kDefaultModelPrime;
  CensusSource res_src;
  table->add_option("--base", res_base, "base B >= 3")->required();
  res_src.add_options(table, true);
  auto* at_opt = table->add_option("--at-prime", res_at, "also evaluate the model at this stage");
  table->add_flag("--infinity", res_inf, "asymptotic ratios only (default)")->excludes(at_opt);
  table->add_option("--degree", res_degree, "model degree");
  table->add_option("--model-prime", res_model, "stage lambda is measured from");
  table->add_flag("--correction", res_corr, "scale gaps with odd factors above the census stage");
  table->add_flag("--csv", res_csv, "CSV instead of aligned text");

  // sieve
  auto* sieve = app.add_subcommand("sieve", "consecutive primes");
  sieve->require_subcommand(1);
  auto* pairs = sieve->add_subcommand("pairs", "last-digit pair counts of consecutive primes");
  std::uint64_t pairs_n = 0;
  unsigned pairs_base = 10;
  std::string pairs_window = "after-base", pairs_out;
  pairs->add_option("--n", pairs_n, "number of pairs (after-base) or primes (first)")->required();
  pairs->add_option("--base", pairs_base, "base B >= 3");
  pairs->add_option("--window", pairs_window, "after-base: n pairs from the first prime above B; first: first n primes")
      ->check(CLI::IsMember({"after-base", "first"}));
  pairs->add_option("--out", pairs_out, "CSV output file (stdout when omitted)");

  // curves
  auto* curves_cmd = app.add_subcommand("curves", "W_h against lambda from the polynomial model");
  curves::CurveOptions copts;
  CensusSource cur_src;
  std::string grid_spec, cur_out;
  curves_cmd->add_option("--base", copts.base, "base B >= 3");
  cur_src.add_options(curves_cmd, true);
  curves_cmd->add_option("--degree", copts.degree, "model degree (clamped per gap to J-1)");
  curves_cmd->add_option("--lambda-grid", grid_spec, "v1,v2,... | lin:a:b:n | log:a:b:n")->required();
  curves_cmd->add_option("--model-prime", copts.model_prime, "stage lambda is measured from");
  curves_cmd->add_flag("--correction", copts.correction, "scale gaps with odd factors above the census stage");
  curves_cmd->add_option("--out", cur_out, "CSV output file (stdout when omitted)");

  // compare
  auto* cmp = app.add_subcommand("compare", "compare against a published table");
  std::string cmp_table;
  CensusSource cmp_src;
  cmp->add_option("--table", cmp_table, "table to regenerate")
      ->required()
      ->check(CLI::IsMember({"t1", "t2", "t3", "t4", "base3", "base8", "os-ratios"}));
  cmp_src.add_options(cmp, false);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*enumerate) {
      bool first = true;
      auto emit = [&](std::span<const cycle::Gap> chunk) {
        for (auto g : chunk) {
          out << (first ? "" : " ") << g;
          first = false;
        }
      };
      if (enum_fused) {
        const auto c = cycle::fuse_chain(cyc_p);
        emit(c.gaps);
      } else {
        cycle::enumerate_gap_cycle(cyc_p, emit);
      }
      out << '\n';
      return kOk;
    }
    if (*census_cmd) {
      const auto c = cycle::census_driving_terms(cyc_p, cen_gmax, cen_jmax ? cen_jmax : std::max(1u, cen_gmax / 2));
      if (c.truncated) err << "warning: driving terms longer than jmax were not counted\n";
      write_lines_or_file(cen_out, out, [&](std::ostream& os) { cycle::write_census(os, c); });
      return kOk;
    }
    if (*prop) {
      const auto census = load_census_file(prop_census);
      dynamics::PropagationOptions po;
      po.mode = prop_mode == "exact" ? dynamics::Mode::exact : dynamics::Mode::normalized;
      po.exact_step_limit = prop_limit;
      const auto r = dynamics::propagate_range(census, prop_to, po);
      if (!r.dropped_gaps.empty()) {
        err << "dropped (driving terms too long for the first step): " << join_gaps(r.dropped_gaps) << '\n';
      }
      write_lines_or_file(prop_out, out, [&](std::ostream& os) { dynamics::write_propagation(os, r); });
      return kOk;
    }
    if (*lam) {
      if (!lam_pk && !lam_inv) throw DomainError("dynamics lambda: give --pk, --invert or both");
      if (lam_pk) {
        const double pk = *lam_pk;
        if (pk <= static_cast<double>(lam_ceiling) && pk == std::floor(pk)) {
          dynamics::LambdaOptions lo;
          lo.ceiling = lam_ceiling;
          const auto path = dynamics::lambda_exact(lam_p0, static_cast<std::uint64_t>(pk), lo);
          out << "lambda " << format_double(path.value) << " factors " << path.factors << '\n';
          if (path.exact) {
            const std::string s = path.exact->get_str();
            out << "lambda_exact " << (s.size() <= 200 ? s : "(" + std::to_string(s.size()) + " chars)") << '\n';
          }
        } else {
          out << "lambda - (beyond the sieve ceiling " << lam_ceiling << ")\n";
        }
        const auto b = dynamics::lambda_bounds(lam_p0, pk);
        out << "bounds " << format_double(b.lower) << ' ' << format_double(b.upper) << " (" << b.note << ")\n";
        out << "c0 " << b.c0.get_str() << " = " << format_double(b.c0.get_d()) << '\n';
      }
      if (lam_inv) {
        const auto iv = dynamics::lambda_invert(*lam_inv, lam_p0);
        out << "p_low " << format_pow10(iv.log10_low) << " p_high " << format_pow10(iv.log10_high) << '\n';
        out << "log10 " << format_double(iv.log10_low, 8) << ' ' << format_double(iv.log10_high, 8) << '\n';
      }
      return kOk;
    }
    if (*table) {
      const auto scheme = residue::digit_pair_classes(res_base);
      const auto inf = residue::class_ratios(residue::asymptotic_values(res_src.gmax), res_base);
      std::optional<residue::ClassAggregate<double>> cur;
      if (res_at) {
        curves::CurveOptions co;
        co.base = res_base;
        co.degree = res_degree;
        co.model_prime = res_model;
        co.correction = res_corr;
        const auto census = obtain_census(res_src, err);
        if (census.gmax != res_src.gmax) throw DomainError("census gmax does not match --gmax");
        curves::CurveModel model(census, co);
        cur = model.class_ratios(model.lambda_at(*res_at));
      }
      if (res_csv) {
        residue::write_class_csv(out, scheme, cur ? &*cur : nullptr, inf);
      } else {
        residue::write_class_table(out, scheme, cur ? &*cur : nullptr, inf);
      }
      return kOk;
    }
    if (*pairs) {
      const auto window = pairs_window == "first" ? primesieve::PairWindow::first_primes
                                                  : primesieve::PairWindow::after_base;
      const auto pc = primesieve::pair_census(pairs_n, pairs_base, window);
      write_lines_or_file(pairs_out, out, [&](std::ostream& os) { primesieve::write_pair_census_csv(os, pc); });
      return kOk;
    }
    if (*curves_cmd) {
      const auto grid = curves::parse_lambda_grid(grid_spec);
      const auto census = obtain_census(cur_src, err);
      if (census.gmax != cur_src.gmax) throw DomainError("census gmax does not match --gmax");
      curves::CurveModel model(census, copts);
      write_lines_or_file(cur_out, out, [&](std::ostream& os) { curves::write_curves_csv(os, model, grid); });
      return kOk;
    }
    if (*cmp) {
      compare::ComparisonReport rep;
      if (cmp_table == "t1" || cmp_table == "os-ratios") {
        const auto pc = primesieve::pair_census(reference::kPairSample, 10, primesieve::PairWindow::after_base);
        rep = cmp_table == "t1" ? compare::last_digit_pairs(pc) : compare::observed_ratios(pc);
      } else if (cmp_table == "t2") {
        cmp_src.gmax = 66;
        const auto census = obtain_census(cmp_src, err);
        const auto r = dynamics::propagate_range(census, reference::kPopulationStage);
        rep = compare::populations(r.exact, census.stage_prime);
      } else if (cmp_table == "t3") {
        rep = compare::class_means();
      } else {
        const unsigned base = cmp_table == "t4" ? 30 : cmp_table == "base3" ? 3 : 8;
        cmp_src.gmax = reference::kSampleGmax;
        const auto census = obtain_census(cmp_src, err);
        curves::CurveOptions co;
        co.base = base;
        co.correction = true;
        curves::CurveModel model(census, co);
        rep = compare::class_table(base, &model);
      }
      compare::write_report(out, rep);
      return rep.pass() ? kOk : kCompareFailed;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  err << app.help();
  return kUsage;
}

}  // namespace gapsieve::cli
