// Copyright 2026 The faddeeva-trap Authors
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

// Command-line front end: single evaluations, error sweeps, the accuracy
// table, timings and the bound constants.

#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "faddeeva/bounds.hpp"
#include "faddeeva/faddeeva.hpp"
#include "faddeeva/methods.hpp"
#include "faddeeva/oracle.hpp"
#include "faddeeva/report.hpp"
#include "faddeeva/sweep.hpp"
#include "faddeeva/timing.hpp"

namespace {

using namespace faddeeva;
using namespace faddeeva::bench;

constexpr int kExitIo = 1;
constexpr int kExitParameter = 2;
constexpr int kExitThreshold = 3;

constexpr double kFloorBinary64 = 4e-15;
constexpr double kFloorXprec = 1e-26;

GridSpec grid_spec(const std::string& name) {
  if (name == "polar") return GridSpec::polar_default();
  if (name == "cartesian") return GridSpec::cartesian_default();
  throw ParameterError("unknown grid '" + name + "' (polar, cartesian)");
}

int run_eval(double re, double im, int n, const std::string& method_name) {
  const ComplexValue z{re, im};
  if (method_name == "trap") {
    const EvalParams p(n);
    const ComplexValue w = w_plane(z, p);
    const ComplexValue zq{std::fabs(re), std::fabs(im)};
    std::printf("w(%.17g%+.17gi) = %.17g%+.17gi\n", re, im, w.real(), w.imag());
    std::printf("method trap(%d), branch %s, abs bound %.3e", n,
                std::string(to_string(select_branch(zq, p))).c_str(), bounds::abs_bound(n));
    if (im >= 0.0) std::printf(", rel bound %.3e", bounds::rel_bound(n));
    std::printf("\n");
    return 0;
  }
  const MethodSpec spec = MethodSpec::parse(method_name);
  const Method m(spec);
  if (!m.rated(z)) std::printf("warning: %.17g%+.17gi is outside the rated domain of %s\n", re, im, m.label().c_str());
  const ComplexValue w = m(z);
  const ComplexValue ref = xprec::w_oracle(z).to_complex();
  std::printf("w(%.17g%+.17gi) = %.17g%+.17gi\n", re, im, w.real(), w.imag());
  std::printf("method %s, |w - oracle| %.3e\n", m.label().c_str(), std::abs(w - ref));
  return 0;
}

int run_sweep(int n_min, int n_max, const std::string& grid_name, const std::string& precision_name,
              std::size_t stride, unsigned threads, const std::string& out, bool check) {
  if (n_min > n_max) throw ParameterError("--n-min must not exceed --n-max");
  Precision precision;
  if (precision_name == "d") {
    precision = Precision::kBinary64;
  } else if (precision_name == "x") {
    precision = Precision::kXprec;
  } else {
    throw ParameterError("--precision must be d or x");
  }
  if (stride == 0) stride = precision == Precision::kXprec ? 16 : 1;
  std::vector<int> orders(n_max - n_min + 1);
  std::iota(orders.begin(), orders.end(), n_min);
  const Grid grid(grid_spec(grid_name), stride);

  const SweepReport report = error_sweep(orders, grid, precision, threads);
  emit(std::span<const SweepRecord>(report.records), format_for_path(out), out);
  std::printf("%zu points, %zu excluded (abs), %zu excluded (rel)\n", report.points, report.excluded_abs,
              report.excluded_rel);
  const double floor = precision == Precision::kXprec ? kFloorXprec : kFloorBinary64;
  bool ok = true;
  for (const auto& r : report.records) {
    const bool pass = r.max_abs_err <= r.bound_abs + floor && r.max_rel_err <= r.bound_rel + floor;
    ok = ok && pass;
    std::printf("N=%2d  abs %.3e (bound %.3e)  rel %.3e (bound %.3e)%s\n", r.n, r.max_abs_err, r.bound_abs,
                r.max_rel_err, r.bound_rel, pass ? "" : "  EXCEEDS");
  }
  return check && !ok ? kExitThreshold : 0;
}

// Accuracy thresholds of the comparison table; NaN means not gated.
void thresholds(const MethodSpec& m, double& abs_max, double& rel_max) {
  abs_max = rel_max = std::numeric_limits<double>::quiet_NaN();
  if (m.kind == MethodKind::kTrap && m.order == 11) abs_max = 2.4e-15;
  if (m.kind == MethodKind::kWeideman && m.order == 40) rel_max = 3e-15;
  if (m.kind == MethodKind::kZaghloul && m.order == 38 && m.a == 0.5) rel_max = 5e-13;
}

int run_table(const std::string& methods, const std::string& grid_name, unsigned threads,
              const std::string& out, bool check) {
  const auto specs = MethodSpec::parse_list(methods);
  const Grid grid(grid_spec(grid_name));
  const auto rows = accuracy_table(specs, grid, threads);
  emit(std::span<const AccuracyRow>(rows), format_for_path(out), out);
  bool ok = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double abs_max, rel_max;
    thresholds(specs[i], abs_max, rel_max);
    const bool pass = !(rows[i].max_abs > abs_max) && !(rows[i].max_rel > rel_max);
    ok = ok && pass;
    std::printf("%-18s abs %.3e  rel %.3e  (%zu points)%s\n", rows[i].method.c_str(), rows[i].max_abs,
                rows[i].max_rel, rows[i].points, pass ? "" : "  EXCEEDS");
  }
  return check && !ok ? kExitThreshold : 0;
}

int run_bench(int reps, const std::string& methods, const std::string& grid_name, const std::string& out) {
  const auto specs = MethodSpec::parse_list(methods);
  const Grid grid(grid_spec(grid_name));
  std::vector<TimingRecord> records;
  for (const auto& spec : specs) {
    records.push_back(timing_run(spec, grid, reps));
    const auto& r = records.back();
    std::printf("%-18s %.4f s +- %.4f s  (%d reps, %zu points)\n", r.method.c_str(), r.mean_seconds,
                r.sd_seconds, r.reps, r.points);
    std::fflush(stdout);
  }
  emit(std::span<const TimingRecord>(records), format_for_path(out), out);
  return 0;
}

int run_bounds(int n_max) {
  if (n_max < 0 || n_max > kMaxOrder) throw ParameterError("--n must lie in [0, 25]");
  const auto c = bounds::constants();
  std::printf("c_a = %.10g\nc_r = %.10g\nc*  = %.10g\nC1  = %.10g\nC2  = %.10g\n\n", c.c_a, c.c_r,
              c.c_star, c.big_c1, c.big_c2);
  std::printf(" N   abs_bound   rel_bound   trap_part   trunc_part\n");
  for (int n = 0; n <= n_max; ++n) {
    const auto parts = bounds::component_bounds(n);
    std::printf("%2d  %.4e  %.4e  %.4e  %.4e\n", n, bounds::abs_bound(n), bounds::rel_bound(n), parts.trap,
                parts.trunc);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Faddeeva function by modified trapezoidal and midpoint rules"};
  app.require_subcommand(1);

  double re = 0.0, im = 0.0;
  int n = kDefaultOrder;
  std::string method = "trap";
  auto* eval = app.add_subcommand("eval", "evaluate w at one point");
  eval->add_option("--re", re, "real part")->required();
  eval->add_option("--im", im, "imaginary part")->required();
  eval->add_option("--n", n, "quadrature order for trap")->capture_default_str();
  eval->add_option("--method", method, "trap, weideman[:N], cf[:n] or zaghloul[:a:K]")->capture_default_str();

  int n_min = 0, n_max = 11;
  std::string grid = "polar", precision = "d", out;
  std::size_t stride = 0;
  unsigned threads = 0;
  bool check = false;
  auto* sweep = app.add_subcommand("sweep", "maximum errors of w_N against the oracle");
  sweep->add_option("--n-min", n_min)->required();
  sweep->add_option("--n-max", n_max)->required();
  sweep->add_option("--grid", grid, "polar or cartesian")->capture_default_str();
  sweep->add_option("--precision", precision, "d (binary64) or x (double-double)")->capture_default_str();
  sweep->add_option("--stride", stride, "keep every k-th grid point (default 1 for d, 16 for x)");
  sweep->add_option("--threads", threads, "worker threads (0 = all cores)");
  sweep->add_option("--out", out, "output .csv or .json")->required();
  sweep->add_flag("--check", check, "exit 3 if a bound plus floor is exceeded");

  std::string methods = "trap(11),weideman(40),cf(9),zaghloul(0.5,38)";
  auto* table = app.add_subcommand("table", "accuracy of each method over its rated domain");
  table->add_option("--methods", methods, "comma-separated method list")->capture_default_str();
  table->add_option("--grid", grid, "polar or cartesian")->capture_default_str();
  table->add_option("--threads", threads, "worker threads (0 = all cores)");
  table->add_option("--out", out, "output .csv or .json")->required();
  table->add_flag("--check", check, "exit 3 if a gated row exceeds its threshold");

  int reps = 25;
  std::string bench_grid = "cartesian";
  auto* bench = app.add_subcommand("bench", "single-threaded timing of each method");
  bench->add_option("--reps", reps, "timed repetitions (>= 3)")->capture_default_str();
  bench->add_option("--methods", methods, "comma-separated method list")->capture_default_str();
  bench->add_option("--grid", bench_grid, "polar or cartesian")->capture_default_str();
  bench->add_option("--out", out, "output .csv or .json")->required();

  int bound_n = 20;
  auto* bnd = app.add_subcommand("bounds", "bound constants and curves");
  bnd->add_option("--n", bound_n, "largest N listed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParameter;
  }

  try {
    if (*eval) return run_eval(re, im, n, method);
    if (*sweep) return run_sweep(n_min, n_max, grid, precision, stride, threads, out, check);
    if (*table) return run_table(methods, grid, threads, out, check);
    if (*bench) return run_bench(reps, methods, bench_grid, out);
    if (*bnd) return run_bounds(bound_n);
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParameter;
  }
  return 0;
}
