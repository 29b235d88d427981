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

#include <benchmark/benchmark.h>

#include <vector>

#include "faddeeva/faddeeva.hpp"
#include "faddeeva/grid.hpp"
#include "faddeeva/oracle.hpp"
#include "faddeeva/reference.hpp"

namespace {

using namespace faddeeva;

// A fixed point for each branch at N = 11.
const ComplexValue kBranchPoint[] = {{1.0, 7.0}, {3.0, 0.1}, {3.2, 0.1}};

void BM_Quadrant1Branch(benchmark::State& state) {
  const EvalParams p(11);
  const ComplexValue z = kBranchPoint[state.range(0)];
  state.SetLabel(std::string(to_string(select_branch(z, p))));
  for (auto _ : state) benchmark::DoNotOptimize(w_quadrant1(z, p));
}
BENCHMARK(BM_Quadrant1Branch)->DenseRange(0, 2);

std::vector<ComplexValue> sample_points(std::size_t stride) {
  std::vector<ComplexValue> pts;
  bench::Grid(bench::GridSpec::cartesian_default(), stride).for_each([&](ComplexValue z) { pts.push_back(z); });
  return pts;
}

template <class F>
void run_over(benchmark::State& state, const std::vector<ComplexValue>& pts, F f) {
  for (auto _ : state) {
    for (const ComplexValue z : pts) benchmark::DoNotOptimize(f(z));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * pts.size()));
}

void BM_TrapOrder(benchmark::State& state) {
  static const auto pts = sample_points(4001);
  const EvalParams p(static_cast<int>(state.range(0)));
  run_over(state, pts, [&](ComplexValue z) { return w_quadrant1(z, p); });
}
BENCHMARK(BM_TrapOrder)->Arg(5)->Arg(11)->Arg(20);

void BM_Oracle(benchmark::State& state) {
  static const auto pts = sample_points(40001);
  run_over(state, pts, [](ComplexValue z) { return xprec::w_oracle(z); });
}
BENCHMARK(BM_Oracle);

void BM_Weideman40(benchmark::State& state) {
  static const auto pts = sample_points(4001);
  static const auto model = reference::weideman_fit_coeffs(40);
  run_over(state, pts, [](ComplexValue z) { return reference::weideman_eval(z, model); });
}
BENCHMARK(BM_Weideman40);

void BM_ContinuedFraction9(benchmark::State& state) {
  static const auto pts = sample_points(4001);
  run_over(state, pts, [](ComplexValue z) { return reference::cf_convergent(z + 8.0, 9); });
}
BENCHMARK(BM_ContinuedFraction9);

void BM_Zaghloul38(benchmark::State& state) {
  static const auto pts = sample_points(4001);
  run_over(state, pts, [](ComplexValue z) { return reference::zaghloul_eval(z, {}); });
}
BENCHMARK(BM_Zaghloul38);

}  // namespace

BENCHMARK_MAIN();
