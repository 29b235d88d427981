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

#include "faddeeva/timing.hpp"

#include <chrono>
#include <cmath>
#include <vector>

#include "faddeeva/errors.hpp"

namespace faddeeva::bench {

TimingRecord timing_run(const MethodSpec& spec, const Grid& grid, int reps) {
  if (reps < 3) throw ParameterError("timing_run: reps must be >= 3");
  const Method method(spec);
  std::vector<ComplexValue> points;
  points.reserve(grid.size());
  grid.for_each([&](ComplexValue z) {
    if (method.rated(z)) points.push_back(z);
  });
  if (points.empty()) throw ParameterError("timing_run: " + spec.label() + " has no rated point on the grid");

  volatile double sink = 0.0;
  auto pass = [&] {
    double acc = 0.0;
    for (const ComplexValue z : points) acc += method(z).real();
    sink = sink + acc;
  };

  pass();  // warm-up
  std::vector<double> seconds(reps);
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    pass();
    const auto t1 = std::chrono::steady_clock::now();
    seconds[r] = std::chrono::duration<double>(t1 - t0).count();
  }

  double mean = 0.0;
  for (const double s : seconds) mean += s;
  mean /= reps;
  double ss = 0.0;
  for (const double s : seconds) ss += (s - mean) * (s - mean);

  TimingRecord rec;
  rec.method = spec.label();
  rec.mean_seconds = mean;
  rec.sd_seconds = std::sqrt(ss / (reps - 1));
  rec.reps = reps;
  rec.points = points.size();
  rec.grid = grid.spec().digest();
  return rec;
}

}  // namespace faddeeva::bench
