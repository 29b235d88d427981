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

#pragma once

#include <cstddef>
#include <string>

#include "faddeeva/grid.hpp"
#include "faddeeva/methods.hpp"

namespace faddeeva::bench {

struct TimingRecord {
  std::string method;
  double mean_seconds = 0.0;
  double sd_seconds = 0.0;  // sample standard deviation over reps
  int reps = 0;
  std::size_t points = 0;  // points evaluated per repetition
  std::string grid;        // GridSpec digest
};

/// Wall-clock time of one pass of \p method over the rated points of
/// \p grid, single-threaded, after one discarded warm-up pass. Point
/// generation happens before the clock starts. ParameterError if reps < 3.
TimingRecord timing_run(const MethodSpec& method, const Grid& grid, int reps);

}  // namespace faddeeva::bench
