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

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "faddeeva/grid.hpp"
#include "faddeeva/methods.hpp"

namespace faddeeva::bench {

enum class Precision { kBinary64, kXprec };

struct SweepRecord {
  int n = 0;
  double max_abs_err = 0.0;
  double max_rel_err = 0.0;
  double bound_abs = 0.0;
  double bound_rel = 0.0;
  ComplexValue argmax_abs;
  ComplexValue argmax_rel;
};

struct SweepReport {
  std::vector<SweepRecord> records;
  std::size_t points = 0;
  std::size_t excluded_abs = 0;  // non-finite oracle values
  std::size_t excluded_rel = 0;  // Im z < 0, or oracle modulus zero/subnormal
};

/// Max over the grid of |w_N(z) - w_oracle(z)| and of the relative error
/// for each N. Ties go to the first point in stream order, so the result
/// does not depend on \p threads (0 = hardware concurrency).
/// ParameterError for an empty list or N >= 12 in binary64.
SweepReport error_sweep(std::span<const int> n_values, const Grid& grid, Precision precision,
                        unsigned threads = 0);

struct AccuracyRow {
  std::string method;
  double max_abs = 0.0;
  double max_rel = 0.0;
  std::size_t points = 0;  // rated points evaluated
  ComplexValue argmax_abs;
  ComplexValue argmax_rel;
};

/// One row per method over its rated part of the grid.
/// ParameterError if a method has no rated point.
std::vector<AccuracyRow> accuracy_table(std::span<const MethodSpec> methods, const Grid& grid,
                                        unsigned threads = 0);

/// Splits [0, size) into fixed chunks handed out to worker threads;
/// \p body(chunk_index, begin, end). Chunk boundaries do not depend on the
/// thread count.
inline constexpr std::size_t kChunkSize = 4096;
std::size_t chunk_count(std::size_t size);
void parallel_chunks(std::size_t size, unsigned threads,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

}  // namespace faddeeva::bench
