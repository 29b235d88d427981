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
#include <string>

namespace faddeeva::bench {

using ComplexValue = std::complex<double>;

enum class GridKind { kPolar, kCartesian };

/// Test-point layout.
///
/// polar:     z = 10^p e^{i theta}, p = p_min (p_step) p_max, theta_count
///            angles equally spaced on [0, pi/2] (inclusive).
/// cartesian: z = x + i y, x and y = x_min (step) x_max.
struct GridSpec {
  GridKind kind = GridKind::kPolar;
  double p_min = -6.0;
  double p_max = 6.0;
  double p_step = 0.006;
  int theta_count = 801;
  double x_min = 0.0;
  double x_max = 10.0;
  double step = 0.0025;

  /// 2001 x 801 = 1,602,801 points.
  static GridSpec polar_default();
  /// 4001^2 = 16,008,001 points.
  static GridSpec cartesian_default();

  [[nodiscard]] std::string digest() const;
};

/// Deterministic, random-access view of a grid: point i is computed on
/// demand, in row-major order (p or x outer). A stride > 1 keeps every
/// stride-th point of the full stream.
class Grid {
 public:
  /// Throws ParameterError for non-positive steps, reversed ranges or
  /// fewer than two angles.
  explicit Grid(GridSpec spec, std::size_t stride = 1);

  [[nodiscard]] std::size_t size() const { return (full_size_ + stride_ - 1) / stride_; }
  [[nodiscard]] std::size_t full_size() const { return full_size_; }
  [[nodiscard]] std::size_t stride() const { return stride_; }
  [[nodiscard]] const GridSpec& spec() const { return spec_; }

  [[nodiscard]] ComplexValue operator[](std::size_t i) const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < size(); ++i) f((*this)[i]);
  }

 private:
  GridSpec spec_;
  std::size_t stride_ = 1;
  std::size_t outer_ = 0;
  std::size_t inner_ = 0;
  std::size_t full_size_ = 0;
};

/// Throw ParameterError if spec.kind does not match.
Grid gen_polar_grid(const GridSpec& spec, std::size_t stride = 1);
Grid gen_cart_grid(const GridSpec& spec, std::size_t stride = 1);

}  // namespace faddeeva::bench
