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

#include "faddeeva/grid.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "faddeeva/errors.hpp"

namespace faddeeva::bench {
namespace {

std::size_t axis_count(double lo, double hi, double step, const char* what) {
  if (!(step > 0.0) || !std::isfinite(step)) throw ParameterError(std::string(what) + ": step must be positive");
  if (!(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw ParameterError(std::string(what) + ": range must be finite and non-decreasing");
  }
  return static_cast<std::size_t>(std::llround((hi - lo) / step)) + 1;
}

}  // namespace

GridSpec GridSpec::polar_default() { return GridSpec{}; }

GridSpec GridSpec::cartesian_default() {
  GridSpec s;
  s.kind = GridKind::kCartesian;
  return s;
}

std::string GridSpec::digest() const {
  char buf[160];
  if (kind == GridKind::kPolar) {
    std::snprintf(buf, sizeof buf, "polar:p=%.17g:%.17g:%.17g:theta=%d", p_min, p_step, p_max, theta_count);
  } else {
    std::snprintf(buf, sizeof buf, "cartesian:%.17g:%.17g:%.17g", x_min, step, x_max);
  }
  return buf;
}

Grid::Grid(GridSpec spec, std::size_t stride) : spec_(spec), stride_(stride) {
  if (stride_ == 0) throw ParameterError("grid stride must be >= 1");
  if (spec_.kind == GridKind::kPolar) {
    outer_ = axis_count(spec_.p_min, spec_.p_max, spec_.p_step, "polar grid");
    if (spec_.theta_count < 2) throw ParameterError("polar grid: theta_count must be >= 2");
    inner_ = static_cast<std::size_t>(spec_.theta_count);
  } else {
    outer_ = axis_count(spec_.x_min, spec_.x_max, spec_.step, "cartesian grid");
    inner_ = outer_;
  }
  full_size_ = outer_ * inner_;
}

ComplexValue Grid::operator[](std::size_t i) const {
  const std::size_t k = i * stride_;
  const std::size_t outer = k / inner_;
  const std::size_t inner = k % inner_;
  if (spec_.kind == GridKind::kPolar) {
    const double p = spec_.p_min + static_cast<double>(outer) * spec_.p_step;
    const double theta = static_cast<double>(inner) * (std::numbers::pi / 2.0) /
                         static_cast<double>(spec_.theta_count - 1);
    const double r = std::pow(10.0, p);
    return {r * std::cos(theta), r * std::sin(theta)};
  }
  return {spec_.x_min + static_cast<double>(outer) * spec_.step,
          spec_.x_min + static_cast<double>(inner) * spec_.step};
}

Grid gen_polar_grid(const GridSpec& spec, std::size_t stride) {
  if (spec.kind != GridKind::kPolar) throw ParameterError("gen_polar_grid: spec is not polar");
  return Grid(spec, stride);
}

Grid gen_cart_grid(const GridSpec& spec, std::size_t stride) {
  if (spec.kind != GridKind::kCartesian) throw ParameterError("gen_cart_grid: spec is not cartesian");
  return Grid(spec, stride);
}

}  // namespace faddeeva::bench
