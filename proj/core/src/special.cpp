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

#include <limits>
#include <numbers>

#include "faddeeva/faddeeva.hpp"

namespace faddeeva {
namespace {

void require_finite(ComplexValue z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(what) + ": argument must have finite components");
  }
}

// e^{-z^2} * v, going through logarithms when e^{-z^2} alone would overflow.
ComplexValue scale_by_gaussian(ComplexValue z, ComplexValue v) {
  const double x = z.real();
  const double y = z.imag();
  const double log_mag = (y - x) * (y + x);
  if (log_mag <= 709.0) {
    const auto e = detail::exp_minus_square(x, y);
    return ComplexValue(e.re, e.im) * v;
  }
  if (v == 0.0) return {};
  const double log_total = log_mag + std::log(std::abs(v));
  const double phase = -2.0 * x * y + std::arg(v);
  if (log_total > 709.78) {
    const double inf = std::numeric_limits<double>::infinity();
    return {std::copysign(inf, std::cos(phase)), std::copysign(inf, std::sin(phase))};
  }
  return std::polar(std::exp(log_total), phase);
}

}  // namespace

ComplexValue erfc_c(ComplexValue z, const EvalParams& p) {
  require_finite(z, "erfc_c");
  if (z.real() < 0.0) return 2.0 - erfc_c(-z, p);
  const ComplexValue iz{-z.imag(), z.real()};
  return scale_by_gaussian(z, w_plane(iz, p));
}

ComplexValue erf_c(ComplexValue z, const EvalParams& p) { return 1.0 - erfc_c(z, p); }

ComplexValue erfcx_c(ComplexValue z, const EvalParams& p) {
  require_finite(z, "erfcx_c");
  return w_plane({-z.imag(), z.real()}, p);
}

double dawson_real(double x, const EvalParams& p) {
  if (!std::isfinite(x)) throw DomainError("dawson_real: argument must be finite");
  const double d = 0.5 * std::sqrt(std::numbers::pi) * w_quadrant1({std::fabs(x), 0.0}, p).imag();
  return std::signbit(x) ? -d : d;
}

std::pair<double, double> voigt_kl(double x, double y, const EvalParams& p) {
  if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("voigt_kl: arguments must be finite");
  if (!(y > 0.0)) throw ParameterError("voigt_kl: requires y > 0");
  const ComplexValue w = w_plane({x, y}, p);
  return {w.real(), w.imag()};
}

}  // namespace faddeeva
