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

#include "faddeeva/bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "faddeeva/errors.hpp"
#include "faddeeva/faddeeva.hpp"

namespace faddeeva::bounds {
namespace {

using std::numbers::e;
using std::numbers::pi;
using std::numbers::sqrt2;

void require_order(int n) {
  if (n < 0) throw ParameterError("bound order N must be non-negative, got " + std::to_string(n));
}

// exp(-pi)^n by repeated multiplication so consecutive orders differ by
// exactly one rounded factor exp(-pi).
double decay(int n) {
  const double q = std::exp(-pi);
  double v = 1.0;
  for (int i = 0; i < n; ++i) v *= q;
  return v;
}

}  // namespace

BoundConstants constants() {
  const double sqrt_pi = std::sqrt(pi);
  const double e_pi = std::exp(pi);
  BoundConstants c;
  c.c_a = 2.0 * (2.0 * e + sqrt_pi) / std::sqrt(e * pi);
  c.c_r = 2.0 * std::sqrt(2.0 * pi) * (1.0 + sqrt_pi) * (2.0 * e + sqrt_pi) / std::sqrt(e);
  c.c_star = 1.0 / (1.0 - std::exp(-2.0 * pi + std::sqrt(2.0 * pi)));
  c.big_c1 = 2.0 * (2.0 * e + sqrt_pi) * c.c_star / (e_pi * std::sqrt(e * pi)) +
             10.0 * sqrt2 * (1.0 + 2.0 * pi) / (e_pi * pi * pi);
  c.big_c2 = 2.0 * sqrt2 * (1.0 + sqrt_pi) * (2.0 * e + sqrt_pi) * c.c_star / (e_pi * std::sqrt(e)) +
             10.0 * (1.0 + 2.0 * pi) * (2.0 * pi + sqrt2) / (e_pi * pi * pi);
  return c;
}

double abs_bound(int n) {
  require_order(n);
  return constants().big_c1 * decay(n);
}

double rel_bound(int n) {
  require_order(n);
  return constants().big_c2 * std::sqrt(static_cast<double>(n + 1)) * decay(n);
}

ComponentBounds component_bounds(int n) {
  require_order(n);
  const double h = step_size(n);
  const double tau = pi / h;  // tau_{N+1}
  const double a = pi * pi / (h * h);
  ComponentBounds b;
  b.trap = constants().c_a * std::exp(-a) / (1.0 - std::exp(-2.0 * a + sqrt2 * pi / h));
  b.trunc = 2.0 * sqrt2 * (1.0 + 2.0 * h * tau) * (h + 4.0 * tau) / (pi * h * tau * tau) *
            std::exp(-tau * tau);
  return b;
}

double hunter_regan_bound(std::complex<double> z, double h) {
  if (!(h > 0.0)) throw ParameterError("hunter_regan_bound: h must be positive");
  const double x = z.real();
  const double y = z.imag();
  if (!(x > 0.0)) throw DomainError("hunter_regan_bound: requires Re z > 0");
  const double a = pi * pi / (h * h);
  const double gap = std::fabs(x * x - a);
  if (gap == 0.0 || x == pi / h) throw ArithmeticError("hunter_regan_bound: singular at Re z = pi/h");
  const double z_gauss = std::abs(z) * std::exp((y - x) * (y + x));
  return 2.0 * z_gauss * std::exp(-a) / (std::sqrt(pi) * (1.0 - std::exp(-2.0 * a)) * gap);
}

}  // namespace faddeeva::bounds
