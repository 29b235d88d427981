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

namespace faddeeva::bounds {

/// Closed-form constants of the a-priori error bounds.
struct BoundConstants {
  double c_a = 0.0;     // trapezoid-error constant, ~4.934
  double c_r = 0.0;     // relative trapezoid-error constant, ~60.77
  double c_star = 0.0;  // (1 - exp(-2 pi + sqrt(2 pi)))^{-1}, ~1.0234
  double big_c1 = 0.0;  // absolute bound constant, ~0.6692
  double big_c2 = 0.0;  // relative bound constant, ~3.971
};

BoundConstants constants();

/// C1 exp(-pi N): bound on |w - w_N| over the whole plane.
double abs_bound(int n);

/// C2 sqrt(N+1) exp(-pi N): bound on |w - w_N| / |w| for Im z >= 0.
double rel_bound(int n);

/// The two contributions assembled into abs_bound: the error of the
/// infinite modified rule and the truncation tail c(h, N, 0).
struct ComponentBounds {
  double trap = 0.0;
  double trunc = 0.0;
};

ComponentBounds component_bounds(int n);

/// Older pointwise bound for the untruncated modified trapezoidal rule.
/// Blows up as Re z -> pi/h; throws ArithmeticError at Re z == pi/h and
/// DomainError for Re z <= 0. Kept for comparison plots only.
double hunter_regan_bound(std::complex<double> z, double h);

}  // namespace faddeeva::bounds
