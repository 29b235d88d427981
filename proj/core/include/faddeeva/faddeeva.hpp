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

/**
 * Faddeeva function w(z) = exp(-z^2) erfc(-iz) by truncated modified
 * trapezoidal and midpoint rules.
 *
 * For quadrature order N the step is h = sqrt(pi / (N + 1)) and three
 * formulas are used in the first quadrant:
 *
 *   M   (midpoint sum)               if y >= max(x, pi/h)
 *   MT  (modified trapezoidal rule)  if y < x and 1/4 <= frac(x/h) <= 3/4
 *   MM  (modified midpoint rule)     otherwise
 *
 * The rest of the plane follows from w(-conj z) = conj w(z) and
 * w(-z) = 2 exp(-z^2) - w(z). The maximum absolute error decays like
 * 0.67 exp(-pi N) everywhere; N = 11 gives about 2e-15 in binary64.
 *
 * All functions are pure and safe to call concurrently.
 */

#pragma once

#include <complex>
#include <string_view>
#include <utility>

#include "faddeeva/detail/kernel.hpp"
#include "faddeeva/errors.hpp"

namespace faddeeva {

using ComplexValue = std::complex<double>;

inline constexpr int kDefaultOrder = 11;
inline constexpr int kMaxOrder = detail::kMaxOrder;

enum class BranchTag { M, MM, MT };

std::string_view to_string(BranchTag tag);

/// Quadrature order N together with the step h = sqrt(pi/(N+1)) and the
/// precomputed nodes and weights. Immutable once constructed.
class EvalParams {
 public:
  /// Throws ParameterError unless 0 <= n <= 25.
  explicit EvalParams(int n = kDefaultOrder);

  [[nodiscard]] int n() const { return nodes_.order; }
  [[nodiscard]] double h() const { return nodes_.h_double; }
  /// t_k = (k + 1/2) h
  [[nodiscard]] double midpoint_node(int k) const { return (k + 0.5) * h(); }
  /// tau_k = k h
  [[nodiscard]] double trapezoid_node(int k) const { return k * h(); }

  [[nodiscard]] const detail::NodeSet<double>& nodes() const { return nodes_; }

 private:
  detail::NodeSet<double> nodes_;
};

/// t - floor(t), in [0, 1). DomainError on non-finite input.
double frac_part(double t);

/// sqrt(pi / (N + 1)). ParameterError unless 0 <= N <= 25.
double step_size(int n);

/// Midpoint-rule sum (2 i h z / pi) sum_{k=0}^{N} e^{-t_k^2} / (z^2 - t_k^2).
/// Throws PoleProximityError if z lies within h/1000 of a node +-t_k.
ComplexValue w_mid_sum(ComplexValue z, const EvalParams& p);

/// Midpoint sum plus the pole correction 2 e^{-z^2} / (1 + e^{-2 i pi z / h}).
/// Requires Re z >= 0 and Im z >= 0.
ComplexValue w_mod_mid(ComplexValue z, const EvalParams& p);

/// Modified trapezoidal rule; requires Re z > 0 and Im z >= 0. Throws
/// PoleProximityError within h/1000 of a node +-tau_k (including 0).
ComplexValue w_mod_trap(ComplexValue z, const EvalParams& p);

/// Which formula the first-quadrant dispatch uses for z.
BranchTag select_branch(ComplexValue z, const EvalParams& p);

/// w_N(z) for Re z >= 0, Im z >= 0.
ComplexValue w_quadrant1(ComplexValue z, const EvalParams& p);

/// w_N(z) on the whole plane. In the lower half-plane the result grows
/// like e^{y^2 - x^2} and overflows to infinities past y^2 - x^2 ~ 709.
ComplexValue w_plane(ComplexValue z, const EvalParams& p);

/// w_plane at the default order N = 11.
inline ComplexValue faddeeva_w(ComplexValue z) {
  static const EvalParams params;
  return w_plane(z, params);
}

// Derived special functions.

/// erfc(z) = e^{-z^2} w(iz); for Re z < 0 via erfc(z) = 2 - erfc(-z).
ComplexValue erfc_c(ComplexValue z, const EvalParams& p);
/// 1 - erfc(z).
ComplexValue erf_c(ComplexValue z, const EvalParams& p);
/// e^{z^2} erfc(z) = w(iz).
ComplexValue erfcx_c(ComplexValue z, const EvalParams& p);
/// Dawson's integral D(x) = (sqrt(pi)/2) Im w(x).
double dawson_real(double x, const EvalParams& p);
/// Voigt functions (K, L) = (Re w(x+iy), Im w(x+iy)), y > 0.
std::pair<double, double> voigt_kl(double x, double y, const EvalParams& p);

}  // namespace faddeeva
