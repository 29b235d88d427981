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

// Competitor methods for w(z) used in the accuracy and timing comparisons:
// the Laplace continued fraction, Weideman's rational approximation and the
// Zaghloul-Ali sums.

#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "faddeeva/xprec.hpp"

namespace faddeeva::reference {

using ComplexValue = std::complex<double>;

/// n-th convergent (i/sqrt(pi)) / (z - (1/2) / (z - (2/2) / (z - ... ((n-1)/2) / z)))
/// by backward recurrence. Accurate for large |z| in the upper half-plane.
ComplexValue cf_convergent(ComplexValue z, int n);

struct WeidemanModel {
  int n = 0;
  double l = 0.0;                    // 2^{-1/4} sqrt(n)
  std::vector<double> coeffs;        // a_1 ... a_n
  double max_imag_residue = 0.0;     // largest |Im| dropped from the fitted coefficients
  double fit_residual = 0.0;         // max |model - oracle| at the sample points
};

using Oracle = std::function<xprec::XComplex(ComplexValue)>;

/// Fits a_1..a_n by a discrete Fourier transform of
///   Z -> (L - iz)^2 (w(z) - 1/(sqrt(pi)(L - iz))) / 2,  Z = (L + iz)/(L - iz),
/// sampled at 2n equispaced points of the unit circle (z real). n >= 8.
/// Throws ArithmeticError if the residual at the samples exceeds 1e-14.
WeidemanModel weideman_fit_coeffs(int n, const Oracle& oracle);
WeidemanModel weideman_fit_coeffs(int n);  // uses xprec::w_oracle

/// Rational approximation, Im z >= 0 (DomainError otherwise).
ComplexValue weideman_eval(ComplexValue z, const WeidemanModel& m);

struct ZaghloulParams {
  double a = 0.5;
  int terms = 38;
};

struct ZaghloulSums {
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;
  double s4 = 0.0;
  double s5 = 0.0;
};

ZaghloulSums zaghloul_sums(double x, double y, const ZaghloulParams& p);

/// u(x, y) + i v(x, y) for x, y >= 0. The truncated sums resolve the
/// Gaussian around a k = x only while a K - x >= 9, so the rated domain is
/// Re z <= a K - 9.
ComplexValue zaghloul_eval(ComplexValue z, const ZaghloulParams& p);

/// Largest Re z for which the truncated sums are rated.
inline double zaghloul_max_re(const ZaghloulParams& p) { return p.a * p.terms - 9.0; }

}  // namespace faddeeva::reference
