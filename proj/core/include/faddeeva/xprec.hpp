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

#include <cmath>
#include <complex>
#include <limits>

#include "faddeeva/errors.hpp"

namespace faddeeva::xprec {

/// Error-free transformations. These require round-to-nearest binary64 and
/// no floating-point contraction of the surrounding expressions.
inline double two_sum(double a, double b, double& err) {
  const double s = a + b;
  const double bb = s - a;
  err = (a - (s - bb)) + (b - bb);
  return s;
}

/// Requires |a| >= |b| (or a == 0).
inline double quick_two_sum(double a, double b, double& err) {
  const double s = a + b;
  err = b - (s - a);
  return s;
}

inline double two_prod(double a, double b, double& err) {
  const double p = a * b;
  err = std::fma(a, b, -p);
  return p;
}

/// Double-double real: the unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
///
/// Arithmetic follows the accurate (IEEE-style) variants of the classic
/// algorithms, giving roughly 106 significant bits. Non-finite intermediate
/// results collapse to (hi, 0) so that overflow propagates as infinity
/// instead of turning into NaN through the error terms.
struct XReal {
  double hi = 0.0;
  double lo = 0.0;

  constexpr XReal() = default;
  constexpr XReal(double x) : hi(x), lo(0.0) {}  // NOLINT(google-explicit-constructor)
  constexpr XReal(double h, double l) : hi(h), lo(l) {}

  /// Builds a normalized pair from two arbitrary doubles.
  static XReal from_sum(double a, double b) {
    double e;
    const double s = two_sum(a, b, e);
    return {s, e};
  }

  explicit operator double() const { return hi + lo; }
  [[nodiscard]] double to_double() const { return hi + lo; }

  [[nodiscard]] bool is_finite() const { return std::isfinite(hi) && std::isfinite(lo); }
  [[nodiscard]] bool is_normalized() const;

  XReal operator-() const { return {-hi, -lo}; }

  XReal& operator+=(const XReal& b);
  XReal& operator-=(const XReal& b) { return *this += -b; }
  XReal& operator*=(const XReal& b);
  XReal& operator/=(const XReal& b);
};

inline XReal operator+(const XReal& a, const XReal& b) {
  double s2, t2;
  double s1 = two_sum(a.hi, b.hi, s2);
  if (!std::isfinite(s1)) return {s1, 0.0};
  const double t1 = two_sum(a.lo, b.lo, t2);
  s2 += t1;
  s1 = quick_two_sum(s1, s2, s2);
  s2 += t2;
  s1 = quick_two_sum(s1, s2, s2);
  return {s1, s2};
}

inline XReal operator+(const XReal& a, double b) {
  double s2;
  double s1 = two_sum(a.hi, b, s2);
  if (!std::isfinite(s1)) return {s1, 0.0};
  s2 += a.lo;
  s1 = quick_two_sum(s1, s2, s2);
  return {s1, s2};
}

inline XReal operator+(double a, const XReal& b) { return b + a; }
inline XReal operator-(const XReal& a, const XReal& b) { return a + (-b); }
inline XReal operator-(const XReal& a, double b) { return a + (-b); }
inline XReal operator-(double a, const XReal& b) { return (-b) + a; }

inline XReal operator*(const XReal& a, const XReal& b) {
  double p2;
  double p1 = two_prod(a.hi, b.hi, p2);
  if (!std::isfinite(p1)) return {p1, 0.0};
  p2 += a.hi * b.lo + a.lo * b.hi;
  p1 = quick_two_sum(p1, p2, p2);
  return {p1, p2};
}

inline XReal operator*(const XReal& a, double b) {
  double p2;
  double p1 = two_prod(a.hi, b, p2);
  if (!std::isfinite(p1)) return {p1, 0.0};
  p2 += a.lo * b;
  p1 = quick_two_sum(p1, p2, p2);
  return {p1, p2};
}

inline XReal operator*(double a, const XReal& b) { return b * a; }

/// Exact product of two doubles as a double-double.
inline XReal mul_exact(double a, double b) {
  double e;
  const double p = two_prod(a, b, e);
  return {p, e};
}

/// Throws ArithmeticError on a zero divisor.
XReal operator/(const XReal& a, const XReal& b);
inline XReal operator/(const XReal& a, double b) { return a / XReal(b); }
inline XReal operator/(double a, const XReal& b) { return XReal(a) / b; }

inline XReal& XReal::operator+=(const XReal& b) { return *this = *this + b; }
inline XReal& XReal::operator*=(const XReal& b) { return *this = *this * b; }
inline XReal& XReal::operator/=(const XReal& b) { return *this = *this / b; }

inline XReal sqr(const XReal& a) { return a * a; }

inline bool operator==(const XReal& a, const XReal& b) { return a.hi == b.hi && a.lo == b.lo; }
inline bool operator<(const XReal& a, const XReal& b) {
  return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(const XReal& a, const XReal& b) { return b < a; }
inline bool operator<=(const XReal& a, const XReal& b) { return !(b < a); }
inline bool operator>=(const XReal& a, const XReal& b) { return !(a < b); }

inline XReal abs(const XReal& a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }
inline XReal ldexp(const XReal& a, int e) { return {std::ldexp(a.hi, e), std::ldexp(a.lo, e)}; }
XReal floor(const XReal& a);

XReal sqrt(const XReal& a);

/// exp with |relative error| below 2^-100 on [-708, 709]; overflows to +inf
/// above ~709.78 and underflows to 0 below ~-745.
XReal exp(const XReal& a);

/// Trigonometric functions with argument reduction modulo pi/2 carried in a
/// three-word representation of pi/2.
XReal sin(const XReal& a);
XReal cos(const XReal& a);
void sincos(const XReal& a, XReal& s, XReal& c);

namespace constants {
inline constexpr XReal pi{3.14159265358979312e+00, 1.22464679914735321e-16};
inline constexpr XReal two_pi{6.28318530717958623e+00, 2.44929359829470641e-16};
inline constexpr XReal pi_2{1.57079632679489656e+00, 6.12323399573676604e-17};
inline constexpr XReal ln2{6.93147180559945286e-01, 2.31904681384629956e-17};
inline constexpr XReal e{2.71828182845904509e+00, 1.44564689172925016e-16};
inline constexpr XReal sqrt_pi{1.77245385090551610e+00, -7.66658649982579870e-17};
inline constexpr XReal inv_sqrt_pi{5.64189583547756279e-01, 7.66772980658294061e-18};
}  // namespace constants

/// Double-double complex number.
struct XComplex {
  XReal re;
  XReal im;

  constexpr XComplex() = default;
  constexpr XComplex(XReal r, XReal i = XReal()) : re(r), im(i) {}  // NOLINT
  XComplex(std::complex<double> z) : re(z.real()), im(z.imag()) {}  // NOLINT

  [[nodiscard]] std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
  [[nodiscard]] bool is_finite() const { return re.is_finite() && im.is_finite(); }

  XComplex operator-() const { return {-re, -im}; }
};

inline XComplex operator+(const XComplex& a, const XComplex& b) { return {a.re + b.re, a.im + b.im}; }
inline XComplex operator-(const XComplex& a, const XComplex& b) { return {a.re - b.re, a.im - b.im}; }
inline XComplex operator*(const XComplex& a, const XComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline XComplex operator*(const XComplex& a, const XReal& b) { return {a.re * b, a.im * b}; }
inline XComplex operator*(const XReal& a, const XComplex& b) { return b * a; }
inline XComplex operator/(const XComplex& a, const XReal& b) { return {a.re / b, a.im / b}; }
XComplex operator/(const XComplex& a, const XComplex& b);

inline XComplex conj(const XComplex& a) { return {a.re, -a.im}; }
inline XReal norm(const XComplex& a) { return a.re * a.re + a.im * a.im; }
XReal abs(const XComplex& a);

/// exp(re) * (cos(im) + i sin(im)). If exp(re) overflows the components are
/// signed infinities.
XComplex exp_c(const XComplex& z);

}  // namespace faddeeva::xprec
