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

#include "faddeeva/xprec.hpp"

#include <array>
#include <cstdint>

namespace faddeeva::xprec {
namespace {

// Third words complete 159-bit representations of ln 2 and pi/2.
constexpr double kLn2Lo2 = 5.70770843841621207e-34;
constexpr double kPi2Lo2 = -1.49738490485916983e-33;

constexpr int kExpScale = 10;    // r -> r / 2^10 before the Taylor series
constexpr int kExpTerms = 11;    // r^11/11! < 1e-45 for |r| <= ln2/2^11
constexpr int kTrigTerms = 30;   // (pi/4)^31/31! < 1e-37

const std::array<XReal, 32>& inverse_factorials() {
  static const std::array<XReal, 32> table = [] {
    std::array<XReal, 32> t{};
    t[0] = XReal(1.0);
    for (std::size_t n = 1; n < t.size(); ++n) t[n] = t[n - 1] / static_cast<double>(n);
    return t;
  }();
  return table;
}

// |r| <= pi/4 (plus rounding slack).
void sincos_reduced(const XReal& r, XReal& s, XReal& c) {
  const auto& f = inverse_factorials();
  const XReal r2 = r * r;
  XReal sin_acc(0.0);
  XReal cos_acc(0.0);
  for (int n = kTrigTerms - 1; n >= 1; n -= 2) {
    const XReal coeff = ((n - 1) / 2) % 2 == 0 ? f[n] : -f[n];
    sin_acc = sin_acc * r2 + coeff;
  }
  for (int n = kTrigTerms - 2; n >= 0; n -= 2) {
    const XReal coeff = (n / 2) % 2 == 0 ? f[n] : -f[n];
    cos_acc = cos_acc * r2 + coeff;
  }
  s = sin_acc * r;
  c = cos_acc;
}

}  // namespace

bool XReal::is_normalized() const {
  if (!std::isfinite(hi)) return lo == 0.0;
  return hi + lo == hi;
}

XReal operator/(const XReal& a, const XReal& b) {
  if (b.hi == 0.0) throw ArithmeticError("double-double division by zero");
  if (!std::isfinite(b.hi) || !std::isfinite(a.hi)) return {a.hi / b.hi, 0.0};
  double q1 = a.hi / b.hi;
  XReal r = a - b * q1;
  const double q2 = r.hi / b.hi;
  r = r - b * q2;
  const double q3 = r.hi / b.hi;
  double e;
  q1 = quick_two_sum(q1, q2, e);
  return XReal(q1, e) + q3;
}

XReal floor(const XReal& a) {
  const double f = std::floor(a.hi);
  if (f != a.hi) return {f, 0.0};
  double e;
  const double s = quick_two_sum(f, std::floor(a.lo), e);
  return {s, e};
}

XReal sqrt(const XReal& a) {
  if (a.hi == 0.0) return {};
  if (a.hi < 0.0) throw DomainError("double-double sqrt of a negative number");
  if (!std::isfinite(a.hi)) return {a.hi, 0.0};
  const double x = 1.0 / std::sqrt(a.hi);
  const double ax = a.hi * x;
  return XReal(ax) + (a - mul_exact(ax, ax)).hi * (x * 0.5);
}

XReal exp(const XReal& a) {
  if (std::isnan(a.hi)) return {a.hi, 0.0};
  if (a.hi > 709.79) return {std::numeric_limits<double>::infinity(), 0.0};
  if (a.hi < -745.2) return {};
  if (a.hi == 0.0 && a.lo == 0.0) return XReal(1.0);

  const double k = std::nearbyint(a.hi / constants::ln2.hi);
  XReal r = a - mul_exact(k, constants::ln2.hi);
  r = r - mul_exact(k, constants::ln2.lo);
  r = r - k * kLn2Lo2;
  r = ldexp(r, -kExpScale);

  // expm1 by Taylor, then undo the scaling with (1+p)^2 - 1 = p (2 + p).
  const auto& f = inverse_factorials();
  XReal p = f[kExpTerms];
  for (int n = kExpTerms - 1; n >= 1; --n) p = p * r + f[n];
  p = p * r;
  for (int i = 0; i < kExpScale; ++i) p = p * (p + 2.0);

  const XReal one_plus = p + 1.0;
  return ldexp(one_plus, static_cast<int>(k));
}

void sincos(const XReal& a, XReal& s, XReal& c) {
  if (!a.is_finite()) {
    s = c = XReal(std::numeric_limits<double>::quiet_NaN());
    return;
  }
  const double k = std::nearbyint(a.hi / constants::pi_2.hi);
  XReal r = a - mul_exact(k, constants::pi_2.hi);
  r = r - mul_exact(k, constants::pi_2.lo);
  r = r - k * kPi2Lo2;

  XReal sr, cr;
  sincos_reduced(r, sr, cr);
  const auto quadrant = static_cast<std::int64_t>(std::fmod(k, 4.0) + 4.0) % 4;
  switch (quadrant) {
    case 0: s = sr; c = cr; break;
    case 1: s = cr; c = -sr; break;
    case 2: s = -sr; c = -cr; break;
    default: s = -cr; c = sr; break;
  }
}

XReal sin(const XReal& a) {
  XReal s, c;
  sincos(a, s, c);
  return s;
}

XReal cos(const XReal& a) {
  XReal s, c;
  sincos(a, s, c);
  return c;
}

XComplex operator/(const XComplex& a, const XComplex& b) {
  const double m = std::max(std::fabs(b.re.hi), std::fabs(b.im.hi));
  if (m == 0.0) throw ArithmeticError("double-double complex division by zero");
  // Power-of-two rescaling keeps |b|^2 in range and is exact.
  const int e = std::ilogb(m);
  const XComplex bs{ldexp(b.re, -e), ldexp(b.im, -e)};
  const XReal den = norm(bs);
  const XComplex num = a * conj(bs);
  const XComplex q{num.re / den, num.im / den};
  return {ldexp(q.re, -e), ldexp(q.im, -e)};
}

XReal abs(const XComplex& a) {
  const double m = std::max(std::fabs(a.re.hi), std::fabs(a.im.hi));
  if (m == 0.0) return {};
  if (!std::isfinite(m)) return {m, 0.0};
  const int e = std::ilogb(m);
  const XComplex s{ldexp(a.re, -e), ldexp(a.im, -e)};
  return ldexp(sqrt(norm(s)), e);
}

XComplex exp_c(const XComplex& z) {
  const XReal m = exp(z.re);
  if (m.hi == 0.0) return {};
  if (std::isinf(m.hi)) {
    const double inf = std::numeric_limits<double>::infinity();
    return {std::copysign(inf, std::cos(z.im.hi)), std::copysign(inf, std::sin(z.im.hi))};
  }
  if (z.im.hi == 0.0 && z.im.lo == 0.0) return {m, XReal()};
  XReal s, c;
  sincos(z.im, s, c);
  return {m * c, m * s};
}

}  // namespace faddeeva::xprec
