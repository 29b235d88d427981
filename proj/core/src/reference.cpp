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

#include "faddeeva/reference.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "faddeeva/detail/kernel.hpp"
#include "faddeeva/errors.hpp"
#include "faddeeva/faddeeva.hpp"
#include "faddeeva/oracle.hpp"

namespace faddeeva::reference {
namespace {

using detail::Cx;
using xprec::XComplex;
using xprec::XReal;
using P = detail::Precision<double>;

constexpr double kInvSqrtPi = std::numbers::inv_sqrtpi;
constexpr double kMaxFitResidual = 1e-14;

Cx<double> cx(ComplexValue z) { return {z.real(), z.imag()}; }
ComplexValue to_complex(Cx<double> v) { return {v.re, v.im}; }

}  // namespace

ComplexValue cf_convergent(ComplexValue z, int n) {
  if (n < 1) throw ParameterError("cf_convergent: n must be >= 1");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("cf_convergent: argument must have finite components");
  }
  const Cx<double> zc = cx(z);
  Cx<double> r = zc;
  for (int m = n - 1; m >= 1; --m) {
    if (r.re == 0.0 && r.im == 0.0) throw ArithmeticError("cf_convergent: singular recurrence");
    r = zc - P::div(Cx<double>{0.5 * m, 0.0}, r);
  }
  if (r.re == 0.0 && r.im == 0.0) throw ArithmeticError("cf_convergent: singular recurrence");
  return to_complex(P::div(Cx<double>{0.0, kInvSqrtPi}, r));
}

WeidemanModel weideman_fit_coeffs(int n, const Oracle& oracle) {
  if (n < 8) throw ParameterError("weideman_fit_coeffs: n must be >= 8");
  WeidemanModel m;
  m.n = n;
  m.l = std::pow(2.0, -0.25) * std::sqrt(static_cast<double>(n));
  const int samples = 2 * n;
  const XReal l(m.l);
  const XReal step = xprec::constants::pi / static_cast<double>(n);

  // Midpoint angles avoid Z = -1 (z at infinity).
  std::vector<XReal> theta(samples);
  std::vector<double> nodes(samples);
  std::vector<XComplex> f(samples);
  for (int j = 0; j < samples; ++j) {
    theta[j] = step * (j + 0.5) - xprec::constants::pi;
    XReal s, c;
    xprec::sincos(xprec::ldexp(theta[j], -1), s, c);
    nodes[j] = (l * s / c).to_double();
    const XComplex lm{l, XReal(-nodes[j])};  // L - i z
    const XComplex lead = XComplex(xprec::constants::inv_sqrt_pi) / lm;
    f[j] = lm * lm * (oracle({nodes[j], 0.0}) - lead) * XReal(0.5);
  }

  m.coeffs.resize(n);
  for (int k = 0; k < n; ++k) {
    XComplex acc;
    for (int j = 0; j < samples; ++j) {
      XReal s, c;
      xprec::sincos(theta[j] * static_cast<double>(k), s, c);
      acc = acc + f[j] * XComplex(c, -s);
    }
    acc = acc / XReal(static_cast<double>(samples));
    m.coeffs[k] = acc.re.to_double();
    m.max_imag_residue = std::max(m.max_imag_residue, std::fabs(acc.im.to_double()));
  }

  for (int j = 0; j < samples; ++j) {
    const ComplexValue approx = weideman_eval({nodes[j], 0.0}, m);
    const ComplexValue exact = oracle({nodes[j], 0.0}).to_complex();
    m.fit_residual = std::max(m.fit_residual, std::abs(approx - exact));
  }
  if (!(m.fit_residual <= kMaxFitResidual)) {
    throw ArithmeticError("weideman_fit_coeffs: residual " + std::to_string(m.fit_residual) +
                          " exceeds 1e-14");
  }
  return m;
}

WeidemanModel weideman_fit_coeffs(int n) {
  return weideman_fit_coeffs(n, [](ComplexValue z) { return xprec::w_oracle(z); });
}

ComplexValue weideman_eval(ComplexValue z, const WeidemanModel& m) {
  if (!(z.imag() >= 0.0)) throw DomainError("weideman_eval: requires Im z >= 0");
  const Cx<double> lm{m.l + z.imag(), -z.real()};  // L - i z
  const Cx<double> lp{m.l - z.imag(), z.real()};   // L + i z
  const Cx<double> big_z = P::div(lp, lm);
  Cx<double> p{m.coeffs.back(), 0.0};
  for (int k = m.n - 2; k >= 0; --k) p = p * big_z + Cx<double>{m.coeffs[k], 0.0};
  const Cx<double> recip = P::div(Cx<double>{1.0, 0.0}, lm);
  const Cx<double> w = recip * kInvSqrtPi + (p * (recip * recip)) * 2.0;
  return to_complex(w);
}

ZaghloulSums zaghloul_sums(double x, double y, const ZaghloulParams& p) {
  if (!(p.a > 0.0) || p.terms < 1) throw ParameterError("zaghloul_sums: need a > 0 and K >= 1");
  ZaghloulSums s;
  const double x2 = x * x;
  const double y2 = y * y;
  for (int k = p.terms; k >= 1; --k) {
    const double ak = p.a * k;
    const double a2k2 = ak * ak;
    const double inv = 1.0 / (a2k2 + y2);
    const double e1 = std::exp(-(a2k2 + x2));
    const double e2 = std::exp(-(ak + x) * (ak + x));
    const double e3 = std::exp(-(ak - x) * (ak - x));
    s.s1 += e1 * inv;
    s.s2 += e2 * inv;
    s.s3 += e3 * inv;
    s.s4 += ak * e2 * inv;
    s.s5 += ak * e3 * inv;
  }
  return s;
}

ComplexValue zaghloul_eval(ComplexValue z, const ZaghloulParams& p) {
  const double x = z.real();
  const double y = z.imag();
  if (!(x >= 0.0) || !(y >= 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
    throw DomainError("zaghloul_eval: requires a finite first-quadrant argument");
  }
  static const EvalParams erfcx_params(kDefaultOrder);
  const double a = p.a;
  const double pi = std::numbers::pi;
  const ZaghloulSums s = zaghloul_sums(x, y, p);
  const double ex2 = std::exp(-x * x);
  const double erfcx_y = erfcx_c({y, 0.0}, erfcx_params).real();
  const double c2 = std::cos(2.0 * x * y);
  const double s2 = std::sin(2.0 * x * y);

  double u = ex2 * erfcx_y * c2 + (a * y / pi) * (-2.0 * c2 * s.s1 + s.s2 + s.s3);
  double v = -ex2 * erfcx_y * s2 + (a / pi) * (2.0 * y * s2 * s.s1 - s.s4 + s.s5);
  if (y > 0.0) {
    const double sxy = std::sin(x * y);
    u += 2.0 * a * sxy * sxy / (pi * y) * ex2;
    v += a * s2 / (pi * y) * ex2;
  } else {
    v += 2.0 * a * x / pi * ex2;
  }
  return {u, v};
}

}  // namespace faddeeva::reference
