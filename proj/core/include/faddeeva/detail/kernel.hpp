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

// Precision-generic implementation of the truncated midpoint / modified
// midpoint / modified trapezoidal rules. Instantiated with double for the
// public API and with xprec::XReal for the reference oracle.

#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <numbers>
#include <type_traits>

#include "faddeeva/xprec.hpp"

namespace faddeeva::detail {

inline constexpr int kMaxOrder = 25;

enum class Rule { kMidpoint, kModifiedMidpoint, kModifiedTrapezoid };

template <class T>
struct Cx {
  T re{};
  T im{};
};

template <class T>
inline Cx<T> operator+(const Cx<T>& a, const Cx<T>& b) {
  return {a.re + b.re, a.im + b.im};
}
template <class T>
inline Cx<T> operator-(const Cx<T>& a, const Cx<T>& b) {
  return {a.re - b.re, a.im - b.im};
}
template <class T>
inline Cx<T> operator*(const Cx<T>& a, const Cx<T>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class T>
inline Cx<T> operator*(const Cx<T>& a, const T& s) {
  return {a.re * s, a.im * s};
}

template <class T>
struct Precision;

template <>
struct Precision<double> {
  static constexpr double pi = std::numbers::pi;
  static double exp(double x) { return std::exp(x); }
  static void sincos(double x, double& s, double& c) {
    s = std::sin(x);
    c = std::cos(x);
  }
  static double floor(double x) { return std::floor(x); }
  static double sqrt(double x) { return std::sqrt(x); }
  // Exact-as-possible x^2 - y^2 for double inputs.
  static double diff_sq(double x, double y) { return (x - y) * (x + y); }

  // w / d, Smith's scaling.
  static Cx<double> real_over(double w, const Cx<double>& d) {
    if (std::fabs(d.re) >= std::fabs(d.im)) {
      const double r = d.im / d.re;
      const double den = d.re + d.im * r;
      return {w / den, -(w * r) / den};
    }
    const double r = d.re / d.im;
    const double den = d.re * r + d.im;
    return {(w * r) / den, -w / den};
  }

  static Cx<double> div(const Cx<double>& a, const Cx<double>& b) {
    if (std::fabs(b.re) >= std::fabs(b.im)) {
      const double r = b.im / b.re;
      const double den = b.re + b.im * r;
      return {(a.re + a.im * r) / den, (a.im - a.re * r) / den};
    }
    const double r = b.re / b.im;
    const double den = b.re * r + b.im;
    return {(a.re * r + a.im) / den, (a.im * r - a.re) / den};
  }
};

template <>
struct Precision<xprec::XReal> {
  using X = xprec::XReal;
  static constexpr X pi = xprec::constants::pi;
  static X exp(const X& x) { return xprec::exp(x); }
  static void sincos(const X& x, X& s, X& c) { xprec::sincos(x, s, c); }
  static X floor(const X& x) { return xprec::floor(x); }
  static X sqrt(const X& x) { return xprec::sqrt(x); }
  static X diff_sq(const X& x, const X& y) { return (x - y) * (x + y); }

  static Cx<X> real_over(const X& w, const Cx<X>& d) {
    const X s = w / (d.re * d.re + d.im * d.im);
    return {s * d.re, -(s * d.im)};
  }

  static Cx<X> div(const Cx<X>& a, const Cx<X>& b) {
    const xprec::XComplex q = xprec::XComplex(a.re, a.im) / xprec::XComplex(b.re, b.im);
    return {q.re, q.im};
  }
};

/// Step size, nodes and weights of the order-N rules.
template <class T>
struct NodeSet {
  int order = 0;
  T h{};
  double h_double = 0.0;       // branch selection always runs in binary64
  double pi_over_h_double = 0.0;
  T two_h_over_pi{};
  T h_over_pi{};
  T two_pi_over_h{};
  std::array<T, kMaxOrder + 1> mid_sq{};   // t_k^2, t_k = (k + 1/2) h
  std::array<T, kMaxOrder + 1> mid_w{};    // exp(-t_k^2)
  std::array<T, kMaxOrder + 1> trap_sq{};  // tau_k^2, tau_k = k h
  std::array<T, kMaxOrder + 1> trap_w{};   // exp(-tau_k^2)

  static NodeSet make(int n) {
    using P = Precision<T>;
    NodeSet s;
    s.order = n;
    s.h = P::sqrt(P::pi / T(static_cast<double>(n + 1)));
    s.h_double = std::sqrt(std::numbers::pi / static_cast<double>(n + 1));
    s.pi_over_h_double = std::numbers::pi / s.h_double;
    s.two_h_over_pi = T(2.0) * s.h / P::pi;
    s.h_over_pi = s.h / P::pi;
    s.two_pi_over_h = T(2.0) * P::pi / s.h;
    for (int k = 0; k <= n; ++k) {
      const T t = T(k + 0.5) * s.h;
      const T tau = T(static_cast<double>(k)) * s.h;
      s.mid_sq[k] = t * t;
      s.mid_w[k] = P::exp(-s.mid_sq[k]);
      s.trap_sq[k] = tau * tau;
      s.trap_w[k] = P::exp(-s.trap_sq[k]);
    }
    return s;
  }
};

inline double fractional_part(double t) { return t - std::floor(t); }

/// Dispatch rule on the closed first quadrant.
inline Rule select_rule(double x, double y, double h, double pi_over_h) {
  if (y >= std::max(x, pi_over_h)) return Rule::kMidpoint;
  if (y < x) {
    const double phi = fractional_part(x / h);
    if (phi >= 0.25 && phi <= 0.75) return Rule::kModifiedTrapezoid;
  }
  return Rule::kModifiedMidpoint;
}

/// Sum_{k=first}^{N} w_k / (z^2 - s_k^2), accumulated from k = N downwards.
template <class T>
Cx<T> node_sum(const Cx<T>& z2, const std::array<T, kMaxOrder + 1>& sq,
               const std::array<T, kMaxOrder + 1>& w, int first, int order) {
  using P = Precision<T>;
  Cx<T> acc{};
  for (int k = order; k >= first; --k) {
    const Cx<T> d{z2.re - sq[k], z2.im};
    acc = acc + P::real_over(w[k], d);
  }
  return acc;
}

template <class T>
Cx<T> square(const T& x, const T& y) {
  using P = Precision<T>;
  return {P::diff_sq(x, y), T(2.0) * x * y};
}

/// (2 i h z / pi) Sum_{k=0}^{N} exp(-t_k^2) / (z^2 - t_k^2)
template <class T>
Cx<T> midpoint_sum(const T& x, const T& y, const NodeSet<T>& s) {
  const Cx<T> acc = node_sum(square(x, y), s.mid_sq, s.mid_w, 0, s.order);
  const Cx<T> iz{-y, x};
  return (iz * acc) * s.two_h_over_pi;
}

/// 2 exp(-z^2) q / (q + sign), q = exp(2 i pi z / h), sign = +1 (midpoint
/// correction) or -1 (trapezoid correction). Modulus and phase of
/// exp(-z^2) q are combined before exponentiation so the product never
/// overflows when |q| is tiny.
template <class T>
Cx<T> pole_correction(const T& x, const T& y, const NodeSet<T>& s, double sign) {
  using P = Precision<T>;
  const T decay = -(s.two_pi_over_h * y);
  const T log_mag = P::diff_sq(y, x) + decay;
  if (static_cast<double>(log_mag) < -746.0) return {};

  const T xh = x / s.h;
  const T phi = xh - P::floor(xh);
  const T q_phase = T(2.0) * P::pi * phi;
  T qs, qc;
  P::sincos(q_phase, qs, qc);
  const T q_mag = P::exp(decay);
  const Cx<T> q{q_mag * qc, q_mag * qs};

  const T num_phase = q_phase - T(2.0) * x * y;
  T ns, nc;
  P::sincos(num_phase, ns, nc);
  const T num_mag = T(2.0) * P::exp(log_mag);
  const Cx<T> num{num_mag * nc, num_mag * ns};

  const Cx<T> den{q.re + T(sign), q.im};
  return P::div(num, den);
}

template <class T>
Cx<T> modified_midpoint(const T& x, const T& y, const NodeSet<T>& s) {
  return pole_correction(x, y, s, 1.0) + midpoint_sum(x, y, s);
}

/// 2 e^{-z^2} / (1 - e^{-2 i pi z/h}) + i h / (pi z)
///   + (2 i h z / pi) Sum_{k=1}^{N} exp(-tau_k^2) / (z^2 - tau_k^2)
template <class T>
Cx<T> modified_trapezoid(const T& x, const T& y, const NodeSet<T>& s) {
  using P = Precision<T>;
  const Cx<T> acc = node_sum(square(x, y), s.trap_sq, s.trap_w, 1, s.order);
  const Cx<T> iz{-y, x};
  const Cx<T> i_over_z = P::div(Cx<T>{T(0.0), T(1.0)}, Cx<T>{x, y});
  const Cx<T> sums = (i_over_z * s.h_over_pi) + (iz * acc) * s.two_h_over_pi;
  return pole_correction(x, y, s, -1.0) + sums;
}

template <class T>
Cx<T> evaluate_rule(Rule rule, const T& x, const T& y, const NodeSet<T>& s) {
  switch (rule) {
    case Rule::kMidpoint: return midpoint_sum(x, y, s);
    case Rule::kModifiedTrapezoid: return modified_trapezoid(x, y, s);
    case Rule::kModifiedMidpoint: break;
  }
  return modified_midpoint(x, y, s);
}

/// Minimum distance from z to the nodes (on both half-lines) of a rule.
inline double node_distance(Rule rule, double x, double y, double h, int order) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= order; ++k) {
    const double node = rule == Rule::kModifiedTrapezoid ? k * h : (k + 0.5) * h;
    best = std::min(best, std::hypot(x - node, y));
    best = std::min(best, std::hypot(x + node, y));
  }
  return best;
}

/// First-quadrant dispatch, x >= 0 and y >= 0.
template <class T>
Cx<T> quadrant1(double x, double y, const NodeSet<T>& s, Rule* chosen = nullptr) {
  const Rule rule = select_rule(x, y, s.h_double, s.pi_over_h_double);
  if (chosen != nullptr) *chosen = rule;
  assert(rule == Rule::kMidpoint ||
         node_distance(rule, x, y, s.h_double, s.order) >= 0.25 * s.h_double * (1.0 - 1e-12));
  return evaluate_rule(rule, T(x), T(y), s);
}

/// exp(-z^2) with the modulus computed from (y - x)(y + x). Overflow gives
/// signed infinities.
template <class T>
Cx<T> exp_minus_square(const T& x, const T& y) {
  using P = Precision<T>;
  const T log_mag = P::diff_sq(y, x);
  const T phase = -(T(2.0) * x * y);
  if (static_cast<double>(log_mag) > 709.78) {
    const double inf = std::numeric_limits<double>::infinity();
    const double ph = static_cast<double>(phase);
    return {T(std::copysign(inf, std::cos(ph))), T(std::copysign(inf, std::sin(ph)))};
  }
  T sn, cs;
  P::sincos(phase, sn, cs);
  const T m = P::exp(log_mag);
  return {m * cs, m * sn};
}

/// Whole-plane extension by the reflection symmetries.
template <class T>
Cx<T> plane(double x, double y, const NodeSet<T>& s) {
  if (y < 0.0) {
    const Cx<T> reflected = plane(-x, -y, s);
    const Cx<T> e = exp_minus_square(T(x), T(y));
    return e * T(2.0) - reflected;
  }
  if (x < 0.0) {
    const Cx<T> v = quadrant1(-x, y, s);
    return {v.re, -v.im};
  }
  return quadrant1(x, y, s);
}

}  // namespace faddeeva::detail
