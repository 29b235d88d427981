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

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "faddeeva/errors.hpp"
#include "faddeeva/xprec.hpp"

namespace {

using boost::multiprecision::cpp_bin_float_50;
using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using faddeeva::xprec::XComplex;
using faddeeva::xprec::XReal;
namespace xp = faddeeva::xprec;

cpp_bin_float_50 mp(const XReal& a) { return cpp_bin_float_50(a.hi) + cpp_bin_float_50(a.lo); }

double rel_err(const XReal& got, const cpp_bin_float_50& want) {
  return static_cast<double>(abs((mp(got) - want) / want));
}

const double k2m104 = std::ldexp(1.0, -104);
const double k2m100 = std::ldexp(1.0, -100);

TEST(XReal, AddKeepsTinyTail) {
  const XReal s = XReal(1.0) + XReal(std::ldexp(1.0, -60));
  EXPECT_EQ(s.hi, 1.0);
  EXPECT_EQ(s.lo, std::ldexp(1.0, -60));
}

TEST(XReal, ExactSquare) {
  const XReal x(1.0 + std::ldexp(1.0, -30));
  const XReal sq = x * x;
  EXPECT_EQ(sq.hi, 1.0 + std::ldexp(1.0, -29));
  EXPECT_EQ(sq.lo, std::ldexp(1.0, -60));
}

TEST(XReal, OneThirdAgainstLongDivision) {
  // floor(2^120 / 3) by integer division is 1/3 to 120 bits.
  const cpp_int scaled = (cpp_int(1) << 120) / 3;
  const cpp_bin_float_50 third = cpp_bin_float_50(scaled) / cpp_bin_float_50(cpp_int(1) << 120);
  const XReal q = XReal(1.0) / XReal(3.0);
  EXPECT_LE(rel_err(q, third), k2m104);
}

TEST(XReal, DivisionByZeroThrows) {
  EXPECT_THROW(XReal(1.0) / XReal(0.0), faddeeva::ArithmeticError);
}

TEST(XReal, ExpOfOneAgainstRationalTaylor) {
  // e = sum 1/k!, 60 terms in exact rational arithmetic.
  cpp_rational e = 0;
  cpp_rational term = 1;
  for (int k = 0; k < 60; ++k) {
    e += term;
    term /= k + 1;
  }
  const cpp_bin_float_50 want(e);
  EXPECT_LE(rel_err(xp::exp(XReal(1.0)), want), 1e-30);
}

TEST(XReal, ExpOfZeroIsOne) {
  const XReal one = xp::exp(XReal(0.0));
  EXPECT_EQ(one.hi, 1.0);
  EXPECT_EQ(one.lo, 0.0);
}

TEST(XReal, ExpOverflowAndUnderflow) {
  EXPECT_TRUE(std::isinf(xp::exp(XReal(710.0)).hi));
  EXPECT_EQ(xp::exp(XReal(-746.0)).hi, 0.0);
}

TEST(XReal, ElementaryFunctionsAgainstBinFloat) {
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> wide(-40.0, 40.0);
  for (int i = 0; i < 200; ++i) {
    const XReal a = XReal(wide(rng)) + XReal(wide(rng) * 1e-17);
    const cpp_bin_float_50 m = mp(a);
    EXPECT_LE(rel_err(xp::exp(a), exp(m)), k2m100) << a.hi;
    EXPECT_LE(std::fabs(static_cast<double>(mp(xp::sin(a)) - sin(m))), k2m100) << a.hi;
    EXPECT_LE(std::fabs(static_cast<double>(mp(xp::cos(a)) - cos(m))), k2m100) << a.hi;
    const XReal pos = xp::abs(a) + 0.5;
    EXPECT_LE(rel_err(xp::sqrt(pos), sqrt(mp(pos))), k2m104);
    const XReal b = XReal(wide(rng)) + 1e-3;
    EXPECT_LE(rel_err(a / b, m / mp(b)), k2m104);
    EXPECT_LE(rel_err(a * b, m * mp(b)), k2m104);
  }
}

TEST(XReal, SinCosLargeArgumentReduction) {
  for (const double x : {100.0, 1000.0, 12345.678, 1e5}) {
    const cpp_bin_float_50 m(x);
    EXPECT_LE(std::fabs(static_cast<double>(mp(xp::sin(XReal(x))) - sin(m))), 1e-28) << x;
    EXPECT_LE(std::fabs(static_cast<double>(mp(xp::cos(XReal(x))) - cos(m))), 1e-28) << x;
  }
}

TEST(XReal, PythagoreanIdentity) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int i = 0; i < 100; ++i) {
    const XReal a(u(rng));
    const XReal s = xp::sin(a);
    const XReal c = xp::cos(a);
    EXPECT_LE(std::fabs((s * s + c * c - 1.0).to_double()), k2m100);
  }
}

TEST(XReal, OperationsStayNormalized) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 500; ++i) {
    const XReal a = XReal(u(rng)) / XReal(3.0);
    const XReal b = XReal(u(rng)) * xp::constants::pi;
    for (const XReal& r : {a + b, a - b, a * b, a / b, xp::exp(a), xp::sin(b), xp::sqrt(xp::abs(b))}) {
      EXPECT_TRUE(r.is_normalized()) << r.hi << " " << r.lo;
    }
  }
}

TEST(XReal, ConstantsAgainstBinFloat) {
  using boost::math::constants::pi;
  const cpp_bin_float_50 p = pi<cpp_bin_float_50>();
  EXPECT_LE(rel_err(xp::constants::pi, p), k2m104);
  EXPECT_LE(rel_err(xp::constants::sqrt_pi, sqrt(p)), k2m104);
  EXPECT_LE(rel_err(xp::constants::inv_sqrt_pi, 1 / sqrt(p)), k2m104);
  EXPECT_LE(rel_err(xp::constants::ln2, log(cpp_bin_float_50(2))), k2m104);
  EXPECT_LE(rel_err(xp::constants::e, exp(cpp_bin_float_50(1))), k2m104);
}

TEST(XComplex, DivisionAndExp) {
  const XComplex a(XReal(1.5), XReal(-2.25));
  const XComplex b(XReal(0.75), XReal(3.0));
  const XComplex q = a / b;
  const XComplex back = q * b - a;
  EXPECT_LE(xp::abs(back).to_double(), 1e-30);

  const XComplex e = xp::exp_c(XComplex(XReal(0.5), XReal(2.0)));
  const cpp_bin_float_50 m = exp(cpp_bin_float_50(0.5));
  EXPECT_LE(std::fabs(static_cast<double>(mp(e.re) - m * cos(cpp_bin_float_50(2)))), 1e-30);
  EXPECT_LE(std::fabs(static_cast<double>(mp(e.im) - m * sin(cpp_bin_float_50(2)))), 1e-30);
}

TEST(XComplex, DivisionScalesExtremeMagnitudes) {
  const XComplex a(XReal(1e300), XReal(1e300));
  const XComplex b(XReal(1e300), XReal(-1e300));
  const XComplex q = a / b;  // = i
  EXPECT_NEAR(q.re.to_double(), 0.0, 1e-30);
  EXPECT_NEAR(q.im.to_double(), 1.0, 1e-30);
  EXPECT_THROW(a / XComplex(), faddeeva::ArithmeticError);
}

}  // namespace
