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
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "faddeeva/bounds.hpp"
#include "faddeeva/grid.hpp"
#include "faddeeva/oracle.hpp"
#include "quadrature.hpp"

namespace {

namespace xp = faddeeva::xprec;
using faddeeva::testing::erfc_by_quadrature;
using faddeeva::testing::w_by_quadrature;
using xp::XComplex;
using xp::XReal;

double rel_diff(const XComplex& a, const XComplex& b) {
  return (xp::abs(a - b) / xp::abs(b)).to_double();
}

TEST(Quadrature, ErfcOfOneMatchesTabulatedValue) {
  const boost::multiprecision::cpp_bin_float_50 want("0.15729920705028513065877936491739074070393300203");
  const XReal q = erfc_by_quadrature(1.0);
  const auto got = boost::multiprecision::cpp_bin_float_50(q.hi) + q.lo;
  EXPECT_LE(static_cast<double>(abs(got - want) / want), 1e-29);
}

TEST(Oracle, OriginIsExactlyOne) {
  const XComplex w = xp::w_oracle({0.0, 0.0});
  EXPECT_EQ(w.re.hi, 1.0);
  EXPECT_EQ(w.re.lo, 0.0);
  EXPECT_EQ(w.im.hi, 0.0);
  EXPECT_EQ(w.im.lo, 0.0);
  const XComplex e = xp::erfc_oracle({0.0, 0.0});
  EXPECT_EQ(e.re.hi, 1.0);
  EXPECT_EQ(e.re.lo, 0.0);
}

TEST(Oracle, RealPartOnRealAxisIsGaussian) {
  for (const double x : {0.25, 1.0, 2.5, 4.0}) {
    const XReal want = xp::exp(-(XReal(x) * XReal(x)));
    const XReal got = xp::w_oracle({x, 0.0}).re;
    EXPECT_LE(xp::abs((got - want) / want).to_double(), 1e-26) << x;
  }
}

TEST(Oracle, ImaginaryUnitAgainstQuadratureErfc) {
  // w(i) = e erfc(1)
  const XReal want = xp::constants::e * erfc_by_quadrature(1.0);
  const XComplex got = xp::w_oracle({0.0, 1.0});
  EXPECT_LE(xp::abs((got.re - want) / want).to_double(), 1e-25);
  EXPECT_EQ(got.im.hi, 0.0);
}

TEST(Oracle, ErfcAgainstQuadrature) {
  for (const double x : {0.0, 0.3, 1.0, 2.0, 5.0}) {
    const XReal want = erfc_by_quadrature(x);
    const XReal got = xp::erfc_oracle({x, 0.0}).re;
    EXPECT_LE(xp::abs((got - want) / want).to_double(), 1e-25) << x;
  }
}

TEST(Oracle, ErfcReflection) {
  const XComplex s = xp::erfc_oracle({0.8, 0.0}) + xp::erfc_oracle({-0.8, 0.0});
  EXPECT_LE(std::fabs((s.re - 2.0).to_double()), 1e-28);
  EXPECT_LE(std::fabs(s.im.to_double()), 1e-28);
}

TEST(Oracle, AgreesWithQuadratureAtRandomPoints) {
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> re(-10.0, 10.0);
  std::uniform_real_distribution<double> im(0.1, 10.0);
  for (int i = 0; i < 100; ++i) {
    const std::complex<double> z{re(rng), im(rng)};
    EXPECT_LE(rel_diff(xp::w_oracle(z), w_by_quadrature(z)), 1e-25) << z;
  }
}

TEST(Oracle, SelfConsistencyWithOrderNineteen) {
  const faddeeva::bench::Grid grid(faddeeva::bench::GridSpec::polar_default(), 1601);
  ASSERT_GE(grid.size(), 1000u);
  const double limit = faddeeva::bounds::abs_bound(19);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto z = grid[i];
    EXPECT_LE(xp::abs(xp::w_oracle(z) - xp::w_xprec(z, 19)).to_double(), limit) << z;
  }
}

TEST(Oracle, LowerHalfPlaneUsesReflection) {
  const std::complex<double> z{1.0, -1.5};
  const XComplex lhs = xp::w_oracle(z) + xp::w_oracle(-z);
  const XComplex rhs = xp::exp_c(-(XComplex(z) * XComplex(z))) * XReal(2.0);
  EXPECT_LE(xp::abs(lhs - rhs).to_double(), 1e-28);
}

}  // namespace
