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

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "faddeeva/faddeeva.hpp"
#include "faddeeva/oracle.hpp"

namespace {

using namespace faddeeva;
using C = ComplexValue;

const EvalParams p;

TEST(Erfc, Examples) {
  EXPECT_EQ(erfc_c({0.0, 0.0}, p), C(1.0, 0.0));
  const C z{0.7, 0.3};
  EXPECT_LE(std::abs(erfc_c(z, p) + erfc_c(-z, p) - 2.0), 4e-15);
  EXPECT_NEAR(erfc_c({1.0, 0.0}, p).real(), 0.15729920705028513, 2e-16);
  const double from_oracle = xprec::erfc_oracle({1.0, 0.0}).re.to_double();
  EXPECT_NEAR(erfc_c({1.0, 0.0}, p).real(), from_oracle, 2e-16);
}

TEST(Erfc, Limits) {
  EXPECT_EQ(erfc_c({30.0, 0.0}, p), C(0.0, 0.0));
  EXPECT_NEAR(erfc_c({-30.0, 0.0}, p).real(), 2.0, 0.0);
  EXPECT_THROW(erfc_c({std::numeric_limits<double>::infinity(), 0.0}, p), DomainError);
}

TEST(Erfc, ComplexAgainstOracle) {
  for (const C z : {C(0.5, 0.5), C(2.0, -1.0), C(-1.0, 3.0), C(0.1, 4.0), C(3.0, 2.0)}) {
    const auto ref = xprec::erfc_oracle(z);
    const double scale = std::max(1.0, xprec::abs(ref).to_double());
    EXPECT_LE(xprec::abs(xprec::XComplex(erfc_c(z, p)) - ref).to_double(), 1e-14 * scale) << z;
  }
}

TEST(Erf, Examples) {
  EXPECT_EQ(erf_c({0.0, 0.0}, p), C(0.0, 0.0));
  const C z{0.0, 0.3};
  EXPECT_LE(std::abs(erf_c(-z, p) + erf_c(z, p)), 2e-16);
  EXPECT_NEAR(erf_c({1.0, 0.0}, p).real(), 0.8427007929497149, 2e-16);
}

TEST(Erfcx, Examples) {
  EXPECT_EQ(erfcx_c({0.0, 0.0}, p), C(1.0, 0.0));
  EXPECT_NEAR(erfcx_c({10.0, 0.0}, p).real(), 0.05614099274382259, 1e-16);
  EXPECT_NEAR(erfcx_c({10.0, 0.0}, p).real(), xprec::w_oracle({0.0, 10.0}).re.to_double(), 1e-16);
  EXPECT_NEAR(erfcx_c({2.0, 0.0}, p).real(), 0.25539567631050575, 2e-16);
  for (int i = 0; i <= 100; ++i) {
    const C v = erfcx_c({0.1 * i, 0.0}, p);
    EXPECT_GT(v.real(), 0.0);
    EXPECT_LE(std::fabs(v.imag()), 2e-15);
  }
}

TEST(Dawson, Examples) {
  EXPECT_EQ(dawson_real(0.0, p), 0.0);
  EXPECT_EQ(dawson_real(-1.3, p), -dawson_real(1.3, p));
  EXPECT_NEAR(dawson_real(1.3, p), 0.4833975173848241, 2e-16);
  EXPECT_NEAR(dawson_real(1.0, p), 0.5380795069127684, 2e-16);
  const double from_oracle =
      (xprec::w_oracle({1.0, 0.0}).im * xprec::constants::sqrt_pi * 0.5).to_double();
  EXPECT_NEAR(dawson_real(1.0, p), from_oracle, 2e-16);
  EXPECT_THROW(dawson_real(std::numeric_limits<double>::infinity(), p), DomainError);
}

TEST(Voigt, Examples) {
  const auto [k0, l0] = voigt_kl(0.0, 1.0, p);
  EXPECT_NEAR(k0, 0.42758357615580700, 2e-16);
  EXPECT_EQ(l0, 0.0);
  const auto [k1, l1] = voigt_kl(2.0, 0.5, p);
  const auto [k2, l2] = voigt_kl(-2.0, 0.5, p);
  EXPECT_EQ(k1, k2);
  EXPECT_EQ(l1, -l2);
  EXPECT_GT(k1, 0.0);
  const auto [k3, l3] = voigt_kl(1.0, 1.0, p);
  const auto ref = xprec::w_oracle({1.0, 1.0});
  EXPECT_NEAR(k3, ref.re.to_double(), 2e-15);
  EXPECT_NEAR(l3, ref.im.to_double(), 2e-15);
  EXPECT_THROW(voigt_kl(1.0, 0.0, p), ParameterError);
  EXPECT_THROW(voigt_kl(1.0, -1.0, p), ParameterError);
}

}  // namespace
