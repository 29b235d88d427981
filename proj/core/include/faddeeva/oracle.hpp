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

#include "faddeeva/detail/kernel.hpp"
#include "faddeeva/xprec.hpp"

namespace faddeeva::xprec {

/// Order of the reference approximation. Its absolute error is bounded by
/// 3.5e-28 and its relative error by 9.4e-27 in the upper half-plane, far
/// below binary64 resolution.
inline constexpr int kOracleOrder = 20;

/// Nodes and weights of the order-n rules in double-double (0 <= n <= 25).
const detail::NodeSet<XReal>& xprec_nodes(int n);

/// The full plane dispatch at order n evaluated in double-double.
XComplex w_xprec(std::complex<double> z, int n);

/// Reference value of w(z): w_xprec at order 20.
XComplex w_oracle(std::complex<double> z);

/// erfc(z) = e^{-z^2} w(iz) in double-double.
XComplex erfc_oracle(std::complex<double> z);

}  // namespace faddeeva::xprec
