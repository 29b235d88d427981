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

#include "faddeeva/oracle.hpp"

#include <string>

#include "faddeeva/errors.hpp"

namespace faddeeva::xprec {
namespace {

using Nodes = detail::NodeSet<XReal>;

const std::array<Nodes, detail::kMaxOrder + 1>& all_nodes() {
  static const auto table = [] {
    std::array<Nodes, detail::kMaxOrder + 1> t{};
    for (int n = 0; n <= detail::kMaxOrder; ++n) t[n] = Nodes::make(n);
    return t;
  }();
  return table;
}

void require_finite(std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("oracle: argument must have finite components");
  }
}

}  // namespace

const detail::NodeSet<XReal>& xprec_nodes(int n) {
  if (n < 0 || n > detail::kMaxOrder) {
    throw ParameterError("double-double order must lie in [0, 25], got " + std::to_string(n));
  }
  return all_nodes()[n];
}

XComplex w_xprec(std::complex<double> z, int n) {
  require_finite(z);
  const auto v = detail::plane(z.real(), z.imag(), xprec_nodes(n));
  return {v.re, v.im};
}

XComplex w_oracle(std::complex<double> z) { return w_xprec(z, kOracleOrder); }

XComplex erfc_oracle(std::complex<double> z) {
  require_finite(z);
  const auto e = detail::exp_minus_square(XReal(z.real()), XReal(z.imag()));
  return XComplex(e.re, e.im) * w_oracle({-z.imag(), z.real()});
}

}  // namespace faddeeva::xprec
