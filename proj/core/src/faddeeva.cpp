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

#include "faddeeva/faddeeva.hpp"

#include <string>

namespace faddeeva {
namespace {

// Tighter than the h/4 separation the dispatcher guarantees; only direct
// callers can get this close.
constexpr double kPoleGuard = 1e-3;

void require_finite(ComplexValue z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(what) + ": argument must have finite components");
  }
}

void require_quadrant1(ComplexValue z, const char* what) {
  require_finite(z, what);
  if (z.real() < 0.0 || z.imag() < 0.0) {
    throw DomainError(std::string(what) + ": argument must lie in the closed first quadrant");
  }
}

void guard_nodes(ComplexValue z, const EvalParams& p, bool trapezoid, const char* what) {
  const double tol = kPoleGuard * p.h();
  for (int k = 0; k <= p.n(); ++k) {
    const double node = trapezoid ? p.trapezoid_node(k) : p.midpoint_node(k);
    if (std::abs(z - node) < tol || std::abs(z + node) < tol) {
      throw PoleProximityError(std::string(what) + ": argument within h/1000 of quadrature node " +
                               std::to_string(k) + (trapezoid ? " (tau_k)" : " (t_k)"));
    }
  }
}

ComplexValue to_complex(const detail::Cx<double>& v) { return {v.re, v.im}; }

BranchTag to_tag(detail::Rule r) {
  switch (r) {
    case detail::Rule::kMidpoint: return BranchTag::M;
    case detail::Rule::kModifiedTrapezoid: return BranchTag::MT;
    case detail::Rule::kModifiedMidpoint: break;
  }
  return BranchTag::MM;
}

}  // namespace

std::string_view to_string(BranchTag tag) {
  switch (tag) {
    case BranchTag::M: return "M";
    case BranchTag::MT: return "MT";
    case BranchTag::MM: break;
  }
  return "MM";
}

EvalParams::EvalParams(int n) {
  if (n < 0 || n > kMaxOrder) {
    throw ParameterError("quadrature order N must lie in [0, 25], got " + std::to_string(n));
  }
  nodes_ = detail::NodeSet<double>::make(n);
}

double frac_part(double t) {
  if (!std::isfinite(t)) throw DomainError("frac_part: argument must be finite");
  return detail::fractional_part(t);
}

double step_size(int n) { return EvalParams(n).h(); }

ComplexValue w_mid_sum(ComplexValue z, const EvalParams& p) {
  require_finite(z, "w_mid_sum");
  guard_nodes(z, p, false, "w_mid_sum");
  return to_complex(detail::midpoint_sum(z.real(), z.imag(), p.nodes()));
}

ComplexValue w_mod_mid(ComplexValue z, const EvalParams& p) {
  require_quadrant1(z, "w_mod_mid");
  guard_nodes(z, p, false, "w_mod_mid");
  return to_complex(detail::modified_midpoint(z.real(), z.imag(), p.nodes()));
}

ComplexValue w_mod_trap(ComplexValue z, const EvalParams& p) {
  require_quadrant1(z, "w_mod_trap");
  if (z.real() <= 0.0) throw DomainError("w_mod_trap: requires Re z > 0");
  guard_nodes(z, p, true, "w_mod_trap");
  return to_complex(detail::modified_trapezoid(z.real(), z.imag(), p.nodes()));
}

BranchTag select_branch(ComplexValue z, const EvalParams& p) {
  require_quadrant1(z, "select_branch");
  const auto& s = p.nodes();
  return to_tag(detail::select_rule(z.real(), z.imag(), s.h_double, s.pi_over_h_double));
}

ComplexValue w_quadrant1(ComplexValue z, const EvalParams& p) {
  require_quadrant1(z, "w_quadrant1");
  return to_complex(detail::quadrant1(z.real(), z.imag(), p.nodes()));
}

ComplexValue w_plane(ComplexValue z, const EvalParams& p) {
  require_finite(z, "w_plane");
  return to_complex(detail::plane(z.real(), z.imag(), p.nodes()));
}

}  // namespace faddeeva
