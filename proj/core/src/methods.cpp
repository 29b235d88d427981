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

#include "faddeeva/methods.hpp"

#include <charconv>
#include <cstdio>
#include <optional>

#include "faddeeva/errors.hpp"
#include "faddeeva/faddeeva.hpp"
#include "faddeeva/reference.hpp"

namespace faddeeva::bench {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParameterError("bad integer in method spec '" + std::string(whole) + "'");
  }
  return v;
}

double parse_double(std::string_view s, std::string_view whole) {
  const std::string tmp(s);
  char* end = nullptr;
  const double v = std::strtod(tmp.c_str(), &end);
  if (tmp.empty() || end != tmp.c_str() + tmp.size()) {
    throw ParameterError("bad number in method spec '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

MethodSpec MethodSpec::parse(std::string_view text) {
  const std::string_view whole = trim(text);
  std::string_view name = whole;
  std::vector<std::string_view> args;
  if (const auto open = whole.find('('); open != std::string_view::npos) {
    if (whole.back() != ')') throw ParameterError("unbalanced parentheses in '" + std::string(whole) + "'");
    name = trim(whole.substr(0, open));
    args = split(whole.substr(open + 1, whole.size() - open - 2), ',');
  } else if (const auto colon = whole.find(':'); colon != std::string_view::npos) {
    name = trim(whole.substr(0, colon));
    args = split(whole.substr(colon + 1), ':');
  }

  MethodSpec m;
  if (name == "trap") {
    m.kind = MethodKind::kTrap;
    m.order = kDefaultOrder;
  } else if (name == "weideman") {
    m.kind = MethodKind::kWeideman;
    m.order = 40;
  } else if (name == "cf") {
    m.kind = MethodKind::kContinuedFraction;
    m.order = 9;
  } else if (name == "zaghloul") {
    m.kind = MethodKind::kZaghloul;
    m.order = 38;
  } else {
    throw ParameterError("unknown method '" + std::string(name) + "' (trap, weideman, cf, zaghloul)");
  }

  if (m.kind == MethodKind::kZaghloul) {
    if (args.size() > 2) throw ParameterError("zaghloul takes at most (a, K)");
    if (!args.empty()) m.a = parse_double(args[0], whole);
    if (args.size() == 2) m.order = parse_int(args[1], whole);
    if (!(m.a > 0.0) || m.order < 1) throw ParameterError("zaghloul needs a > 0 and K >= 1");
  } else {
    if (args.size() > 1) throw ParameterError("method '" + std::string(name) + "' takes one parameter");
    if (!args.empty()) m.order = parse_int(args[0], whole);
  }
  if (m.kind == MethodKind::kTrap && (m.order < 0 || m.order > kMaxOrder)) {
    throw ParameterError("trap order must lie in [0, 25]");
  }
  if (m.kind == MethodKind::kWeideman && m.order < 8) throw ParameterError("weideman order must be >= 8");
  if (m.kind == MethodKind::kContinuedFraction && m.order < 1) throw ParameterError("cf order must be >= 1");
  return m;
}

std::vector<MethodSpec> MethodSpec::parse_list(std::string_view comma_separated) {
  // Commas inside parentheses belong to the method arguments.
  std::vector<MethodSpec> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= comma_separated.size(); ++i) {
    const char c = i < comma_separated.size() ? comma_separated[i] : ',';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      const auto item = trim(comma_separated.substr(start, i - start));
      if (!item.empty()) out.push_back(parse(item));
      start = i + 1;
    }
  }
  if (out.empty()) throw ParameterError("empty method list");
  return out;
}

std::string MethodSpec::label() const {
  char buf[64];
  switch (kind) {
    case MethodKind::kTrap: std::snprintf(buf, sizeof buf, "trap(%d)", order); break;
    case MethodKind::kWeideman: std::snprintf(buf, sizeof buf, "weideman(%d)", order); break;
    case MethodKind::kContinuedFraction: std::snprintf(buf, sizeof buf, "cf(%d)", order); break;
    case MethodKind::kZaghloul: std::snprintf(buf, sizeof buf, "zaghloul(%g,%d)", a, order); break;
  }
  return buf;
}

struct Method::State {
  std::optional<EvalParams> trap;
  std::optional<reference::WeidemanModel> weideman;
  reference::ZaghloulParams zaghloul;
};

Method::Method(const MethodSpec& spec) : spec_(spec), state_(std::make_unique<State>()) {
  switch (spec_.kind) {
    case MethodKind::kTrap: state_->trap.emplace(spec_.order); break;
    case MethodKind::kWeideman: state_->weideman = reference::weideman_fit_coeffs(spec_.order); break;
    case MethodKind::kZaghloul: state_->zaghloul = {spec_.a, spec_.order}; break;
    case MethodKind::kContinuedFraction: break;
  }
}

Method::~Method() = default;
Method::Method(Method&&) noexcept = default;
Method& Method::operator=(Method&&) noexcept = default;

ComplexValue Method::operator()(ComplexValue z) const {
  switch (spec_.kind) {
    case MethodKind::kTrap: return w_plane(z, *state_->trap);
    case MethodKind::kWeideman: return reference::weideman_eval(z, *state_->weideman);
    case MethodKind::kContinuedFraction: return reference::cf_convergent(z, spec_.order);
    case MethodKind::kZaghloul: break;
  }
  return reference::zaghloul_eval(z, state_->zaghloul);
}

bool Method::rated(ComplexValue z) const {
  switch (spec_.kind) {
    case MethodKind::kTrap: return std::isfinite(z.real()) && std::isfinite(z.imag());
    case MethodKind::kWeideman: return z.imag() >= 0.0;
    case MethodKind::kContinuedFraction: return std::abs(z) >= 8.0;
    case MethodKind::kZaghloul: break;
  }
  return z.real() >= 0.0 && z.imag() >= 0.0 && z.real() <= reference::zaghloul_max_re(state_->zaghloul);
}

}  // namespace faddeeva::bench
