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
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace faddeeva::bench {

using ComplexValue = std::complex<double>;

enum class MethodKind { kTrap, kWeideman, kContinuedFraction, kZaghloul };

/// A comparison method and its parameters, e.g. trap(11), weideman(40),
/// cf(9), zaghloul(0.5,38).
struct MethodSpec {
  MethodKind kind = MethodKind::kTrap;
  int order = 11;   // N for trap and weideman, n for cf, K for zaghloul
  double a = 0.5;   // zaghloul spacing

  /// Accepts "trap", "trap:11", "trap(11)", "weideman:40", "cf:9",
  /// "zaghloul:0.5:38" and "zaghloul(0.5,38)". ParameterError otherwise.
  static MethodSpec parse(std::string_view text);
  static std::vector<MethodSpec> parse_list(std::string_view comma_separated);

  [[nodiscard]] std::string label() const;
};

/// A ready-to-evaluate method (Weideman coefficients fitted on construction).
class Method {
 public:
  explicit Method(const MethodSpec& spec);
  ~Method();
  Method(Method&&) noexcept;
  Method& operator=(Method&&) noexcept;

  [[nodiscard]] ComplexValue operator()(ComplexValue z) const;
  /// Whether z lies in the region where the method is rated accurate:
  /// cf on |z| >= 8, weideman on Im z >= 0, zaghloul on the first quadrant
  /// with Re z <= aK - 9, trap everywhere.
  [[nodiscard]] bool rated(ComplexValue z) const;
  [[nodiscard]] const MethodSpec& spec() const { return spec_; }
  [[nodiscard]] std::string label() const { return spec_.label(); }

 private:
  struct State;
  MethodSpec spec_;
  std::unique_ptr<State> state_;
};

}  // namespace faddeeva::bench
