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

#include <stdexcept>
#include <string>

namespace faddeeva {

/// Argument outside the function's domain (NaN, infinite, wrong quadrant).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid configuration value (quadrature order, grid step, term count).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Direct evaluation of a quadrature sum too close to one of its nodes.
class PoleProximityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Breakdown inside an arithmetic kernel (division by zero, singular
/// recurrence, failed fit).
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failure to write an output file; the message names the path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace faddeeva
