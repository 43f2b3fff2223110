// Copyright 2026 The unruh-eur Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace ueur {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Matrix that is not a density operator (non-Hermitian, wrong trace, negative).
class InvalidStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An identity that must hold for valid inputs did not. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The measurement-basis minimizer ran out of evaluations.
class OptimizerError : public std::runtime_error {
 public:
  OptimizerError(const std::string& what, double best_value)
      : std::runtime_error(what), best_value_(best_value) {}

  double best_value() const noexcept { return best_value_; }

 private:
  double best_value_;
};

/// Integration step too coarse: the stability guard or the positivity check tripped.
class StepSizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An output file or directory could not be written.
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ueur
