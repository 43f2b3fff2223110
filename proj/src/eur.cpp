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

#include "ueur/eur.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ueur/errors.hpp"

namespace ueur {

double conditional_entropy_after_measurement(const TwoQubitOperator& rho, PauliBasis basis,
                                             Subsystem measured) {
  validate_state(rho);
  const TwoQubitOperator dephased = dephase(rho, measured, QubitBasis::pauli(basis));
  return von_neumann_entropy(dephased) -
         von_neumann_entropy(detail::partial_trace(rho, other(measured)));
}

double max_overlap_c(const QubitBasis& first, const QubitBasis& second) {
  double c = 0.0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) c = std::max(c, std::norm(first[i].dot(second[j])));
  return c;
}

double joint_entropy(const XState& s) { return entropy_of_spectrum(xstate_spectrum(s)); }

double conditional_entropy_AB(const XState& s) {
  return joint_entropy(s) - binary_entropy(s.x + s.y);
}

double uncertainty_U(const XState& s) {
  const TwoQubitOperator rho = xstate_to_density(s);
  return conditional_entropy_after_measurement(rho, PauliBasis::X) +
         conditional_entropy_after_measurement(rho, PauliBasis::Z);
}

double bound_B(const XState& s) { return 1.0 + conditional_entropy_AB(s); }

double tightness(double U, double bound) {
  const double delta = U - bound;
  if (delta < -kTightnessTolerance) {
    throw ConsistencyError("uncertainty relation violated: U - B = " + std::to_string(delta));
  }
  return delta;
}

EurPoint evaluate_eur(const TwoQubitOperator& rho, Subsystem measured) {
  validate_state(rho);
  const Subsystem memory = other(measured);
  EurPoint p;
  p.s_ab = von_neumann_entropy(rho);
  p.s_b = von_neumann_entropy(detail::partial_trace(rho, memory));
  p.s_a_given_b = p.s_ab - p.s_b;
  p.s_x_given_b = conditional_entropy_after_measurement(rho, PauliBasis::X, measured);
  p.s_z_given_b = conditional_entropy_after_measurement(rho, PauliBasis::Z, measured);
  p.c = max_overlap_c(QubitBasis::pauli(PauliBasis::X), QubitBasis::pauli(PauliBasis::Z));
  p.U = p.s_x_given_b + p.s_z_given_b;
  p.bound = std::log2(1.0 / p.c) + p.s_a_given_b;
  p.tightness = tightness(p.U, p.bound);
  return p;
}

EurPoint evaluate_eur(const XState& s) { return evaluate_eur(xstate_to_density(s)); }

namespace closed_form {

double s_b(const XState& s) { return binary_entropy(s.x + s.y); }

double s_z_given_b(const XState& s) {
  const std::array<double, 4> dephased{s.x, s.y, s.y, s.z};
  return entropy_of_spectrum(dephased) - s_b(s);
}

double s_x_given_b(const XState& s) {
  // Each X outcome has probability 1/2 and leaves B in [[x+y, +-d], [+-d, y+z]].
  const double r = std::hypot(s.x - s.z, 2.0 * s.d);
  return 1.0 + binary_entropy(0.5 * (1.0 + r)) - s_b(s);
}

double joint_entropy(const XState& s) { return entropy_of_spectrum(xstate_spectrum(s)); }

EurPoint evaluate(const XState& s) {
  EurPoint p;
  p.s_ab = closed_form::joint_entropy(s);
  p.s_b = closed_form::s_b(s);
  p.s_a_given_b = p.s_ab - p.s_b;
  p.s_x_given_b = closed_form::s_x_given_b(s);
  p.s_z_given_b = closed_form::s_z_given_b(s);
  p.c = 0.5;
  p.U = p.s_x_given_b + p.s_z_given_b;
  p.bound = 1.0 + p.s_a_given_b;
  p.tightness = tightness(p.U, p.bound);
  return p;
}

}  // namespace closed_form

}  // namespace ueur
