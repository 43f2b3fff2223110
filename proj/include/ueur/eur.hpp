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

// Entropic uncertainty with quantum memory: Pauli X and Z measured on
// detector A, detector B acting as the memory.
//
//   U = S(X|B) + S(Z|B)  >=  B = log2(1/c) + S(A|B),   delta = U - B.
//
// Conditional entropies are evaluated from the dephased states
// rho_MB = sum_k (P_k x 1) rho (P_k x 1). The closed_form namespace holds
// the X-state fast path; both routes are kept and cross-checked.

#include "ueur/qstate.hpp"
#include "ueur/stationary.hpp"

namespace ueur {

inline constexpr double kTightnessTolerance = 1e-9;

struct EurPoint {
  double U = 0.0;
  double bound = 0.0;
  double tightness = 0.0;
  double s_x_given_b = 0.0;
  double s_z_given_b = 0.0;
  double s_ab = 0.0;
  double s_b = 0.0;
  double s_a_given_b = 0.0;
  double c = 0.5;
};

/// S(rho_MB) - S(rho_memory), with M the Pauli measurement on `measured`
/// and the memory being the other qubit.
double conditional_entropy_after_measurement(const TwoQubitOperator& rho, PauliBasis basis,
                                             Subsystem measured = Subsystem::A);

/// max_{i,j} |<a_i|b_j>|^2.
double max_overlap_c(const QubitBasis& first, const QubitBasis& second);

double joint_entropy(const XState& s);
double conditional_entropy_AB(const XState& s);
double uncertainty_U(const XState& s);
double bound_B(const XState& s);

/// U - bound; throws ConsistencyError below -1e-9.
double tightness(double U, double bound);

/// Full bundle through the generic (eigensolver) route.
EurPoint evaluate_eur(const TwoQubitOperator& rho, Subsystem measured = Subsystem::A);
EurPoint evaluate_eur(const XState& s);

namespace closed_form {
/// H(x, y, y, z) - h(x + y).
double s_z_given_b(const XState& s);
/// 1 + h((1 + r)/2) - h(x + y), r = sqrt((x - z)^2 + 4 d^2).
double s_x_given_b(const XState& s);
/// h(x + y).
double s_b(const XState& s);
double joint_entropy(const XState& s);
EurPoint evaluate(const XState& s);
}  // namespace closed_form

}  // namespace ueur
