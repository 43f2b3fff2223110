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

// Mutual information, classical correlation, quantum discord and the minimal
// missing information M for projective measurements on B.
//
// Conventions follow the measurement-on-B definitions:
//   M = min_{theta,phi} sum_k q_k S(rho_A^k),   J = S(rho_B) - M,
//   D = I - J, which equals -S(A|B) + M whenever S(rho_A) = S(rho_B).
// The second equality only holds for states with equal marginal entropies
// (all exchange-symmetric states, in particular every stationary X-state);
// quantum_discord_D refuses states where the two routes disagree.

#include <cstddef>
#include <functional>

#include "ueur/nelder_mead.hpp"
#include "ueur/qstate.hpp"

namespace ueur {

inline constexpr double kDiscordRouteTolerance = 1e-6;

struct OptimizerDiagnostics {
  double theta = 0.0;
  double phi = 0.0;
  /// Simplex iterations of the winning refinement.
  std::size_t iterations = 0;
  /// Objective evaluations summed over grid scan and all refinements.
  std::size_t evaluations = 0;
  /// Simplex diameter (rad) of the winning refinement at termination.
  double final_step = 0.0;
  /// min over theta in {0, pi/2}; informational only.
  double axial_value = 0.0;
};

struct MissingInformation {
  double value = 0.0;
  OptimizerDiagnostics optimizer;
};

struct CorrelationPoint {
  double mutual_info = 0.0;
  double classical_corr = 0.0;
  double discord = 0.0;
  double missing_info = 0.0;
  OptimizerDiagnostics optimizer;
};

struct SphereSearchOptions {
  std::size_t grid_theta = 64;
  std::size_t grid_phi = 64;
  std::size_t refine_from = 3;
  SimplexOptions simplex{};
};

using SphereObjective = std::function<double(const BlochProjector&)>;

/// Global minimum of `objective` over measurement directions: grid scan,
/// then simplex refinement from the best cells and from the axial directions.
/// Throws OptimizerError if a refinement exhausts its evaluation budget.
MissingInformation minimize_over_sphere(const SphereObjective& objective,
                                        const SphereSearchOptions& options = {});

double mutual_information(const TwoQubitOperator& rho);

/// sum_k q_k S(rho_A^k) after measuring B along `projector`.
double post_measurement_remainder(const TwoQubitOperator& rho, const BlochProjector& projector);

MissingInformation missing_information_M(const TwoQubitOperator& rho,
                                         const SphereSearchOptions& options = {});

double classical_correlation_J(const TwoQubitOperator& rho);
double quantum_discord_D(const TwoQubitOperator& rho);

/// log2(1/c) + M - D.
double bound_via_discord(double c, double missing_info, double discord);

/// I, J, D and M with one optimization; applies the route check of quantum_discord_D.
CorrelationPoint evaluate_correlations(const TwoQubitOperator& rho,
                                       const SphereSearchOptions& options = {});

/// Plain grid minimum over theta_i = i*pi/n, phi_j = 2*pi*j/n, i, j < n.
/// Reference for the optimizer; the grid contains the axial directions.
double brute_force_missing_information(const TwoQubitOperator& rho, std::size_t n);

namespace detail {
double remainder_unchecked(const TwoQubitOperator& rho, const BlochProjector& projector);
}  // namespace detail

}  // namespace ueur
