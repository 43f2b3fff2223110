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

// Markovian generator for two co-located detectors sharing one thermal bath:
//
//   d rho / d tau = -i [(w~/2) Sigma_3, rho]
//                   + sum_{ij} sum_{a,b in {A,B}} (C_ij / 2) (2 s_j^b rho s_i^a - {s_i^a s_j^b, rho})
//
// with Sigma_3 = s_3 x 1 + 1 x s_3 and a Kossakowski matrix built from the
// KMS-related rates gamma_+, gamma_-, gamma_0. The generator is stored as a
// real 16x16 matrix acting on Pauli coordinates r_k = Tr[(s_i x s_j) rho],
// k = 4i + j with s_0 = 1, so Hermiticity is preserved by construction.

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "ueur/qstate.hpp"

namespace ueur {

struct KossakowskiParams {
  double gamma_plus = 1.0;
  double gamma_minus = 0.0;
  double gamma_zero = 0.0;
  double omega_tilde = 1.0;

  /// Rates divided by gamma_plus (time measured in units of 1/gamma_plus).
  KossakowskiParams normalized() const;
};

/// Fourier transform of the field correlator at the two frequencies the rates need.
struct SpectralSamples {
  double g_omega = 0.0;
  double g_zero = 0.0;
};

/// gamma_+- = (1 +- e^{-beta omega}) G(omega), gamma_0 = G(0) - gamma_+/2.
/// beta = +infinity is the zero-temperature limit.
KossakowskiParams kms_rates(double omega, double beta, double g_omega, double g_zero);

/// Thermal response G(lambda) = lambda / (2 pi (1 - e^{-beta lambda})),
/// G(0) = 1 / (2 pi beta). Obeys G(lambda) = e^{beta lambda} G(-lambda).
double thermal_response(double lambda, double beta);
SpectralSamples default_wightman(double omega, double beta);

using KossakowskiMatrix = Eigen::Matrix3cd;

/// C_ij = (gamma_+/2) delta_ij - i (gamma_-/2) eps_ij3 + gamma_0 delta_3i delta_3j.
KossakowskiMatrix kossakowski_matrix(const KossakowskiParams& params);

/// Right-hand side of the master equation evaluated directly on a matrix.
TwoQubitOperator master_equation_rhs(double omega_tilde, const KossakowskiMatrix& C,
                                     const TwoQubitOperator& rho);

class Liouvillian {
 public:
  using Generator = Eigen::Matrix<double, 16, 16>;
  using Coordinates = Eigen::Matrix<double, 16, 1>;

  Liouvillian(const Generator& generator, double gamma_plus);

  const Generator& generator() const noexcept { return generator_; }
  double gamma_plus() const noexcept { return gamma_plus_; }

  TwoQubitOperator apply(const TwoQubitOperator& rho) const;
  Coordinates apply(const Coordinates& r) const { return generator_ * r; }

  /// max_l |Tr L[P_l]| / 4: the trace functional as a left null vector.
  double trace_preservation_residual() const;

  static Coordinates to_coordinates(const TwoQubitOperator& rho);
  static TwoQubitOperator from_coordinates(const Coordinates& r);

 private:
  Generator generator_;
  double gamma_plus_;
};

/// Throws ConsistencyError if the assembled generator is not trace preserving to 1e-12.
Liouvillian build_generator(double omega_tilde, const KossakowskiMatrix& C);

/// Frobenius norm of L[rho], divided by gamma_plus.
double fixed_point_residual(const Liouvillian& L, const TwoQubitOperator& rho);

/// Tr[rho S], S = sum_i s_i x s_i. Always in [-3, 1] for states.
double delta_of_state(const TwoQubitOperator& rho);
TwoQubitOperator correlation_observable();

struct TrajectorySample {
  double tau = 0.0;
  TwoQubitOperator rho;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  double step = 0.0;
  /// Largest |Tr rho - 1| seen after a raw step, before renormalization.
  double max_trace_drift = 0.0;
};

inline constexpr double kMaxStepTimesRate = 0.01;
inline constexpr double kIntegratorPositivityTolerance = 1e-6;

/// Classical RK4 with fixed step. Records tau = 0, every `stride` steps and
/// the final step. Throws StepSizeError if dtau * gamma_plus > 0.01 or an
/// eigenvalue drops below -1e-6.
Trajectory integrate(const Liouvillian& L, const TwoQubitOperator& rho0, double tau_max,
                     double dtau, std::size_t stride = 1);

}  // namespace ueur
