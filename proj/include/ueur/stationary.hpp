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

// Closed-form stationary X-state of two co-accelerated detectors coupled to
// the vacuum field. Natural units throughout; temperatures are Unruh
// temperatures T = a / (2 pi).

#include <array>

#include "ueur/qstate.hpp"

namespace ueur {

/// Detector gap, Unruh temperature and the derived ratio gamma = tanh(omega / 2T).
struct UnruhParams {
  double omega = 1.0;
  double temperature = 0.0;
  /// 1/T; +infinity at T = 0.
  double beta = 0.0;
  double gamma = 1.0;

  /// T = 0 is accepted and yields gamma = 1 exactly.
  static UnruhParams from_temperature(double omega, double temperature);
  static UnruhParams from_acceleration(double omega, double acceleration);
};

double gamma_from_temperature(double omega, double temperature);
double temperature_from_acceleration(double acceleration);

/// Tr[rho(0) S] with S = sum_i sigma_i x sigma_i; physical values lie in [-3, 1].
class InitialCorrelation {
 public:
  /// Throws DomainError outside [-3, 1].
  explicit InitialCorrelation(double delta0);

  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// Pauli-basis components of the symmetric stationary family:
/// <sigma_3 x 1> = <1 x sigma_3> = u, <sigma_1 x sigma_1> = <sigma_2 x sigma_2> = w,
/// <sigma_3 x sigma_3> = v.
struct BlochComponents {
  double u = 0.0;
  double w = 0.0;
  double v = 0.0;
};

/// Density matrix [[x,0,0,0],[0,y,d,0],[0,d,y,0],[0,0,0,z]].
struct XState {
  double x = 0.25;
  double y = 0.25;
  double z = 0.25;
  double d = 0.0;

  /// Unit trace, x, z >= 0 and y >= |d|, all to `tolerance`.
  bool is_valid(double tolerance = 1e-12) const;
};

BlochComponents bloch_components(InitialCorrelation delta0, double gamma);

/// Residuals of the three linear stationarity conditions; zero at the solution.
std::array<double, 3> algebraic_residuals(const BlochComponents& c, InitialCorrelation delta0,
                                          double gamma);

/// x = (1+2u+v)/4, y = (1-v)/4, z = (1-2u+v)/4, d = w/2.
XState xstate_from_bloch(const BlochComponents& c);

/// Throws ConsistencyError if the result violates an XState invariant.
XState stationary_xstate(InitialCorrelation delta0, double gamma);

TwoQubitOperator xstate_to_density(const XState& s);

/// Eigenvalues {x, z, y + d, y - d}.
std::array<double, 4> xstate_spectrum(const XState& s);

}  // namespace ueur
