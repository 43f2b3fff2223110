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

#include "ueur/stationary.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ueur/errors.hpp"

namespace ueur {

namespace {

void require_gamma(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw DomainError("gamma must lie in [0, 1], got " + std::to_string(gamma));
  }
}

}  // namespace

double gamma_from_temperature(double omega, double temperature) {
  if (!(omega > 0.0)) throw DomainError("detector gap omega must be positive");
  if (!(temperature >= 0.0)) throw DomainError("temperature must be non-negative");
  if (temperature == 0.0) return 1.0;
  return std::tanh(omega / (2.0 * temperature));
}

double temperature_from_acceleration(double acceleration) {
  if (!(acceleration > 0.0)) throw DomainError("acceleration must be positive");
  return acceleration / (2.0 * std::numbers::pi);
}

UnruhParams UnruhParams::from_temperature(double omega, double temperature) {
  UnruhParams p;
  p.gamma = gamma_from_temperature(omega, temperature);
  p.omega = omega;
  p.temperature = temperature;
  p.beta = temperature == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / temperature;
  return p;
}

UnruhParams UnruhParams::from_acceleration(double omega, double acceleration) {
  return from_temperature(omega, temperature_from_acceleration(acceleration));
}

InitialCorrelation::InitialCorrelation(double delta0) : value_(delta0) {
  if (!(delta0 >= -3.0 && delta0 <= 1.0)) {
    throw DomainError("initial correlation Delta0 must lie in [-3, 1], got " +
                      std::to_string(delta0));
  }
}

bool XState::is_valid(double tolerance) const {
  return std::abs(x + 2.0 * y + z - 1.0) <= tolerance && x >= -tolerance && z >= -tolerance &&
         y - std::abs(d) >= -tolerance;
}

BlochComponents bloch_components(InitialCorrelation delta0, double gamma) {
  require_gamma(gamma);
  const double D = delta0.value();
  const double g2 = gamma * gamma;
  const double denom = 3.0 + g2;
  return BlochComponents{
      .u = -(3.0 + D) * gamma / denom,
      .w = (D - g2) / denom,
      .v = (D + (D + 2.0) * g2) / denom,
  };
}

std::array<double, 3> algebraic_residuals(const BlochComponents& c, InitialCorrelation delta0,
                                          double gamma) {
  const double D = delta0.value();
  const double g2 = gamma * gamma;
  const double k = 3.0 + g2;
  return {k * c.u + (3.0 + D) * gamma, k * c.w - (D - g2), k * c.v - (D + (D + 2.0) * g2)};
}

XState xstate_from_bloch(const BlochComponents& c) {
  return XState{
      .x = (1.0 + 2.0 * c.u + c.v) / 4.0,
      .y = (1.0 - c.v) / 4.0,
      .z = (1.0 - 2.0 * c.u + c.v) / 4.0,
      .d = c.w / 2.0,
  };
}

XState stationary_xstate(InitialCorrelation delta0, double gamma) {
  require_gamma(gamma);
  const double D = delta0.value();
  const double g2 = gamma * gamma;
  const double q = 4.0 * (3.0 + g2);
  const XState s{
      .x = (3.0 + D) * (gamma - 1.0) * (gamma - 1.0) / q,
      .y = (3.0 - D - (D + 1.0) * g2) / q,
      .z = (3.0 + D) * (gamma + 1.0) * (gamma + 1.0) / q,
      .d = (D - g2) / (2.0 * (3.0 + g2)),
  };
  if (!s.is_valid()) {
    throw ConsistencyError("stationary X-state violates positivity or normalization");
  }
  return s;
}

TwoQubitOperator xstate_to_density(const XState& s) {
  TwoQubitOperator rho = TwoQubitOperator::Zero();
  rho(0, 0) = s.x;
  rho(1, 1) = s.y;
  rho(2, 2) = s.y;
  rho(3, 3) = s.z;
  rho(1, 2) = s.d;
  rho(2, 1) = s.d;
  return rho;
}

std::array<double, 4> xstate_spectrum(const XState& s) { return {s.x, s.z, s.y + s.d, s.y - s.d}; }

}  // namespace ueur
