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

#include "ueur/lindblad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ueur/errors.hpp"

namespace ueur {

namespace {

constexpr Complex kI{0.0, 1.0};

/// Pauli product basis P_k = s_i x s_j, k = 4i + j, s_0 = 1.
const std::array<TwoQubitOperator, 16>& pauli_products() {
  static const std::array<TwoQubitOperator, 16> basis = [] {
    std::array<TwoQubitOperator, 16> out;
    const auto s = [](int i) -> const QubitOperator& {
      return i == 0 ? pauli::identity() : pauli::sigma(i);
    };
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out[static_cast<std::size_t>(4 * i + j)] = kron(s(i), s(j));
    return out;
  }();
  return basis;
}

/// s_i on detector a, i = 1..3.
TwoQubitOperator local_sigma(int i, Subsystem a) { return embed(pauli::sigma(i), a); }

}  // namespace

KossakowskiParams KossakowskiParams::normalized() const {
  if (!(gamma_plus > 0.0)) throw DomainError("gamma_plus must be positive to normalize");
  return {1.0, gamma_minus / gamma_plus, gamma_zero / gamma_plus, omega_tilde};
}

KossakowskiParams kms_rates(double omega, double beta, double g_omega, double g_zero) {
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  if (!(beta > 0.0)) throw DomainError("beta must be positive");
  if (!(g_omega >= 0.0) || !(g_zero >= 0.0)) throw DomainError("spectral samples must be non-negative");
  const double boltzmann = std::exp(-beta * omega);
  KossakowskiParams p;
  p.gamma_plus = (1.0 + boltzmann) * g_omega;
  p.gamma_minus = (1.0 - boltzmann) * g_omega;
  p.gamma_zero = g_zero - 0.5 * p.gamma_plus;
  p.omega_tilde = omega;
  return p;
}

double thermal_response(double lambda, double beta) {
  if (!(beta > 0.0)) throw DomainError("beta must be positive");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (lambda == 0.0) return std::isinf(beta) ? 0.0 : 1.0 / (two_pi * beta);
  if (std::isinf(beta)) return lambda > 0.0 ? lambda / two_pi : 0.0;
  return lambda / (two_pi * -std::expm1(-beta * lambda));
}

SpectralSamples default_wightman(double omega, double beta) {
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  return {thermal_response(omega, beta), thermal_response(0.0, beta)};
}

KossakowskiMatrix kossakowski_matrix(const KossakowskiParams& params) {
  KossakowskiMatrix C = KossakowskiMatrix::Zero();
  for (int i = 0; i < 3; ++i) C(i, i) = 0.5 * params.gamma_plus;
  // eps_{ij3}: eps_{123} = +1, eps_{213} = -1.
  C(0, 1) = -kI * 0.5 * params.gamma_minus;
  C(1, 0) = kI * 0.5 * params.gamma_minus;
  C(2, 2) += params.gamma_zero;
  return C;
}

TwoQubitOperator master_equation_rhs(double omega_tilde, const KossakowskiMatrix& C,
                                     const TwoQubitOperator& rho) {
  const TwoQubitOperator sigma3_total =
      local_sigma(3, Subsystem::A) + local_sigma(3, Subsystem::B);
  const TwoQubitOperator h = 0.5 * omega_tilde * sigma3_total;
  TwoQubitOperator out = -kI * (h * rho - rho * h);

  constexpr std::array<Subsystem, 2> detectors{Subsystem::A, Subsystem::B};
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const Complex c = C(i - 1, j - 1);
      if (c == Complex{0.0, 0.0}) continue;
      for (Subsystem a : detectors) {
        const TwoQubitOperator si = local_sigma(i, a);
        for (Subsystem b : detectors) {
          const TwoQubitOperator sj = local_sigma(j, b);
          const TwoQubitOperator prod = si * sj;
          out += 0.5 * c * (2.0 * sj * rho * si - prod * rho - rho * prod);
        }
      }
    }
  }
  return out;
}

Liouvillian::Liouvillian(const Generator& generator, double gamma_plus)
    : generator_(generator), gamma_plus_(gamma_plus) {}

TwoQubitOperator Liouvillian::apply(const TwoQubitOperator& rho) const {
  return from_coordinates(generator_ * to_coordinates(rho));
}

double Liouvillian::trace_preservation_residual() const { return generator_.row(0).cwiseAbs().maxCoeff(); }

Liouvillian::Coordinates Liouvillian::to_coordinates(const TwoQubitOperator& rho) {
  const auto& basis = pauli_products();
  Coordinates r;
  for (std::size_t k = 0; k < 16; ++k) r(static_cast<Eigen::Index>(k)) = (basis[k] * rho).trace().real();
  return r;
}

TwoQubitOperator Liouvillian::from_coordinates(const Coordinates& r) {
  const auto& basis = pauli_products();
  TwoQubitOperator rho = TwoQubitOperator::Zero();
  for (std::size_t k = 0; k < 16; ++k) rho += 0.25 * r(static_cast<Eigen::Index>(k)) * basis[k];
  return rho;
}

Liouvillian build_generator(double omega_tilde, const KossakowskiMatrix& C) {
  const auto& basis = pauli_products();
  Liouvillian::Generator g;
  double imaginary_leak = 0.0;
  for (std::size_t l = 0; l < 16; ++l) {
    const TwoQubitOperator image = master_equation_rhs(omega_tilde, C, basis[l]);
    for (std::size_t k = 0; k < 16; ++k) {
      const Complex entry = 0.25 * (basis[k] * image).trace();
      g(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) = entry.real();
      imaginary_leak = std::max(imaginary_leak, std::abs(entry.imag()));
    }
  }
  const double gamma_plus = 2.0 * C(0, 0).real();
  const Liouvillian L(g, gamma_plus);
  const double scale = std::max(1.0, std::abs(gamma_plus));
  if (L.trace_preservation_residual() > 1e-12 * scale) {
    throw ConsistencyError("generator is not trace preserving (residual " +
                           std::to_string(L.trace_preservation_residual()) + ")");
  }
  if (imaginary_leak > 1e-12 * scale) {
    throw ConsistencyError("generator does not preserve Hermiticity");
  }
  return L;
}

double fixed_point_residual(const Liouvillian& L, const TwoQubitOperator& rho) {
  return L.apply(rho).norm() / L.gamma_plus();
}

TwoQubitOperator correlation_observable() {
  TwoQubitOperator s = TwoQubitOperator::Zero();
  for (int i = 1; i <= 3; ++i) s += kron(pauli::sigma(i), pauli::sigma(i));
  return s;
}

double delta_of_state(const TwoQubitOperator& rho) {
  static const TwoQubitOperator s = correlation_observable();
  return (rho * s).trace().real();
}

Trajectory integrate(const Liouvillian& L, const TwoQubitOperator& rho0, double tau_max,
                     double dtau, std::size_t stride) {
  if (!(dtau > 0.0)) throw DomainError("dtau must be positive");
  if (!(tau_max >= 0.0)) throw DomainError("tau_max must be non-negative");
  if (stride == 0) throw DomainError("output stride must be at least 1");
  if (dtau * L.gamma_plus() > kMaxStepTimesRate) {
    throw StepSizeError("dtau * gamma_plus = " + std::to_string(dtau * L.gamma_plus()) +
                        " exceeds 0.01; reduce dtau");
  }
  validate_state(rho0);

  Trajectory traj;
  traj.step = dtau;
  const auto steps = static_cast<std::size_t>(std::ceil(tau_max / dtau - 1e-9));
  traj.samples.reserve(steps / stride + 2);

  Liouvillian::Coordinates r = Liouvillian::to_coordinates(0.5 * (rho0 + rho0.adjoint()));
  traj.samples.push_back({0.0, Liouvillian::from_coordinates(r)});

  const auto& G = L.generator();
  for (std::size_t n = 1; n <= steps; ++n) {
    const double tau_prev = static_cast<double>(n - 1) * dtau;
    const double tau = n == steps ? tau_max : static_cast<double>(n) * dtau;
    const double h = tau - tau_prev;
    const Liouvillian::Coordinates k1 = G * r;
    const Liouvillian::Coordinates k2 = G * (r + 0.5 * h * k1);
    const Liouvillian::Coordinates k3 = G * (r + 0.5 * h * k2);
    const Liouvillian::Coordinates k4 = G * (r + h * k3);
    r += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    // r_0 = Tr[rho] in this basis; renormalize the whole vector.
    traj.max_trace_drift = std::max(traj.max_trace_drift, std::abs(r(0) - 1.0));
    r /= r(0);

    const TwoQubitOperator rho = Liouvillian::from_coordinates(r);
    const auto ev = spectrum(rho);
    if (ev[0] < -kIntegratorPositivityTolerance) {
      throw StepSizeError("state lost positivity at tau = " + std::to_string(tau) +
                          " (eigenvalue " + std::to_string(ev[0]) + "); reduce dtau");
    }
    if (n % stride == 0 || n == steps) traj.samples.push_back({tau, rho});
  }
  return traj;
}

}  // namespace ueur
