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

#include "ueur/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ueur/errors.hpp"

namespace ueur {

namespace {

constexpr Complex kI{0.0, 1.0};

double xlog2x(double p) { return p < kNegligible ? 0.0 : p * std::log2(p); }

template <typename Matrix>
void validate_generic(const Matrix& rho, std::span<const double> eigenvalues) {
  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (!(herm <= kHermiticityTolerance)) {
    throw InvalidStateError("state is not Hermitian (defect " + std::to_string(herm) + ")");
  }
  const Complex tr = rho.trace();
  if (!(std::abs(tr - Complex{1.0, 0.0}) <= kTraceTolerance)) {
    throw InvalidStateError("state trace " + std::to_string(tr.real()) + " differs from 1");
  }
  const double lowest = *std::min_element(eigenvalues.begin(), eigenvalues.end());
  if (!(lowest >= -kPositivityTolerance)) {
    throw InvalidStateError("state has negative eigenvalue " + std::to_string(lowest));
  }
}

}  // namespace

namespace pauli {

const QubitOperator& identity() {
  static const QubitOperator id = QubitOperator::Identity();
  return id;
}

const QubitOperator& sigma(int index) {
  static const std::array<QubitOperator, 3> matrices = [] {
    std::array<QubitOperator, 3> m;
    m[0] << 0.0, 1.0, 1.0, 0.0;
    m[1] << 0.0, -kI, kI, 0.0;
    m[2] << 1.0, 0.0, 0.0, -1.0;
    return m;
  }();
  if (index < 1 || index > 3) throw DomainError("Pauli index must be 1, 2 or 3");
  return matrices[static_cast<std::size_t>(index - 1)];
}

}  // namespace pauli

TwoQubitOperator kron(const QubitOperator& a, const QubitOperator& b) {
  TwoQubitOperator out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

TwoQubitOperator embed(const QubitOperator& op, Subsystem on) {
  return on == Subsystem::A ? kron(op, pauli::identity()) : kron(pauli::identity(), op);
}

std::array<QubitVector, 2> BlochProjector::vectors() const {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const Complex phase = std::polar(1.0, phi);
  QubitVector up(c, phase * s);
  QubitVector down(-std::conj(phase) * s, c);
  return {up, down};
}

QubitOperator BlochProjector::projector(std::size_t outcome) const {
  const auto v = vectors();
  return v.at(outcome) * v.at(outcome).adjoint();
}

QubitBasis::QubitBasis(const QubitVector& first, const QubitVector& second) : vectors_{first, second} {
  const double n0 = std::abs(first.squaredNorm() - 1.0);
  const double n1 = std::abs(second.squaredNorm() - 1.0);
  const double overlap = std::abs(first.dot(second));
  if (n0 > 1e-12 || n1 > 1e-12 || overlap > 1e-12) {
    throw DomainError("measurement basis is not orthonormal");
  }
}

QubitBasis QubitBasis::pauli(PauliBasis basis) {
  const double h = 1.0 / std::sqrt(2.0);
  QubitBasis out;
  switch (basis) {
    case PauliBasis::X:
      out.vectors_ = {QubitVector(h, h), QubitVector(h, -h)};
      break;
    case PauliBasis::Y:
      out.vectors_ = {QubitVector(h, kI * h), QubitVector(h, -kI * h)};
      break;
    case PauliBasis::Z:
      out.vectors_ = {QubitVector(1.0, 0.0), QubitVector(0.0, 1.0)};
      break;
  }
  return out;
}

QubitBasis QubitBasis::bloch(const BlochProjector& projector) {
  QubitBasis out;
  out.vectors_ = projector.vectors();
  return out;
}

double binary_entropy(double p) {
  if (!(p >= -kProbabilityClamp && p <= 1.0 + kProbabilityClamp)) {
    throw DomainError("binary_entropy: probability " + std::to_string(p) + " outside [0, 1]");
  }
  p = std::clamp(p, 0.0, 1.0);
  return -xlog2x(p) - xlog2x(1.0 - p);
}

double shannon_entropy(std::span<const double> probabilities) {
  double h = 0.0;
  for (double p : probabilities) {
    if (!(p >= -kProbabilityClamp && p <= 1.0 + kProbabilityClamp)) {
      throw DomainError("shannon_entropy: probability outside [0, 1]");
    }
    h -= xlog2x(std::clamp(p, 0.0, 1.0));
  }
  return h;
}

double entropy_of_spectrum(std::span<const double> eigenvalues) {
  double h = 0.0;
  for (double l : eigenvalues) h -= xlog2x(l);
  return h;
}

std::array<double, 2> spectrum(const QubitOperator& rho) {
  const double a = rho(0, 0).real();
  const double d = rho(1, 1).real();
  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), std::abs(rho(0, 1)));
  return {mean - radius, mean + radius};
}

std::array<double, 4> spectrum(const TwoQubitOperator& rho) {
  const Eigen::SelfAdjointEigenSolver<TwoQubitOperator> solver(rho, Eigen::EigenvaluesOnly);
  const Eigen::Vector4d ev = solver.eigenvalues();
  return {ev(0), ev(1), ev(2), ev(3)};
}

void validate_state(const QubitOperator& rho) {
  const auto ev = spectrum(rho);
  validate_generic(rho, ev);
}

void validate_state(const TwoQubitOperator& rho) {
  const auto ev = spectrum(rho);
  validate_generic(rho, ev);
}

bool is_valid_state(const TwoQubitOperator& rho) {
  try {
    validate_state(rho);
    return true;
  } catch (const InvalidStateError&) {
    return false;
  }
}

double von_neumann_entropy(const QubitOperator& rho) {
  const auto ev = spectrum(rho);
  validate_generic(rho, ev);
  return entropy_of_spectrum(ev);
}

double von_neumann_entropy(const TwoQubitOperator& rho) {
  const auto ev = spectrum(rho);
  validate_generic(rho, ev);
  return entropy_of_spectrum(ev);
}

QubitOperator partial_trace(const TwoQubitOperator& rho, Subsystem keep) {
  validate_state(rho);
  return detail::partial_trace(rho, keep);
}

MeasurementResult measure_subsystem(const TwoQubitOperator& rho, Subsystem measured,
                                    const QubitBasis& basis) {
  validate_state(rho);
  return detail::measure_subsystem(rho, measured, basis);
}

TwoQubitOperator dephase(const TwoQubitOperator& rho, Subsystem measured, const QubitBasis& basis) {
  TwoQubitOperator out = TwoQubitOperator::Zero();
  for (std::size_t k = 0; k < 2; ++k) {
    const TwoQubitOperator p = embed(basis.projector(k), measured);
    out += p * rho * p;
  }
  return out;
}

double hermiticity_defect(const TwoQubitOperator& rho) {
  return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

double trace_distance(const TwoQubitOperator& a, const TwoQubitOperator& b) {
  const TwoQubitOperator diff = a - b;
  const TwoQubitOperator herm = 0.5 * (diff + diff.adjoint());
  double total = 0.0;
  for (double l : spectrum(herm)) total += std::abs(l);
  return 0.5 * total;
}

double fidelity(const TwoQubitOperator& a, const TwoQubitOperator& b) {
  const auto psd_sqrt = [](const TwoQubitOperator& m) {
    const Eigen::SelfAdjointEigenSolver<TwoQubitOperator> solver(0.5 * (m + m.adjoint()));
    const Eigen::Vector4d roots = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return TwoQubitOperator(solver.eigenvectors() * roots.asDiagonal() *
                            solver.eigenvectors().adjoint());
  };
  const TwoQubitOperator root_a = psd_sqrt(a);
  const TwoQubitOperator inner = psd_sqrt(root_a * b * root_a);
  const double f = inner.trace().real();
  return f * f;
}

namespace states {

TwoQubitOperator singlet() {
  Eigen::Vector4cd psi(0.0, 1.0, -1.0, 0.0);
  psi /= std::sqrt(2.0);
  return psi * psi.adjoint();
}

TwoQubitOperator computational(int index) {
  if (index < 0 || index > 3) throw DomainError("computational basis index must be in 0..3");
  TwoQubitOperator out = TwoQubitOperator::Zero();
  out(index, index) = 1.0;
  return out;
}

TwoQubitOperator maximally_mixed() { return TwoQubitOperator::Identity() / 4.0; }

}  // namespace states

namespace detail {

QubitOperator partial_trace(const TwoQubitOperator& rho, Subsystem keep) {
  QubitOperator out = QubitOperator::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        out(i, j) += keep == Subsystem::A ? rho(2 * i + k, 2 * j + k) : rho(2 * k + i, 2 * k + j);
      }
    }
  }
  return out;
}

MeasurementResult measure_subsystem(const TwoQubitOperator& rho, Subsystem measured,
                                    const QubitBasis& basis) {
  // <v|_m rho |v>_m contracted directly; index(m, k) addresses the measured
  // qubit in state m and the kept qubit in state k.
  const auto index = [measured](int m, int k) { return measured == Subsystem::A ? 2 * m + k : 2 * k + m; };
  MeasurementResult result;
  for (std::size_t outcome = 0; outcome < 2; ++outcome) {
    const QubitVector& v = basis[outcome];
    QubitOperator unnormalized = QubitOperator::Zero();
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        Complex acc{0.0, 0.0};
        for (int m = 0; m < 2; ++m)
          for (int n = 0; n < 2; ++n) acc += std::conj(v(m)) * v(n) * rho(index(m, i), index(n, j));
        unnormalized(i, j) = acc;
      }
    }
    const double prob = unnormalized.trace().real();
    if (prob < kNegligible) {
      result[outcome] = MeasurementOutcome{0.0, std::nullopt};
    } else {
      QubitOperator cond = unnormalized / prob;
      cond = 0.5 * (cond + cond.adjoint()).eval();
      result[outcome] = MeasurementOutcome{prob, cond};
    }
  }
  return result;
}

double qubit_entropy(const QubitOperator& rho) { return entropy_of_spectrum(spectrum(rho)); }

}  // namespace detail

}  // namespace ueur
