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

// Two-qubit density-matrix primitives: Pauli algebra, entropies, partial
// traces and local projective measurements. Basis order is |00>, |01>,
// |10>, |11> with subsystem A as the left tensor factor. Entropies are in bits.

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>

#include <Eigen/Dense>

namespace ueur {

using Complex = std::complex<double>;
using QubitOperator = Eigen::Matrix2cd;
using TwoQubitOperator = Eigen::Matrix4cd;
using QubitVector = Eigen::Vector2cd;

enum class Subsystem { A, B };
enum class PauliBasis { X, Y, Z };

inline constexpr double kProbabilityClamp = 1e-12;
inline constexpr double kHermiticityTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kPositivityTolerance = 1e-9;
/// Eigenvalues and outcome probabilities below this count as exactly zero.
inline constexpr double kNegligible = 1e-14;

constexpr Subsystem other(Subsystem s) { return s == Subsystem::A ? Subsystem::B : Subsystem::A; }

namespace pauli {
const QubitOperator& identity();
/// sigma(1) = X, sigma(2) = Y, sigma(3) = Z.
const QubitOperator& sigma(int index);
}  // namespace pauli

TwoQubitOperator kron(const QubitOperator& a, const QubitOperator& b);

/// Local operator acting on one subsystem, identity on the other.
TwoQubitOperator embed(const QubitOperator& op, Subsystem on);

/// Rank-1 projector pair along the Bloch direction (theta, phi).
struct BlochProjector {
  double theta = 0.0;
  double phi = 0.0;

  /// |n+> = (cos(theta/2), e^{i phi} sin(theta/2)), |n-> orthogonal to it.
  std::array<QubitVector, 2> vectors() const;
  QubitOperator projector(std::size_t outcome) const;
};

/// Orthonormal basis of a single qubit.
class QubitBasis {
 public:
  /// Throws DomainError unless the vectors are orthonormal to 1e-12.
  QubitBasis(const QubitVector& first, const QubitVector& second);

  static QubitBasis pauli(PauliBasis basis);
  static QubitBasis bloch(const BlochProjector& projector);

  const QubitVector& operator[](std::size_t k) const { return vectors_[k]; }
  QubitOperator projector(std::size_t k) const { return vectors_[k] * vectors_[k].adjoint(); }

 private:
  QubitBasis() = default;
  std::array<QubitVector, 2> vectors_;
};

/// -p log2 p - (1-p) log2(1-p). Inputs within 1e-12 outside [0,1] are clamped.
double binary_entropy(double p);

/// Shannon entropy of a probability vector with 0 log 0 = 0.
double shannon_entropy(std::span<const double> probabilities);

/// -sum l log2 l over a spectrum; entries below 1e-14 are dropped.
double entropy_of_spectrum(std::span<const double> eigenvalues);

/// Ascending eigenvalues of a Hermitian matrix (closed form for 2x2).
std::array<double, 2> spectrum(const QubitOperator& rho);
std::array<double, 4> spectrum(const TwoQubitOperator& rho);

/// Throws InvalidStateError unless rho is Hermitian, unit trace and positive.
void validate_state(const QubitOperator& rho);
void validate_state(const TwoQubitOperator& rho);
bool is_valid_state(const TwoQubitOperator& rho);

double von_neumann_entropy(const QubitOperator& rho);
double von_neumann_entropy(const TwoQubitOperator& rho);

/// Reduced state of the subsystem `keep`.
QubitOperator partial_trace(const TwoQubitOperator& rho, Subsystem keep);

struct MeasurementOutcome {
  double probability = 0.0;
  /// Normalized state of the unmeasured qubit; empty when the outcome has
  /// probability below 1e-14.
  std::optional<QubitOperator> conditional;
};

using MeasurementResult = std::array<MeasurementOutcome, 2>;

/// Projective measurement of `measured` in `basis`; conditionals live on the
/// other subsystem.
MeasurementResult measure_subsystem(const TwoQubitOperator& rho, Subsystem measured,
                                    const QubitBasis& basis);

/// Non-selective measurement: sum_k (P_k x I) rho (P_k x I) for measured = A.
TwoQubitOperator dephase(const TwoQubitOperator& rho, Subsystem measured, const QubitBasis& basis);

/// Max-norm of rho - rho^dagger.
double hermiticity_defect(const TwoQubitOperator& rho);

/// (1/2) || a - b ||_1 for Hermitian a, b.
double trace_distance(const TwoQubitOperator& a, const TwoQubitOperator& b);

/// Uhlmann fidelity (Tr sqrt(sqrt(a) b sqrt(a)))^2.
double fidelity(const TwoQubitOperator& a, const TwoQubitOperator& b);

namespace states {
/// |Psi-> = (|01> - |10>)/sqrt 2.
TwoQubitOperator singlet();
/// |b1 b2><b1 b2| with index = 2*b1 + b2.
TwoQubitOperator computational(int index);
TwoQubitOperator maximally_mixed();
}  // namespace states

namespace detail {
// Unvalidated kernels used on optimizer and integrator hot paths.
QubitOperator partial_trace(const TwoQubitOperator& rho, Subsystem keep);
MeasurementResult measure_subsystem(const TwoQubitOperator& rho, Subsystem measured,
                                    const QubitBasis& basis);
double qubit_entropy(const QubitOperator& rho);
}  // namespace detail

}  // namespace ueur
