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

// Reference implementations used only by tests. Nothing here calls into the
// library's optimizer, closed forms or integrator.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace oracle {

using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Cplx = std::complex<double>;

inline Mat4 random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Mat4 g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = Cplx{normal(rng), normal(rng)};
  Mat4 rho = g * g.adjoint();
  return rho / rho.trace().real();
}

inline Mat4 xstate(double x, double y, double z, double d) {
  Mat4 r = Mat4::Zero();
  r(0, 0) = x;
  r(1, 1) = y;
  r(2, 2) = y;
  r(3, 3) = z;
  r(1, 2) = r(2, 1) = d;
  return r;
}

/// Eigen-decomposition entropy in bits for any Hermitian matrix.
template <typename M>
double entropy(const M& rho) {
  Eigen::SelfAdjointEigenSolver<M> solver(rho, Eigen::EigenvaluesOnly);
  double h = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double l = solver.eigenvalues()(i);
    if (l > 1e-14) h -= l * std::log2(l);
  }
  return h;
}

/// Tr_B via explicit index sum.
inline Mat2 trace_out_b(const Mat4& rho) {
  Mat2 out = Mat2::Zero();
  for (int a = 0; a < 2; ++a)
    for (int ap = 0; ap < 2; ++ap)
      for (int b = 0; b < 2; ++b) out(a, ap) += rho(2 * a + b, 2 * ap + b);
  return out;
}

inline Mat2 trace_out_a(const Mat4& rho) {
  Mat2 out = Mat2::Zero();
  for (int b = 0; b < 2; ++b)
    for (int bp = 0; bp < 2; ++bp)
      for (int a = 0; a < 2; ++a) out(b, bp) += rho(2 * a + b, 2 * a + bp);
  return out;
}

/// sum_k q_k S(rho_A^k) for the projector pair along (theta, phi) on B,
/// using full 4x4 projectors (I x P_k) rho (I x P_k).
inline double remainder(const Mat4& rho, double theta, double phi) {
  const Cplx e = std::polar(1.0, phi);
  Eigen::Vector2cd v0(std::cos(theta / 2), e * std::sin(theta / 2));
  Eigen::Vector2cd v1(-std::conj(e) * std::sin(theta / 2), std::cos(theta / 2));
  double total = 0.0;
  for (const auto& v : {v0, v1}) {
    Mat4 p = Mat4::Zero();
    const Mat2 pk = v * v.adjoint();
    for (int i = 0; i < 2; ++i) p.block<2, 2>(2 * i, 2 * i) = pk;  // I x P_k
    const Mat4 m = p * rho * p;
    const double q = m.trace().real();
    if (q > 1e-14) total += q * entropy<Mat2>(trace_out_b(m) / q);
  }
  return total;
}

/// Grid minimum with theta_i = i pi / n, phi_j = 2 pi j / n.
inline double brute_force_m(const Mat4& rho, int n) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      best = std::min(best, remainder(rho, std::numbers::pi * i / n, 2 * std::numbers::pi * j / n));
  return best;
}

/// exp(t G) r through a complex eigendecomposition of the generator.
template <typename Gen, typename Vec>
Vec propagate_exact(const Gen& G, const Vec& r0, double t) {
  const Eigen::MatrixXd dense = G;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(dense);
  const Eigen::MatrixXcd V = solver.eigenvectors();
  const Eigen::VectorXcd lambda = solver.eigenvalues();
  const Eigen::VectorXcd coeff = V.partialPivLu().solve(Eigen::VectorXcd(r0.template cast<Cplx>()));
  Eigen::VectorXcd evolved = V * (lambda.array() * t).exp().matrix().cwiseProduct(coeff);
  return evolved.real();
}

}  // namespace oracle
