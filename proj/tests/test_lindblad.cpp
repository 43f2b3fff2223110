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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "support/oracles.hpp"
#include "ueur/errors.hpp"
#include "ueur/lindblad.hpp"
#include "ueur/stationary.hpp"

using namespace ueur;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Liouvillian thermal_generator(double omega, double temperature, double gamma_zero_shift = 0.0) {
  const double beta = 1.0 / temperature;
  const SpectralSamples g = default_wightman(omega, beta);
  KossakowskiParams p = kms_rates(omega, beta, g.g_omega, g.g_zero).normalized();
  p.gamma_zero += gamma_zero_shift;
  return build_generator(p.omega_tilde, kossakowski_matrix(p));
}

Liouvillian generator_for(double gamma, double gamma_plus, double gamma_zero) {
  const KossakowskiParams p{gamma_plus, gamma * gamma_plus, gamma_zero, 1.0};
  return build_generator(p.omega_tilde, kossakowski_matrix(p));
}

TwoQubitOperator stationary(double d0, double gamma) {
  return xstate_to_density(stationary_xstate(InitialCorrelation{d0}, gamma));
}

double max_entry(const TwoQubitOperator& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("kms_rates") {
  const KossakowskiParams p = kms_rates(1.0, 2.0, 1.0, 0.5);
  CHECK(p.gamma_plus == doctest::Approx(1.1353352832366128).epsilon(1e-14));
  CHECK(p.gamma_minus == doctest::Approx(0.8646647167633873).epsilon(1e-14));
  CHECK(p.gamma_zero == doctest::Approx(-0.0676676416183064).epsilon(1e-13));
  CHECK(p.omega_tilde == 1.0);

  const KossakowskiParams cold = kms_rates(1.0, kInf, 1.0, 0.0);
  CHECK(cold.gamma_minus / cold.gamma_plus == 1.0);
  const KossakowskiParams hot = kms_rates(1.0, 1e-12, 1.0, 0.0);
  CHECK(std::abs(hot.gamma_minus / hot.gamma_plus) < 1e-11);

  for (double beta : {0.1, 0.7, 2.0, 9.0}) {
    const KossakowskiParams q = kms_rates(1.3, beta, 0.4, 0.1);
    CHECK(q.gamma_minus / q.gamma_plus == doctest::Approx(std::tanh(0.5 * beta * 1.3)).epsilon(1e-12));
  }

  CHECK_THROWS_AS(kms_rates(1.0, 1.0, -0.1, 0.0), DomainError);
  CHECK_THROWS_AS(kms_rates(1.0, 1.0, 0.1, -0.1), DomainError);
  CHECK_THROWS_AS(kms_rates(0.0, 1.0, 0.1, 0.1), DomainError);
  CHECK_THROWS_AS(kms_rates(1.0, 0.0, 0.1, 0.1), DomainError);
}

TEST_CASE("default_wightman") {
  const double two_pi = 2.0 * std::numbers::pi;
  const SpectralSamples g = default_wightman(1.0, two_pi);
  CHECK(g.g_omega == doctest::Approx(0.15945271189978372).epsilon(1e-14));
  CHECK(g.g_zero == doctest::Approx(1.0 / (two_pi * two_pi)).epsilon(1e-14));

  for (double beta : {0.3, 1.0, 4.0}) {
    for (double lambda : {0.2, 1.0, 2.5}) {
      CHECK(thermal_response(lambda, beta) * std::exp(-beta * lambda) ==
            doctest::Approx(thermal_response(-lambda, beta)).epsilon(1e-13));
    }
  }
  CHECK(default_wightman(1.0, kInf).g_zero == 0.0);
  CHECK(default_wightman(1.0, kInf).g_omega == doctest::Approx(1.0 / two_pi));
}

TEST_CASE("kossakowski_matrix") {
  const KossakowskiMatrix iso = kossakowski_matrix({2.0, 0.0, 0.0, 1.0});
  CHECK((iso - KossakowskiMatrix::Identity()).cwiseAbs().maxCoeff() == 0.0);

  const KossakowskiMatrix c = kossakowski_matrix({1.0, 0.6, 0.25, 1.0});
  CHECK(c(0, 1) == Complex(0.0, -0.3));
  CHECK(c(1, 0) == Complex(0.0, 0.3));
  CHECK(c(2, 2) == Complex(0.75, 0.0));
  CHECK((c - c.adjoint()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("normalized rates") {
  const KossakowskiParams p = KossakowskiParams{4.0, 2.0, 1.0, 1.5}.normalized();
  CHECK(p.gamma_plus == 1.0);
  CHECK(p.gamma_minus == 0.5);
  CHECK(p.gamma_zero == 0.25);
  CHECK(p.omega_tilde == 1.5);
  CHECK_THROWS_AS((KossakowskiParams{0.0, 0.0, 0.0, 1.0}.normalized()), DomainError);
}

TEST_CASE("generator action") {
  const Liouvillian iso = generator_for(0.0, 1.0, 0.0);
  CHECK(max_entry(iso.apply(states::maximally_mixed())) < 1e-15);

  std::mt19937_64 rng(41);
  std::normal_distribution<double> normal;
  const Liouvillian L = generator_for(0.4, 2.0, 0.3);
  CHECK(L.trace_preservation_residual() <= 1e-12);
  const KossakowskiMatrix C = kossakowski_matrix({2.0, 0.8, 0.3, 1.0});
  for (int n = 0; n < 20; ++n) {
    TwoQubitOperator h;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) h(i, j) = Complex{normal(rng), normal(rng)};
    h = 0.5 * (h + h.adjoint()).eval();
    const TwoQubitOperator out = L.apply(h);
    CHECK(std::abs(out.trace()) < 1e-12);
    CHECK(max_entry(out - out.adjoint()) < 1e-12);
    CHECK(max_entry(out - master_equation_rhs(1.0, C, h)) < 1e-12);
  }
}

TEST_CASE("coordinate round trip") {
  std::mt19937_64 rng(43);
  const TwoQubitOperator rho = oracle::random_state(rng);
  const auto r = Liouvillian::to_coordinates(rho);
  CHECK(r(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(max_entry(Liouvillian::from_coordinates(r) - rho) < 1e-15);
}

TEST_CASE("fixed_point_residual") {
  for (double scale : {1.0, 3.7}) {
    for (double g0 : {0.0, 0.2, -0.3}) {
      for (double gamma : {0.0, 0.25, 0.6, 0.95, 1.0}) {
        const Liouvillian L = generator_for(gamma, scale, g0 * scale);
        for (double d0 : {-3.0, -2.0, -1.0, 0.0, 0.5, 1.0}) {
          CHECK(fixed_point_residual(L, stationary(d0, gamma)) <= 1e-10);
        }
        CHECK(fixed_point_residual(L, states::singlet()) <= 1e-10);
      }
    }
  }
  const Liouvillian L = generator_for(0.5, 1.0, 0.0);
  CHECK(fixed_point_residual(L, stationary(0.5, 0.7)) > 1e-3);
}

TEST_CASE("delta_of_state") {
  CHECK(delta_of_state(states::singlet()) == doctest::Approx(-3.0).epsilon(1e-14));
  CHECK(delta_of_state(states::computational(0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(delta_of_state(states::maximally_mixed())) < 1e-15);
  std::mt19937_64 rng(47);
  for (int n = 0; n < 50; ++n) {
    const double d = delta_of_state(oracle::random_state(rng));
    CHECK(d >= -3.0 - 1e-12);
    CHECK(d <= 1.0 + 1e-12);
  }
}

TEST_CASE("integrate keeps fixed points constant") {
  const Liouvillian L = thermal_generator(1.0, 1.0);
  const double gamma = gamma_from_temperature(1.0, 1.0);
  for (const TwoQubitOperator& rho0 : {stationary(0.5, gamma), stationary(-1.0, gamma), states::singlet()}) {
    const Trajectory t = integrate(L, rho0, 5.0, 0.01, 50);
    CHECK(t.samples.front().tau == 0.0);
    CHECK(t.samples.back().tau == doctest::Approx(5.0));
    for (const auto& s : t.samples) CHECK(max_entry(s.rho - rho0) <= 1e-9);
  }
}

TEST_CASE("integrate converges from the excited product state") {
  const Liouvillian L = thermal_generator(1.0, 0.8);
  const double gamma = gamma_from_temperature(1.0, 0.8);
  const TwoQubitOperator rho0 = states::computational(0);
  const TwoQubitOperator target = stationary(delta_of_state(rho0), gamma);

  const Trajectory t = integrate(L, rho0, 50.0, 0.01, 100);
  CHECK(trace_distance(t.samples.back().rho, target) < 1e-6);
  CHECK(t.max_trace_drift <= 1e-10);

  const auto exact = oracle::propagate_exact(L.generator(), Liouvillian::to_coordinates(rho0), 50.0);
  CHECK(max_entry(Liouvillian::from_coordinates(exact) - t.samples.back().rho) < 1e-9);

  double previous = std::numeric_limits<double>::infinity();
  for (const auto& s : t.samples) {
    CHECK(std::abs(delta_of_state(s.rho) - 1.0) <= 1e-8);
    CHECK(std::abs(s.rho.trace() - 1.0) <= 1e-12);
    if (s.tau >= 1.0) {
      const double dist = trace_distance(s.rho, target);
      CHECK(dist <= previous + 1e-12);
      previous = dist;
    }
  }
}

TEST_CASE("integrate matches the exact propagator at fourth order") {
  std::mt19937_64 rng(53);
  const Liouvillian L = thermal_generator(1.0, 2.0, 0.1);
  const auto error_at = [&L](const TwoQubitOperator& rho0, double dtau) {
    const Trajectory t = integrate(L, rho0, 3.0, dtau, 1);
    double worst = 0.0;
    for (const auto& s : t.samples) {
      const auto exact = oracle::propagate_exact(L.generator(), Liouvillian::to_coordinates(rho0), s.tau);
      worst = std::max(worst, max_entry(Liouvillian::from_coordinates(exact) - s.rho));
    }
    return worst;
  };
  for (int n = 0; n < 3; ++n) {
    const TwoQubitOperator rho0 = oracle::random_state(rng);
    const double coarse = error_at(rho0, 0.01);
    const double fine = error_at(rho0, 0.005);
    CHECK(coarse < 1e-8);
    CHECK(fine < 1e-9);
    CHECK(coarse / fine > 12.0);
  }
}

TEST_CASE("integrate guards its step size") {
  const Liouvillian L = generator_for(0.5, 1.0, 0.0);
  CHECK_THROWS_AS(integrate(L, states::singlet(), 1.0, 0.02), StepSizeError);
  const Liouvillian fast = generator_for(0.5, 10.0, 0.0);
  CHECK_THROWS_AS(integrate(fast, states::singlet(), 1.0, 0.002), StepSizeError);
  CHECK_NOTHROW(integrate(fast, states::singlet(), 0.01, 0.001));
}
