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

#include "ueur/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "ueur/correlations.hpp"
#include "ueur/eur.hpp"
#include "ueur/lindblad.hpp"
#include "ueur/stationary.hpp"
#include "ueur/sweep.hpp"

namespace ueur {

namespace {

constexpr double kPi = std::numbers::pi;

class Suite {
 public:
  explicit Suite(const VerifyOptions& options) : options_(options) {}

  XState make_state(double delta0, double gamma) const {
    XState s = stationary_xstate(InitialCorrelation{delta0}, gamma);
    if (options_.flip_d_sign) s.d = -s.d;
    return s;
  }

  void add(std::string module, std::string name, double residual, double tolerance) {
    report_.checks.push_back(
        {std::move(module), std::move(name), residual, tolerance, residual <= tolerance});
  }

  VerifyReport take() { return std::move(report_); }

 private:
  VerifyOptions options_;
  VerifyReport report_;
};

TwoQubitOperator random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  TwoQubitOperator g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = Complex{normal(rng), normal(rng)};
  TwoQubitOperator rho = g * g.adjoint();
  return rho / rho.trace().real();
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

void check_qstate(Suite& suite) {
  std::mt19937_64 rng(20260101);
  double chain = 0.0;
  double reassembly = 0.0;
  double range = 0.0;
  double product = 0.0;
  for (int n = 0; n < 40; ++n) {
    const TwoQubitOperator rho = random_state(rng);
    range = std::max({range, -von_neumann_entropy(rho), von_neumann_entropy(rho) - 2.0});
    const std::vector<QubitBasis> bases{QubitBasis::pauli(PauliBasis::X), QubitBasis::pauli(PauliBasis::Z),
                                        QubitBasis::bloch({0.3 * n, 0.7 * n})};
    for (Subsystem side : {Subsystem::A, Subsystem::B}) {
      for (const auto& basis : bases) {
        const auto outcomes = measure_subsystem(rho, side, basis);
        const TwoQubitOperator dephased = dephase(rho, side, basis);
        TwoQubitOperator rebuilt = TwoQubitOperator::Zero();
        std::array<double, 2> probs{};
        double cond = 0.0;
        for (std::size_t k = 0; k < 2; ++k) {
          probs[k] = outcomes[k].probability;
          if (!outcomes[k].conditional) continue;
          cond += probs[k] * von_neumann_entropy(*outcomes[k].conditional);
          const QubitOperator pk = basis.projector(k);
          rebuilt += side == Subsystem::A ? kron(pk, probs[k] * *outcomes[k].conditional)
                                          : kron(probs[k] * *outcomes[k].conditional, pk);
        }
        chain = std::max(chain, std::abs(von_neumann_entropy(dephased) - shannon_entropy(probs) - cond));
        reassembly = std::max(reassembly, (rebuilt - dephased).cwiseAbs().maxCoeff());
      }
    }
    const QubitOperator a = partial_trace(rho, Subsystem::A);
    const QubitOperator b = partial_trace(rho, Subsystem::B);
    const TwoQubitOperator prod = kron(a, b);
    product = std::max({product, (partial_trace(prod, Subsystem::A) - a).cwiseAbs().maxCoeff(),
                        (partial_trace(prod, Subsystem::B) - b).cwiseAbs().maxCoeff()});
  }
  suite.add("qstate", "measurement entropy chain rule", chain, 1e-10);
  suite.add("qstate", "conditionals reassemble dephased state", reassembly, 1e-12);
  suite.add("qstate", "entropy within [0, log2 dim]", range, 1e-12);
  suite.add("qstate", "partial trace of product state", product, 1e-14);
}

void check_stationary(Suite& suite) {
  double residual = 0.0;
  double bloch_map = 0.0;
  double positivity = 0.0;
  double monotone = 0.0;
  double high_t = 0.0;
  double singlet_drift = 0.0;
  const XState singlet_ref = suite.make_state(-3.0, 0.0);
  const auto temps = linspace(0.01, 4.0, 200);
  for (double delta0 : linspace(-3.0, 1.0, 17)) {
    const InitialCorrelation dc{delta0};
    for (double gamma : linspace(0.0, 1.0, 51)) {
      const BlochComponents c = bloch_components(dc, gamma);
      for (double r : algebraic_residuals(c, dc, gamma)) residual = std::max(residual, std::abs(r));
      const XState s = suite.make_state(delta0, gamma);
      const XState m = xstate_from_bloch(c);
      bloch_map = std::max({bloch_map, std::abs(s.x - m.x), std::abs(s.y - m.y), std::abs(s.z - m.z),
                            std::abs(s.d - m.d)});
      positivity = std::max(positivity, std::abs(s.d) - s.y);
      if (delta0 == -3.0) {
        singlet_drift = std::max({singlet_drift, std::abs(s.x - singlet_ref.x), std::abs(s.y - singlet_ref.y),
                                  std::abs(s.z - singlet_ref.z), std::abs(s.d - singlet_ref.d)});
      }
    }
    const XState hot = suite.make_state(delta0, 0.0);
    high_t = std::max(high_t, std::abs(hot.x - hot.z));
    if (delta0 > -3.0) {
      std::vector<double> xs;
      std::vector<double> zs;
      for (double t : temps) {
        const XState s = suite.make_state(delta0, gamma_from_temperature(1.0, t));
        xs.push_back(s.x);
        zs.push_back(s.z);
      }
      monotone = std::max({monotone, shape::worst_decrease(xs), shape::worst_increase(zs)});
    }
  }
  suite.add("stationary", "algebraic residuals vanish", residual, 1e-12);
  suite.add("stationary", "Bloch components map to X-state", bloch_map, 1e-12);
  suite.add("stationary", "positivity margin y - |d|", positivity, 1e-12);
  suite.add("stationary", "x increasing, z decreasing in T", monotone, shape::kSlack);
  suite.add("stationary", "gamma -> 0 gives x = z", high_t, 1e-15);
  suite.add("stationary", "Delta0 = -3 independent of gamma", singlet_drift, 1e-15);
}

void check_eur(Suite& suite) {
  double violation = 0.0;
  double routes = 0.0;
  double symmetry = 0.0;
  for (double delta0 : {-3.0, -2.0, -1.0, 0.0, 0.5, 1.0}) {
    for (double t : linspace(0.02, 4.0, 200)) {
      const XState s = suite.make_state(delta0, gamma_from_temperature(1.0, t));
      const TwoQubitOperator rho = xstate_to_density(s);
      const EurPoint generic = evaluate_eur(rho);
      const EurPoint fast = closed_form::evaluate(s);
      violation = std::max(violation, generic.bound - generic.U);
      routes = std::max({routes, std::abs(generic.s_x_given_b - fast.s_x_given_b),
                         std::abs(generic.s_z_given_b - fast.s_z_given_b),
                         std::abs(generic.s_ab - fast.s_ab)});
      symmetry = std::max(symmetry, std::abs(evaluate_eur(rho, Subsystem::B).U - generic.U));
    }
  }
  suite.add("eur", "U >= bound on the Delta0 x T grid", violation, kTightnessTolerance);
  suite.add("eur", "closed form equals eigensolver route", routes, 1e-10);
  suite.add("eur", "A <-> B exchange leaves U unchanged", symmetry, 1e-10);
}

struct Curves {
  std::vector<double> U, tightness, D, M;
};

Curves curves_from(const std::vector<SweepRow>& rows) {
  Curves c;
  for (const auto& r : rows) {
    c.U.push_back(r.U);
    c.tightness.push_back(r.tightness);
    c.D.push_back(r.D);
    c.M.push_back(r.M);
  }
  return c;
}

/// Residual for "has an interior minimum": 0 when found, otherwise 1.
double interior_residual(std::span<const double> c) { return shape::interior_minimum(c).found ? 0.0 : 1.0; }

void check_sweep_and_correlations(Suite& suite) {
  const SweepConfig config;
  const auto grid = temperature_grid(config);
  double identity = 0.0;
  double discord_floor = 0.0;
  std::vector<Curves> curves;
  for (double delta0 : config.delta0_list) {
    std::vector<SweepRow> rows;
    for (double t : grid) {
      const XState s = suite.make_state(delta0, gamma_from_temperature(config.omega, t));
      const TwoQubitOperator rho = xstate_to_density(s);
      const EurPoint e = evaluate_eur(rho);
      const CorrelationPoint c = evaluate_correlations(rho);
      SweepRow r;
      r.T = t;
      r.U = e.U;
      r.bound = e.bound;
      r.tightness = e.tightness;
      r.D = c.discord;
      r.M = c.missing_info;
      identity = std::max(identity, std::abs(e.bound - bound_via_discord(0.5, c.missing_info, c.discord)));
      discord_floor = std::max(discord_floor, -c.discord);
      rows.push_back(r);
    }
    curves.push_back(curves_from(rows));
  }
  suite.add("correlations", "bound = log2(1/c) + M - D", identity, kBoundIdentityTolerance);
  suite.add("correlations", "discord non-negative", discord_floor, 1e-9);

  // Default Delta0 list is {-1, 0.5, 1}.
  suite.add("eur", "Delta0 = -1: U nondecreasing in T", shape::worst_decrease(curves[0].U), shape::kSlack);
  suite.add("eur", "Delta0 = -1: tightness nonincreasing", shape::worst_increase(curves[0].tightness), shape::kSlack);
  suite.add("eur", "Delta0 = 0.5: tightness interior minimum", interior_residual(curves[1].tightness), 0.0);
  suite.add("eur", "Delta0 = 1: tightness nondecreasing", shape::worst_decrease(curves[2].tightness), shape::kSlack);
  suite.add("eur", "Delta0 = 1: tightness starts at 0", std::abs(curves[2].tightness.front()), 1e-10);
  suite.add("correlations", "Delta0 = -1: D nonincreasing", shape::worst_increase(curves[0].D), shape::kSlack);
  suite.add("correlations", "Delta0 = -1: M nondecreasing", shape::worst_decrease(curves[0].M), shape::kSlack);
  suite.add("correlations", "Delta0 = 0.5: D interior minimum", interior_residual(curves[1].D), 0.0);
  suite.add("correlations", "Delta0 = 1: D nondecreasing", shape::worst_decrease(curves[2].D), shape::kSlack);
  suite.add("correlations", "Delta0 = 1: M nondecreasing", shape::worst_decrease(curves[2].M), shape::kSlack);

  double relabel = 0.0;
  double brute = 0.0;
  const std::array<std::pair<double, double>, 3> spots{{{-1.0, 0.7}, {0.5, 0.5}, {1.0, 2.3}}};
  for (const auto& [delta0, t] : spots) {
    const TwoQubitOperator rho = xstate_to_density(suite.make_state(delta0, gamma_from_temperature(1.0, t)));
    const double m = missing_information_M(rho).value;
    const double flipped =
        minimize_over_sphere([&rho](const BlochProjector& p) {
          return detail::remainder_unchecked(rho, {kPi - p.theta, p.phi + kPi});
        }).value;
    relabel = std::max(relabel, std::abs(m - flipped));
    brute = std::max(brute, std::abs(m - brute_force_missing_information(rho, 512)));
  }
  suite.add("correlations", "M invariant under projector relabeling", relabel, 1e-9);
  suite.add("correlations", "M matches 512x512 brute force", brute, 1e-6);
}

void check_lindblad(Suite& suite) {
  double fixed = 0.0;
  double trace = 0.0;
  for (double scale : {1.0, 2.5}) {
    for (double gamma_zero : {0.0, 0.4, -0.3}) {
      for (double gamma : linspace(0.05, 0.99, 5)) {
        const KossakowskiParams k{scale, scale * gamma, scale * gamma_zero, 1.0};
        const Liouvillian L = build_generator(k.omega_tilde, kossakowski_matrix(k));
        trace = std::max(trace, L.trace_preservation_residual());
        for (double delta0 : {-3.0, -2.0, -1.0, 0.0, 0.5, 1.0}) {
          fixed = std::max(fixed, fixed_point_residual(L, xstate_to_density(suite.make_state(delta0, gamma))));
        }
      }
    }
  }
  suite.add("lindblad", "closed-form state is a fixed point", fixed, 1e-10);
  suite.add("lindblad", "generator is trace preserving", trace, 1e-12);

  const double beta = 1.0;
  const SpectralSamples g = default_wightman(1.0, beta);
  const KossakowskiParams k = kms_rates(1.0, beta, g.g_omega, g.g_zero).normalized();
  const Liouvillian L = build_generator(k.omega_tilde, kossakowski_matrix(k));
  std::mt19937_64 rng(7);
  double conservation = 0.0;
  double convergence = 0.0;
  double drift = 0.0;
  for (int n = 0; n < 3; ++n) {
    const TwoQubitOperator rho0 = random_state(rng);
    const double delta0 = delta_of_state(rho0);
    const Trajectory traj = integrate(L, rho0, 100.0, 0.01, 100);
    for (const auto& sample : traj.samples) {
      conservation = std::max(conservation, std::abs(delta_of_state(sample.rho) - delta0));
    }
    drift = std::max(drift, traj.max_trace_drift);
    const TwoQubitOperator predicted = xstate_to_density(suite.make_state(delta0, k.gamma_minus));
    convergence = std::max(convergence, trace_distance(traj.samples.back().rho, predicted));
  }
  suite.add("lindblad", "Tr[rho S] conserved along trajectories", conservation, 1e-8);
  suite.add("lindblad", "trajectories reach predicted state", convergence, 1e-6);
  suite.add("lindblad", "per-step trace drift", drift, 1e-10);
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

std::vector<std::string> VerifyReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.module + ": " + c.name);
  }
  return out;
}

VerifyReport run_verification(const VerifyOptions& options) {
  Suite suite(options);
  check_qstate(suite);
  check_stationary(suite);
  check_eur(suite);
  check_sweep_and_correlations(suite);
  check_lindblad(suite);
  return suite.take();
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-6s %-13s %-44s %12s %10s\n", "status", "module", "check",
                "max residual", "tolerance");
  out << line;
  for (const auto& c : report.checks) {
    std::snprintf(line, sizeof line, "%-6s %-13s %-44s %12.3e %10.1e\n", c.passed ? "PASS" : "FAIL",
                  c.module.c_str(), c.name.c_str(), c.max_residual, c.tolerance);
    out << line;
  }
  return out.str();
}

}  // namespace ueur
