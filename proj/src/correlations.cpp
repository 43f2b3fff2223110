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

#include "ueur/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <tuple>
#include <vector>

#include "ueur/errors.hpp"

namespace ueur {

namespace {

constexpr double kPi = std::numbers::pi;

/// Canonical representative with theta in [0, pi] and phi in [0, 2 pi).
BlochProjector canonical(double theta, double phi) {
  theta = std::fmod(theta, 2.0 * kPi);
  if (theta < 0.0) theta += 2.0 * kPi;
  if (theta > kPi) {
    theta = 2.0 * kPi - theta;
    phi += kPi;
  }
  phi = std::fmod(phi, 2.0 * kPi);
  if (phi < 0.0) phi += 2.0 * kPi;
  return {theta, phi};
}

struct Cell {
  double value;
  double theta;
  double phi;
};

}  // namespace

MissingInformation minimize_over_sphere(const SphereObjective& objective,
                                        const SphereSearchOptions& options) {
  const double dtheta = kPi / static_cast<double>(options.grid_theta);
  const double dphi = 2.0 * kPi / static_cast<double>(options.grid_phi);
  std::size_t evaluations = 0;

  std::vector<Cell> cells;
  cells.reserve(options.grid_theta * options.grid_phi);
  for (std::size_t i = 0; i < options.grid_theta; ++i) {
    const double theta = (static_cast<double>(i) + 0.5) * dtheta;
    for (std::size_t j = 0; j < options.grid_phi; ++j) {
      const double phi = (static_cast<double>(j) + 0.5) * dphi;
      cells.push_back({objective({theta, phi}), theta, phi});
    }
  }
  evaluations += cells.size();

  const std::size_t keep = std::min(options.refine_from, cells.size());
  std::partial_sort(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(keep), cells.end(),
                    [](const Cell& a, const Cell& b) {
                      if (a.value != b.value) return a.value < b.value;
                      return std::tie(a.theta, a.phi) < std::tie(b.theta, b.phi);
                    });

  const double pole = objective({0.0, 0.0});
  const double equator = objective({0.5 * kPi, 0.0});
  evaluations += 2;

  std::vector<Cell> seeds(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(keep));
  seeds.push_back({pole, 0.0, 0.0});
  seeds.push_back({equator, 0.5 * kPi, 0.0});

  auto lifted = [&objective](const std::array<double, 2>& p) { return objective({p[0], p[1]}); };

  MissingInformation best;
  best.value = std::numeric_limits<double>::infinity();
  for (const Cell& seed : seeds) {
    const auto run = nelder_mead<2>(lifted, {seed.theta, seed.phi}, {dtheta, dphi}, options.simplex);
    evaluations += run.evaluations;
    if (!run.converged) {
      throw OptimizerError("measurement-basis refinement did not converge within " +
                               std::to_string(options.simplex.max_evaluations) + " evaluations",
                           std::min(best.value, run.value));
    }
    if (run.value < best.value) {
      const BlochProjector at = canonical(run.x[0], run.x[1]);
      best.value = run.value;
      best.optimizer.theta = at.theta;
      best.optimizer.phi = at.phi;
      best.optimizer.iterations = run.iterations;
      best.optimizer.final_step = run.diameter;
    }
  }
  best.optimizer.evaluations = evaluations;
  best.optimizer.axial_value = std::min(pole, equator);
  return best;
}

double mutual_information(const TwoQubitOperator& rho) {
  validate_state(rho);
  return von_neumann_entropy(detail::partial_trace(rho, Subsystem::A)) +
         von_neumann_entropy(detail::partial_trace(rho, Subsystem::B)) - von_neumann_entropy(rho);
}

double post_measurement_remainder(const TwoQubitOperator& rho, const BlochProjector& projector) {
  validate_state(rho);
  return detail::remainder_unchecked(rho, projector);
}

MissingInformation missing_information_M(const TwoQubitOperator& rho,
                                         const SphereSearchOptions& options) {
  validate_state(rho);
  MissingInformation m = minimize_over_sphere(
      [&rho](const BlochProjector& p) { return detail::remainder_unchecked(rho, p); }, options);
  // Entropies are >= 0; the optimizer may land a few ulps below.
  m.value = std::max(m.value, 0.0);
  return m;
}

double classical_correlation_J(const TwoQubitOperator& rho) {
  const double s_b = von_neumann_entropy(partial_trace(rho, Subsystem::B));
  return s_b - missing_information_M(rho).value;
}

double quantum_discord_D(const TwoQubitOperator& rho) { return evaluate_correlations(rho).discord; }

double bound_via_discord(double c, double missing_info, double discord) {
  if (!(c > 0.0 && c <= 1.0)) throw DomainError("overlap c must lie in (0, 1]");
  return std::log2(1.0 / c) + missing_info - discord;
}

CorrelationPoint evaluate_correlations(const TwoQubitOperator& rho,
                                       const SphereSearchOptions& options) {
  validate_state(rho);
  const double s_a = von_neumann_entropy(detail::partial_trace(rho, Subsystem::A));
  const double s_b = von_neumann_entropy(detail::partial_trace(rho, Subsystem::B));
  const double s_ab = von_neumann_entropy(rho);
  const MissingInformation m = missing_information_M(rho, options);

  CorrelationPoint p;
  p.mutual_info = s_a + s_b - s_ab;
  p.missing_info = m.value;
  p.classical_corr = s_b - m.value;
  p.discord = p.mutual_info - p.classical_corr;
  p.optimizer = m.optimizer;

  const double via_conditional = -(s_ab - s_b) + m.value;
  if (std::abs(p.discord - via_conditional) > kDiscordRouteTolerance) {
    throw ConsistencyError("discord routes disagree (" + std::to_string(p.discord) + " vs " +
                           std::to_string(via_conditional) +
                           "); marginal entropies of A and B differ");
  }
  return p;
}

double brute_force_missing_information(const TwoQubitOperator& rho, std::size_t n) {
  validate_state(rho);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = kPi * static_cast<double>(i) / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double phi = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
      best = std::min(best, detail::remainder_unchecked(rho, {theta, phi}));
    }
  }
  return best;
}

namespace detail {

double remainder_unchecked(const TwoQubitOperator& rho, const BlochProjector& projector) {
  const MeasurementResult outcomes =
      detail::measure_subsystem(rho, Subsystem::B, QubitBasis::bloch(projector));
  double total = 0.0;
  for (const auto& o : outcomes) {
    if (o.conditional) total += o.probability * qubit_entropy(*o.conditional);
  }
  return total;
}

}  // namespace detail

}  // namespace ueur
