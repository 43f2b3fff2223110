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

// Temperature sweeps over the stationary family and their serialization.

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ueur/correlations.hpp"
#include "ueur/eur.hpp"
#include "ueur/stationary.hpp"

namespace ueur {

inline constexpr double kBoundIdentityTolerance = 1e-6;

enum class OutputFormat { Csv, Json, Both };

struct SweepConfig {
  double omega = 1.0;
  std::vector<double> delta0_list{-1.0, 0.5, 1.0};
  double t_min = 0.01;
  double t_max = 4.0;
  std::size_t t_count = 200;
  /// Allows t_min = 0, evaluated as the gamma = 1 limit.
  bool t_zero_limit = false;
  std::filesystem::path out_dir = ".";
  OutputFormat format = OutputFormat::Csv;
  bool svg = false;
  std::size_t jobs = 1;

  /// Throws DomainError on an inconsistent configuration.
  void validate() const;
};

struct SweepRow {
  double T = 0.0;
  double gamma = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double d = 0.0;
  double U = 0.0;
  double bound = 0.0;
  double tightness = 0.0;
  double S_AB = 0.0;
  double S_A_given_B = 0.0;
  double I = 0.0;
  double J = 0.0;
  double D = 0.0;
  double M = 0.0;
  double theta_star = 0.0;
  double phi_star = 0.0;
};

/// Linear grid t_min .. t_max with t_count points (endpoints included).
std::vector<double> temperature_grid(const SweepConfig& config);

/// Full pipeline at one (omega, T, Delta0); T = 0 means the gamma = 1 limit.
SweepRow evaluate_point(double omega, double temperature, double delta0);

/// Throws ConsistencyError unless U >= bound - 1e-9 and bound = 1 + M - D to 1e-6.
void check_row(const SweepRow& row);

/// Rows in grid order regardless of `jobs`.
std::vector<SweepRow> run_sweep(double omega, double delta0, std::span<const double> temperatures,
                                std::size_t jobs = 1);

/// 12 significant digits, locale independent, no negative zero.
std::string format_number(double value);

const std::vector<std::string>& sweep_columns();
std::vector<double> row_values(const SweepRow& row);

std::string to_csv(const SweepConfig& config, double delta0, std::span<const SweepRow> rows);
std::string to_json(const SweepConfig& config, double delta0, std::span<const SweepRow> rows);
/// U, bound and tightness against T.
std::string uncertainty_svg(double delta0, std::span<const SweepRow> rows);
/// Discord and missing information against T.
std::string correlation_svg(double delta0, std::span<const SweepRow> rows);

/// File stem for one Delta0, e.g. "delta0_-1", "delta0_0.5".
std::string delta0_stem(double delta0);

/// Runs every configured Delta0 and writes the requested files. Returns the
/// written paths; throws OutputError if a file cannot be written.
std::vector<std::filesystem::path> write_sweep(const SweepConfig& config);

void write_file(const std::filesystem::path& path, const std::string& contents);

/// Monotonicity and interior-extremum tests for sampled curves. Differences
/// within `slack` are treated as ties.
namespace shape {
inline constexpr double kSlack = 1e-12;

/// Largest c[i] - c[i+1]; the curve is nondecreasing iff this is <= slack.
double worst_decrease(std::span<const double> c);
double worst_increase(std::span<const double> c);

struct InteriorMinimum {
  bool found = false;
  std::size_t index = 0;
  /// min(c.front(), c.back()) - min(c).
  double margin = 0.0;
};

InteriorMinimum interior_minimum(std::span<const double> c, double slack = kSlack);
}  // namespace shape

}  // namespace ueur
