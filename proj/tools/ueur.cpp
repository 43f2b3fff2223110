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

// ueur: command-line driver for the accelerated-detector uncertainty numerics.
//
//   ueur point    --temperature 1 --delta0 0.5
//   ueur sweep    --delta0 -1 --delta0 0.5 --delta0 1 --out-dir out --svg
//   ueur dynamics --temperature 1 --initial product-00 --tau-max 50
//   ueur verify
//
// Exit codes: 0 success, 1 verification failure, 2 usage or configuration
// error, 3 numerical guard tripped.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ueur/correlations.hpp"
#include "ueur/errors.hpp"
#include "ueur/eur.hpp"
#include "ueur/lindblad.hpp"
#include "ueur/stationary.hpp"
#include "ueur/sweep.hpp"
#include "ueur/verify.hpp"

namespace {

using namespace ueur;

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct TemperatureOptions {
  double omega = 1.0;
  std::optional<double> temperature;
  std::optional<double> acceleration;
  bool zero_limit = false;

  double resolve() const {
    const int given = int(temperature.has_value()) + int(acceleration.has_value()) + int(zero_limit);
    if (given != 1) {
      throw DomainError("give exactly one of --temperature, --acceleration, --t-zero-limit");
    }
    if (zero_limit) return 0.0;
    if (acceleration) return temperature_from_acceleration(*acceleration);
    if (!(*temperature > 0.0)) throw DomainError("--temperature must be positive (use --t-zero-limit for T = 0)");
    return *temperature;
  }
};

void add_temperature_options(CLI::App* cmd, TemperatureOptions& opts) {
  cmd->add_option("--omega", opts.omega, "Detector energy gap")->capture_default_str();
  cmd->add_option("--temperature", opts.temperature, "Unruh temperature T");
  cmd->add_option("--acceleration", opts.acceleration, "Proper acceleration a, T = a / (2 pi)");
  cmd->add_flag("--t-zero-limit", opts.zero_limit, "Evaluate the T = 0 limit (gamma = 1)");
}

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  return OutputFormat::Both;
}

std::filesystem::path ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) throw OutputError("cannot create output directory " + dir.string());
  return dir;
}

// point ----------------------------------------------------------------------

struct PointOptions {
  TemperatureOptions temp;
  std::vector<double> delta0;
  std::optional<std::string> out_dir;
  std::string format = "csv";
};

int run_point(const PointOptions& opts) {
  if (opts.delta0.size() != 1) throw DomainError("point takes exactly one --delta0");
  const double t = opts.temp.resolve();
  const SweepRow row = evaluate_point(opts.temp.omega, t, opts.delta0.front());

  const auto& cols = sweep_columns();
  const auto values = row_values(row);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    std::printf("%-12s %s\n", cols[i].c_str(), format_number(values[i]).c_str());
  }

  if (opts.out_dir) {
    const auto dir = ensure_dir(*opts.out_dir);
    SweepConfig config;
    config.omega = opts.temp.omega;
    config.delta0_list = opts.delta0;
    config.t_min = t;
    config.t_max = t;
    config.t_count = 1;
    config.t_zero_limit = opts.temp.zero_limit;
    const std::vector<SweepRow> rows{row};
    const OutputFormat format = parse_format(opts.format);
    if (format != OutputFormat::Json) write_file(dir / "point.csv", to_csv(config, opts.delta0.front(), rows));
    if (format != OutputFormat::Csv) write_file(dir / "point.json", to_json(config, opts.delta0.front(), rows));
  }
  return 0;
}

// sweep ----------------------------------------------------------------------

struct SweepOptions {
  SweepConfig config;
  std::string format = "csv";
  std::string out_dir = ".";
  bool t_min_given = false;
};

int run_sweep_cmd(SweepOptions& opts) {
  SweepConfig& config = opts.config;
  config.format = parse_format(opts.format);
  config.out_dir = opts.out_dir;
  if (config.t_zero_limit && !opts.t_min_given) config.t_min = 0.0;
  const auto written = write_sweep(config);
  for (const auto& path : written) std::cout << path.string() << '\n';
  return 0;
}

// dynamics -------------------------------------------------------------------

struct DynamicsOptions {
  TemperatureOptions temp;
  std::string initial = "product-00";
  double tau_max = 100.0;
  double dtau = 0.01;
  std::optional<std::string> out_dir;
};

TwoQubitOperator parse_initial(const std::string& text) {
  static const std::map<std::string, TwoQubitOperator (*)()> named{
      {"singlet", &states::singlet},
      {"triplet-zz",
       [] {
         Eigen::Vector4cd psi(0.0, 1.0, 1.0, 0.0);
         psi /= std::sqrt(2.0);
         return TwoQubitOperator(psi * psi.adjoint());
       }},
      {"product-00", [] { return states::computational(0); }},
      {"maximally-mixed", &states::maximally_mixed},
  };
  if (const auto it = named.find(text); it != named.end()) return it->second();

  std::vector<double> numbers;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      numbers.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError("--initial: '" + text + "' is neither a known state nor a list of numbers");
    }
  }
  TwoQubitOperator rho;
  if (numbers.size() == 16) {
    for (int k = 0; k < 16; ++k) rho(k / 4, k % 4) = numbers[static_cast<std::size_t>(k)];
  } else if (numbers.size() == 32) {
    for (int k = 0; k < 16; ++k) {
      rho(k / 4, k % 4) = Complex{numbers[static_cast<std::size_t>(2 * k)], numbers[static_cast<std::size_t>(2 * k + 1)]};
    }
  } else {
    throw DomainError("--initial expects 16 real or 32 (re, im) row-major entries");
  }
  try {
    validate_state(rho);
  } catch (const InvalidStateError& e) {
    throw DomainError(std::string("--initial: ") + e.what());
  }
  return rho;
}

int run_dynamics(const DynamicsOptions& opts) {
  const TwoQubitOperator rho0 = parse_initial(opts.initial);
  const UnruhParams params = UnruhParams::from_temperature(opts.temp.omega, opts.temp.resolve());
  const SpectralSamples g = default_wightman(params.omega, params.beta);
  const KossakowskiParams rates = kms_rates(params.omega, params.beta, g.g_omega, g.g_zero).normalized();
  const Liouvillian L = build_generator(rates.omega_tilde, kossakowski_matrix(rates));

  const double delta0 = delta_of_state(rho0);
  const TwoQubitOperator predicted = xstate_to_density(stationary_xstate(InitialCorrelation{delta0}, params.gamma));

  const auto steps = static_cast<std::size_t>(std::ceil(opts.tau_max / opts.dtau - 1e-9));
  const std::size_t stride = std::max<std::size_t>(1, steps / 200);
  const Trajectory traj = integrate(L, rho0, opts.tau_max, opts.dtau, stride);

  std::ostringstream out;
  out << "# unruh-eur dynamics, time in units of 1/gamma_plus\n"
      << "# omega=" << format_number(params.omega) << ",T=" << format_number(params.temperature)
      << ",gamma=" << format_number(params.gamma) << ",initial=" << opts.initial << '\n'
      << "# dtau=" << format_number(opts.dtau) << ",tau_max=" << format_number(opts.tau_max)
      << ",delta0=" << format_number(delta0) << '\n'
      << "tau,fidelity,trace_distance,delta,delta_drift,U,bound\n";
  for (const auto& s : traj.samples) {
    const double delta = delta_of_state(s.rho);
    const EurPoint e = evaluate_eur(s.rho);
    out << format_number(s.tau) << ',' << format_number(fidelity(s.rho, predicted)) << ','
        << format_number(trace_distance(s.rho, predicted)) << ',' << format_number(delta) << ','
        << format_number(delta - delta0) << ',' << format_number(e.U) << ',' << format_number(e.bound)
        << '\n';
  }
  if (opts.out_dir) {
    const auto dir = ensure_dir(*opts.out_dir);
    write_file(dir / "dynamics.csv", out.str());
    std::cout << (dir / "dynamics.csv").string() << '\n';
  } else {
    std::cout << out.str();
  }
  return 0;
}

// verify ---------------------------------------------------------------------

int run_verify() {
  const VerifyReport report = run_verification();
  std::cout << format_report(report);
  if (report.all_passed()) {
    std::cout << "all " << report.checks.size() << " checks passed\n";
    return 0;
  }
  for (const auto& f : report.failures()) std::cout << "FAILED: " << f << '\n';
  return kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropic uncertainty with quantum memory for accelerated detectors"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"csv", "json", "both"};

  PointOptions point;
  auto* point_cmd = app.add_subcommand("point", "Evaluate every quantity at one (T, Delta0)");
  add_temperature_options(point_cmd, point.temp);
  point_cmd->add_option("--delta0", point.delta0, "Initial correlation Tr[rho(0) S] in [-3, 1]")->required();
  point_cmd->add_option("--out-dir", point.out_dir, "Also write point.csv / point.json here");
  point_cmd->add_option("--format", point.format)->check(CLI::IsMember(formats))->capture_default_str();

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Temperature sweeps, one file per Delta0");
  sweep_cmd->add_option("--omega", sweep.config.omega)->capture_default_str();
  sweep_cmd->add_option("--delta0", sweep.config.delta0_list, "Repeatable")->capture_default_str();
  sweep_cmd->add_option("--t-min", sweep.config.t_min)->capture_default_str();
  sweep_cmd->add_option("--t-max", sweep.config.t_max)->capture_default_str();
  sweep_cmd->add_option("--t-count", sweep.config.t_count)->capture_default_str();
  sweep_cmd->add_flag("--t-zero-limit", sweep.config.t_zero_limit, "Start the grid at T = 0");
  sweep_cmd->add_option("--out-dir", sweep.out_dir)->capture_default_str();
  sweep_cmd->add_option("--format", sweep.format)->check(CLI::IsMember(formats))->capture_default_str();
  sweep_cmd->add_flag("--svg", sweep.config.svg, "Write SVG plots");
  sweep.config.jobs = std::max(1u, std::thread::hardware_concurrency());
  sweep_cmd->add_option("--jobs", sweep.config.jobs, "Worker threads")->capture_default_str();

  DynamicsOptions dyn;
  auto* dyn_cmd = app.add_subcommand("dynamics", "Integrate the master equation from an initial state");
  add_temperature_options(dyn_cmd, dyn.temp);
  dyn_cmd->add_option("--initial", dyn.initial,
                      "singlet | triplet-zz | product-00 | maximally-mixed | 16 real or 32 re,im entries")
      ->capture_default_str();
  dyn_cmd->add_option("--tau-max", dyn.tau_max, "Final proper time (units of 1/gamma_plus)")->capture_default_str();
  dyn_cmd->add_option("--dtau", dyn.dtau, "RK4 step (units of 1/gamma_plus)")->capture_default_str();
  dyn_cmd->add_option("--out-dir", dyn.out_dir, "Write dynamics.csv here instead of stdout");
  std::size_t unused_jobs = 1;
  dyn_cmd->add_option("--jobs", unused_jobs, "Accepted for uniformity; integration is sequential");

  app.add_subcommand("verify", "Run the invariant suite and report residuals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (point_cmd->parsed()) return run_point(point);
    if (sweep_cmd->parsed()) {
      sweep.t_min_given = sweep_cmd->count("--t-min") > 0;
      return run_sweep_cmd(sweep);
    }
    if (dyn_cmd->parsed()) return run_dynamics(dyn);
    return run_verify();
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OutputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const StepSizeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const OptimizerError& e) {
    std::cerr << "error: " << e.what() << " (best value " << e.best_value() << ")\n";
    return kExitNumerical;
  } catch (const ConsistencyError& e) {
    std::cerr << "error: internal consistency check failed: " << e.what() << '\n';
    return kExitVerify;
  } catch (const InvalidStateError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
