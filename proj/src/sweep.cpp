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

#include "ueur/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>
#include <thread>

#include <json.hpp>

#include "ueur/errors.hpp"

namespace ueur {

namespace {

std::string format_digits(double value, int digits) {
  if (value == 0.0) value = 0.0;  // drops the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, digits);
  return std::string(buf, res.ptr);
}

double rounded(double value) { return std::stod(format_number(value)); }

struct Series {
  std::string label;
  std::string color;
  std::vector<double> values;
};

std::string render_chart(const std::string& title, std::span<const SweepRow> rows,
                         const std::vector<Series>& series) {
  constexpr double width = 640.0;
  constexpr double height = 420.0;
  constexpr double left = 70.0;
  constexpr double right = 150.0;
  constexpr double top = 40.0;
  constexpr double bottom = 50.0;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  double t_lo = rows.empty() ? 0.0 : rows.front().T;
  double t_hi = rows.empty() ? 1.0 : rows.back().T;
  if (t_hi <= t_lo) t_hi = t_lo + 1.0;
  double y_lo = 0.0;
  double y_hi = 0.0;
  for (const auto& s : series) {
    for (double v : s.values) {
      y_lo = std::min(y_lo, v);
      y_hi = std::max(y_hi, v);
    }
  }
  if (y_hi - y_lo < 1e-9) y_hi = y_lo + 1.0;
  const double pad = 0.05 * (y_hi - y_lo);
  y_lo -= pad;
  y_hi += pad;

  const auto px = [&](double t) { return left + (t - t_lo) / (t_hi - t_lo) * plot_w; };
  const auto py = [&](double v) { return top + (y_hi - v) / (y_hi - y_lo) * plot_h; };
  const auto f = [](double v) { return format_digits(v, 6); };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f(width) << "\" height=\""
      << f(height) << "\" viewBox=\"0 0 " << f(width) << ' ' << f(height) << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << f(left) << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"15\">"
      << title << "</text>\n"
      << "<rect x=\"" << f(left) << "\" y=\"" << f(top) << "\" width=\"" << f(plot_w)
      << "\" height=\"" << f(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";

  constexpr int ticks = 5;
  for (int k = 0; k <= ticks; ++k) {
    const double t = t_lo + (t_hi - t_lo) * k / ticks;
    const double v = y_lo + (y_hi - y_lo) * k / ticks;
    svg << "<line x1=\"" << f(px(t)) << "\" y1=\"" << f(top + plot_h) << "\" x2=\"" << f(px(t))
        << "\" y2=\"" << f(top + plot_h + 5) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << f(px(t)) << "\" y=\"" << f(top + plot_h + 20)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
        << format_digits(t, 3) << "</text>\n"
        << "<line x1=\"" << f(left - 5) << "\" y1=\"" << f(py(v)) << "\" x2=\"" << f(left)
        << "\" y2=\"" << f(py(v)) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << f(left - 8) << "\" y=\"" << f(py(v) + 4)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">"
        << format_digits(v, 3) << "</text>\n";
  }
  svg << "<text x=\"" << f(left + 0.5 * plot_w) << "\" y=\"" << f(height - 10)
      << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">T</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    svg << "<polyline fill=\"none\" stroke=\"" << series[s].color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i) svg << ' ';
      svg << f(px(rows[i].T)) << ',' << f(py(series[s].values[i]));
    }
    svg << "\"/>\n";
    const double ly = top + 20.0 + 22.0 * static_cast<double>(s);
    svg << "<line x1=\"" << f(left + plot_w + 15) << "\" y1=\"" << f(ly) << "\" x2=\""
        << f(left + plot_w + 45) << "\" y2=\"" << f(ly) << "\" stroke=\"" << series[s].color
        << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << f(left + plot_w + 52) << "\" y=\"" << f(ly + 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << series[s].label << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

template <typename Member>
std::vector<double> column(std::span<const SweepRow> rows, Member member) {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.*member);
  return out;
}

}  // namespace

void SweepConfig::validate() const {
  if (!(omega > 0.0)) throw DomainError("--omega must be positive");
  if (delta0_list.empty()) throw DomainError("at least one --delta0 is required");
  for (double d : delta0_list) (void)InitialCorrelation{d};
  if (t_count < 2) throw DomainError("--t-count must be at least 2");
  if (t_zero_limit ? !(t_min >= 0.0) : !(t_min > 0.0)) {
    throw DomainError("--t-min must be positive (use --t-zero-limit to include T = 0)");
  }
  if (!(t_max > t_min)) throw DomainError("--t-max must exceed --t-min");
  if (jobs == 0) throw DomainError("--jobs must be at least 1");
}

std::vector<double> temperature_grid(const SweepConfig& config) {
  config.validate();
  std::vector<double> grid(config.t_count);
  const double span = config.t_max - config.t_min;
  const auto last = static_cast<double>(config.t_count - 1);
  for (std::size_t i = 0; i < config.t_count; ++i) {
    grid[i] = config.t_min + span * static_cast<double>(i) / last;
  }
  grid.back() = config.t_max;
  return grid;
}

SweepRow evaluate_point(double omega, double temperature, double delta0) {
  const UnruhParams params = UnruhParams::from_temperature(omega, temperature);
  const XState s = stationary_xstate(InitialCorrelation{delta0}, params.gamma);
  const TwoQubitOperator rho = xstate_to_density(s);
  const EurPoint eur = evaluate_eur(rho);
  const CorrelationPoint corr = evaluate_correlations(rho);

  SweepRow row;
  row.T = temperature;
  row.gamma = params.gamma;
  row.x = s.x;
  row.y = s.y;
  row.z = s.z;
  row.d = s.d;
  row.U = eur.U;
  row.bound = eur.bound;
  row.tightness = eur.tightness;
  row.S_AB = eur.s_ab;
  row.S_A_given_B = eur.s_a_given_b;
  row.I = corr.mutual_info;
  row.J = corr.classical_corr;
  row.D = corr.discord;
  row.M = corr.missing_info;
  row.theta_star = corr.optimizer.theta;
  row.phi_star = corr.optimizer.phi;
  check_row(row);
  return row;
}

void check_row(const SweepRow& row) {
  if (row.U < row.bound - kTightnessTolerance) {
    throw ConsistencyError("row at T = " + format_number(row.T) + " violates U >= bound");
  }
  const double via_discord = bound_via_discord(0.5, row.M, row.D);
  if (std::abs(row.bound - via_discord) > kBoundIdentityTolerance) {
    throw ConsistencyError("row at T = " + format_number(row.T) +
                           " violates bound = 1 + M - D (residual " +
                           format_number(row.bound - via_discord) + ")");
  }
}

std::vector<SweepRow> run_sweep(double omega, double delta0, std::span<const double> temperatures,
                                std::size_t jobs) {
  std::vector<SweepRow> rows(temperatures.size());
  if (jobs <= 1 || temperatures.size() < 2) {
    for (std::size_t i = 0; i < temperatures.size(); ++i) {
      rows[i] = evaluate_point(omega, temperatures[i], delta0);
    }
    return rows;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(temperatures.size());
  const auto worker = [&] {
    for (std::size_t i = next++; i < temperatures.size(); i = next++) {
      try {
        rows[i] = evaluate_point(omega, temperatures[i], delta0);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  const std::size_t n = std::min(jobs, temperatures.size());
  pool.reserve(n);
  for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  pool.clear();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::string format_number(double value) { return format_digits(value, 12); }

const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> columns{
      "T", "gamma", "x", "y", "z", "d", "U", "bound", "tightness", "S_AB", "S_A_given_B",
      "I", "J", "D", "M", "theta_star", "phi_star"};
  return columns;
}

std::vector<double> row_values(const SweepRow& r) {
  return {r.T, r.gamma, r.x, r.y, r.z, r.d, r.U, r.bound, r.tightness, r.S_AB,
          r.S_A_given_B, r.I, r.J, r.D, r.M, r.theta_star, r.phi_star};
}

std::string to_csv(const SweepConfig& config, double delta0, std::span<const SweepRow> rows) {
  std::ostringstream out;
  out << "# unruh-eur temperature sweep\n"
      << "# omega=" << format_number(config.omega) << '\n'
      << "# delta0=" << format_number(delta0) << '\n'
      << "# t_min=" << format_number(config.t_min) << ",t_max=" << format_number(config.t_max)
      << ",t_count=" << config.t_count << ",t_zero_limit=" << (config.t_zero_limit ? "true" : "false")
      << '\n';
  const auto& cols = sweep_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& row : rows) {
    check_row(row);
    const auto values = row_values(row);
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << format_number(values[i]);
    out << '\n';
  }
  return out.str();
}

std::string to_json(const SweepConfig& config, double delta0, std::span<const SweepRow> rows) {
  nlohmann::ordered_json doc;
  doc["config"] = {
      {"omega", rounded(config.omega)},
      {"delta0", rounded(delta0)},
      {"t_min", rounded(config.t_min)},
      {"t_max", rounded(config.t_max)},
      {"t_count", config.t_count},
      {"t_zero_limit", config.t_zero_limit},
  };
  doc["columns"] = sweep_columns();
  auto& out_rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    check_row(row);
    nlohmann::ordered_json record;
    const auto values = row_values(row);
    const auto& cols = sweep_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) record[cols[i]] = rounded(values[i]);
    out_rows.push_back(std::move(record));
  }
  return doc.dump(2) + "\n";
}

std::string uncertainty_svg(double delta0, std::span<const SweepRow> rows) {
  return render_chart("Delta0 = " + format_number(delta0) + ": uncertainty, bound, tightness", rows,
                      {{"U", "#1f77b4", column(rows, &SweepRow::U)},
                       {"bound", "#d62728", column(rows, &SweepRow::bound)},
                       {"tightness", "#2ca02c", column(rows, &SweepRow::tightness)}});
}

std::string correlation_svg(double delta0, std::span<const SweepRow> rows) {
  return render_chart("Delta0 = " + format_number(delta0) + ": discord, missing information", rows,
                      {{"D", "#9467bd", column(rows, &SweepRow::D)},
                       {"M", "#ff7f0e", column(rows, &SweepRow::M)}});
}

std::string delta0_stem(double delta0) { return "delta0_" + format_number(delta0); }

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw OutputError("cannot open " + path.string() + " for writing");
  out << contents;
  out.flush();
  if (!out) throw OutputError("failed writing " + path.string());
}

std::vector<std::filesystem::path> write_sweep(const SweepConfig& config) {
  config.validate();
  std::error_code ec;
  std::filesystem::create_directories(config.out_dir, ec);
  if (ec || !std::filesystem::is_directory(config.out_dir)) {
    throw OutputError("cannot create output directory " + config.out_dir.string());
  }
  const std::vector<double> grid = temperature_grid(config);
  std::vector<std::filesystem::path> written;
  for (double delta0 : config.delta0_list) {
    const std::vector<SweepRow> rows = run_sweep(config.omega, delta0, grid, config.jobs);
    const std::string stem = "sweep_" + delta0_stem(delta0);
    if (config.format != OutputFormat::Json) {
      written.push_back(config.out_dir / (stem + ".csv"));
      write_file(written.back(), to_csv(config, delta0, rows));
    }
    if (config.format != OutputFormat::Csv) {
      written.push_back(config.out_dir / (stem + ".json"));
      write_file(written.back(), to_json(config, delta0, rows));
    }
    if (config.svg) {
      written.push_back(config.out_dir / ("uncertainty_" + delta0_stem(delta0) + ".svg"));
      write_file(written.back(), uncertainty_svg(delta0, rows));
      written.push_back(config.out_dir / ("correlations_" + delta0_stem(delta0) + ".svg"));
      write_file(written.back(), correlation_svg(delta0, rows));
    }
  }
  return written;
}

namespace shape {

double worst_decrease(std::span<const double> c) {
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) worst = std::max(worst, c[i] - c[i + 1]);
  return worst;
}

double worst_increase(std::span<const double> c) {
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) worst = std::max(worst, c[i + 1] - c[i]);
  return worst;
}

InteriorMinimum interior_minimum(std::span<const double> c, double slack) {
  InteriorMinimum out;
  if (c.size() < 3) return out;
  const auto it = std::min_element(c.begin(), c.end());
  out.index = static_cast<std::size_t>(std::distance(c.begin(), it));
  out.margin = std::min(c.front(), c.back()) - *it;
  out.found = out.index > 0 && out.index + 1 < c.size() && out.margin > slack;
  return out;
}

}  // namespace shape

}  // namespace ueur
