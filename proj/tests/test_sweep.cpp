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
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ueur/errors.hpp"
#include "ueur/sweep.hpp"
#include "ueur/verify.hpp"

using namespace ueur;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

SweepConfig small_config() {
  SweepConfig c;
  c.t_min = 0.1;
  c.t_max = 2.0;
  c.t_count = 7;
  return c;
}

}  // namespace

TEST_CASE("format_number") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(-3.0) == "-3");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(1e-20) == "1e-20");
  CHECK(format_number(123456789012345.0) == "1.23456789012e+14");
}

TEST_CASE("temperature grid and config validation") {
  const SweepConfig def;
  const auto grid = temperature_grid(def);
  REQUIRE(grid.size() == 200);
  CHECK(grid.front() == 0.01);
  CHECK(grid.back() == 4.0);
  CHECK(std::is_sorted(grid.begin(), grid.end()));

  SweepConfig c = def;
  c.t_min = 0.0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c.t_zero_limit = true;
  CHECK_NOTHROW(c.validate());
  CHECK(temperature_grid(c).front() == 0.0);

  c = def;
  c.t_count = 1;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = def;
  c.t_max = c.t_min;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = def;
  c.delta0_list = {2.0};
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = def;
  c.delta0_list.clear();
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = def;
  c.jobs = 0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = def;
  c.omega = -1.0;
  CHECK_THROWS_AS(c.validate(), DomainError);
}

TEST_CASE("evaluate_point rows satisfy the row checks") {
  for (double d0 : {-3.0, -1.0, 0.5, 1.0}) {
    for (double t : {0.0, 0.2, 1.0, 4.0}) {
      const SweepRow r = evaluate_point(1.0, t, d0);
      CHECK(r.T == t);
      CHECK(r.tightness >= -1e-9);
      CHECK(r.tightness == doctest::Approx(r.U - r.bound).epsilon(1e-12));
      CHECK(std::abs(r.bound - (1.0 + r.M - r.D)) <= 1e-6);
      CHECK(r.x + 2.0 * r.y + r.z == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("check_row rejects broken rows") {
  SweepRow r = evaluate_point(1.0, 0.7, 0.5);
  SweepRow low = r;
  low.U = r.bound - 1e-6;
  CHECK_THROWS_AS(check_row(low), ConsistencyError);
  SweepRow off = r;
  off.M += 1e-4;
  CHECK_THROWS_AS(check_row(off), ConsistencyError);
}

TEST_CASE("parallel sweep equals sequential sweep") {
  const auto grid = temperature_grid(small_config());
  const auto seq = run_sweep(1.0, 0.5, grid, 1);
  const auto par = run_sweep(1.0, 0.5, grid, 4);
  REQUIRE(seq.size() == par.size());
  for (std::size_t i = 0; i < seq.size(); ++i) CHECK(row_values(seq[i]) == row_values(par[i]));
}

TEST_CASE("CSV layout") {
  const SweepConfig c = small_config();
  const auto rows = run_sweep(c.omega, -1.0, temperature_grid(c), 1);
  const auto lines = lines_of(to_csv(c, -1.0, rows));
  REQUIRE(lines.size() == 5 + rows.size());
  for (int i = 0; i < 4; ++i) CHECK(lines[static_cast<std::size_t>(i)].front() == '#');
  CHECK(lines[2] == "# delta0=-1");
  CHECK(lines[4] == "T,gamma,x,y,z,d,U,bound,tightness,S_AB,S_A_given_B,I,J,D,M,theta_star,phi_star");
  for (std::size_t i = 5; i < lines.size(); ++i) {
    CHECK(std::count(lines[i].begin(), lines[i].end(), ',') == 16);
  }
  CHECK(lines[5].rfind("0.1,", 0) == 0);
  CHECK(delta0_stem(-1.0) == "delta0_-1");
  CHECK(delta0_stem(0.5) == "delta0_0.5");
}

TEST_CASE("JSON layout") {
  const SweepConfig c = small_config();
  const auto rows = run_sweep(c.omega, 1.0, temperature_grid(c), 1);
  const auto doc = nlohmann::json::parse(to_json(c, 1.0, rows));
  CHECK(doc["config"]["delta0"] == 1.0);
  CHECK(doc["config"]["t_count"] == 7);
  CHECK(doc["columns"].size() == 17);
  REQUIRE(doc["rows"].size() == rows.size());
  CHECK(doc["rows"][3]["U"].get<double>() == doctest::Approx(rows[3].U).epsilon(1e-11));
  CHECK(to_json(c, 1.0, rows) == to_json(c, 1.0, rows));
}

TEST_CASE("SVG output") {
  const SweepConfig c = small_config();
  const auto rows = run_sweep(c.omega, 0.5, temperature_grid(c), 1);
  const std::string u = uncertainty_svg(0.5, rows);
  const std::string k = correlation_svg(0.5, rows);
  CHECK(u.rfind("<?xml", 0) == 0);
  CHECK(u.find("</svg>") != std::string::npos);
  const auto count = [](const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
  };
  CHECK(count(u, "<polyline") == 3);
  CHECK(count(k, "<polyline") == 2);
  CHECK(u == uncertainty_svg(0.5, rows));
}

TEST_CASE("write_sweep writes every requested file") {
  const std::filesystem::path dir = std::filesystem::path(UEUR_SCRATCH_DIR) / "write";
  std::filesystem::remove_all(dir);
  SweepConfig c = small_config();
  c.delta0_list = {-1.0, 0.5};
  c.out_dir = dir;
  c.format = OutputFormat::Both;
  c.svg = true;
  const auto written = write_sweep(c);
  CHECK(written.size() == 8);
  for (const auto& p : written) CHECK(std::filesystem::file_size(p) > 0);
  CHECK(std::filesystem::exists(dir / "sweep_delta0_-1.csv"));
  CHECK(std::filesystem::exists(dir / "correlations_delta0_0.5.svg"));
}

TEST_CASE("write_sweep reports unwritable destinations") {
  const std::filesystem::path dir = std::filesystem::path(UEUR_SCRATCH_DIR) / "blocked";
  std::filesystem::create_directories(dir.parent_path());
  std::filesystem::remove_all(dir);
  std::ofstream(dir) << "not a directory";
  SweepConfig c = small_config();
  c.out_dir = dir;
  CHECK_THROWS_AS(write_sweep(c), OutputError);
  CHECK_THROWS_AS(write_file(dir / "x.csv", "data"), OutputError);
  std::filesystem::remove(dir);
}

TEST_CASE("shape helpers") {
  const std::vector<double> up{0.0, 0.1, 0.1, 0.3};
  CHECK(shape::worst_decrease(up) == 0.0);
  CHECK(shape::worst_increase(up) == doctest::Approx(0.2));
  const std::vector<double> dip{1.0, 0.4, 0.2, 0.5, 0.9};
  const auto m = shape::interior_minimum(dip);
  CHECK(m.found);
  CHECK(m.index == 2);
  CHECK(m.margin == doctest::Approx(0.7));
  const std::vector<double> edge{0.0, 0.5, 1.0};
  CHECK_FALSE(shape::interior_minimum(edge).found);
  const std::vector<double> shallow{1.0, 1.0 - 1e-13, 1.0};
  CHECK_FALSE(shape::interior_minimum(shallow).found);
}

TEST_CASE("default sweep curve shapes") {
  const auto grid = temperature_grid(SweepConfig{});
  const auto pick = [](const std::vector<SweepRow>& rows, double SweepRow::*m) {
    std::vector<double> out;
    for (const auto& r : rows) out.push_back(r.*m);
    return out;
  };
  const auto neg = run_sweep(1.0, -1.0, grid, 1);
  CHECK(shape::worst_decrease(pick(neg, &SweepRow::U)) <= shape::kSlack);
  CHECK(shape::worst_increase(pick(neg, &SweepRow::tightness)) <= shape::kSlack);
  CHECK(shape::worst_increase(pick(neg, &SweepRow::D)) <= shape::kSlack);
  CHECK(shape::worst_decrease(pick(neg, &SweepRow::M)) <= shape::kSlack);

  const auto mid = run_sweep(1.0, 0.5, grid, 1);
  CHECK(shape::interior_minimum(pick(mid, &SweepRow::tightness)).found);
  CHECK(shape::interior_minimum(pick(mid, &SweepRow::D)).found);

  const auto pos = run_sweep(1.0, 1.0, grid, 1);
  CHECK(shape::worst_decrease(pick(pos, &SweepRow::tightness)) <= shape::kSlack);
  CHECK(shape::worst_decrease(pick(pos, &SweepRow::D)) <= shape::kSlack);
  CHECK(shape::worst_decrease(pick(pos, &SweepRow::M)) <= shape::kSlack);
}

TEST_CASE("verification suite") {
  const VerifyReport ok = run_verification();
  CHECK(ok.all_passed());
  CHECK(ok.checks.size() >= 30);
  CHECK(format_report(ok).find("FAIL") == std::string::npos);

  const VerifyReport broken = run_verification({.flip_d_sign = true});
  CHECK_FALSE(broken.all_passed());
  CHECK(broken.failures().size() >= 1);
}
