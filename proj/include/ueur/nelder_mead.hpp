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

// Derivative-free Nelder-Mead simplex minimizer for small fixed dimension.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>

namespace ueur {

struct SimplexOptions {
  /// Stop once max f - min f over the simplex drops below this...
  double f_tolerance = 1e-10;
  /// ...and every vertex lies within this distance of the best one.
  double x_tolerance = 1e-7;
  std::size_t max_evaluations = 10000;
};

template <std::size_t N>
struct SimplexResult {
  std::array<double, N> x{};
  double value = 0.0;
  std::size_t evaluations = 0;
  std::size_t iterations = 0;
  /// Max distance from the best vertex at termination.
  double diameter = 0.0;
  bool converged = false;
};

template <std::size_t N, typename F>
SimplexResult<N> nelder_mead(F&& f, const std::array<double, N>& start,
                             const std::array<double, N>& step, const SimplexOptions& options = {}) {
  using Point = std::array<double, N>;
  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;

  std::array<Point, N + 1> vertex;
  std::array<double, N + 1> value;
  SimplexResult<N> result;

  auto eval = [&](const Point& p) {
    ++result.evaluations;
    return f(p);
  };
  auto affine = [](const Point& a, const Point& b, double t) {
    Point out;
    for (std::size_t i = 0; i < N; ++i) out[i] = a[i] + t * (b[i] - a[i]);
    return out;
  };

  vertex[0] = start;
  for (std::size_t i = 0; i < N; ++i) {
    vertex[i + 1] = start;
    vertex[i + 1][i] += step[i];
  }
  for (std::size_t i = 0; i <= N; ++i) value[i] = eval(vertex[i]);

  std::array<std::size_t, N + 1> order;
  auto diameter = [&](std::size_t best) {
    double dmax = 0.0;
    for (std::size_t i = 0; i <= N; ++i) {
      double d2 = 0.0;
      for (std::size_t k = 0; k < N; ++k) d2 += std::pow(vertex[i][k] - vertex[best][k], 2);
      dmax = std::max(dmax, std::sqrt(d2));
    }
    return dmax;
  };
  auto shrink = [&](std::size_t best) {
    for (std::size_t i = 0; i <= N; ++i) {
      if (i == best) continue;
      vertex[i] = affine(vertex[best], vertex[i], kShrink);
      value[i] = eval(vertex[i]);
    }
  };

  while (true) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return value[a] < value[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[N - 1];

    const double spread = value[worst] - value[best];
    result.diameter = diameter(best);
    if (spread < options.f_tolerance) {
      if (result.diameter < options.x_tolerance) {
        result.converged = true;
        break;
      }
      // Flat to tolerance but still wide: collapse onto the best vertex.
      if (result.evaluations + N > options.max_evaluations) break;
      shrink(best);
      ++result.iterations;
      continue;
    }
    if (result.evaluations + N + 2 > options.max_evaluations) break;
    ++result.iterations;

    Point centroid{};
    for (std::size_t i = 0; i <= N; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < N; ++k) centroid[k] += vertex[i][k] / static_cast<double>(N);
    }

    const Point reflected = affine(centroid, vertex[worst], -kReflect);
    const double f_reflected = eval(reflected);
    if (f_reflected < value[best]) {
      const Point expanded = affine(centroid, vertex[worst], -kExpand);
      const double f_expanded = eval(expanded);
      if (f_expanded < f_reflected) {
        vertex[worst] = expanded;
        value[worst] = f_expanded;
      } else {
        vertex[worst] = reflected;
        value[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < value[second_worst]) {
      vertex[worst] = reflected;
      value[worst] = f_reflected;
      continue;
    }
    const bool outside = f_reflected < value[worst];
    const Point contracted =
        outside ? affine(centroid, reflected, kContract) : affine(centroid, vertex[worst], kContract);
    const double f_contracted = eval(contracted);
    if (f_contracted < (outside ? f_reflected : value[worst])) {
      vertex[worst] = contracted;
      value[worst] = f_contracted;
      continue;
    }
    shrink(best);
  }

  const std::size_t best = static_cast<std::size_t>(
      std::distance(value.begin(), std::min_element(value.begin(), value.end())));
  result.x = vertex[best];
  result.value = value[best];
  return result;
}

}  // namespace ueur
