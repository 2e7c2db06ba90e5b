// Copyright 2026 The hdubins Authors
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

// Test-only generators of smooth bounded-curvature sampled paths.
//
// Headings are integrated in closed form; positions use 15-point Gauss
// quadrature per sample interval, so samples are exact to ~1e-14.

#pragma once

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "hdubins/class_minimiser.hpp"
#include "hdubins/geometry.hpp"
#include "hdubins/normaliser.hpp"

namespace hdubins::testing {

inline SampledPath integrate_heading(const std::function<double(double)>& theta,
                                     Point origin, double length, double step) {
  using Quad = boost::math::quadrature::gauss<double, 15>;
  const int n = std::max(1, static_cast<int>(std::ceil(length / step)));
  SampledPath out;
  Point p = origin;
  out.samples.push_back({0.0, p, theta(0.0)});
  for (int i = 1; i <= n; ++i) {
    const double a = length * (i - 1) / n;
    const double b = length * i / n;
    p.x() += Quad::integrate([&](double s) { return std::cos(theta(s)); }, a, b);
    p.y() += Quad::integrate([&](double s) { return std::sin(theta(s)); }, a, b);
    out.samples.push_back({b, p, theta(b)});
  }
  return out;
}

/// Curvature k(s) = a0 + sum a_i sin(w_i s + phi_i) with sup |k| <= 0.95.
inline SampledPath random_smooth_path(std::mt19937_64& rng, double step = 0.025) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double length = 1.0 + 19.0 * u(rng);
  const int terms = 1 + static_cast<int>(u(rng) * 3.0);
  double a0 = 2.0 * u(rng) - 1.0;
  std::vector<double> amp(terms), w(terms), phi(terms);
  double bound = std::abs(a0);
  for (int i = 0; i < terms; ++i) {
    amp[i] = 2.0 * u(rng) - 1.0;
    w[i] = 0.2 + 2.0 * u(rng);
    phi[i] = kTwoPi * u(rng);
    bound += std::abs(amp[i]);
  }
  const double scale = 0.95 * u(rng) / bound;
  a0 *= scale;
  for (double& a : amp) a *= scale;
  const double theta0 = kTwoPi * u(rng) - kPi;
  const auto theta = [=](double s) {
    double t = theta0 + a0 * s;
    for (int i = 0; i < terms; ++i) {
      t += amp[i] / w[i] * (std::cos(phi[i]) - std::cos(w[i] * s + phi[i]));
    }
    return t;
  };
  const Point origin(20.0 * u(rng) - 10.0, 20.0 * u(rng) - 10.0);
  return integrate_heading(theta, origin, length, step);
}

/// Closed curve of turning number one: theta(u) = u + c sin(k u) traversed
/// at radius r = 1 + c k + margin, so curvature stays <= 1.
inline SampledPath closed_curve(double c, int k, double margin, double step = 0.025) {
  const double r = 1.0 + c * k + margin;
  const auto theta = [=](double s) { return s / r + c * std::sin(k * s / r); };
  return integrate_heading(theta, Point(0.0, 0.0), kTwoPi * r, step);
}

}  // namespace hdubins::testing
