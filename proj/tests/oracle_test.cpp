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

#include <doctest.h>

#include <random>

#include "hdubins/class_minimiser.hpp"
#include "hdubins/homotopy.hpp"
#include "hdubins/intersections.hpp"
#include "hdubins/oracle.hpp"
#include "support/random_paths.hpp"

namespace hdubins {
namespace {

using K = PieceKind;

TEST_CASE("curvature patterns") {
  CHECK(curvature_patterns(1).size() == 3);
  CHECK(curvature_patterns(2).size() == 3 + 6);
  // 3 * (1 + 2 + ... + 2^6)
  CHECK(curvature_patterns(7).size() == 381);
  for (const auto& p : curvature_patterns(4)) {
    for (std::size_t i = 1; i < p.size(); ++i) CHECK(p[i] != p[i - 1]);
  }
}

TEST_CASE("oracle examples") {
  const OracleResult line = oracle_min_in_class(ProblemInstance(Pose(0, 0, 0), Pose(5, 0, 0)), 0);
  REQUIRE(line.status == OracleStatus::kOk);
  CHECK(line.length == doctest::Approx(5.0).epsilon(1e-4));
  CHECK(line.seed == 42);

  const OracleResult loop = oracle_min_in_class(ProblemInstance(Pose(0, 0, 0), Pose(0, 0, 0)), 1);
  REQUIRE(loop.status == OracleStatus::kOk);
  CHECK(std::abs(loop.length - kTwoPi) <= 1e-3);
  const CsPath witness = to_cs_path(loop.witness);
  CHECK(class_of(witness) == 1);
  CHECK(path_endpoint(witness).position().norm() <= 1e-6);
}

TEST_CASE("oracle is reproducible for a seed") {
  const ProblemInstance inst(Pose(0, 0, 0), Pose(0.5, 0.2, 0));
  OracleBudget b;
  b.max_pieces = 4;
  b.restarts = 8;
  const OracleResult x = oracle_min_in_class(inst, 1, b);
  const OracleResult y = oracle_min_in_class(inst, 1, b);
  CHECK(x.length == y.length);
  CHECK(x.local_solves == y.local_solves);
  CHECK(x.witness.lengths == y.witness.lengths);
}

TEST_CASE("oracle and enumeration agree on small instances") {
  std::mt19937_64 rng(17);
  OracleBudget b;
  b.max_pieces = 5;
  b.restarts = 16;
  b.long_pattern_restarts = 3;
  for (int i = 0; i < 6; ++i) {
    const ProblemInstance inst = random_instance(rng, 2.0);
    for (int n = -1; n <= 1; ++n) {
      const double e = minimise_in_class(inst, n).length;
      const OracleResult o = oracle_min_in_class(inst, n, b);
      REQUIRE(o.status == OracleStatus::kOk);
      CHECK(e <= o.length + 1e-3);
      const CsPath w = to_cs_path(o.witness);
      CHECK(class_of(w) == n);
      CHECK((path_endpoint(w).position() - inst.end().position()).norm() <= 1e-6);
    }
  }
}

TEST_CASE("radial bound examples") {
  const CsPath circle = make_path(Pose(1, 0, kPi / 2), std::vector<Piece>{{K::kLeft, kTwoPi}});
  CHECK(swept_polar_angle(circle, Point(0, 0)) == doctest::Approx(kTwoPi));
  CHECK(check_radial_bound(circle, Point(0, 0)));

  const CsPath seg = make_path(Pose(1, 0, kPi / 2), std::vector<Piece>{{K::kStraight, 5}});
  CHECK(swept_polar_angle(seg, Point(0, 0)) == doctest::Approx(std::atan(5.0)));
  CHECK(check_radial_bound(seg, Point(0, 0)));

  const CsPath through = make_path(Pose(-2, 0, 0), std::vector<Piece>{{K::kStraight, 4}});
  CHECK_THROWS_AS(check_radial_bound(through, Point(0, 0)), PathError);
}

TEST_CASE("radial bound on random paths") {
  std::mt19937_64 rng(18);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  while (checked < 100) {
    std::vector<Piece> pieces;
    for (int k = 0; k < 5; ++k) {
      pieces.push_back({static_cast<K>(static_cast<int>(u(rng) * 3)), 4.0 * u(rng)});
    }
    const CsPath p = make_path(Pose(8 * u(rng) - 4, 8 * u(rng) - 4, kTwoPi * u(rng)), pieces);
    if (min_distance_to(p, Point(0, 0)) < 1.0) continue;
    CHECK(check_radial_bound(p, Point(0, 0)));
    ++checked;
  }
}

TEST_CASE("loop bound examples") {
  const CsPath tangent_loop = make_path(
      Pose(0, 0, 0), std::vector<Piece>{{K::kStraight, 2}, {K::kLeft, kTwoPi}, {K::kStraight, 2}});
  CHECK(loop_length(tangent_loop) == doctest::Approx(kTwoPi));
  CHECK(check_loop_bound(tangent_loop));

  // Radius 1.5 loop sampled from theta = s / 1.5, with entry and exit legs.
  const SampledPath wide = testing::integrate_heading(
      [](double s) {
        if (s < 1.0) return 0.0;
        if (s < 1.0 + 3 * kPi) return (s - 1.0) / 1.5;
        return kTwoPi;
      },
      Point(0, 0), 2.0 + 3 * kPi, 0.01);
  CHECK(loop_length(wide) == doctest::Approx(3 * kPi).epsilon(1e-3));
  CHECK(check_loop_bound(wide));

  CHECK_THROWS_AS(loop_length(make_path(Pose(), std::vector<Piece>{{K::kStraight, 1}})),
                  PathError);
}

TEST_CASE("loops of oracle witnesses and random paths are at least 2pi") {
  std::mt19937_64 rng(19);
  OracleBudget b;
  b.max_pieces = 4;
  b.restarts = 8;
  b.long_pattern_restarts = 2;
  int loops = 0;
  for (int i = 0; i < 10; ++i) {
    const ProblemInstance inst = random_instance(rng, 3.0);
    for (int n : {-2, 2}) {
      const OracleResult o = oracle_min_in_class(inst, n, b);
      REQUIRE(o.status == OracleStatus::kOk);
      const CsPath w = to_cs_path(o.witness);
      if (!first_self_intersection(w)) continue;
      CHECK(check_loop_bound(w));
      ++loops;
    }
  }
  CHECK(loops > 0);

  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    std::vector<Piece> pieces;
    for (int k = 0; k < 6; ++k) {
      pieces.push_back({static_cast<K>(static_cast<int>(u(rng) * 3)), 6.0 * u(rng)});
    }
    const CsPath p = make_path(Pose(0, 0, kTwoPi * u(rng)), pieces);
    if (!first_self_intersection(p)) continue;
    CHECK(check_loop_bound(p));
  }
}

}  // namespace
}  // namespace hdubins
