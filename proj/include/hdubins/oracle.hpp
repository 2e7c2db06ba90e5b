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

// Independent brute-force checks. Nothing here is used by the solver.
//
// oracle_min_in_class searches bang-bang paths (curvature in {-1, 0, +1})
// with up to max_pieces pieces over every curvature pattern. For each
// pattern it runs seeded random restarts of a local descent on the piece
// lengths: a Gauss-Newton projection onto the endpoint constraints followed
// by projected-gradient steps on total length. The class is fixed by
// requiring the exact total turning of class n. The result is an upper
// bound on the true class minimum.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hdubins/bang_bang.hpp"
#include "hdubins/geometry.hpp"
#include "hdubins/normaliser.hpp"

namespace hdubins {

struct OracleBudget {
  int max_pieces = 7;
  /// Restarts per pattern of at most full_restart_pieces pieces.
  int restarts = 64;
  int full_restart_pieces = 4;
  /// Restarts per longer pattern.
  int long_pattern_restarts = 4;
  int descent_iterations = 150;
  double endpoint_tolerance = 1e-6;
  std::uint64_t seed = 42;
};

enum class OracleStatus : std::uint8_t { kOk, kBudgetExhausted };

struct OracleResult {
  OracleStatus status = OracleStatus::kBudgetExhausted;
  /// Instance units; infinity when exhausted.
  double length = 0.0;
  /// Curvature-1 units.
  BangBangPath witness;
  std::uint64_t seed = 0;
  int local_solves = 0;
};

/// All curvature patterns of 1..max_pieces letters without two equal
/// neighbours.
std::vector<std::vector<PieceKind>> curvature_patterns(int max_pieces);

OracleResult oracle_min_in_class(const ProblemInstance& inst, int n,
                                 const OracleBudget& budget = {});

/// Shortest path found for a single pattern (curvature-1 units); used to
/// confirm individual base-path lengths.
OracleResult oracle_min_for_pattern(const ProblemInstance& inst, int n,
                                    const std::vector<PieceKind>& pattern,
                                    const OracleBudget& budget = {});

/// Random instance with positions uniform in [-half_width, half_width]^2
/// and uniform headings; kappa = 1.
ProblemInstance random_instance(std::mt19937_64& rng, double half_width = 10.0);

/// Total signed polar angle swept by the path about origin.
double swept_polar_angle(const CsPath& path, const Point& origin);

/// Smallest distance from origin to any point of the path.
double min_distance_to(const CsPath& path, const Point& origin);

/// length(path) >= |swept polar angle| for paths staying at distance >= 1
/// from origin. Throws PathError(kPreconditionViolation) otherwise.
bool check_radial_bound(const CsPath& path, const Point& origin);

/// Length of the loop closed by the first self-intersection. Throws
/// PathError(kNoSelfIntersection) for embedded paths.
double loop_length(const CsPath& path);
double loop_length(const SampledPath& path);

/// loop_length >= 2pi - 1e-6.
bool check_loop_bound(const CsPath& path);
bool check_loop_bound(const SampledPath& path);

}  // namespace hdubins
