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

// Paths with a fixed curvature pattern in {-1, 0, +1} and free piece
// lengths. Used by the brute-force oracle and by the deformation search of
// the embedded-class heuristic; never by the production solver.

#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "hdubins/geometry.hpp"

namespace hdubins {

inline constexpr int kMaxBangBangPieces = 16;

using PieceLengths = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxBangBangPieces, 1>;
using EndpointJacobian =
    Eigen::Matrix<double, 3, Eigen::Dynamic, Eigen::ColMajor, 3, kMaxBangBangPieces>;

struct BangBangPath {
  Pose start;
  std::vector<PieceKind> pattern;
  std::vector<double> lengths;
};

CsPath to_cs_path(const BangBangPath& path);
double total_length(const BangBangPath& path);

/// End position and total (lifted) turning of a bang-bang path. When jac is
/// non-null it receives d(x, y, turning)/d(lengths).
struct EndpointState {
  Point position;
  double turning = 0.0;
};

EndpointState bang_bang_endpoint(const Pose& start, std::span<const PieceKind> pattern,
                                 const PieceLengths& lengths,
                                 EndpointJacobian* jac = nullptr);

/// Keeps piece lengths on the manifold {end position = target, total
/// turning = target_turning, lengths >= 0}.
class EndpointProjector {
 public:
  EndpointProjector(Pose start, Point target, double target_turning,
                    std::vector<PieceKind> pattern);

  [[nodiscard]] int size() const { return static_cast<int>(pattern_.size()); }
  [[nodiscard]] const std::vector<PieceKind>& pattern() const { return pattern_; }
  [[nodiscard]] const Pose& start() const { return start_; }

  /// Stacked constraint residual (dx, dy, dturning).
  [[nodiscard]] Eigen::Vector3d residual(const PieceLengths& lengths,
                                         EndpointJacobian* jac = nullptr) const;

  /// Damped Gauss-Newton with minimum-norm steps; lengths are clamped at
  /// zero after each step. Returns true when the residual norm is <= tol.
  bool project(PieceLengths& lengths, double tol = 1e-11, int max_iters = 40) const;

 private:
  Pose start_;
  Point target_;
  double target_turning_;
  std::vector<PieceKind> pattern_;
};

}  // namespace hdubins
