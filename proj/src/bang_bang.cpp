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

#include "hdubins/bang_bang.hpp"

#include <Eigen/Cholesky>
#include <array>
#include <cmath>

namespace hdubins {

CsPath to_cs_path(const BangBangPath& path) {
  std::vector<Piece> pieces;
  pieces.reserve(path.pattern.size());
  for (std::size_t i = 0; i < path.pattern.size(); ++i) {
    pieces.push_back({path.pattern[i], path.lengths.at(i)});
  }
  return make_path(path.start, pieces);
}

double total_length(const BangBangPath& path) {
  double s = 0.0;
  for (double l : path.lengths) s += l;
  return s;
}

EndpointState bang_bang_endpoint(const Pose& start, std::span<const PieceKind> pattern,
                                 const PieceLengths& lengths, EndpointJacobian* jac) {
  const int m = static_cast<int>(pattern.size());
  Point pos = start.position();
  double heading = start.theta();
  double turning = 0.0;

  // Piece end points and end tangents for the Jacobian.
  std::array<Point, kMaxBangBangPieces> ends;
  std::array<Vector, kMaxBangBangPieces> tangents;
  for (int i = 0; i < m; ++i) {
    const double k = curvature(pattern[i]);
    const double len = lengths[i];
    if (k == 0.0) {
      pos += unit(heading) * len;
    } else {
      // Rotate about the centre of the turning circle.
      const Vector n0 = left_normal(unit(heading)) * k;
      heading += k * len;
      const Vector n1 = left_normal(unit(heading)) * k;
      pos += n0 - n1;
      turning += k * len;
    }
    ends[i] = pos;
    tangents[i] = unit(heading);
  }

  if (jac != nullptr) {
    jac->resize(3, m);
    // Lengthening piece i translates the remainder along its end tangent
    // and rotates it about its end point by the piece curvature.
    for (int i = 0; i < m; ++i) {
      const double k = curvature(pattern[i]);
      const Vector d = tangents[i] + k * left_normal(pos - ends[i]);
      (*jac)(0, i) = d.x();
      (*jac)(1, i) = d.y();
      (*jac)(2, i) = k;
    }
  }
  return {pos, turning};
}

EndpointProjector::EndpointProjector(Pose start, Point target, double target_turning,
                                     std::vector<PieceKind> pattern)
    : start_(start),
      target_(std::move(target)),
      target_turning_(target_turning),
      pattern_(std::move(pattern)) {
  if (pattern_.empty() || pattern_.size() > kMaxBangBangPieces) {
    throw PathError(ErrorCode::kInvalidArgument, "bang-bang pattern size out of range");
  }
}

Eigen::Vector3d EndpointProjector::residual(const PieceLengths& lengths,
                                            EndpointJacobian* jac) const {
  const EndpointState e = bang_bang_endpoint(start_, pattern_, lengths, jac);
  return {e.position.x() - target_.x(), e.position.y() - target_.y(),
          e.turning - target_turning_};
}

bool EndpointProjector::project(PieceLengths& lengths, double tol, int max_iters) const {
  EndpointJacobian jac;
  Eigen::Vector3d r = residual(lengths, &jac);
  double rn = r.norm();
  for (int it = 0; it < max_iters && rn > tol; ++it) {
    // Minimum-norm step over the pieces not pinned at zero; the tiny ridge
    // keeps rank-deficient cases finite.
    EndpointJacobian active = jac;
    PieceLengths step;
    for (int pass = 0; pass < 3; ++pass) {
      Eigen::Matrix3d jjt = active * active.transpose();
      jjt.diagonal().array() += 1e-12;
      const Eigen::Vector3d y = jjt.ldlt().solve(r);
      step = -(active.transpose() * y);
      bool pinned = false;
      for (int i = 0; i < step.size(); ++i) {
        if (lengths[i] <= 0.0 && step[i] < 0.0 && active.col(i).squaredNorm() > 0.0) {
          active.col(i).setZero();
          pinned = true;
        }
      }
      if (!pinned) break;
    }

    // Halve the step until the residual decreases.
    double alpha = 1.0;
    bool improved = false;
    for (int ls = 0; ls < 12; ++ls) {
      PieceLengths trial = (lengths + alpha * step).cwiseMax(0.0);
      EndpointJacobian tj;
      const Eigen::Vector3d tr = residual(trial, &tj);
      const double tn = tr.norm();
      if (tn < rn) {
        lengths = trial;
        r = tr;
        rn = tn;
        jac = tj;
        improved = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!improved) break;
  }
  return rn <= tol;
}

}  // namespace hdubins
