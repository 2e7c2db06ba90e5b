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

#include "hdubins/oracle.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "hdubins/homotopy.hpp"
#include "hdubins/intersections.hpp"

namespace hdubins {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Projected-gradient descent of total length on the endpoint manifold.
// Pieces at zero length stay pinned unless releasing them lowers the length
// to first order.
void descend(const EndpointProjector& proj, PieceLengths& lengths, int iterations) {
  const int m = proj.size();
  double alpha_prev = 0.5;
  for (int it = 0; it < iterations; ++it) {
    EndpointJacobian jac;
    (void)proj.residual(lengths, &jac);

    std::array<bool, kMaxBangBangPieces> pinned{};
    for (int i = 0; i < m; ++i) pinned[i] = lengths[i] <= 1e-12;

    PieceLengths dir(m);
    for (int release = 0; release <= m; ++release) {
      EndpointJacobian jf = jac;
      PieceLengths ones = PieceLengths::Ones(m);
      for (int i = 0; i < m; ++i) {
        if (pinned[i]) {
          jf.col(i).setZero();
          ones[i] = 0.0;
        }
      }
      Eigen::Matrix3d a = jf * jf.transpose();
      a.diagonal().array() += 1e-12;
      const Eigen::Vector3d lambda = a.ldlt().solve(jf * ones);
      dir = -(ones - jf.transpose() * lambda);
      // Reduced cost of each pinned piece; negative means growing it helps.
      int worst = -1;
      double worst_cost = -1e-9;
      for (int i = 0; i < m; ++i) {
        if (!pinned[i]) continue;
        const double cost = 1.0 - jac.col(i).dot(lambda);
        if (cost < worst_cost) {
          worst_cost = cost;
          worst = i;
        }
      }
      if (worst < 0) break;
      pinned[worst] = false;
    }
    for (int i = 0; i < m; ++i) {
      if (pinned[i]) dir[i] = 0.0;
    }
    if (dir.norm() < 1e-10) return;

    double alpha_bound = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      if (dir[i] < 0.0) alpha_bound = std::min(alpha_bound, -lengths[i] / dir[i]);
    }
    double alpha = std::min({alpha_prev * 2.0, alpha_bound, 4.0});
    if (alpha <= 0.0) alpha = std::min(alpha_prev, 1e-3);
    const double current = lengths.sum();
    bool accepted = false;
    for (int ls = 0; ls < 30; ++ls) {
      PieceLengths trial = (lengths + alpha * dir).cwiseMax(0.0);
      if (proj.project(trial) && trial.sum() < current - 1e-14) {
        lengths = trial;
        alpha_prev = alpha;
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) return;
  }
}

struct SearchContext {
  Pose start;
  Point target;
  double target_turning;
  double arc_scale;
  double line_scale;
};

SearchContext make_context(const ProblemInstance& inst, int n) {
  const ProblemInstance s = inst.scaled();
  SearchContext ctx{s.start(), s.end().position(),
                    turning_for_class(n, s.start().theta(), s.end().theta()), 0.0, 0.0};
  ctx.arc_scale = kTwoPi * (std::abs(n) + 1.5);
  ctx.line_scale = (s.end().position() - s.start().position()).norm() + 3.0;
  return ctx;
}

void search_pattern(const SearchContext& ctx, const std::vector<PieceKind>& pattern,
                    int restarts, const OracleBudget& budget, std::mt19937_64& rng,
                    OracleResult& best) {
  const EndpointProjector proj(ctx.start, ctx.target, ctx.target_turning, pattern);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const int m = static_cast<int>(pattern.size());
  for (int r = 0; r < restarts; ++r) {
    PieceLengths lengths(m);
    for (int i = 0; i < m; ++i) {
      const double scale = pattern[i] == PieceKind::kStraight ? ctx.line_scale : ctx.arc_scale;
      lengths[i] = u01(rng) * scale;
    }
    ++best.local_solves;
    if (!proj.project(lengths)) continue;
    descend(proj, lengths, budget.descent_iterations);
    if (!proj.project(lengths)) continue;
    const Eigen::Vector3d res = proj.residual(lengths);
    if (res.head<2>().norm() > budget.endpoint_tolerance || std::abs(res[2]) > 1e-9) continue;
    const double len = lengths.sum();
    if (best.status != OracleStatus::kOk || len < best.length) {
      best.status = OracleStatus::kOk;
      best.length = len;
      best.witness = BangBangPath{ctx.start, pattern,
                                  std::vector<double>(lengths.data(), lengths.data() + m)};
    }
  }
}

}  // namespace

std::vector<std::vector<PieceKind>> curvature_patterns(int max_pieces) {
  static constexpr PieceKind kKinds[3] = {PieceKind::kLeft, PieceKind::kStraight,
                                          PieceKind::kRight};
  std::vector<std::vector<PieceKind>> out;
  std::vector<std::vector<PieceKind>> frontier = {{}};
  for (int len = 1; len <= max_pieces; ++len) {
    std::vector<std::vector<PieceKind>> next;
    for (const auto& p : frontier) {
      for (PieceKind k : kKinds) {
        if (!p.empty() && p.back() == k) continue;
        auto q = p;
        q.push_back(k);
        next.push_back(q);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

OracleResult oracle_min_in_class(const ProblemInstance& inst, int n,
                                 const OracleBudget& budget) {
  if (budget.max_pieces < 1 || budget.max_pieces > kMaxBangBangPieces) {
    throw PathError(ErrorCode::kInvalidArgument, "max_pieces out of range");
  }
  const SearchContext ctx = make_context(inst, n);
  OracleResult best;
  best.seed = budget.seed;
  best.length = std::numeric_limits<double>::infinity();
  const auto patterns = curvature_patterns(budget.max_pieces);
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    std::mt19937_64 rng(splitmix64(budget.seed ^ splitmix64(p + 1)));
    const int restarts = static_cast<int>(patterns[p].size()) <= budget.full_restart_pieces
                             ? budget.restarts
                             : budget.long_pattern_restarts;
    search_pattern(ctx, patterns[p], restarts, budget, rng, best);
  }
  if (best.status == OracleStatus::kOk) best.length /= inst.kappa();
  return best;
}

OracleResult oracle_min_for_pattern(const ProblemInstance& inst, int n,
                                    const std::vector<PieceKind>& pattern,
                                    const OracleBudget& budget) {
  const SearchContext ctx = make_context(inst, n);
  OracleResult best;
  best.seed = budget.seed;
  best.length = std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(splitmix64(budget.seed));
  search_pattern(ctx, pattern, budget.restarts, budget, rng, best);
  if (best.status == OracleStatus::kOk) best.length /= inst.kappa();
  return best;
}

ProblemInstance random_instance(std::mt19937_64& rng, double half_width) {
  std::uniform_real_distribution<double> coord(-half_width, half_width);
  std::uniform_real_distribution<double> heading(-kPi, kPi);
  const double x0 = coord(rng), y0 = coord(rng), t0 = heading(rng);
  const double x1 = coord(rng), y1 = coord(rng), t1 = heading(rng);
  return {Pose(x0, y0, t0), Pose(x1, y1, t1)};
}

double swept_polar_angle(const CsPath& path, const Point& origin) {
  double total = 0.0;
  for (const Segment& seg : path.segments) {
    const double len = segment_length(seg);
    // Arcs are split so that each chord subtends well under pi about origin.
    const int steps = is_arc(seg) ? std::max(1, static_cast<int>(std::ceil(len / 0.25))) : 1;
    Vector prev = segment_start(seg) - origin;
    for (int k = 1; k <= steps; ++k) {
      const Vector cur = segment_point(seg, len * k / steps) - origin;
      total += std::atan2(cross(prev, cur), prev.dot(cur));
      prev = cur;
    }
  }
  return total;
}

double min_distance_to(const CsPath& path, const Point& origin) {
  double best = std::numeric_limits<double>::infinity();
  for (const Segment& seg : path.segments) {
    best = std::min({best, (segment_start(seg) - origin).norm(),
                     (segment_end(seg) - origin).norm()});
    if (const auto* l = std::get_if<Line>(&seg)) {
      const Vector d = l->to - l->from;
      const double len2 = d.squaredNorm();
      if (len2 > 0.0) {
        const double t = std::clamp((origin - l->from).dot(d) / len2, 0.0, 1.0);
        best = std::min(best, (l->from + t * d - origin).norm());
      }
    } else {
      const Arc& a = std::get<Arc>(seg);
      const Vector to_origin = origin - a.center;
      const double dc = to_origin.norm();
      if (dc < kEps) {
        best = std::min(best, 1.0);
        continue;
      }
      // Nearest point of the full circle; count it if the arc reaches it.
      double t = sign(a.turn) * (heading_of(to_origin) - a.start_angle);
      t -= kTwoPi * std::floor(t / kTwoPi);
      if (t <= a.sweep) best = std::min(best, std::abs(dc - 1.0));
    }
  }
  return best;
}

bool check_radial_bound(const CsPath& path, const Point& origin) {
  if (min_distance_to(path, origin) < 1.0 - kEps) {
    throw PathError(ErrorCode::kPreconditionViolation,
                    "path comes closer than 1 to the origin of the radial bound");
  }
  return path_length(path) >= std::abs(swept_polar_angle(path, origin)) - kEps;
}

double loop_length(const CsPath& path) {
  const auto first = first_self_intersection(path);
  if (!first) {
    throw PathError(ErrorCode::kNoSelfIntersection, "path has no self-intersection");
  }
  return first->s2 - first->s1;
}

double loop_length(const SampledPath& path) {
  std::vector<Point> pts;
  std::vector<double> s;
  for (const PoseSample& p : path.samples) {
    pts.push_back(p.point * path.kappa);
    s.push_back(p.s * path.kappa);
  }
  const auto hits = polyline_self_intersections(pts, s);
  if (hits.empty()) {
    throw PathError(ErrorCode::kNoSelfIntersection, "path has no self-intersection");
  }
  return hits.front().s2 - hits.front().s1;
}

bool check_loop_bound(const CsPath& path) { return loop_length(path) >= kTwoPi - 1e-6; }

bool check_loop_bound(const SampledPath& path) {
  return loop_length(path) >= kTwoPi - 1e-6;
}

}  // namespace hdubins
