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

#include "hdubins/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hdubins {

namespace {

// Junction tolerance grows with coordinate magnitude so that transformed
// paths far from the origin still validate.
double position_tolerance(const Point& p) {
  return kEps * (1.0 + p.lpNorm<Eigen::Infinity>());
}

double arc_start_heading(const Arc& a) {
  return a.start_angle + sign(a.turn) * kPi / 2.0;
}

double arc_end_angle(const Arc& a) {
  return a.start_angle + sign(a.turn) * a.sweep;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kContinuityViolation:
      return "CONTINUITY_VIOLATION";
    case ErrorCode::kCurvatureViolation:
      return "CURVATURE_VIOLATION";
    case ErrorCode::kPreconditionViolation:
      return "PRECONDITION_VIOLATION";
    case ErrorCode::kNoReplacement:
      return "NO_REPLACEMENT";
    case ErrorCode::kNoSelfIntersection:
      return "NO_SELF_INTERSECTION";
    case ErrorCode::kBudgetExhausted:
      return "BUDGET_EXHAUSTED";
    case ErrorCode::kInvalidArgument:
      return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

double normalize_angle(double angle) {
  double a = std::remainder(angle, kTwoPi);
  if (a <= -kPi) a += kTwoPi;
  return a;
}

double mod_two_pi(double angle) {
  double a = angle - kTwoPi * std::floor(angle / kTwoPi);
  if (a < 0.0 || a >= kTwoPi - kEps) a = 0.0;
  return a;
}

bool approx_equal(const Pose& a, const Pose& b, double tol) {
  return (a.position() - b.position()).norm() <= tol &&
         std::abs(normalize_angle(a.theta() - b.theta())) <= tol;
}

AdjacentCircles adjacent_circles(const Pose& p) {
  const Vector n = left_normal(p.tangent());
  return {p.position() + n, p.position() - n};
}

double segment_length(const Segment& seg) {
  return std::visit(Overloaded{[](const Arc& a) { return a.sweep; },
                               [](const Line& l) { return (l.to - l.from).norm(); }},
                    seg);
}

bool is_arc(const Segment& seg) { return std::holds_alternative<Arc>(seg); }

char segment_letter(const Segment& seg) {
  if (const auto* a = std::get_if<Arc>(&seg)) return letter(a->turn);
  return 'S';
}

double segment_curvature(const Segment& seg) {
  if (const auto* a = std::get_if<Arc>(&seg)) return sign(a->turn);
  return 0.0;
}

Point segment_start(const Segment& seg) {
  return std::visit(
      Overloaded{[](const Arc& a) -> Point { return a.center + unit(a.start_angle); },
                 [](const Line& l) -> Point { return l.from; }},
      seg);
}

Point segment_end(const Segment& seg) {
  return std::visit(
      Overloaded{[](const Arc& a) -> Point { return a.center + unit(arc_end_angle(a)); },
                 [](const Line& l) -> Point { return l.to; }},
      seg);
}

Point segment_point(const Segment& seg, double t) {
  return std::visit(
      Overloaded{[t](const Arc& a) -> Point {
                   return a.center + unit(a.start_angle + sign(a.turn) * t);
                 },
                 [t](const Line& l) -> Point {
                   const double len = (l.to - l.from).norm();
                   if (len <= 0.0) return l.from;
                   return l.from + (l.to - l.from) * (t / len);
                 }},
      seg);
}

Arc make_arc(const Pose& p, Turn turn, double sweep) {
  const Vector n = left_normal(p.tangent()) * sign(turn);
  const Point c = p.position() + n;
  return Arc{c, turn, heading_of(p.position() - c), sweep};
}

Line make_line(const Pose& p, double length) {
  return Line{p.position(), p.position() + p.tangent() * length};
}

char letter(PieceKind kind) {
  switch (kind) {
    case PieceKind::kLeft:
      return 'L';
    case PieceKind::kRight:
      return 'R';
    case PieceKind::kStraight:
      break;
  }
  return 'S';
}

double curvature(PieceKind kind) {
  switch (kind) {
    case PieceKind::kLeft:
      return 1.0;
    case PieceKind::kRight:
      return -1.0;
    case PieceKind::kStraight:
      break;
  }
  return 0.0;
}

PieceKind piece_kind(char c) {
  switch (c) {
    case 'L':
    case 'l':
      return PieceKind::kLeft;
    case 'R':
    case 'r':
      return PieceKind::kRight;
    case 'S':
    case 's':
      return PieceKind::kStraight;
    default:
      throw PathError(ErrorCode::kInvalidArgument,
                      std::string("unknown piece letter '") + c + "'");
  }
}

namespace {

// Pose after traversing seg, given the heading on entry. Degenerate lines
// keep the incoming heading.
Pose advance_pose(const Segment& seg, double heading_in) {
  return std::visit(
      Overloaded{[](const Arc& a) {
                   const double end = arc_end_angle(a);
                   return Pose(a.center + unit(end), end + sign(a.turn) * kPi / 2.0);
                 },
                 [heading_in](const Line& l) {
                   const Vector d = l.to - l.from;
                   const double h = d.norm() > 1e-6 ? heading_of(d) : heading_in;
                   return Pose(l.to, h);
                 }},
      seg);
}

}  // namespace

CsPath make_path(const Pose& start, std::span<const Piece> pieces) {
  CsPath path{start, {}};
  path.segments.reserve(pieces.size());
  Pose cur = start;
  for (const Piece& pc : pieces) {
    if (pc.amount < 0.0 || !std::isfinite(pc.amount)) {
      throw PathError(ErrorCode::kInvalidArgument,
                      "piece amounts must be finite and non-negative");
    }
    Segment seg;
    switch (pc.kind) {
      case PieceKind::kLeft:
        seg = make_arc(cur, Turn::kLeft, pc.amount);
        break;
      case PieceKind::kRight:
        seg = make_arc(cur, Turn::kRight, pc.amount);
        break;
      case PieceKind::kStraight:
        seg = make_line(cur, pc.amount);
        break;
    }
    cur = advance_pose(seg, cur.theta());
    path.segments.push_back(seg);
  }
  return path;
}

std::vector<Piece> to_pieces(const CsPath& path) {
  std::vector<Piece> out;
  out.reserve(path.segments.size());
  for (const Segment& seg : path.segments) {
    out.push_back({piece_kind(segment_letter(seg)), segment_length(seg)});
  }
  return out;
}

Pose path_endpoint(const CsPath& path) {
  Pose cur = path.start;
  for (std::size_t i = 0; i < path.segments.size(); ++i) {
    const Segment& seg = path.segments[i];
    const Point p0 = segment_start(seg);
    double h0 = cur.theta();
    if (const auto* a = std::get_if<Arc>(&seg)) {
      h0 = arc_start_heading(*a);
    } else if (segment_length(seg) > 1e-6) {
      // Shorter lines carry no reliable direction.
      h0 = heading_of(std::get<Line>(seg).to - std::get<Line>(seg).from);
    }
    const double dp = (p0 - cur.position()).norm();
    const double dh = std::abs(normalize_angle(h0 - cur.theta()));
    if (dp > position_tolerance(cur.position()) || dh > 1e3 * kEps) {
      std::ostringstream msg;
      msg << "segment " << i << " does not join its predecessor (position gap "
          << dp << ", heading gap " << dh << ")";
      throw PathError(ErrorCode::kContinuityViolation, msg.str());
    }
    cur = advance_pose(seg, cur.theta());
  }
  return cur;
}

void validate(const CsPath& path) { (void)path_endpoint(path); }

double path_length(const CsPath& path) {
  double total = 0.0;
  for (const Segment& seg : path.segments) total += segment_length(seg);
  return total;
}

int complexity(const CsPath& path) {
  return static_cast<int>(std::count_if(
      path.segments.begin(), path.segments.end(),
      [](const Segment& s) { return segment_length(s) > kEps; }));
}

std::vector<Pose> junction_poses(const CsPath& path) {
  std::vector<Pose> out;
  out.reserve(path.segments.size() + 1);
  Pose cur = path.start;
  out.push_back(cur);
  for (const Segment& seg : path.segments) {
    cur = advance_pose(seg, cur.theta());
    out.push_back(cur);
  }
  return out;
}

std::vector<PathSample> sample(const CsPath& path, double step) {
  if (!(step > 0.0)) {
    throw PathError(ErrorCode::kInvalidArgument, "sample step must be positive");
  }
  const double total = path_length(path);
  const auto intervals =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(total / step - 1e-12)));
  std::vector<PathSample> out;
  out.reserve(intervals + 1);

  // Walk segments while tracking the lifted heading at each segment start.
  std::size_t seg_idx = 0;
  double seg_offset = 0.0;
  double heading0 = path.start.theta();
  const auto seg_heading = [&](double t) {
    return heading0 + segment_curvature(path.segments[seg_idx]) * t;
  };
  for (std::size_t k = 0; k <= intervals; ++k) {
    const double s = (k == intervals) ? total : total * static_cast<double>(k) /
                                                    static_cast<double>(intervals);
    while (seg_idx < path.segments.size() &&
           s > seg_offset + segment_length(path.segments[seg_idx]) &&
           seg_idx + 1 < path.segments.size()) {
      const double len = segment_length(path.segments[seg_idx]);
      heading0 += segment_curvature(path.segments[seg_idx]) * len;
      seg_offset += len;
      ++seg_idx;
    }
    if (path.segments.empty()) {
      out.push_back({0.0, path.start.position(), heading0});
      continue;
    }
    const double t = std::clamp(s - seg_offset, 0.0,
                                segment_length(path.segments[seg_idx]));
    out.push_back({s, segment_point(path.segments[seg_idx], t), seg_heading(t)});
  }
  return out;
}

Point transform_point(const Point& p, double rotation, const Vector& translation) {
  const double c = std::cos(rotation);
  const double s = std::sin(rotation);
  return Point(c * p.x() - s * p.y(), s * p.x() + c * p.y()) + translation;
}

Pose transform_pose(const Pose& p, double rotation, const Vector& translation) {
  return Pose(transform_point(p.position(), rotation, translation),
              p.theta() + rotation);
}

CsPath apply_rigid_motion(const CsPath& path, double rotation,
                          const Vector& translation) {
  CsPath out{transform_pose(path.start, rotation, translation), {}};
  out.segments.reserve(path.segments.size());
  for (const Segment& seg : path.segments) {
    out.segments.push_back(std::visit(
        Overloaded{[&](const Arc& a) -> Segment {
                     return Arc{transform_point(a.center, rotation, translation),
                                a.turn, a.start_angle + rotation, a.sweep};
                   },
                   [&](const Line& l) -> Segment {
                     return Line{transform_point(l.from, rotation, translation),
                                 transform_point(l.to, rotation, translation)};
                   }},
        seg));
  }
  return out;
}

Pose reflect_pose(const Pose& p) { return Pose(p.x(), -p.y(), -p.theta()); }

CsPath reflect(const CsPath& path) {
  CsPath out{reflect_pose(path.start), {}};
  out.segments.reserve(path.segments.size());
  for (const Segment& seg : path.segments) {
    out.segments.push_back(std::visit(
        Overloaded{[](const Arc& a) -> Segment {
                     return Arc{Point(a.center.x(), -a.center.y()), opposite(a.turn),
                                -a.start_angle, a.sweep};
                   },
                   [](const Line& l) -> Segment {
                     return Line{Point(l.from.x(), -l.from.y()),
                                 Point(l.to.x(), -l.to.y())};
                   }},
        seg));
  }
  return out;
}

CsPath concatenate(const CsPath& a, const CsPath& b) {
  const Pose end = path_endpoint(a);
  if (!approx_equal(end, b.start, position_tolerance(end.position()) * 1e3)) {
    throw PathError(ErrorCode::kContinuityViolation,
                    "concatenated path does not start at the end of the first");
  }
  CsPath out = a;
  out.segments.insert(out.segments.end(), b.segments.begin(), b.segments.end());
  return out;
}

ProblemInstance::ProblemInstance(Pose start, Pose end, double kappa)
    : start_(start), end_(end), kappa_(kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw PathError(ErrorCode::kInvalidArgument, "kappa must be positive and finite");
  }
}

ProblemInstance ProblemInstance::scaled() const {
  return ProblemInstance(Pose(start_.position() * kappa_, start_.theta()),
                         Pose(end_.position() * kappa_, end_.theta()), 1.0);
}

ProblemInstance ProblemInstance::transformed(double rotation,
                                             const Vector& translation) const {
  return ProblemInstance(transform_pose(start_, rotation, translation),
                         transform_pose(end_, rotation, translation), kappa_);
}

ProblemInstance ProblemInstance::reflected() const {
  return ProblemInstance(reflect_pose(start_), reflect_pose(end_), kappa_);
}

}  // namespace hdubins
