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

// Plane geometry kernel: poses, unit-radius arcs, line segments and the
// piecewise constant curvature ("cs") paths built from them. All routines
// work in units where the curvature bound is 1; ProblemInstance carries the
// similarity scaling for other bounds.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

namespace hdubins {

using Point = Eigen::Vector2d;
using Vector = Eigen::Vector2d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Geometric tolerance for tangency, continuity and degeneracy tests.
inline constexpr double kEps = 1e-9;

enum class ErrorCode : std::uint8_t {
  kContinuityViolation,
  kCurvatureViolation,
  kPreconditionViolation,
  kNoReplacement,
  kNoSelfIntersection,
  kBudgetExhausted,
  kInvalidArgument,
};

const char* to_string(ErrorCode code);

class PathError : public std::runtime_error {
 public:
  PathError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Maps an angle into (-pi, pi]; -pi maps to pi.
double normalize_angle(double angle);

/// Maps an angle into [0, 2pi). Values within kEps of 2pi map to 0.
double mod_two_pi(double angle);

/// Polar angle of v in (-pi, pi].
inline double heading_of(const Vector& v) { return std::atan2(v.y(), v.x()); }

inline Vector unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Counterclockwise quarter turn.
inline Vector left_normal(const Vector& v) { return {-v.y(), v.x()}; }

inline double cross(const Vector& a, const Vector& b) {
  return a.x() * b.y() - a.y() * b.x();
}

/// A point of the plane with a unit tangent direction.
class Pose {
 public:
  Pose() = default;
  Pose(double x, double y, double theta)
      : position_(x, y), theta_(normalize_angle(theta)) {}
  Pose(const Point& p, double theta)
      : position_(p), theta_(normalize_angle(theta)) {}

  [[nodiscard]] const Point& position() const noexcept { return position_; }
  [[nodiscard]] double x() const noexcept { return position_.x(); }
  [[nodiscard]] double y() const noexcept { return position_.y(); }
  [[nodiscard]] double theta() const noexcept { return theta_; }
  [[nodiscard]] Vector tangent() const { return unit(theta_); }

 private:
  Point position_{0.0, 0.0};
  double theta_{0.0};
};

/// True when positions agree within tol and headings agree modulo 2pi.
bool approx_equal(const Pose& a, const Pose& b, double tol = kEps);

struct AdjacentCircles {
  Point left;
  Point right;
};

/// Centres of the two unit circles tangent to p, left and right of heading.
AdjacentCircles adjacent_circles(const Pose& p);

/// Turning direction of an arc. The numeric value is the sign the arc
/// contributes to the turning angle.
enum class Turn : std::int8_t { kLeft = 1, kRight = -1 };

inline constexpr double sign(Turn t) { return static_cast<double>(t); }
inline constexpr Turn opposite(Turn t) {
  return t == Turn::kLeft ? Turn::kRight : Turn::kLeft;
}
inline constexpr char letter(Turn t) { return t == Turn::kLeft ? 'L' : 'R'; }

/// Unit-radius circular arc. start_angle is the polar angle of the start
/// point about the centre; sweep >= 0 and may exceed 2pi.
struct Arc {
  Point center;
  Turn turn = Turn::kLeft;
  double start_angle = 0.0;
  double sweep = 0.0;
};

struct Line {
  Point from;
  Point to;
};

using Segment = std::variant<Arc, Line>;

double segment_length(const Segment& seg);
bool is_arc(const Segment& seg);
/// 'L', 'R' or 'S'.
char segment_letter(const Segment& seg);
/// Signed curvature of the segment: +1, -1 or 0.
double segment_curvature(const Segment& seg);

Point segment_start(const Segment& seg);
Point segment_end(const Segment& seg);
/// Point at arclength t along the segment, t in [0, length].
Point segment_point(const Segment& seg, double t);

/// Unit arc starting at pose p turning in direction turn.
Arc make_arc(const Pose& p, Turn turn, double sweep);
Line make_line(const Pose& p, double length);

/// A C1 concatenation of unit arcs and line segments.
struct CsPath {
  Pose start;
  std::vector<Segment> segments;
};

enum class PieceKind : std::uint8_t { kLeft, kStraight, kRight };

/// Letter-plus-amount description of a cs path piece: sweep for arcs,
/// length for lines.
struct Piece {
  PieceKind kind;
  double amount;
};

char letter(PieceKind kind);
double curvature(PieceKind kind);
PieceKind piece_kind(char letter);

/// Builds a cs path by traversing pieces from start.
CsPath make_path(const Pose& start, std::span<const Piece> pieces);
std::vector<Piece> to_pieces(const CsPath& path);

/// Pose reached after traversing all segments. Throws
/// PathError(kContinuityViolation) if consecutive segments do not join C1.
Pose path_endpoint(const CsPath& path);
/// Checks junction continuity without computing anything else.
void validate(const CsPath& path);

double path_length(const CsPath& path);

/// Number of segments longer than kEps.
int complexity(const CsPath& path);

/// Poses at the start of every segment followed by the path endpoint.
std::vector<Pose> junction_poses(const CsPath& path);

struct PathSample {
  double s;
  Point point;
  /// Continuous (unwrapped) heading, equal to start.theta() at s = 0.
  double heading;
};

/// Equally spaced samples including both endpoints; spacing <= step.
std::vector<PathSample> sample(const CsPath& path, double step);

/// Rotates about the origin then translates.
Point transform_point(const Point& p, double rotation, const Vector& translation);
Pose transform_pose(const Pose& p, double rotation, const Vector& translation);
CsPath apply_rigid_motion(const CsPath& path, double rotation,
                          const Vector& translation);

/// Mirror in the x axis.
Pose reflect_pose(const Pose& p);
CsPath reflect(const CsPath& path);

/// Appends b to a; b must start where a ends.
CsPath concatenate(const CsPath& a, const CsPath& b);

/// Start and end pose with a curvature bound kappa > 0.
class ProblemInstance {
 public:
  ProblemInstance(Pose start, Pose end, double kappa = 1.0);

  [[nodiscard]] const Pose& start() const noexcept { return start_; }
  [[nodiscard]] const Pose& end() const noexcept { return end_; }
  [[nodiscard]] double kappa() const noexcept { return kappa_; }

  /// Same instance in units where the curvature bound is 1.
  [[nodiscard]] ProblemInstance scaled() const;
  /// Maps a path computed for scaled() back to original units. Arc
  /// geometry keeps its sweep; the caller reports radius 1/kappa.
  [[nodiscard]] double unscale_length(double scaled_length) const {
    return scaled_length / kappa_;
  }

  [[nodiscard]] ProblemInstance transformed(double rotation,
                                            const Vector& translation) const;
  [[nodiscard]] ProblemInstance reflected() const;

 private:
  Pose start_;
  Pose end_;
  double kappa_;
};

}  // namespace hdubins
