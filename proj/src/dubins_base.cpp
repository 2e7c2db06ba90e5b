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

#include "hdubins/dubins_base.hpp"

#include <cassert>
#include <cmath>
#include <string>

namespace hdubins {

namespace {

Turn turn_of(PieceKind k) { return k == PieceKind::kLeft ? Turn::kLeft : Turn::kRight; }

Point circle_of(const Pose& p, Turn t) {
  const AdjacentCircles c = adjacent_circles(p);
  return t == Turn::kLeft ? c.left : c.right;
}

// Sweep needed to turn from heading `from` to heading `to` in direction t.
double sweep_between(double from, double to, Turn t) {
  return mod_two_pi(sign(t) * (to - from));
}

BaseCandidate finish(BaseType type, int variant, const Pose& start,
                     const std::array<double, 3>& amounts, double kappa) {
  const auto kinds = pieces_of(type);
  const std::array<Piece, 3> pieces = {Piece{kinds[0], amounts[0]},
                                       Piece{kinds[1], amounts[1]},
                                       Piece{kinds[2], amounts[2]}};
  BaseCandidate c;
  c.type = type;
  c.variant = variant;
  c.amounts = amounts;
  c.path = make_path(start, pieces);
  c.length = (amounts[0] + amounts[1] + amounts[2]) / kappa;
  return c;
}

std::vector<BaseCandidate> solve_csc(const ProblemInstance& scaled, BaseType type,
                                     double kappa) {
  const Pose& x = scaled.start();
  const Pose& y = scaled.end();
  const auto kinds = pieces_of(type);
  const Turn first = turn_of(kinds[0]);
  const Turn last = turn_of(kinds[2]);
  const Point c1 = circle_of(x, first);
  const Point c2 = circle_of(y, last);
  const Vector v = c2 - c1;
  const double d = v.norm();

  double line_heading = x.theta();
  double line_length = 0.0;
  if (first == last) {
    // Outer tangent; coincident circles collapse to a single arc.
    if (d >= kEps) {
      line_heading = heading_of(v);
      line_length = d;
    }
  } else {
    // Inner tangent between circles whose centres are d >= 2 apart.
    if (d < 2.0 - kEps) return {};
    line_length = std::sqrt(std::max(0.0, d * d - 4.0));
    const double tilt = std::atan2(2.0, line_length);
    line_heading = heading_of(v) + (first == Turn::kLeft ? tilt : -tilt);
  }
  const std::array<double, 3> amounts = {sweep_between(x.theta(), line_heading, first),
                                         line_length,
                                         sweep_between(line_heading, y.theta(), last)};
  return {finish(type, 0, x, amounts, kappa)};
}

std::vector<BaseCandidate> solve_ccc(const ProblemInstance& scaled, BaseType type,
                                     double kappa) {
  const Pose& x = scaled.start();
  const Pose& y = scaled.end();
  const Turn outer = type == BaseType::kLRL ? Turn::kLeft : Turn::kRight;
  const Turn middle = opposite(outer);
  const Point c1 = circle_of(x, outer);
  const Point c2 = circle_of(y, outer);
  const Vector v = c2 - c1;
  const double d = v.norm();
  if (d > 4.0 + kEps) return {};

  // Centres of the middle circle: distance 2 from both outer centres.
  std::vector<Point> middles;
  if (d < kEps) {
    // Coincident outer circles: choose the middle circle tangent at x.
    middles.push_back(c1 + 2.0 * (x.position() - c1));
  } else {
    const double h = std::sqrt(std::max(0.0, 4.0 - d * d / 4.0));
    const Point mid = c1 + v / 2.0;
    const Vector perp = left_normal(v / d);
    middles.push_back(mid + h * perp);
    if (h >= kEps) middles.push_back(mid - h * perp);
  }

  std::vector<BaseCandidate> out;
  for (std::size_t i = 0; i < middles.size(); ++i) {
    const Point& m = middles[i];
    const Point p1 = (c1 + m) / 2.0;
    const Point p2 = (m + c2) / 2.0;
    const double h1 = heading_of(p1 - c1) + sign(outer) * kPi / 2.0;
    const double h2 = heading_of(p2 - c2) + sign(outer) * kPi / 2.0;
    const std::array<double, 3> amounts = {sweep_between(x.theta(), h1, outer),
                                           sweep_between(h1, h2, middle),
                                           sweep_between(h2, y.theta(), outer)};
    out.push_back(finish(type, static_cast<int>(i), x, amounts, kappa));
  }
  return out;
}

}  // namespace

std::string_view to_string(BaseType t) {
  switch (t) {
    case BaseType::kLSL:
      return "LSL";
    case BaseType::kRSR:
      return "RSR";
    case BaseType::kLSR:
      return "LSR";
    case BaseType::kRSL:
      return "RSL";
    case BaseType::kLRL:
      return "LRL";
    case BaseType::kRLR:
      return "RLR";
  }
  return "?";
}

BaseType base_type_from_string(std::string_view name) {
  for (BaseType t : kAllBaseTypes) {
    if (to_string(t) == name) return t;
  }
  throw PathError(ErrorCode::kInvalidArgument,
                  "unknown base type '" + std::string(name) + "'");
}

bool is_symmetric(BaseType t) { return t == BaseType::kLSL || t == BaseType::kRSR; }
bool is_skew(BaseType t) { return t == BaseType::kLSR || t == BaseType::kRSL; }
bool is_ccc(BaseType t) { return t == BaseType::kLRL || t == BaseType::kRLR; }

std::array<PieceKind, 3> pieces_of(BaseType t) {
  constexpr auto L = PieceKind::kLeft;
  constexpr auto S = PieceKind::kStraight;
  constexpr auto R = PieceKind::kRight;
  switch (t) {
    case BaseType::kLSL:
      return {L, S, L};
    case BaseType::kRSR:
      return {R, S, R};
    case BaseType::kLSR:
      return {L, S, R};
    case BaseType::kRSL:
      return {R, S, L};
    case BaseType::kLRL:
      return {L, R, L};
    case BaseType::kRLR:
      return {R, L, R};
  }
  return {L, S, L};
}

std::vector<BaseCandidate> solve_base(const ProblemInstance& inst, BaseType t) {
  const ProblemInstance scaled = inst.scaled();
  return is_ccc(t) ? solve_ccc(scaled, t, inst.kappa())
                   : solve_csc(scaled, t, inst.kappa());
}

std::vector<BaseCandidate> all_base_candidates(const ProblemInstance& inst) {
  std::vector<BaseCandidate> out;
  for (BaseType t : kAllBaseTypes) {
    auto c = solve_base(inst, t);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

BaseCandidate dubins_minimum(const ProblemInstance& inst) {
  const BaseCandidate* best = nullptr;
  const auto all = all_base_candidates(inst);
  for (const BaseCandidate& c : all) {
    if (is_ccc(c.type) && !(c.amounts[1] > kPi)) continue;
    // Strict improvement only, so earlier types win ties.
    if (best == nullptr || c.length < best->length - kEps) best = &c;
  }
  // LSL and RSR exist for every instance.
  assert(best != nullptr);
  if (best == nullptr) {
    throw PathError(ErrorCode::kPreconditionViolation, "no base candidate found");
  }
  return *best;
}

}  // namespace hdubins
