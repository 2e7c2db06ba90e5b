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

#include "hdubins/homotopy.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <random>
#include <sstream>

#include "hdubins/bang_bang.hpp"
#include "hdubins/dubins_base.hpp"
#include "hdubins/intersections.hpp"

namespace hdubins {

double principal_delta(double start_heading, double end_heading) {
  double d = normalize_angle(end_heading - start_heading);
  if (d <= -kPi + kEps) d = kPi;
  return d;
}

int class_index_for(double total_turning, double start_heading, double end_heading) {
  const double delta = principal_delta(start_heading, end_heading);
  const double raw = (total_turning - delta) / kTwoPi;
  const double n = std::round(raw);
  if (std::abs(raw - n) * kTwoPi > 1e-6) {
    std::ostringstream msg;
    msg << "total turning " << total_turning << " is not the heading change "
        << delta << " plus a multiple of 2pi";
    throw PathError(ErrorCode::kContinuityViolation, msg.str());
  }
  return static_cast<int>(n);
}

double turning_for_class(int n, double start_heading, double end_heading) {
  return principal_delta(start_heading, end_heading) + kTwoPi * n;
}

TurningData turning_data(const CsPath& path) {
  const Pose end = path_endpoint(path);
  TurningData td;
  for (const Segment& seg : path.segments) {
    td.total_turning += segment_curvature(seg) * segment_length(seg);
  }
  td.principal_delta = principal_delta(path.start.theta(), end.theta());
  td.class_index = class_index_for(td.total_turning, path.start.theta(), end.theta());
  return td;
}

int class_of(const CsPath& path) { return turning_data(path).class_index; }

CsPath insert_loops(const CsPath& path, std::size_t junction, int count) {
  if (junction > path.segments.size()) {
    throw PathError(ErrorCode::kInvalidArgument, "junction index out of range");
  }
  if (count == 0) return path;
  const std::vector<Pose> poses = junction_poses(path);
  const Turn turn = count > 0 ? Turn::kLeft : Turn::kRight;
  CsPath out = path;
  out.segments.insert(out.segments.begin() + static_cast<std::ptrdiff_t>(junction),
                      make_arc(poses[junction], turn, kTwoPi * std::abs(count)));
  return out;
}

std::string_view to_string(RawCondition c) {
  switch (c) {
    case RawCondition::kI:
      return "I";
    case RawCondition::kII:
      return "II";
    case RawCondition::kIII:
      return "III";
    case RawCondition::kIV:
      return "IV";
  }
  return "?";
}

std::string_view to_string(ProximityLabel l) {
  switch (l) {
    case ProximityLabel::kA:
      return "A";
    case ProximityLabel::kB:
      return "B";
    case ProximityLabel::kC:
      return "C";
    case ProximityLabel::kD:
      return "D";
  }
  return "?";
}

namespace {

struct CentreDistances {
  double ll;
  double rr;
};

CentreDistances centre_distances(const ProblemInstance& inst) {
  const ProblemInstance s = inst.scaled();
  const AdjacentCircles a = adjacent_circles(s.start());
  const AdjacentCircles b = adjacent_circles(s.end());
  return {(a.left - b.left).norm(), (a.right - b.right).norm()};
}

RawCondition condition_from(const CentreDistances& d) {
  // The threshold 4 is compared with the geometric tolerance so that the
  // classification does not flicker under rigid motions.
  const bool far_l = d.ll >= 4.0 - kEps;
  const bool far_r = d.rr >= 4.0 - kEps;
  if (far_l && far_r) return RawCondition::kI;
  if (!far_l && far_r) return RawCondition::kII;
  if (far_l && !far_r) return RawCondition::kIII;
  return RawCondition::kIV;
}

// Pattern for the deformation search: the path's own pieces with a random
// two-letter filler inserted before, between and after them. Two free
// letters per gap leave room for bumps such as R L inside a straight.
std::vector<PieceKind> expanded_pattern(const std::vector<Piece>& pieces, std::mt19937_64& rng,
                                        std::vector<int>& original_slot) {
  static constexpr PieceKind kKinds[3] = {PieceKind::kLeft, PieceKind::kStraight,
                                          PieceKind::kRight};
  std::vector<PieceKind> out;
  original_slot.clear();
  const auto fill = [&](const PieceKind* prev, const PieceKind* next) {
    std::vector<std::pair<PieceKind, PieceKind>> words;
    for (PieceKind a : kKinds) {
      for (PieceKind b : kKinds) {
        if (a == b || (prev != nullptr && *prev == a) || (next != nullptr && *next == b)) continue;
        words.emplace_back(a, b);
      }
    }
    const auto [a, b] = words[std::uniform_int_distribution<std::size_t>(0, words.size() - 1)(rng)];
    out.insert(out.end(), {a, b});
    original_slot.insert(original_slot.end(), {-1, -1});
  };
  for (std::size_t i = 0; i <= pieces.size(); ++i) {
    const PieceKind* prev = i > 0 ? &pieces[i - 1].kind : nullptr;
    const PieceKind* next = i < pieces.size() ? &pieces[i].kind : nullptr;
    fill(prev, next);
    if (i < pieces.size()) {
      out.push_back(pieces[i].kind);
      original_slot.push_back(static_cast<int>(i));
    }
  }
  return out;
}

}  // namespace

RawCondition raw_condition(const ProblemInstance& inst) {
  return condition_from(centre_distances(inst));
}

double escape_search(const CsPath& path, double target_length,
                     const EscapeSearchBudget& budget) {
  const std::vector<Piece> pieces = to_pieces(path);
  const Pose end = path_endpoint(path);
  const double turning = turning_data(path).total_turning;
  double best = path_length(path);
  if (pieces.empty() || pieces.size() * 3 + 2 > kMaxBangBangPieces) return best;

  std::mt19937_64 rng(budget.seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  for (int restart = 0; restart < budget.restarts && best < target_length; ++restart) {
    std::vector<int> slot;
    std::vector<PieceKind> pattern = expanded_pattern(pieces, rng, slot);
    const EndpointProjector projector(path.start, end.position(), turning, pattern);
    PieceLengths lengths(static_cast<int>(pattern.size()));
    for (int i = 0; i < lengths.size(); ++i) {
      lengths[i] = slot[i] >= 0 ? pieces[slot[i]].amount : 0.0;
    }
    double current = lengths.sum();
    double step = 0.2;
    for (int it = 0; it < budget.steps && current < target_length; ++it) {
      EndpointJacobian jac;
      (void)projector.residual(lengths, &jac);
      Eigen::Matrix3d jjt = jac * jac.transpose();
      jjt.diagonal().array() += 1e-12;
      PieceLengths dir(lengths.size());
      for (int i = 0; i < dir.size(); ++i) dir[i] = 1.0 + 1.5 * noise(rng);
      // Tangent to the endpoint manifold.
      dir -= jac.transpose() * jjt.ldlt().solve(jac * dir);
      const double norm = dir.norm();
      if (!(norm > 1e-12)) {
        step = std::max(step * 0.7, 1e-3);
        continue;
      }
      PieceLengths trial = (lengths + dir * (step / norm)).cwiseMax(0.0);
      bool accepted = false;
      if (projector.project(trial, 1e-10) && trial.sum() > current) {
        BangBangPath bb{path.start, pattern,
                        std::vector<double>(trial.data(), trial.data() + trial.size())};
        if (is_embedded(to_cs_path(bb))) {
          lengths = trial;
          current = trial.sum();
          accepted = true;
        }
      }
      step = accepted ? std::min(step * 1.3, 1.0) : std::max(step * 0.7, 1e-3);
    }
    best = std::max(best, current);
  }
  return best;
}

bool has_embedded_class(const ProblemInstance& inst) {
  if (raw_condition(inst) != RawCondition::kIV) {
    throw PathError(ErrorCode::kPreconditionViolation,
                    "embedded-class test applies to condition (iv) only");
  }
  // The search runs in a canonical frame (start pose at the origin facing
  // +x, end pose rounded to 1e-12) so that rigid motions of the instance
  // cannot change the outcome through rounding.
  const ProblemInstance s = inst.scaled();
  const double rot = -s.start().theta();
  const Vector shift = -transform_point(s.start().position(), rot, Vector::Zero());
  const Pose end = transform_pose(s.end(), rot, shift);
  const auto snap = [](double v) { return std::round(v * 1e12) / 1e12; };
  const ProblemInstance canonical(Pose(0, 0, 0),
                                  Pose(snap(end.x()), snap(end.y()), snap(end.theta())));
  for (const BaseCandidate& c : all_base_candidates(canonical)) {
    const double len = path_length(c.path);
    if (len <= kEps || !is_embedded(c.path)) continue;
    if (escape_search(c.path, len + kTwoPi) < len + kTwoPi) return true;
  }
  return false;
}

ProximityReport classify_proximity(const ProblemInstance& inst) {
  return classify_proximity(inst, has_embedded_class);
}

ProximityReport classify_proximity(const ProblemInstance& inst,
                                   const EmbeddedClassPredicate& has_embedded) {
  const CentreDistances d = centre_distances(inst);
  ProximityReport r;
  r.d_ll = d.ll;
  r.d_rr = d.rr;
  r.raw = condition_from(d);
  switch (r.raw) {
    case RawCondition::kI:
      r.label = ProximityLabel::kA;
      break;
    case RawCondition::kII:
    case RawCondition::kIII:
      r.label = ProximityLabel::kB;
      break;
    case RawCondition::kIV:
      r.label = has_embedded(inst) ? ProximityLabel::kD : ProximityLabel::kC;
      r.heuristic = true;
      break;
  }
  return r;
}

}  // namespace hdubins
