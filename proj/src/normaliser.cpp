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

#include "hdubins/normaliser.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hdubins/dubins_base.hpp"
#include "hdubins/homotopy.hpp"

namespace hdubins {

SampledPath to_sampled(const CsPath& path, double step) {
  SampledPath out;
  for (const PathSample& s : sample(path, step)) {
    out.samples.push_back({s.s, s.point, s.heading});
  }
  return out;
}

SampledPath scaled(const SampledPath& path) {
  SampledPath out;
  out.samples.reserve(path.samples.size());
  for (const PoseSample& p : path.samples) {
    out.samples.push_back({p.s * path.kappa, p.point * path.kappa, p.theta});
  }
  return out;
}

namespace {

double max_spacing(const SampledPath& path) {
  double m = 0.0;
  for (std::size_t i = 1; i < path.samples.size(); ++i) {
    m = std::max(m, path.samples[i].s - path.samples[i - 1].s);
  }
  return m;
}

void check_sampling(const SampledPath& path) {
  const auto& v = path.samples;
  if (v.size() < 2) {
    throw PathError(ErrorCode::kPreconditionViolation,
                    "a sampled path needs at least two samples");
  }
  if (std::abs(v.front().s) > kEps) {
    throw PathError(ErrorCode::kPreconditionViolation, "arclength must start at 0");
  }
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double ds = v[i].s - v[i - 1].s;
    if (!(ds > 0.0)) {
      std::ostringstream msg;
      msg << "arclength not strictly increasing at sample " << i;
      throw PathError(ErrorCode::kPreconditionViolation, msg.str());
    }
    if (ds > kMaxSampleSpacing + kEps) {
      std::ostringstream msg;
      msg << "sample spacing " << ds << " at sample " << i << " exceeds "
          << kMaxSampleSpacing;
      throw PathError(ErrorCode::kPreconditionViolation, msg.str());
    }
  }
}

}  // namespace

double max_curvature_estimate(const SampledPath& path) {
  const auto& v = path.samples;
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const double dtheta = normalize_angle(v[i].theta - v[i - 1].theta) +
                          normalize_angle(v[i + 1].theta - v[i].theta);
    worst = std::max(worst, std::abs(dtheta) / (v[i + 1].s - v[i - 1].s));
  }
  return worst;
}

void validate(const SampledPath& path) {
  const SampledPath unit = scaled(path);
  check_sampling(unit);
  const double tol = 10.0 * max_spacing(unit);
  const double k = max_curvature_estimate(unit);
  if (k > 1.0 + tol) {
    std::ostringstream msg;
    msg << "estimated curvature " << k << " exceeds the bound (tolerance " << tol << ")";
    throw PathError(ErrorCode::kCurvatureViolation, msg.str());
  }
}

int sampled_class_index(const SampledPath& path) {
  const auto& v = path.samples;
  double turning = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    turning += normalize_angle(v[i].theta - v[i - 1].theta);
  }
  return class_index_for(turning, v.front().theta, v.back().theta);
}

double sampled_length(const SampledPath& path) {
  return path.samples.back().s - path.samples.front().s;
}

Fragmentation fragment(const SampledPath& path) {
  validate(path);
  const SampledPath unit = scaled(path);
  const auto& v = unit.samples;
  Fragmentation f;
  f.breaks.push_back(0);
  std::size_t from = 0;
  while (from + 1 < v.size()) {
    std::size_t to = from + 1;
    while (to + 1 < v.size() && v[to + 1].s - v[from].s <= kFragmentTarget + kEps) ++to;
    f.breaks.push_back(to);
    from = to;
  }
  return f;
}

CsPath replace_fragment(const Pose& start, const Pose& end) {
  const ProblemInstance inst(start, end);
  const CsPath* best = nullptr;
  double best_len = 0.0;
  std::vector<BaseCandidate> cands;
  for (BaseType t : {BaseType::kLSL, BaseType::kRSR, BaseType::kLSR, BaseType::kRSL}) {
    for (BaseCandidate& c : solve_base(inst, t)) cands.push_back(std::move(c));
  }
  for (const BaseCandidate& c : cands) {
    if (!(c.amounts[0] < kPi) || !(c.amounts[2] < kPi)) continue;
    if (best == nullptr || c.length < best_len - kEps) {
      best = &c.path;
      best_len = c.length;
    }
  }
  if (best == nullptr) {
    throw PathError(ErrorCode::kNoReplacement,
                    "no CSC path with arcs shorter than pi joins the fragment ends");
  }
  return *best;
}

CsPath normalise(const SampledPath& path) {
  const Fragmentation f = fragment(path);
  const SampledPath unit = scaled(path);
  const auto& v = unit.samples;
  const auto pose_at = [&](std::size_t i) { return Pose(v[i].point, v[i].theta); };

  CsPath out{pose_at(0), {}};
  for (std::size_t j = 1; j < f.breaks.size(); ++j) {
    const CsPath piece = replace_fragment(pose_at(f.breaks[j - 1]), pose_at(f.breaks[j]));
    out.segments.insert(out.segments.end(), piece.segments.begin(), piece.segments.end());
  }
  return out;
}

}  // namespace hdubins
