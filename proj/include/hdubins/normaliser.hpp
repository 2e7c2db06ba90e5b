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

// Normalisation of sampled bounded-curvature paths into cs paths.
//
// The input is cut greedily into fragments of arclength at most
// kFragmentTarget. Each fragment is replaced by the shortest CSC path
// between its end poses whose arcs are shorter than pi; such a path is never
// longer than the fragment and has the same turning, so the concatenation is
// a cs path of no greater length in the same class.

#pragma once

#include <cstddef>
#include <vector>

#include "hdubins/geometry.hpp"

namespace hdubins {

inline constexpr double kFragmentTarget = 0.9;
inline constexpr double kMaxSampleSpacing = 0.05;

struct PoseSample {
  double s = 0.0;
  Point point{0.0, 0.0};
  double theta = 0.0;
};

struct SampledPath {
  std::vector<PoseSample> samples;
  double kappa = 1.0;
};

/// Samples a cs path (curvature-1 units) into a SampledPath.
SampledPath to_sampled(const CsPath& path, double step = 0.025);

/// Copy in curvature-1 units.
SampledPath scaled(const SampledPath& path);

/// Checks the sampling invariants and the curvature bound (central heading
/// differences, tolerance 10x the largest spacing). Throws PathError with
/// kPreconditionViolation or kCurvatureViolation.
void validate(const SampledPath& path);

/// Largest finite-difference curvature estimate (curvature-1 units).
double max_curvature_estimate(const SampledPath& path);

/// Class index from the accumulated sampled heading changes.
int sampled_class_index(const SampledPath& path);
double sampled_length(const SampledPath& path);

struct Fragmentation {
  /// Sample indices t_0 = 0 < t_1 < ... < t_m = last.
  std::vector<std::size_t> breaks;
};

Fragmentation fragment(const SampledPath& path);

/// Shortest CSC path with arcs shorter than pi (curvature-1 units). Throws
/// PathError(kNoReplacement) when none exists.
CsPath replace_fragment(const Pose& start, const Pose& end);

/// Normalised cs path in curvature-1 units.
CsPath normalise(const SampledPath& path);

}  // namespace hdubins
