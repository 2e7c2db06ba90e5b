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

// Turning numbers, class indices and proximity classification of endpoint
// configurations.
//
// The class index of a path is n = (T - d) / 2pi, where T is its total
// signed turning and d the principal value in (-pi, pi] of the heading
// change between its end poses. Paths with the same end poses and
// different class indices cannot be deformed into one another while
// keeping the curvature bound.

#pragma once

#include <cstdint>
#include <functional>
#include <string_view>

#include "hdubins/geometry.hpp"

namespace hdubins {

struct TurningData {
  /// Signed sum of arc sweeps; left turns count positive.
  double total_turning = 0.0;
  /// End heading minus start heading, in (-pi, pi].
  double principal_delta = 0.0;
  int class_index = 0;
};

TurningData turning_data(const CsPath& path);
int class_of(const CsPath& path);

/// Class index for a total turning between two headings. A heading change
/// within kEps of -pi counts as +pi.
int class_index_for(double total_turning, double start_heading, double end_heading);
/// Principal heading change, with the same tie rule.
double principal_delta(double start_heading, double end_heading);

/// Total turning a path of class n must have between the two headings.
double turning_for_class(int n, double start_heading, double end_heading);

/// Inserts |count| full unit loops (left for count > 0, right otherwise)
/// as a single arc before segment `junction` (0 = start, size() = end).
CsPath insert_loops(const CsPath& path, std::size_t junction, int count);

enum class RawCondition : std::uint8_t { kI, kII, kIII, kIV };
enum class ProximityLabel : std::uint8_t { kA, kB, kC, kD };

std::string_view to_string(RawCondition c);
std::string_view to_string(ProximityLabel l);

struct ProximityReport {
  /// Distance between the left adjacent circle centres of start and end.
  double d_ll = 0.0;
  /// Same for the right adjacent circles.
  double d_rr = 0.0;
  RawCondition raw = RawCondition::kI;
  ProximityLabel label = ProximityLabel::kA;
  /// Set when the C/D split came from the embedded-class heuristic.
  bool heuristic = false;
};

/// Predicate deciding whether a condition (iv) instance has a class of
/// embedded paths.
using EmbeddedClassPredicate = std::function<bool(const ProblemInstance&)>;

RawCondition raw_condition(const ProblemInstance& inst);

ProximityReport classify_proximity(const ProblemInstance& inst);
ProximityReport classify_proximity(const ProblemInstance& inst,
                                   const EmbeddedClassPredicate& has_embedded);

/// Default embedded-class heuristic. Throws PathError(kPreconditionViolation)
/// unless the instance satisfies condition (iv).
///
/// Returns true when some base path of positive length is embedded and a
/// bounded random deformation search cannot stretch it, while embedded and
/// within its class, to 2pi beyond its own length. The exact criterion is
/// not known to this library; results are always flagged heuristic.
bool has_embedded_class(const ProblemInstance& inst);

/// Search budget of the deformation search.
struct EscapeSearchBudget {
  int restarts = 6;
  int steps = 400;
  std::uint64_t seed = 0x5eed;
};

/// Tries to deform `path` (kept embedded, endpoints and class fixed) to a
/// length of at least target_length. Returns the longest length reached.
double escape_search(const CsPath& path, double target_length,
                     const EscapeSearchBudget& budget = {});

}  // namespace hdubins
