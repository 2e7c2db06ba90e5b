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

// Exact self-intersection tests for cs paths and polylines, by pairwise
// segment intersection (line/line, line/circle, circle/circle).

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hdubins/geometry.hpp"

namespace hdubins {

/// Two distinct arclength parameters s1 < s2 mapping to the same point.
struct SelfIntersection {
  double s1 = 0.0;
  double s2 = 0.0;
  Point point;
  /// False for tangential touches, coincident overlaps and contacts at a
  /// path endpoint.
  bool transversal = false;
};

/// All self-intersections, sorted by (s2, s1). Overlapping coincident
/// pieces are reported by their boundary contacts only.
std::vector<SelfIntersection> self_intersections(const CsPath& path);

/// Number of transversal crossings at interior points of the path.
int count_crossings(const CsPath& path);

/// True when no two distinct parameters share a point (a closed path is
/// not embedded).
bool is_embedded(const CsPath& path);

/// The self-intersection with the smallest s2.
std::optional<SelfIntersection> first_self_intersection(const CsPath& path);

/// Same queries for a polyline with cumulative arclengths s (one per vertex).
std::vector<SelfIntersection> polyline_self_intersections(std::span<const Point> vertices,
                                                          std::span<const double> s);

}  // namespace hdubins
