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

// Shortest path of a prescribed class index.
//
// Every class minimiser is a base path (CSC or CCC, arcs below one full
// turn) with k full unit loops attached, where k is the class index minus
// the base path's own index. Loops of one orientation only are used, so a
// candidate costs the base length plus 2pi|k|. The minimiser is found by
// enumerating these candidates for every realisable base path.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hdubins/dubins_base.hpp"
#include "hdubins/geometry.hpp"

namespace hdubins {

enum class LoopPlacement : std::uint8_t { kStart, kMiddle, kEnd };

std::string_view to_string(LoopPlacement p);

struct LoopedCandidate {
  BaseCandidate base;
  int base_class = 0;
  /// Signed loop count: k > 0 adds left loops, k < 0 right loops.
  int loops = 0;
  LoopPlacement placement = LoopPlacement::kStart;
  /// "CSC", "CCC", "C^χ", "C^χ S C", "C^χ C S C", "C S C^χ", "C^χ C C",
  /// "C C^χ C" or "C^χ C C C".
  std::string family;
  /// Curvature-1 units, like BaseCandidate::path.
  CsPath path;
  /// Instance units.
  double length = 0.0;
};

/// Candidates of class n, one per realisable base path and placement.
std::vector<LoopedCandidate> enumerate_candidates(const ProblemInstance& inst, int n);

struct MinimiserResult {
  int class_index = 0;
  LoopedCandidate winner;
  double length = 0.0;
  /// Number of attached loops, |k|.
  int chi = 0;
  /// Transversal self-crossings of the winner's geometry.
  int crossings = 0;
  std::vector<LoopedCandidate> runner_ups;
};

/// Ties (within kEps) prefer fewer loops, then base type order, then
/// loops merged with an adjacent arc of the same orientation.
MinimiserResult minimise_in_class(const ProblemInstance& inst, int n);

/// (n, minimal length) for n in [lo, hi].
std::vector<std::pair<int, double>> class_length_profile(const ProblemInstance& inst,
                                                         int lo, int hi);

/// Arc/line letter string of the path after dropping degenerate segments
/// and merging consecutive arcs on the same circle, e.g. "CSC".
std::string reduced_word(const CsPath& path);

/// True if the reduced word contains "CSCSC" or "CSCCSC".
bool contains_excluded_component(const CsPath& path);

}  // namespace hdubins
