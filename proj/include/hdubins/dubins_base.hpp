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

// The six three-piece base paths (LSL, RSR, LSR, RSL, LRL, RLR) between two
// poses and the global shortest path among them.

#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "hdubins/geometry.hpp"

namespace hdubins {

/// Declaration order is the tie-break order.
enum class BaseType : std::uint8_t { kLSL, kRSR, kLSR, kRSL, kLRL, kRLR };

inline constexpr std::array<BaseType, 6> kAllBaseTypes = {
    BaseType::kLSL, BaseType::kRSR, BaseType::kLSR,
    BaseType::kRSL, BaseType::kLRL, BaseType::kRLR};

std::string_view to_string(BaseType t);
BaseType base_type_from_string(std::string_view name);

/// LSL and RSR.
bool is_symmetric(BaseType t);
/// LSR and RSL.
bool is_skew(BaseType t);
/// LRL and RLR.
bool is_ccc(BaseType t);

/// Letters of the three pieces, e.g. {L, S, R} for LSR.
std::array<PieceKind, 3> pieces_of(BaseType t);

/// One realisation of a base type. Paths live in curvature-1 units (the
/// instance's scaled() frame); length is reported in the instance's units.
struct BaseCandidate {
  BaseType type = BaseType::kLSL;
  /// 0 or 1; selects the middle circle of a CCC path, always 0 for CSC.
  int variant = 0;
  /// Sweeps in [0, 2pi) for arcs, length for the line.
  std::array<double, 3> amounts{};
  CsPath path;
  double length = 0.0;
};

/// All realisable candidates of type t: zero or one for CSC types, up to two
/// for CCC types.
std::vector<BaseCandidate> solve_base(const ProblemInstance& inst, BaseType t);

/// solve_base over all six types, in tie-break order.
std::vector<BaseCandidate> all_base_candidates(const ProblemInstance& inst);

/// Shortest admissible base candidate; CCC candidates count only when their
/// middle arc exceeds pi.
BaseCandidate dubins_minimum(const ProblemInstance& inst);

}  // namespace hdubins
