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

// JSON and SVG serialisation.
//
// Paths are held in curvature-1 units internally; every writer takes the
// instance kappa and reports positions and lengths in instance units.
// Numbers are rounded to 12 significant digits. Malformed input raises
// PathError(kInvalidArgument).

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hdubins/class_minimiser.hpp"
#include "hdubins/geometry.hpp"
#include "hdubins/homotopy.hpp"
#include "hdubins/normaliser.hpp"

namespace hdubins {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits.
double round12(double v);

/// Parses "x,y,theta". Angles are radians unless degrees is set.
Pose parse_pose(std::string_view text, bool degrees = false);

/// Parses "n" or "a..b".
std::pair<int, int> parse_class_range(std::string_view text);

Json pose_to_json(const Pose& p);

/// Compact form {start, kappa, segments:[{kind, sweep|length}]}.
Json cs_path_to_json(const CsPath& path, double kappa = 1.0);

/// Reads the compact form; returns the path in curvature-1 units and the
/// kappa it declared (1 when absent).
std::pair<CsPath, double> cs_path_from_json(const Json& j);

/// Detailed segment list with centres, endpoints and radii.
Json segments_to_json(const CsPath& path, double kappa = 1.0);

Json sampled_to_json(const SampledPath& path);
SampledPath sampled_from_json(const Json& j, double kappa = 1.0);

Json proximity_to_json(const ProximityReport& r);
Json minimiser_to_json(const MinimiserResult& r, double kappa,
                       const ProximityReport& proximity);

/// Path, four dashed adjacent circles and pose arrows; one group per
/// segment; the unit circle is drawn with a 100 px radius.
std::string render_path_svg(const ProblemInstance& inst, const CsPath& path);

/// Class-length profile chart.
std::string render_profile_svg(const std::vector<std::pair<int, double>>& profile);

}  // namespace hdubins
