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

#include <doctest.h>

#include <random>
#include <regex>

#include "hdubins/class_minimiser.hpp"
#include "hdubins/io.hpp"
#include "hdubins/oracle.hpp"

namespace hdubins {
namespace {

int count(const std::string& text, const std::string& needle) {
  int c = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + 1)) {
    ++c;
  }
  return c;
}

TEST_CASE("pose and range parsing") {
  const Pose p = parse_pose("1,2.5,-0.5");
  CHECK(p.x() == 1.0);
  CHECK(p.y() == 2.5);
  CHECK(p.theta() == -0.5);
  CHECK(parse_pose("0,0,90", true).theta() == doctest::Approx(kPi / 2));
  CHECK_THROWS_AS(parse_pose("1,2"), PathError);
  CHECK_THROWS_AS(parse_pose("1,2,x"), PathError);
  CHECK(parse_class_range("3") == std::pair{3, 3});
  CHECK(parse_class_range("-3..3") == std::pair{-3, 3});
  CHECK_THROWS_AS(parse_class_range("2..1"), PathError);
  CHECK_THROWS_AS(parse_class_range("0..64"), PathError);
}

TEST_CASE("twelve significant digits") {
  CHECK(round12(kPi) == 3.14159265359);
  CHECK(round12(6.123233995736766e-17) == 0.0);
  CHECK(Json(round12(kTwoPi)).dump() == "6.28318530718");
}

TEST_CASE("cs path json round trip") {
  const std::vector<Piece> pieces = {{PieceKind::kLeft, 1.25}, {PieceKind::kStraight, 2.5},
                                     {PieceKind::kRight, 0.75}};
  const CsPath p = make_path(Pose(2, 4, 0.5), pieces);
  const Json j = cs_path_to_json(p, 2.0);
  CHECK(j["start"]["x"] == 1.0);
  CHECK(j["segments"][1]["kind"] == "S");
  CHECK(j["segments"][1]["length"] == 1.25);
  const auto [back, kappa] = cs_path_from_json(Json::parse(j.dump()));
  CHECK(kappa == 2.0);
  CHECK(path_length(back) == doctest::Approx(path_length(p)));
  CHECK(approx_equal(path_endpoint(back), path_endpoint(p), 1e-9));
}

TEST_CASE("malformed json is rejected") {
  CHECK_THROWS_AS(cs_path_from_json(Json::parse(R"({"segments": []})")), PathError);
  CHECK_THROWS_AS(
      cs_path_from_json(Json::parse(R"({"start": {"x": 0, "y": 0, "theta": 0},
                                         "segments": [{"kind": "Q", "length": 1}]})")),
      PathError);
  CHECK_THROWS_AS(sampled_from_json(Json::parse(R"({"s": 0})")), PathError);
  CHECK_THROWS_AS(sampled_from_json(Json::parse(R"([{"s": 0, "x": 1}])")), PathError);
}

TEST_CASE("solve output schema") {
  const ProblemInstance inst(Pose(0, 0, 0), Pose(5, 0, 0));
  const Json j = minimiser_to_json(minimise_in_class(inst, 0), 1.0, classify_proximity(inst));
  for (const char* key : {"n", "length", "family", "chi", "crossings", "segments", "proximity"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["length"] == 5.0);
  CHECK(j["family"] == "CSC");
  CHECK(j["proximity"]["condition"] == "I");
  CHECK(j["proximity"]["label"] == "A");
  CHECK(j["segments"][0].contains("center"));
  CHECK(j["segments"][1]["from"][0] == 0.0);
}

TEST_CASE("solved paths survive the sampled round trip") {
  std::mt19937_64 rng(20);
  for (int i = 0; i < 20; ++i) {
    const ProblemInstance inst = random_instance(rng);
    const MinimiserResult r = minimise_in_class(inst, i % 3 - 1);
    const Json j = sampled_to_json(to_sampled(r.winner.path));
    const CsPath back = normalise(sampled_from_json(Json::parse(j.dump())));
    CHECK(std::abs(path_length(back) - r.length) <= 1e-6);
    CHECK(class_of(back) == r.class_index);
  }
}

TEST_CASE("svg structure") {
  const ProblemInstance inst(Pose(0, 0, 0), Pose(3, 1, 1));
  const MinimiserResult r = minimise_in_class(inst, 1);
  const std::string svg = render_path_svg(inst, r.winner.path);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count(svg, "class=\"segment\"") == static_cast<int>(r.winner.path.segments.size()));
  CHECK(count(svg, "stroke-dasharray") == 4);
  CHECK(count(svg, "r=\"100\"") == 4);
  CHECK(count(svg, "class=\"pose\"") == 2);
  CHECK(std::regex_search(svg, std::regex("A 100 100 0 0 [01] ")));

  const std::string chart = render_profile_svg(class_length_profile(inst, -3, 3));
  CHECK(count(chart, "<circle") == 7);
}

}  // namespace
}  // namespace hdubins
