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

#include "hdubins/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace hdubins {

namespace {

[[noreturn]] void bad_input(const std::string& what) {
  throw PathError(ErrorCode::kInvalidArgument, what);
}

double parse_double(std::string_view text) {
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    bad_input("not a finite number: '" + s + "'");
  }
  return v;
}

int parse_int(std::string_view text) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    bad_input("not an integer: '" + std::string(text) + "'");
  }
  return v;
}

double number_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number()) {
    bad_input(std::string("missing numeric field '") + key + "'");
  }
  const double v = j.at(key).get<double>();
  if (!std::isfinite(v)) bad_input(std::string("field '") + key + "' is not finite");
  return v;
}

Json point_json(const Point& p, double unit) {
  return Json::array({round12(p.x() * unit), round12(p.y() * unit)});
}

// SVG canvas mapping: curvature-1 units to pixels, y pointing up.
struct Canvas {
  double min_x, max_y, pad;
  [[nodiscard]] double px(double x) const { return (x - min_x) * 100.0 + pad; }
  [[nodiscard]] double py(double y) const { return (max_y - y) * 100.0 + pad; }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

void arrow(std::ostringstream& out, const Canvas& c, const Pose& p, const char* colour) {
  const Point tip = p.position() + 0.6 * p.tangent();
  const Point l = tip - 0.2 * unit(p.theta() - 0.4);
  const Point r = tip - 0.2 * unit(p.theta() + 0.4);
  out << "  <g class=\"pose\" stroke=\"" << colour << "\" fill=\"none\" stroke-width=\"2\">"
      << "<line x1=\"" << fmt(c.px(p.x())) << "\" y1=\"" << fmt(c.py(p.y())) << "\" x2=\""
      << fmt(c.px(tip.x())) << "\" y2=\"" << fmt(c.py(tip.y())) << "\"/>"
      << "<polyline points=\"" << fmt(c.px(l.x())) << ',' << fmt(c.py(l.y())) << ' '
      << fmt(c.px(tip.x())) << ',' << fmt(c.py(tip.y())) << ' ' << fmt(c.px(r.x())) << ','
      << fmt(c.py(r.y())) << "\"/></g>\n";
}

}  // namespace

double round12(double v) {
  if (!std::isfinite(v)) return v;
  // Rounding residue such as cos(pi/2) prints as 0.
  if (std::abs(v) < 1e-12) return 0.0;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

Pose parse_pose(std::string_view text, bool degrees) {
  std::vector<double> parts;
  std::size_t from = 0;
  while (true) {
    const std::size_t comma = text.find(',', from);
    parts.push_back(parse_double(text.substr(from, comma - from)));
    if (comma == std::string_view::npos) break;
    from = comma + 1;
  }
  if (parts.size() != 3) bad_input("a pose is x,y,theta");
  const double theta = degrees ? parts[2] * kPi / 180.0 : parts[2];
  return {parts[0], parts[1], theta};
}

std::pair<int, int> parse_class_range(std::string_view text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int n = parse_int(text);
    return {n, n};
  }
  const int lo = parse_int(text.substr(0, dots));
  const int hi = parse_int(text.substr(dots + 2));
  if (hi < lo) bad_input("empty class range");
  if (hi - lo + 1 > 64) bad_input("class range longer than 64");
  return {lo, hi};
}

Json pose_to_json(const Pose& p) {
  return {{"x", round12(p.x())}, {"y", round12(p.y())}, {"theta", round12(p.theta())}};
}

Json cs_path_to_json(const CsPath& path, double kappa) {
  const double unit = 1.0 / kappa;
  Json segs = Json::array();
  for (const Segment& seg : path.segments) {
    if (const auto* a = std::get_if<Arc>(&seg)) {
      segs.push_back({{"kind", std::string(1, letter(a->turn))}, {"sweep", round12(a->sweep)}});
    } else {
      segs.push_back({{"kind", "S"}, {"length", round12(segment_length(seg) * unit)}});
    }
  }
  const Pose start(path.start.position() * unit, path.start.theta());
  return {{"start", pose_to_json(start)}, {"kappa", round12(kappa)}, {"segments", segs}};
}

std::pair<CsPath, double> cs_path_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("start") || !j.contains("segments") ||
      !j.at("segments").is_array()) {
    bad_input("a cs path needs 'start' and a 'segments' array");
  }
  const double kappa = j.contains("kappa") ? number_field(j, "kappa") : 1.0;
  if (!(kappa > 0.0)) bad_input("kappa must be positive");
  const Json& s = j.at("start");
  const Pose start(Point(number_field(s, "x"), number_field(s, "y")) * kappa,
                   number_field(s, "theta"));
  std::vector<Piece> pieces;
  for (const Json& seg : j.at("segments")) {
    if (!seg.is_object() || !seg.contains("kind") || !seg.at("kind").is_string()) {
      bad_input("segment without a 'kind'");
    }
    const std::string kind = seg.at("kind").get<std::string>();
    if (kind == "L" || kind == "R") {
      pieces.push_back({piece_kind(kind[0]), number_field(seg, "sweep")});
    } else if (kind == "S") {
      pieces.push_back({PieceKind::kStraight, number_field(seg, "length") * kappa});
    } else {
      bad_input("segment kind must be L, R or S, got '" + kind + "'");
    }
    if (pieces.back().amount < 0.0) bad_input("negative segment size");
  }
  return {make_path(start, pieces), kappa};
}

Json segments_to_json(const CsPath& path, double kappa) {
  const double unit = 1.0 / kappa;
  Json segs = Json::array();
  for (const Segment& seg : path.segments) {
    if (const auto* a = std::get_if<Arc>(&seg)) {
      segs.push_back({{"type", std::string(1, letter(a->turn))},
                      {"sweep", round12(a->sweep)},
                      {"length", round12(a->sweep * unit)},
                      {"center", point_json(a->center, unit)},
                      {"radius", round12(unit)}});
    } else {
      const Line& l = std::get<Line>(seg);
      segs.push_back({{"type", "S"},
                      {"length", round12(segment_length(seg) * unit)},
                      {"from", point_json(l.from, unit)},
                      {"to", point_json(l.to, unit)}});
    }
  }
  return segs;
}

Json sampled_to_json(const SampledPath& path) {
  Json out = Json::array();
  for (const PoseSample& p : path.samples) {
    out.push_back({{"s", round12(p.s)},
                   {"x", round12(p.point.x())},
                   {"y", round12(p.point.y())},
                   {"theta", round12(p.theta)}});
  }
  return out;
}

SampledPath sampled_from_json(const Json& j, double kappa) {
  if (!j.is_array()) bad_input("a sampled path is a JSON array of {s, x, y, theta}");
  if (!(kappa > 0.0)) bad_input("kappa must be positive");
  SampledPath out;
  out.kappa = kappa;
  out.samples.reserve(j.size());
  for (const Json& r : j) {
    out.samples.push_back({number_field(r, "s"),
                           Point(number_field(r, "x"), number_field(r, "y")),
                           number_field(r, "theta")});
  }
  return out;
}

Json proximity_to_json(const ProximityReport& r) {
  return {{"condition", std::string(to_string(r.raw))},
          {"label", std::string(to_string(r.label))},
          {"heuristic", r.heuristic},
          {"d_ll", round12(r.d_ll)},
          {"d_rr", round12(r.d_rr)}};
}

Json minimiser_to_json(const MinimiserResult& r, double kappa,
                       const ProximityReport& proximity) {
  return {{"n", r.class_index},
          {"length", round12(r.length)},
          {"family", r.winner.family},
          {"base", std::string(to_string(r.winner.base.type))},
          {"loops", r.winner.loops},
          {"placement", std::string(to_string(r.winner.placement))},
          {"chi", r.chi},
          {"crossings", r.crossings},
          {"segments", segments_to_json(r.winner.path, kappa)},
          {"proximity", proximity_to_json(proximity)}};
}

std::string render_path_svg(const ProblemInstance& inst, const CsPath& path) {
  const ProblemInstance s = inst.scaled();
  const AdjacentCircles a = adjacent_circles(s.start());
  const AdjacentCircles b = adjacent_circles(s.end());
  const Point centres[4] = {a.left, a.right, b.left, b.right};

  double min_x = std::numeric_limits<double>::infinity();
  double max_x = -min_x, min_y = min_x, max_y = -min_x;
  const auto grow = [&](const Point& p, double r) {
    min_x = std::min(min_x, p.x() - r);
    max_x = std::max(max_x, p.x() + r);
    min_y = std::min(min_y, p.y() - r);
    max_y = std::max(max_y, p.y() + r);
  };
  for (const Point& c : centres) grow(c, 1.0);
  for (const Segment& seg : path.segments) {
    if (const auto* arc = std::get_if<Arc>(&seg)) {
      grow(arc->center, 1.0);
    } else {
      grow(segment_start(seg), 0.0);
      grow(segment_end(seg), 0.0);
    }
  }
  const Canvas c{min_x, max_y, 20.0};
  const double width = (max_x - min_x) * 100.0 + 2 * c.pad;
  const double height = (max_y - min_y) * 100.0 + 2 * c.pad;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
      << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' '
      << fmt(height) << "\">\n";
  const char* names[4] = {"start-left", "start-right", "end-left", "end-right"};
  for (int i = 0; i < 4; ++i) {
    out << "  <circle class=\"adjacent " << names[i] << "\" cx=\"" << fmt(c.px(centres[i].x()))
        << "\" cy=\"" << fmt(c.py(centres[i].y()))
        << "\" r=\"100\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"6,4\"/>\n";
  }
  for (std::size_t i = 0; i < path.segments.size(); ++i) {
    const Segment& seg = path.segments[i];
    out << "  <g class=\"segment\" data-index=\"" << i << "\" data-type=\""
        << segment_letter(seg) << "\" fill=\"none\" stroke=\"#c03\" stroke-width=\"3\">";
    if (const auto* arc = std::get_if<Arc>(&seg)) {
      // SVG arcs cannot close a full turn, so split into pieces under pi.
      const int parts = std::max(1, static_cast<int>(std::ceil(arc->sweep / 3.0)));
      const Point p0 = segment_start(seg);
      out << "<path d=\"M " << fmt(c.px(p0.x())) << ' ' << fmt(c.py(p0.y()));
      for (int k = 1; k <= parts; ++k) {
        const Point p = segment_point(seg, arc->sweep * k / parts);
        out << " A 100 100 0 0 " << (arc->turn == Turn::kLeft ? 1 : 0) << ' '
            << fmt(c.px(p.x())) << ' ' << fmt(c.py(p.y()));
      }
      out << "\"/>";
    } else {
      const Line& l = std::get<Line>(seg);
      out << "<polyline points=\"" << fmt(c.px(l.from.x())) << ',' << fmt(c.py(l.from.y()))
          << ' ' << fmt(c.px(l.to.x())) << ',' << fmt(c.py(l.to.y())) << "\"/>";
    }
    out << "</g>\n";
  }
  arrow(out, c, s.start(), "#063");
  arrow(out, c, s.end(), "#036");
  out << "</svg>\n";
  return out.str();
}

std::string render_profile_svg(const std::vector<std::pair<int, double>>& profile) {
  if (profile.empty()) bad_input("empty profile");
  const double w = 60.0 * static_cast<double>(profile.size()) + 80.0;
  const double h = 320.0;
  double top = 0.0;
  for (const auto& [n, len] : profile) top = std::max(top, len);
  if (top <= 0.0) top = 1.0;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(w)
      << "\" height=\"" << fmt(h) << "\">\n"
      << "  <line x1=\"40\" y1=\"280\" x2=\"" << fmt(w - 20) << "\" y2=\"280\" stroke=\"#000\"/>\n";
  std::ostringstream pts;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const double x = 70.0 + 60.0 * static_cast<double>(i);
    const double y = 280.0 - 240.0 * profile[i].second / top;
    pts << fmt(x) << ',' << fmt(y) << ' ';
    out << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"4\" fill=\"#c03\"/>\n"
        << "  <text x=\"" << fmt(x) << "\" y=\"300\" text-anchor=\"middle\" font-size=\"12\">"
        << profile[i].first << "</text>\n"
        << "  <text x=\"" << fmt(x) << "\" y=\"" << fmt(y - 8)
        << "\" text-anchor=\"middle\" font-size=\"10\">" << round12(profile[i].second)
        << "</text>\n";
  }
  out << "  <polyline class=\"profile\" points=\"" << pts.str()
      << "\" fill=\"none\" stroke=\"#c03\"/>\n</svg>\n";
  return out.str();
}

}  // namespace hdubins
