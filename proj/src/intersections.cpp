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

#include "hdubins/intersections.hpp"

#include <algorithm>
#include <cmath>

namespace hdubins {

namespace {

// Parameters closer than this along the path denote the same path point.
constexpr double kSameParam = 1e-7;
// Sine of the crossing angle below which a contact counts as tangential.
constexpr double kTransversalSine = 1e-7;

struct Hit {
  double t1;
  double t2;
  Point p;
};

Vector tangent_at(const Segment& seg, double t) {
  if (const auto* a = std::get_if<Arc>(&seg)) {
    const double phi = a->start_angle + sign(a->turn) * t;
    return unit(phi + sign(a->turn) * kPi / 2.0);
  }
  const Line& l = std::get<Line>(seg);
  return (l.to - l.from).normalized();
}

// Arclength parameters at which an arc passes through p (p assumed on the
// circle). Arcs longer than 2pi pass some points more than once.
std::vector<double> arc_params(const Arc& a, const Point& p) {
  std::vector<double> out;
  const double phi = heading_of(p - a.center);
  double t0 = sign(a.turn) * (phi - a.start_angle);
  t0 -= kTwoPi * std::floor(t0 / kTwoPi);
  if (t0 > kTwoPi - kEps) t0 -= kTwoPi;
  for (double t = t0; t <= a.sweep + kEps; t += kTwoPi) {
    out.push_back(std::clamp(t, 0.0, a.sweep));
  }
  return out;
}

std::vector<double> line_params(const Line& l, const Point& p) {
  const Vector d = l.to - l.from;
  const double len = d.norm();
  const double t = (p - l.from).dot(d) / len;
  if (t < -kEps || t > len + kEps) return {};
  if ((l.from + d * (t / len) - p).norm() > 1e-8) return {};
  return {std::clamp(t, 0.0, len)};
}

std::vector<double> params_on(const Segment& seg, const Point& p) {
  if (const auto* a = std::get_if<Arc>(&seg)) {
    if (std::abs((p - a->center).norm() - 1.0) > 1e-8) return {};
    return arc_params(*a, p);
  }
  return line_params(std::get<Line>(seg), p);
}

void add_point_hits(const Segment& a, const Segment& b, const Point& p,
                    std::vector<Hit>& out) {
  for (double ta : params_on(a, p)) {
    for (double tb : params_on(b, p)) out.push_back({ta, tb, p});
  }
}

// Contacts between overlapping collinear or concentric pieces, reported at
// the endpoints of the overlap.
void overlap_hits(const Segment& a, const Segment& b, std::vector<Hit>& out) {
  for (const Point& p : {segment_start(b), segment_end(b), segment_start(a),
                         segment_end(a)}) {
    add_point_hits(a, b, p, out);
  }
}

void intersect_lines(const Line& a, const Line& b, std::vector<Hit>& out) {
  const Vector u = a.to - a.from;
  const Vector v = b.to - b.from;
  const double la = u.norm();
  const double lb = v.norm();
  const double denom = cross(u, v);
  const Vector qp = b.from - a.from;
  if (std::abs(denom) <= 1e-12 * la * lb) {
    if (std::abs(cross(qp, u)) / la < 1e-9) overlap_hits(a, b, out);
    return;
  }
  const double t = cross(qp, v) / denom;
  const double w = cross(qp, u) / denom;
  const double ta = kEps / la;
  const double tb = kEps / lb;
  if (t < -ta || t > 1.0 + ta || w < -tb || w > 1.0 + tb) return;
  const double tc = std::clamp(t, 0.0, 1.0);
  out.push_back({tc * la, std::clamp(w, 0.0, 1.0) * lb, a.from + u * tc});
}

void intersect_line_arc(const Line& l, const Arc& arc, std::vector<Hit>& out,
                        bool swap) {
  const Vector d = l.to - l.from;
  const double len = d.norm();
  const Vector u = d / len;
  const Vector f = l.from - arc.center;
  const double b = u.dot(f);
  const double c = f.squaredNorm() - 1.0;
  const double disc = b * b - c;
  if (disc < -1e-9) return;
  std::vector<double> ts;
  if (disc <= 1e-12) {
    ts.push_back(-b);
  } else {
    const double r = std::sqrt(disc);
    ts.push_back(-b - r);
    ts.push_back(-b + r);
  }
  for (double t : ts) {
    if (t < -kEps || t > len + kEps) continue;
    t = std::clamp(t, 0.0, len);
    const Point p = l.from + u * t;
    // Project onto the circle so the angular lookup is exact.
    const Point on_circle = arc.center + (p - arc.center).normalized();
    for (double ta : arc_params(arc, on_circle)) {
      out.push_back(swap ? Hit{ta, t, p} : Hit{t, ta, p});
    }
  }
}

void intersect_arcs(const Arc& a, const Arc& b, std::vector<Hit>& out) {
  const Vector dc = b.center - a.center;
  const double d = dc.norm();
  if (d < kEps) {
    overlap_hits(a, b, out);
    return;
  }
  if (d > 2.0 + kEps) return;
  const Point mid = a.center + dc / 2.0;
  std::vector<Point> pts;
  const double h2 = 1.0 - d * d / 4.0;
  if (h2 <= 1e-12) {
    pts.push_back(mid);
  } else {
    const Vector off = left_normal(dc / d) * std::sqrt(h2);
    pts.push_back(mid + off);
    pts.push_back(mid - off);
  }
  for (const Point& p : pts) {
    const Point pa = a.center + (p - a.center).normalized();
    const Point pb = b.center + (p - b.center).normalized();
    for (double ta : arc_params(a, pa)) {
      for (double tb : arc_params(b, pb)) out.push_back({ta, tb, p});
    }
  }
}

void intersect(const Segment& a, const Segment& b, std::vector<Hit>& out) {
  const auto* la = std::get_if<Line>(&a);
  const auto* lb = std::get_if<Line>(&b);
  const auto* aa = std::get_if<Arc>(&a);
  const auto* ab = std::get_if<Arc>(&b);
  if (la && lb) {
    intersect_lines(*la, *lb, out);
  } else if (la && ab) {
    intersect_line_arc(*la, *ab, out, false);
  } else if (aa && lb) {
    intersect_line_arc(*lb, *aa, out, true);
  } else {
    intersect_arcs(*aa, *ab, out);
  }
}

// Maps local hits of segments (i, j) to path parameters. param_of converts
// a local parameter into a global arclength.
template <class ParamOf>
std::vector<SelfIntersection> collect(std::span<const Segment> segs, double total,
                                      ParamOf param_of) {
  std::vector<SelfIntersection> all;
  std::vector<Hit> hits;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (segment_length(segs[i]) <= kEps) continue;
    if (const auto* a = std::get_if<Arc>(&segs[i]); a && a->sweep >= kTwoPi - kEps) {
      const Point p = segment_start(segs[i]);
      all.push_back({param_of(i, 0.0), param_of(i, kTwoPi), p, false});
    }
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (segment_length(segs[j]) <= kEps) continue;
      hits.clear();
      intersect(segs[i], segs[j], hits);
      for (const Hit& h : hits) {
        const double s1 = param_of(i, h.t1);
        const double s2 = param_of(j, h.t2);
        if (std::abs(s2 - s1) < kSameParam) continue;
        const bool interior = std::min(s1, s2) > kSameParam &&
                              std::max(s1, s2) < total - kSameParam;
        const double sine =
            std::abs(cross(tangent_at(segs[i], h.t1), tangent_at(segs[j], h.t2)));
        all.push_back({std::min(s1, s2), std::max(s1, s2), h.p,
                       interior && sine > kTransversalSine});
      }
    }
  }
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    return x.s2 != y.s2 ? x.s2 < y.s2 : x.s1 < y.s1;
  });
  // A crossing at a junction is found once per adjoining segment.
  std::vector<SelfIntersection> unique;
  for (const auto& x : all) {
    const bool dup = std::any_of(unique.begin(), unique.end(), [&](const auto& y) {
      return std::abs(x.s1 - y.s1) < kSameParam && std::abs(x.s2 - y.s2) < kSameParam;
    });
    if (!dup) unique.push_back(x);
  }
  return unique;
}

}  // namespace

std::vector<SelfIntersection> self_intersections(const CsPath& path) {
  std::vector<double> offsets;
  offsets.reserve(path.segments.size());
  double total = 0.0;
  for (const Segment& s : path.segments) {
    offsets.push_back(total);
    total += segment_length(s);
  }
  return collect(path.segments, total,
                 [&](std::size_t i, double t) { return offsets[i] + t; });
}

int count_crossings(const CsPath& path) {
  const auto all = self_intersections(path);
  return static_cast<int>(
      std::count_if(all.begin(), all.end(), [](const auto& x) { return x.transversal; }));
}

bool is_embedded(const CsPath& path) { return self_intersections(path).empty(); }

std::optional<SelfIntersection> first_self_intersection(const CsPath& path) {
  auto all = self_intersections(path);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::vector<SelfIntersection> polyline_self_intersections(std::span<const Point> vertices,
                                                          std::span<const double> s) {
  if (vertices.size() != s.size()) {
    throw PathError(ErrorCode::kInvalidArgument,
                    "polyline needs one arclength per vertex");
  }
  std::vector<Segment> segs;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    segs.emplace_back(Line{vertices[i], vertices[i + 1]});
  }
  const double total = s.empty() ? 0.0 : s.back() - s.front();
  return collect(segs, total, [&](std::size_t i, double t) {
    const double chord = segment_length(segs[i]);
    const double frac = chord > 0.0 ? t / chord : 0.0;
    return (s[i] - s.front()) + frac * (s[i + 1] - s[i]);
  });
}

}  // namespace hdubins
