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

// Acceptance run: one PASS/FAIL line per criterion, each with its measured
// runtime against its budget. Exit status is nonzero if any line fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hdubins/class_minimiser.hpp"
#include "hdubins/dubins_base.hpp"
#include "hdubins/homotopy.hpp"
#include "hdubins/normaliser.hpp"
#include "hdubins/oracle.hpp"
#include "support/random_paths.hpp"

namespace hdubins {
namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Every winner produced by criteria 2, 3 and 6, for criterion 8.
std::vector<CsPath> g_winners;

MinimiserResult solve(const ProblemInstance& inst, int n) {
  MinimiserResult r = minimise_in_class(inst, n);
  g_winners.push_back(r.winner.path);
  return r;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), f, a, b, c, d);
  return buf;
}

Outcome loop_bound() {
  const ProblemInstance same(Pose(0, 0, 0), Pose(0, 0, 0));
  double worst = 0.0;
  for (int m = 1; m <= 8; ++m) {
    for (int n : {m, -m}) {
      worst = std::max(worst, std::abs(solve(same, n).length - kTwoPi * m));
    }
  }
  return {worst <= 1e-9, fmt("n = +-1..+-8, max |L - 2pi|n|| = %.2e", worst)};
}

Outcome dubins_consistency() {
  std::mt19937_64 rng(2026);
  int bad = 0;
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const ProblemInstance inst = random_instance(rng);
    double best = std::numeric_limits<double>::infinity();
    for (int n = -3; n <= 3; ++n) best = std::min(best, solve(inst, n).length);
    const double gap = std::abs(best - dubins_minimum(inst).length);
    worst = std::max(worst, gap);
    if (gap > 1e-9) ++bad;
  }
  return {bad == 0, fmt("500 instances (seed 2026), mismatches %.0f, max gap %.2e", bad, worst)};
}

Outcome oracle_agreement() {
  std::mt19937_64 rng(42);
  OracleBudget budget;  // M = 7, 64 restarts, seed 42
  int runs = 0, hard = 0, close = 0, exhausted = 0;
  double worst_hard = 0.0;
  for (int i = 0; i < 100; ++i) {
    const ProblemInstance inst = random_instance(rng);
    for (int n = -2; n <= 2; ++n) {
      const double e = solve(inst, n).length;
      const OracleResult o = oracle_min_in_class(inst, n, budget);
      ++runs;
      if (o.status != OracleStatus::kOk) {
        ++exhausted;
        continue;
      }
      if (e > o.length + 1e-3) {
        ++hard;
        worst_hard = std::max(worst_hard, e - o.length);
      }
      if (std::abs(e - o.length) <= 1e-3) ++close;
    }
  }
  const double frac = static_cast<double>(close) / runs;
  return {hard == 0 && frac >= 0.95,
          fmt("%.0f runs (seed 42), enumerated > oracle + 1e-3: %.0f, within 1e-3: %.1f%%, "
              "exhausted %.0f",
              runs, hard, 100.0 * frac, exhausted)};
}

Outcome normalisation() {
  std::mt19937_64 rng(7);
  int bad = 0;
  double worst_gain = -1e300, worst_end = 0.0, shortest_closed = 1e300;
  const auto check = [&](const SampledPath& in, bool closed) {
    const CsPath out = normalise(in);
    const double gain = path_length(out) - sampled_length(in);
    const Pose end = path_endpoint(out);
    const PoseSample& last = in.samples.back();
    const double end_err = std::max((end.position() - last.point).norm(),
                                    std::abs(normalize_angle(end.theta() - last.theta)));
    worst_gain = std::max(worst_gain, gain);
    worst_end = std::max(worst_end, end_err);
    bool ok = gain <= 1e-6 && end_err <= 1e-6 && class_of(out) == sampled_class_index(in);
    if (closed) {
      shortest_closed = std::min(shortest_closed, path_length(out));
      ok = ok && path_length(out) >= kTwoPi - 1e-6;
    }
    if (!ok) ++bad;
  };
  for (int i = 0; i < 50; ++i) check(testing::random_smooth_path(rng), false);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10; ++i) {
    const int k = 2 + static_cast<int>(u(rng) * 3);
    check(testing::closed_curve(0.6 * u(rng), k, 0.2 * u(rng)), true);
  }
  return {bad == 0, fmt("50 open + 10 closed, failures %.0f, max length change %.2e, max end "
                        "error %.2e, shortest closed output %.9f",
                        bad, worst_gain, worst_end, shortest_closed)};
}

Outcome loops_and_additivity() {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int bad = 0, paths = 0, pairs = 0;
  for (int i = 0; i < 300; ++i) {
    std::vector<Piece> pieces;
    const int m = 1 + static_cast<int>(u(rng) * 6);
    for (int k = 0; k < m; ++k) {
      pieces.push_back({static_cast<PieceKind>(static_cast<int>(u(rng) * 3)), 6.0 * u(rng)});
    }
    const CsPath p = make_path(Pose(u(rng), u(rng), kTwoPi * u(rng)), pieces);
    const int n = class_of(p);
    for (std::size_t j = 0; j <= p.segments.size(); ++j) {
      if (class_of(insert_loops(p, j, 1)) != n + 1) ++bad;
      if (class_of(insert_loops(p, j, -1)) != n - 1) ++bad;
      ++paths;
    }
  }
  for (int i = 0; i < 200; ++i) {
    const ProblemInstance inst = random_instance(rng, i % 2 == 0 ? 10.0 : 2.0);
    std::vector<double> len;
    for (int n = -5; n <= 5; ++n) len.push_back(minimise_in_class(inst, n).length);
    for (std::size_t a = 0; a < len.size(); ++a) {
      for (std::size_t b = 0; b < len.size(); ++b) {
        const double gap = kTwoPi * std::abs(static_cast<double>(a) - static_cast<double>(b));
        if (len[a] > len[b] + gap + 1e-9) ++bad;
        ++pairs;
      }
    }
  }
  return {bad == 0, fmt("%.0f loop insertions, %.0f (m, n) pairs, violations %.0f", paths,
                        pairs, bad)};
}

Outcome symmetry() {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_motion = 0.0, worst_mirror = 0.0;
  for (int i = 0; i < 100; ++i) {
    const ProblemInstance inst = random_instance(rng, i % 2 == 0 ? 10.0 : 2.0);
    const ProblemInstance moved =
        inst.transformed(kTwoPi * u(rng), Vector(40 * u(rng) - 20, 40 * u(rng) - 20));
    const ProblemInstance mirrored = inst.reflected();
    for (int n = -3; n <= 3; ++n) {
      const double len = solve(inst, n).length;
      worst_motion = std::max(worst_motion, std::abs(solve(moved, n).length - len));
      worst_mirror = std::max(worst_mirror, std::abs(solve(mirrored, -n).length - len));
    }
  }
  return {worst_motion <= 1e-9 && worst_mirror <= 1e-9,
          fmt("100 instances, n in [-3, 3]: max rigid-motion change %.2e, max mirror change %.2e",
              worst_motion, worst_mirror)};
}

Outcome proximity() {
  // Start (0,0,0). For an end heading of pi at (x, y): d_ll = |(x, y - 2)|,
  // d_rr = |(x, y + 2)|; for heading 0: d_ll = d_rr = |(x, y)|.
  struct Case {
    Pose end;
    RawCondition raw;
    const char* labels;
  };
  const Case cases[] = {
      {Pose(4.1, 0, 0), RawCondition::kI, "A"},
      {Pose(3.5, 0.5, kPi), RawCondition::kII, "B"},
      {Pose(3.5, -0.5, kPi), RawCondition::kIII, "B"},
      {Pose(3.9, 0, 0), RawCondition::kIV, "CD"},
  };
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  bool ok = true;
  std::string got;
  for (const Case& c : cases) {
    const ProblemInstance inst(Pose(0, 0, 0), c.end);
    const ProximityReport r = classify_proximity(inst);
    const std::string label(to_string(r.label));
    ok = ok && r.raw == c.raw && std::string(c.labels).find(label) != std::string::npos;
    got += std::string(to_string(r.raw)) + "->" + label + " ";
    for (int k = 0; k < 20; ++k) {
      const ProximityReport m = classify_proximity(
          inst.transformed(kTwoPi * u(rng), Vector(20 * u(rng) - 10, 20 * u(rng) - 10)));
      ok = ok && m.raw == r.raw && m.label == r.label;
    }
  }
  return {ok, "d = 4.1, 3.81/4.30, 4.30/3.81, 3.9: " + got + "(20 rigid motions each)"};
}

Outcome structure() {
  int bad = 0;
  for (const CsPath& p : g_winners) {
    if (contains_excluded_component(p)) ++bad;
  }
  return {bad == 0, fmt("%.0f winners checked, excluded components found %.0f",
                        static_cast<double>(g_winners.size()), bad)};
}

}  // namespace
}  // namespace hdubins

int main() {
  using hdubins::Outcome;
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "loop bound", 1.0, hdubins::loop_bound},
      {2, "dubins consistency", 10.0, hdubins::dubins_consistency},
      {3, "oracle agreement", 600.0, hdubins::oracle_agreement},
      {4, "normalisation", 30.0, hdubins::normalisation},
      {5, "class disjointness and loop additivity", 5.0, hdubins::loops_and_additivity},
      {6, "symmetry", 5.0, hdubins::symmetry},
      {7, "proximity classification", 1.0, hdubins::proximity},
      // Amortised over the runs above; its own budget only covers the scan.
      {8, "structural exclusions", 1.0, hdubins::structure},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    const Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.ok && secs < c.budget_s;
    all = all && pass;
    std::printf("criterion %d (%s): %s  %s  [%.2f s of %.0f s]\n", c.id, c.name,
                pass ? "PASS" : "FAIL", o.detail.c_str(), secs, c.budget_s);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
