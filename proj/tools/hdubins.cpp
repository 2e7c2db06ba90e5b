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

// hdubins: class-wise shortest bounded-curvature paths.
//
// Exit codes: 0 ok, 1 internal error, 2 bad arguments or malformed input,
// 3 curvature violation in a normalise input, 4 verify found a hard failure.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "hdubins/class_minimiser.hpp"
#include "hdubins/dubins_base.hpp"
#include "hdubins/homotopy.hpp"
#include "hdubins/io.hpp"
#include "hdubins/normaliser.hpp"
#include "hdubins/oracle.hpp"

namespace {

using hdubins::Json;

constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCurvature = 3;
constexpr int kExitVerifyFailed = 4;

struct InstanceArgs {
  std::string start;
  std::string end;
  double kappa = 1.0;
  bool degrees = false;

  [[nodiscard]] hdubins::ProblemInstance instance() const {
    if (!(kappa > 0.0)) {
      throw hdubins::PathError(hdubins::ErrorCode::kInvalidArgument, "kappa must be positive");
    }
    return {hdubins::parse_pose(start, degrees), hdubins::parse_pose(end, degrees), kappa};
  }
};

void add_instance_options(CLI::App* cmd, InstanceArgs& args) {
  cmd->add_option("--start", args.start, "start pose x,y,theta")->required();
  cmd->add_option("--end", args.end, "end pose x,y,theta")->required();
  cmd->add_option("--kappa", args.kappa, "curvature bound (default 1)");
  cmd->add_flag("--deg", args.degrees, "headings in degrees");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    throw hdubins::PathError(hdubins::ErrorCode::kInvalidArgument, "cannot write " + path);
  }
  out << text;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw hdubins::PathError(hdubins::ErrorCode::kInvalidArgument, "cannot read " + path);
  }
  return Json::parse(in);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct SolveArgs {
  InstanceArgs inst;
  std::string classes = "0";
  std::string svg;
  std::string json;
  std::string samples;
};

int cmd_solve(const SolveArgs& a) {
  const hdubins::ProblemInstance inst = a.inst.instance();
  const auto [lo, hi] = hdubins::parse_class_range(a.classes);
  const hdubins::ProximityReport prox = hdubins::classify_proximity(inst);
  Json out;
  if (lo == hi) {
    const hdubins::MinimiserResult r = hdubins::minimise_in_class(inst, lo);
    out = hdubins::minimiser_to_json(r, inst.kappa(), prox);
    if (!a.svg.empty()) write_file(a.svg, hdubins::render_path_svg(inst, r.winner.path));
    if (!a.samples.empty()) {
      hdubins::SampledPath s = hdubins::to_sampled(r.winner.path);
      for (auto& p : s.samples) {
        p.s /= inst.kappa();
        p.point /= inst.kappa();
      }
      write_file(a.samples, dump(hdubins::sampled_to_json(s)));
    }
  } else {
    Json rows = Json::array();
    std::vector<std::pair<int, double>> profile;
    for (int n = lo; n <= hi; ++n) {
      const hdubins::MinimiserResult r = hdubins::minimise_in_class(inst, n);
      profile.emplace_back(n, r.length);
      rows.push_back({{"n", n},
                      {"length", hdubins::round12(r.length)},
                      {"family", r.winner.family},
                      {"base", std::string(hdubins::to_string(r.winner.base.type))},
                      {"chi", r.chi},
                      {"crossings", r.crossings}});
    }
    out = {{"profile", rows}, {"proximity", hdubins::proximity_to_json(prox)}};
    if (!a.svg.empty()) write_file(a.svg, hdubins::render_profile_svg(profile));
  }
  if (!a.json.empty()) write_file(a.json, dump(out));
  std::cout << dump(out);
  return 0;
}

int cmd_classify(const InstanceArgs& a) {
  std::cout << dump(hdubins::proximity_to_json(hdubins::classify_proximity(a.instance())));
  return 0;
}

int cmd_profile(const InstanceArgs& a, const std::string& range) {
  const hdubins::ProblemInstance inst = a.instance();
  const auto [lo, hi] = hdubins::parse_class_range(range);
  std::cout << "n\tlength\n";
  for (const auto& [n, len] : hdubins::class_length_profile(inst, lo, hi)) {
    std::cout << n << '\t' << num(len) << '\n';
  }
  return 0;
}

struct NormaliseArgs {
  std::string input;
  std::string output;
  double kappa = 1.0;
};

int cmd_normalise(const NormaliseArgs& a) {
  const Json in = read_json_file(a.input);
  hdubins::SampledPath sampled;
  double kappa = a.kappa;
  if (in.is_object()) {
    // A cs path given in the compact form is sampled first.
    const auto [path, k] = hdubins::cs_path_from_json(in);
    kappa = k;
    sampled = hdubins::to_sampled(path);
    for (auto& p : sampled.samples) {
      p.s /= kappa;
      p.point /= kappa;
    }
    sampled.kappa = kappa;
  } else {
    sampled = hdubins::sampled_from_json(in, kappa);
  }
  const hdubins::CsPath out = hdubins::normalise(sampled);
  const double len_in = hdubins::sampled_length(sampled);
  const double len_out = hdubins::path_length(out) / kappa;
  const Json path_json = hdubins::cs_path_to_json(out, kappa);
  const Json report = {{"length_in", hdubins::round12(len_in)},
                       {"length_out", hdubins::round12(len_out)},
                       {"class_in", hdubins::sampled_class_index(sampled)},
                       {"class_out", hdubins::class_of(out)},
                       {"fragments", hdubins::fragment(sampled).breaks.size() - 1},
                       {"complexity", hdubins::complexity(out)},
                       {"path", path_json}};
  if (!a.output.empty()) write_file(a.output, dump(path_json));
  std::cout << dump(report);
  return 0;
}

struct VerifyArgs {
  std::uint64_t seed = 42;
  int trials = 100;
  int classes = 2;
  int restarts = 64;
  double half_width = 10.0;
};

int cmd_verify(const VerifyArgs& a) {
  std::mt19937_64 rng(a.seed);
  hdubins::OracleBudget budget;
  budget.restarts = a.restarts;
  budget.seed = a.seed;
  int runs = 0, hard = 0, close = 0, exhausted = 0;
  std::cout << "seed " << a.seed << "\n";
  std::cout << "trial\tn\tenumerated\toracle\tdiff\tstatus\n";
  for (int t = 0; t < a.trials; ++t) {
    const hdubins::ProblemInstance inst = hdubins::random_instance(rng, a.half_width);
    for (int n = -a.classes; n <= a.classes; ++n) {
      const double e = hdubins::minimise_in_class(inst, n).length;
      const hdubins::OracleResult o = hdubins::oracle_min_in_class(inst, n, budget);
      ++runs;
      std::string status = "ok";
      if (o.status != hdubins::OracleStatus::kOk) {
        ++exhausted;
        status = "exhausted";
      } else if (e > o.length + 1e-3) {
        ++hard;
        status = "FAIL";
      } else if (std::abs(e - o.length) <= 1e-3) {
        ++close;
      } else {
        status = "loose";
      }
      std::cout << t << '\t' << n << '\t' << num(e) << '\t' << num(o.length) << '\t'
                << num(o.length - e) << '\t' << status << '\n';
    }
  }
  std::cout << "runs " << runs << ", hard failures " << hard << ", within 1e-3 " << close
            << " (" << num(100.0 * close / std::max(runs, 1)) << "%), exhausted " << exhausted
            << "\n";
  return hard == 0 ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortest bounded-curvature paths in each homotopy class"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "class minimiser for one class or a range");
  add_instance_options(s, solve.inst);
  s->add_option("--n", solve.classes, "class index n or range a..b");
  s->add_option("--svg", solve.svg, "write an SVG plot");
  s->add_option("--json", solve.json, "also write the JSON result to a file");
  s->add_option("--samples", solve.samples, "write the winner as sampled path JSON");

  InstanceArgs classify;
  auto* c = app.add_subcommand("classify", "proximity condition and A/B/C/D label");
  add_instance_options(c, classify);

  InstanceArgs profile;
  std::string range = "-3..3";
  auto* p = app.add_subcommand("profile", "minimal length per class");
  add_instance_options(p, profile);
  p->add_option("--range", range, "class range a..b (default -3..3)");

  NormaliseArgs norm;
  auto* nz = app.add_subcommand("normalise", "turn a sampled path into a cs path");
  nz->add_option("--input", norm.input, "sampled path or cs path JSON")->required();
  nz->add_option("--output", norm.output, "write the cs path JSON here");
  nz->add_option("--kappa", norm.kappa, "curvature bound of a sampled input (default 1)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "compare the minimiser with the brute-force oracle");
  v->add_option("--seed", verify.seed, "random seed (default 42)");
  v->add_option("--trials", verify.trials, "random instances (default 100)");
  v->add_option("--classes", verify.classes, "check n in [-c, c] (default 2)");
  v->add_option("--restarts", verify.restarts, "oracle restarts per short pattern (default 64)");
  v->add_option("--half-width", verify.half_width, "position box half width (default 10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*s) return cmd_solve(solve);
    if (*c) return cmd_classify(classify);
    if (*p) return cmd_profile(profile, range);
    if (*nz) return cmd_normalise(norm);
    if (*v) return cmd_verify(verify);
  } catch (const hdubins::PathError& e) {
    std::cerr << "error: " << hdubins::to_string(e.code()) << ": " << e.what() << "\n";
    switch (e.code()) {
      case hdubins::ErrorCode::kCurvatureViolation:
        return kExitCurvature;
      case hdubins::ErrorCode::kInvalidArgument:
      case hdubins::ErrorCode::kPreconditionViolation:
        return kExitUsage;
      default:
        return kExitInternal;
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
