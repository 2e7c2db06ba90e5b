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

#include "hdubins/class_minimiser.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <tuple>

#include "hdubins/homotopy.hpp"
#include "hdubins/intersections.hpp"

namespace hdubins {

namespace {

PieceKind loop_kind(int k) { return k > 0 ? PieceKind::kLeft : PieceKind::kRight; }

// Loops merged into a same-orientation neighbour rank ahead of loops that
// stand as a separate letter.
int placement_rank(const LoopedCandidate& c) {
  return c.family == "C^χ C S C" || c.family == "C^χ C C C" ? 1 : 0;
}

std::string family_name(const BaseCandidate& base, int k, LoopPlacement placement,
                        bool merged) {
  const bool ccc = is_ccc(base.type);
  if (k == 0) return ccc ? "CCC" : "CSC";
  if (base.length <= kEps) return "C^χ";
  switch (placement) {
    case LoopPlacement::kStart:
      if (ccc) return merged ? "C^χ C C" : "C^χ C C C";
      return merged ? "C^χ S C" : "C^χ C S C";
    case LoopPlacement::kMiddle:
      return "C C^χ C";
    case LoopPlacement::kEnd:
      return ccc ? "C C C^χ" : "C S C^χ";
  }
  return "?";
}

LoopedCandidate make_candidate(const ProblemInstance& inst, const BaseCandidate& base,
                               int base_class, int k, LoopPlacement placement) {
  const auto kinds = pieces_of(base.type);
  std::vector<Piece> pieces;
  pieces.reserve(4);
  for (int i = 0; i < 3; ++i) pieces.push_back({kinds[i], base.amounts[i]});
  bool merged = false;
  if (k != 0) {
    const Piece loop{loop_kind(k), kTwoPi * std::abs(k)};
    switch (placement) {
      case LoopPlacement::kStart:
        merged = kinds[0] == loop.kind;
        pieces.insert(pieces.begin(), loop);
        break;
      case LoopPlacement::kMiddle:
        merged = kinds[1] == loop.kind;
        pieces.insert(pieces.begin() + 1, loop);
        break;
      case LoopPlacement::kEnd:
        merged = kinds[2] == loop.kind;
        pieces.push_back(loop);
        break;
    }
  }
  LoopedCandidate c;
  c.base = base;
  c.base_class = base_class;
  c.loops = k;
  c.placement = placement;
  c.family = family_name(base, k, placement, merged);
  c.path = make_path(inst.scaled().start(), pieces);
  c.length = base.length + kTwoPi * std::abs(k) / inst.kappa();
  return c;
}

}  // namespace

std::string_view to_string(LoopPlacement p) {
  switch (p) {
    case LoopPlacement::kStart:
      return "start";
    case LoopPlacement::kMiddle:
      return "middle";
    case LoopPlacement::kEnd:
      return "end";
  }
  return "?";
}

std::vector<LoopedCandidate> enumerate_candidates(const ProblemInstance& inst, int n) {
  std::vector<LoopedCandidate> out;
  for (const BaseCandidate& base : all_base_candidates(inst)) {
    const int nb = class_of(base.path);
    const int k = n - nb;
    const auto kinds = pieces_of(base.type);
    if (k == 0) {
      out.push_back(make_candidate(inst, base, nb, 0, LoopPlacement::kStart));
      continue;
    }
    // Loops go first when they merge with the first arc, else last when they
    // merge with the final arc, else first as a separate letter.
    const PieceKind lk = loop_kind(k);
    const LoopPlacement primary = kinds[0] == lk   ? LoopPlacement::kStart
                                  : kinds[2] == lk ? LoopPlacement::kEnd
                                                   : LoopPlacement::kStart;
    out.push_back(make_candidate(inst, base, nb, k, primary));
    if (is_ccc(base.type) && kinds[1] == lk) {
      out.push_back(make_candidate(inst, base, nb, k, LoopPlacement::kMiddle));
    }
  }
  for (const LoopedCandidate& c : out) {
    if (class_of(c.path) != n) {
      std::ostringstream msg;
      msg << "candidate " << to_string(c.base.type) << " with " << c.loops
          << " loops is not in class " << n;
      throw PathError(ErrorCode::kPreconditionViolation, msg.str());
    }
  }
  return out;
}

MinimiserResult minimise_in_class(const ProblemInstance& inst, int n) {
  std::vector<LoopedCandidate> all = enumerate_candidates(inst, n);
  std::stable_sort(all.begin(), all.end(),
                   [](const auto& a, const auto& b) { return a.length < b.length; });
  const double best_len = all.front().length;
  const double tie = kEps * std::max(1.0, best_len);
  const auto key = [](const LoopedCandidate& c) {
    return std::make_tuple(std::abs(c.loops), static_cast<int>(c.base.type),
                           c.base.variant, placement_rank(c));
  };
  auto winner = all.begin();
  for (auto it = all.begin(); it != all.end() && it->length <= best_len + tie; ++it) {
    if (key(*it) < key(*winner)) winner = it;
  }

  MinimiserResult r;
  r.class_index = n;
  r.winner = *winner;
  r.length = winner->length;
  r.chi = std::abs(winner->loops);
  r.crossings = count_crossings(winner->path);
  all.erase(winner);
  r.runner_ups = std::move(all);
  return r;
}

std::vector<std::pair<int, double>> class_length_profile(const ProblemInstance& inst,
                                                         int lo, int hi) {
  if (hi < lo) {
    throw PathError(ErrorCode::kInvalidArgument, "empty class range");
  }
  std::vector<std::pair<int, double>> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int n = lo; n <= hi; ++n) out.emplace_back(n, minimise_in_class(inst, n).length);
  return out;
}

std::string reduced_word(const CsPath& path) {
  std::string word;
  const Arc* prev_arc = nullptr;
  for (const Segment& seg : path.segments) {
    if (segment_length(seg) <= kEps) continue;
    if (const auto* a = std::get_if<Arc>(&seg)) {
      const bool same_circle = prev_arc != nullptr && prev_arc->turn == a->turn &&
                               (prev_arc->center - a->center).norm() < 1e-7;
      if (!same_circle) word.push_back('C');
      prev_arc = a;
    } else {
      if (word.empty() || word.back() != 'S') word.push_back('S');
      prev_arc = nullptr;
    }
  }
  return word;
}

bool contains_excluded_component(const CsPath& path) {
  const std::string w = reduced_word(path);
  return w.find("CSCSC") != std::string::npos || w.find("CSCCSC") != std::string::npos;
}

}  // namespace hdubins
