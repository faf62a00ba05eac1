/*
 * Copyright 2026  The covplan Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License
*/

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "covplan/curve.hpp"
#include "covplan/dubins.hpp"
#include "covplan/error.hpp"
#include "covplan/geometry.hpp"
#include "covplan/headland.hpp"
#include "covplan/reeds_shepp.hpp"
#include "covplan/route.hpp"

namespace covplan {

struct PathState {
  Pose pose;
  Motion motion{Motion::Forward};
  double curvature{0.0};
};

/// A swath or turn of the path, kept in exact (unsampled) form.
struct PathElement {
  enum class Kind { Swath, Turn };
  Kind kind{Kind::Swath};
  Pose start;
  std::vector<CurveSegment> word;
  double length{0.0};
};

/// Half-open range [begin, end) into Path::states.
struct Span {
  std::size_t begin{0};
  std::size_t end{0};
};

struct Path {
  std::vector<PathState> states;
  std::vector<PathElement> elements;
  std::vector<Span> swath_spans;
  std::vector<Span> turn_spans;
  std::vector<Turn> turns;
  double radius{0.0};
  double sample_step{0.1};
  double total_length{0.0};
};

/// States along a word at (at most) `step` spacing, including both ends.
inline std::vector<PathState> sample_word(const Pose& start, std::span<const CurveSegment> word, double radius,
                                          double step) {
  std::vector<PathState> out;
  Pose at = start;
  bool first = true;
  for (const CurveSegment& seg : word) {
    const double len = std::abs(seg.length);
    const Motion motion = seg.length < 0.0 ? Motion::Reverse : Motion::Forward;
    const double curvature = segment_curvature(seg.type, radius);
    if (len <= 0.0) continue;
    const auto n = static_cast<std::size_t>(std::ceil(len / step));
    for (std::size_t i = first ? 0 : 1; i <= n; ++i) {
      const double s = seg.length * static_cast<double>(i) / static_cast<double>(n);
      out.push_back({advance(at, seg.type, s, radius), motion, curvature});
    }
    first = false;
    at = advance(at, seg.type, seg.length, radius);
  }
  if (out.empty()) out.push_back({start, Motion::Forward, 0.0});
  return out;
}

/// Straight connector from one swath exit to the next entry. The vehicle
/// rotates in place at both ends, so only positions are continuous.
inline Turn straight_turn(const Pose& start, const Pose& goal) {
  Turn t;
  t.start = start;
  t.goal = goal;
  t.kind = CurveKind::Straight;
  t.name = "S";
  const Point d = goal.position - start.position;
  const double len = norm(d);
  if (len > 0.0) t.word.push_back({SegmentType::Straight, len});
  t.length = len;
  return t;
}

inline Turn plan_turn(const Pose& start, const Pose& goal, CurveKind curve, double radius) {
  switch (curve) {
    case CurveKind::Straight: return straight_turn(start, goal);
    case CurveKind::Dubins: return dubins_turn(start, goal, radius);
    case CurveKind::ReedsShepp: return reeds_shepp_turn(start, goal, radius);
  }
  return straight_turn(start, goal);
}

/// Connects the directed swaths of a route with turns of one kind and
/// samples the result at `sample_step` meters.
inline Path plan_path(const Route& route, const Robot& robot, CurveKind curve, double sample_step = 0.1) {
  if (route.empty()) throw Error(ErrorCode::NoSwaths, "cannot plan a path for an empty route");
  if (!(sample_step > 0.0) || !std::isfinite(sample_step)) {
    throw Error(ErrorCode::InvalidArgument, "sample step must be positive");
  }
  robot.validate();
  if (curve != CurveKind::Straight && !(robot.min_turn_radius > 0.0)) {
    throw Error(ErrorCode::Radius, "zero turning radius requires straight turns (--curve straight)");
  }

  Path path;
  path.radius = robot.min_turn_radius;
  path.sample_step = sample_step;

  for (std::size_t i = 0; i < route.size(); ++i) {
    const DirectedSwath& sw = route.ordered[i];
    if (i > 0) {
      Turn turn = plan_turn(route.ordered[i - 1].end_pose(), sw.start_pose(), curve, robot.min_turn_radius);
      Pose from = turn.start;
      if (curve == CurveKind::Straight && turn.length > 0.0) {
        const Point d = turn.goal.position - turn.start.position;
        from = Pose{turn.start.position, std::atan2(d.y, d.x)};
      }
      path.elements.push_back({PathElement::Kind::Turn, from, turn.word, turn.length});
      path.turns.push_back(std::move(turn));
    }
    path.elements.push_back(
        {PathElement::Kind::Swath, sw.start_pose(), {{SegmentType::Straight, sw.swath.length()}}, sw.swath.length()});
  }

  for (const PathElement& el : path.elements) {
    auto states = sample_word(el.start, el.word, path.radius, sample_step);
    // Junction states repeat the previous element's last position.
    const std::size_t skip = path.states.empty() ? 0 : 1;
    Span span{path.states.size(), 0};
    if (el.length > 0.0) {
      path.states.insert(path.states.end(), states.begin() + static_cast<std::ptrdiff_t>(skip), states.end());
    }
    span.end = path.states.size();
    (el.kind == PathElement::Kind::Swath ? path.swath_spans : path.turn_spans).push_back(span);
    path.total_length += el.length;
  }
  return path;
}

}  // namespace covplan
