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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string_view>
#include <thread>
#include <vector>

#include "covplan/error.hpp"
#include "covplan/geometry.hpp"
#include "covplan/headland.hpp"

namespace covplan {

/// Swaths shorter than this are tangency artifacts and are dropped.
inline constexpr double kMinSwathLength = 1e-3;

struct Swath {
  Segment centerline;
  double width{0.0};
  std::size_t id{0};
  double offset{0.0};  ///< signed perpendicular offset in the sweep frame

  double length() const { return centerline.length(); }
};

struct SwathSet {
  double angle{0.0};  ///< sweep direction, [0, π)
  double op_width{0.0};
  std::vector<Swath> swaths;

  std::size_t size() const { return swaths.size(); }
  bool empty() const { return swaths.empty(); }
};

enum class SwathObjective { SwathCount, FieldCoverage, SwathLength };

inline bool minimizes(SwathObjective o) { return o != SwathObjective::FieldCoverage; }

inline std::string_view objective_name(SwathObjective o) {
  switch (o) {
    case SwathObjective::SwathCount: return "swath-count";
    case SwathObjective::FieldCoverage: return "field-coverage";
    case SwathObjective::SwathLength: return "swath-length";
  }
  return "unknown";
}

inline SwathObjective parse_objective(std::string_view s) {
  if (s == "swath-count") return SwathObjective::SwathCount;
  if (s == "field-coverage") return SwathObjective::FieldCoverage;
  if (s == "swath-length") return SwathObjective::SwathLength;
  throw Error(ErrorCode::InvalidArgument, "unknown swath objective: " + std::string(s));
}

/// Parallel swaths at `angle` spaced `op_width` apart. In the frame where
/// swaths are horizontal there are as many lines as fit at y_min +
/// op_width * (k + 1/2) below y_max, shifted so the lane block is centered
/// in [y_min, y_max]. When the extent is a multiple of op_width this is the
/// half-width inset exactly. A mainland thinner than half a swath still gets
/// one centerline through its middle.
inline SwathSet generate_swaths(const Polygon& mainland, double angle, double op_width) {
  if (!(op_width > 0.0) || !std::isfinite(op_width)) {
    throw Error(ErrorCode::InvalidArgument, "op_width must be finite and positive");
  }
  SwathSet out;
  out.angle = normalize_half_angle(angle);
  out.op_width = op_width;
  if (mainland.size() < 3) return out;

  const Point pivot = mainland.vertices().front();
  const Polygon local = rotate(mainland, pivot, -out.angle);
  const BoundingBox box = bounding_box(local);

  // As many lanes as fit at a half-width inset, then centered in the
  // transverse extent so both sweep directions give the same lanes.
  const double extent = box.max_y - box.min_y;
  std::size_t lanes = 0;
  while (op_width * (static_cast<double>(lanes) + 0.5) < extent) ++lanes;
  lanes = std::max<std::size_t>(lanes, 1);
  const double shift = 0.5 * (extent - op_width * static_cast<double>(lanes));
  std::vector<double> offsets;
  for (std::size_t k = 0; k < lanes; ++k) {
    offsets.push_back(box.min_y + shift + op_width * (static_cast<double>(k) + 0.5));
  }

  for (double y : offsets) {
    const auto chord = clip_line(local, Point{box.min_x - 1.0, y}, 0.0);
    if (!chord || chord->length() < kMinSwathLength) continue;
    Segment world(rotate(chord->front(), pivot, out.angle), rotate(chord->back(), pivot, out.angle));
    out.swaths.push_back(Swath{std::move(world), op_width, out.swaths.size(), y - box.min_y});
  }
  return out;
}

inline SwathSet generate_swaths(const std::optional<Polygon>& mainland, double angle, double op_width) {
  if (!mainland) {
    SwathSet out;
    out.angle = normalize_half_angle(angle);
    out.op_width = op_width;
    return out;
  }
  return generate_swaths(*mainland, angle, op_width);
}

inline double obj_swath_count(const SwathSet& s) { return static_cast<double>(s.size()); }

inline double obj_swath_length(const SwathSet& s) {
  double sum = 0.0;
  for (const Swath& sw : s.swaths) sum += sw.length();
  return sum;
}

/// Rectangle covered by a swath: the centerline widened by width/2 on each
/// side, with flat ends at the centerline endpoints.
inline Polygon swath_footprint(const Swath& s) {
  const Point a = s.centerline.front();
  const Point b = s.centerline.back();
  const Point d = b - a;
  const Point n = (0.5 * s.width / norm(d)) * Point{-d.y, d.x};
  return Polygon{a - n, b - n, b + n, a + n};
}

/// Fraction of the mainland covered by the union of swath footprints.
inline double obj_field_coverage(const SwathSet& s, const Polygon& mainland) {
  if (s.empty() || mainland.size() < 3) return 0.0;
  std::vector<Polygon> pieces;
  pieces.reserve(s.size());
  for (const Swath& sw : s.swaths) {
    if (auto clipped = intersect(swath_footprint(sw), mainland)) pieces.push_back(std::move(*clipped));
  }
  return std::clamp(union_area(pieces) / area(mainland), 0.0, 1.0);
}

inline double evaluate_objective(SwathObjective objective, const SwathSet& s, const Polygon& mainland) {
  switch (objective) {
    case SwathObjective::SwathCount: return obj_swath_count(s);
    case SwathObjective::FieldCoverage: return obj_field_coverage(s, mainland);
    case SwathObjective::SwathLength: return obj_swath_length(s);
  }
  return 0.0;
}

struct AngleSearchResult {
  SwathSet best;
  double value{0.0};
  std::size_t candidates{0};
};

/// True when `candidate` beats `incumbent` by more than a relative 1e-9.
/// Near-ties keep the incumbent, so the smallest angle wins.
inline bool strictly_better(SwathObjective objective, double candidate, double incumbent) {
  const double tol = 1e-9 * std::max(1.0, std::abs(incumbent));
  return minimizes(objective) ? candidate < incumbent - tol : candidate > incumbent + tol;
}

/// Exhaustive sweep-angle search over {0, step, 2·step, ...} below π.
/// Candidates may be scored on several threads; the winner is selected in
/// angle order afterwards, so the result matches a sequential run.
inline AngleSearchResult brute_force_angle(const Polygon& mainland, const Robot& robot, SwathObjective objective,
                                           double step, unsigned threads = 0) {
  if (!(step > 0.0 && step <= std::numbers::pi)) {
    throw Error(ErrorCode::InvalidArgument, "angle step must lie in (0, pi]");
  }
  robot.validate();
  std::vector<double> angles;
  for (std::size_t k = 0;; ++k) {
    const double a = static_cast<double>(k) * step;
    if (a >= std::numbers::pi) break;
    angles.push_back(a);
  }

  std::vector<double> scores(angles.size());
  auto score_range = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < angles.size(); i += stride) {
      scores[i] = evaluate_objective(objective, generate_swaths(mainland, angles[i], robot.op_width), mainland);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, angles.size()));
  if (threads <= 1) {
    score_range(0, 1);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(score_range, t, threads);
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < angles.size(); ++i) {
    if (strictly_better(objective, scores[i], scores[best])) best = i;
  }
  return {generate_swaths(mainland, angles[best], robot.op_width), scores[best], angles.size()};
}

inline AngleSearchResult brute_force_angle(const std::optional<Polygon>& mainland, const Robot& robot,
                                           SwathObjective objective, double step, unsigned threads = 0) {
  if (!mainland) {
    AngleSearchResult r;
    r.best.op_width = robot.op_width;
    return r;
  }
  return brute_force_angle(*mainland, robot, objective, step, threads);
}

}  // namespace covplan
