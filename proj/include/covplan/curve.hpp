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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "covplan/error.hpp"
#include "covplan/geometry.hpp"

namespace covplan {

enum class CurveKind { Straight, Dubins, ReedsShepp };

inline std::string_view curve_name(CurveKind k) {
  switch (k) {
    case CurveKind::Straight: return "straight";
    case CurveKind::Dubins: return "dubins";
    case CurveKind::ReedsShepp: return "reeds-shepp";
  }
  return "unknown";
}

inline CurveKind parse_curve(std::string_view s) {
  if (s == "straight") return CurveKind::Straight;
  if (s == "dubins") return CurveKind::Dubins;
  if (s == "reeds-shepp" || s == "reeds_shepp") return CurveKind::ReedsShepp;
  throw Error(ErrorCode::InvalidArgument, "unknown curve kind: " + std::string(s));
}

enum class SegmentType { Left, Right, Straight };

/// One piece of a turn. `length` is in meters and signed: negative lengths
/// are driven in reverse.
struct CurveSegment {
  SegmentType type{SegmentType::Straight};
  double length{0.0};
};

enum class Motion { Forward, Reverse };

struct Turn {
  Pose start;
  Pose goal;
  CurveKind kind{CurveKind::Straight};
  std::string name;  ///< word, e.g. "LSL"
  std::vector<CurveSegment> word;
  double radius{0.0};
  double length{0.0};
};

inline double word_length(std::span<const CurveSegment> word) {
  double sum = 0.0;
  for (const CurveSegment& s : word) sum += std::abs(s.length);
  return sum;
}

/// Signed curvature of a segment for a given turning radius.
inline double segment_curvature(SegmentType type, double radius) {
  switch (type) {
    case SegmentType::Left: return 1.0 / radius;
    case SegmentType::Right: return -1.0 / radius;
    case SegmentType::Straight: return 0.0;
  }
  return 0.0;
}

/// Exact pose after driving `s` meters (signed) of one segment type.
inline Pose advance(const Pose& p, SegmentType type, double s, double radius) {
  const double th = p.heading;
  const Point at = p.position;
  switch (type) {
    case SegmentType::Straight:
      return {at + s * Point{std::cos(th), std::sin(th)}, th};
    case SegmentType::Left: {
      const double th1 = th + s / radius;
      return {at + radius * Point{std::sin(th1) - std::sin(th), std::cos(th) - std::cos(th1)}, th1};
    }
    case SegmentType::Right: {
      const double th1 = th - s / radius;
      return {at + radius * Point{std::sin(th) - std::sin(th1), std::cos(th1) - std::cos(th)}, th1};
    }
  }
  return p;
}

inline Pose integrate(const Pose& start, std::span<const CurveSegment> word, double radius) {
  Pose p = start;
  for (const CurveSegment& s : word) p = advance(p, s.type, s.length, radius);
  return p;
}

}  // namespace covplan
