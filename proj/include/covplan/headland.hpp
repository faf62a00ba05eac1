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
#include <optional>

#include "covplan/error.hpp"
#include "covplan/geometry.hpp"

namespace covplan {

/// Vehicle constraints. op_width is the implement width and also the swath
/// spacing; it may be narrower or wider than the vehicle itself.
struct Robot {
  double op_width{2.5};
  double robot_width{2.5};
  double min_turn_radius{2.1};
  std::optional<double> max_speed;

  void validate() const {
    if (!(std::isfinite(op_width) && op_width > 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "op_width must be finite and positive");
    }
    if (!(std::isfinite(robot_width) && robot_width > 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "robot_width must be finite and positive");
    }
    if (!(std::isfinite(min_turn_radius) && min_turn_radius >= 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "min_turn_radius must be finite and non-negative");
    }
    if (max_speed && !(std::isfinite(*max_speed) && *max_speed > 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "max_speed must be finite and positive");
    }
  }
};

struct HeadlandResult {
  std::optional<Polygon> mainland;  ///< empty when the field erodes away
  double headland_width{0.0};
  double area_ratio{0.0};  ///< area(mainland) / area(field), 0 when empty
};

/// Constant-width headland: the mainland is the field eroded by `width`.
inline HeadlandResult constant_headland(const Polygon& field, double width) {
  if (field.size() < 3) throw Error(ErrorCode::InvalidGeometry, "headland of an empty field");
  if (!(width >= 0.0) || !std::isfinite(width)) {
    throw Error(ErrorCode::InvalidArgument, "headland width must be finite and non-negative");
  }
  HeadlandResult out;
  out.headland_width = width;
  out.mainland = buffer_inward(field, width);
  out.area_ratio = out.mainland ? std::clamp(area(*out.mainland) / area(field), 0.0, 1.0) : 0.0;
  return out;
}

inline double default_headland_width(const Robot& robot, double multiple) {
  if (!(multiple > 0.0)) throw Error(ErrorCode::InvalidArgument, "headland multiple must be positive");
  return multiple * robot.op_width;
}

}  // namespace covplan
