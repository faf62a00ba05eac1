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

#include <chrono>
#include <numbers>
#include <string>

#include "covplan/curve.hpp"
#include "covplan/error.hpp"
#include "covplan/geometry.hpp"
#include "covplan/headland.hpp"
#include "covplan/path.hpp"
#include "covplan/route.hpp"
#include "covplan/swath.hpp"

namespace covplan {

/// Headland width either in meters or as a multiple of the robot's op_width.
struct HeadlandWidth {
  double value{3.0};
  bool multiple_of_op_width{true};

  static HeadlandWidth meters(double m) { return {m, false}; }
  static HeadlandWidth multiple(double k) { return {k, true}; }

  double resolve(const Robot& robot) const {
    return multiple_of_op_width ? default_headland_width(robot, value) : value;
  }
};

struct PlanConfig {
  HeadlandWidth headland{};
  SwathObjective objective{SwathObjective::SwathCount};
  double angle_step{std::numbers::pi / 180.0};
  Pattern pattern{};
  CurveKind curve{CurveKind::Dubins};
  double sample_step{0.1};
  unsigned threads{0};  ///< brute-force workers, 0 = hardware concurrency

  void validate() const {
    if (!(angle_step > 0.0 && angle_step <= std::numbers::pi)) {
      throw Error(ErrorCode::InvalidArgument, "angle step must lie in (0, pi]");
    }
    if (!(sample_step > 0.0)) throw Error(ErrorCode::InvalidArgument, "sample step must be positive");
    if (pattern.kind == PatternKind::Spiral && pattern.spiral_bulk == 0) {
      throw Error(ErrorCode::InvalidRoute, "spiral bulk must be at least 1");
    }
  }
};

struct StageTimings {
  double headland_s{0.0};
  double swath_s{0.0};
  double route_s{0.0};
  double path_s{0.0};
  double total_s{0.0};
};

struct PlanReport {
  HeadlandResult headland;
  SwathSet swaths;
  double swath_objective{0.0};
  Route route;
  double l0{0.0};
  Path path;
  double lr{0.0};
  double turn_overhead{0.0};  ///< (L_R - L_0) / L_R
  double max_excursion{0.0};  ///< farthest path state outside the field, meters
  StageTimings timings;
};

class EmptyMainlandError : public Error {
 public:
  explicit EmptyMainlandError(HeadlandResult headland)
      : Error(ErrorCode::EmptyMainland, "headland of " + std::to_string(headland.headland_width) +
                                            " m leaves no mainland"),
        headland_(std::move(headland)) {}

  const HeadlandResult& headland() const { return headland_; }

 private:
  HeadlandResult headland_;
};

inline double turn_overhead(double l0, double lr) { return lr > 0.0 ? (lr - l0) / lr : 0.0; }

/// Headland -> brute-force swaths -> route -> path, in that order.
inline PlanReport plan(const Polygon& field, const Robot& robot, const PlanConfig& cfg) {
  using clock = std::chrono::steady_clock;
  auto seconds = [](clock::time_point a, clock::time_point b) { return std::chrono::duration<double>(b - a).count(); };
  robot.validate();
  cfg.validate();
  if (cfg.curve != CurveKind::Straight && !(robot.min_turn_radius > 0.0)) {
    throw Error(ErrorCode::Radius, "zero turning radius requires straight turns (--curve straight)");
  }

  PlanReport report;
  const auto t0 = clock::now();
  report.headland = constant_headland(field, cfg.headland.resolve(robot));
  const auto t1 = clock::now();
  if (!report.headland.mainland) throw EmptyMainlandError(report.headland);

  auto search = brute_force_angle(*report.headland.mainland, robot, cfg.objective, cfg.angle_step, cfg.threads);
  report.swaths = std::move(search.best);
  report.swath_objective = search.value;
  const auto t2 = clock::now();
  if (report.swaths.empty()) throw Error(ErrorCode::NoSwaths, "mainland too small for a single swath");

  report.route = plan_route(report.swaths, cfg.pattern);
  report.l0 = route_length_inplace(report.route);
  const auto t3 = clock::now();

  report.path = plan_path(report.route, robot, cfg.curve, cfg.sample_step);
  report.lr = report.path.total_length;
  const auto t4 = clock::now();

  report.turn_overhead = turn_overhead(report.l0, report.lr);
  for (const PathState& s : report.path.states) {
    report.max_excursion = std::max(report.max_excursion, distance_outside(field, s.pose.position));
  }
  const auto t5 = clock::now();

  report.timings = {seconds(t0, t1), seconds(t1, t2), seconds(t2, t3), seconds(t3, t4), seconds(t0, t5)};
  return report;
}

}  // namespace covplan
