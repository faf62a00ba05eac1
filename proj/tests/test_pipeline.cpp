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

#include <gtest/gtest.h>

#include "covplan/bench.hpp"
#include "covplan/pipeline.hpp"

using namespace covplan;

namespace {

Polygon square(double side) { return Polygon{{0, 0}, {side, 0}, {side, side}, {0, side}}; }

PlanConfig square_config(CurveKind curve) {
  PlanConfig cfg;
  cfg.headland = HeadlandWidth::meters(7.5);
  cfg.objective = SwathObjective::SwathCount;
  cfg.pattern = Pattern::boustrophedon();
  cfg.curve = curve;
  return cfg;
}

}  // namespace

TEST(Plan, SquareDubins) {
  const PlanReport r = plan(square(100), Robot{}, square_config(CurveKind::Dubins));
  ASSERT_EQ(r.swaths.size(), 34u);
  for (const Swath& s : r.swaths.swaths) EXPECT_NEAR(s.length(), 85.0, 1e-9);
  EXPECT_NEAR(r.l0, 2972.5, 1e-9);
  EXPECT_GT(r.lr, r.l0);
  EXPECT_EQ(r.swath_objective, 34.0);
  EXPECT_NEAR(r.turn_overhead, (r.lr - r.l0) / r.lr, 1e-15);
  EXPECT_GE(r.turn_overhead, 0.0);
  EXPECT_LT(r.turn_overhead, 1.0);
  // Every turn is the same Dubins pair, so the excursion is the loop depth past the mainland.
  EXPECT_GE(r.max_excursion, 0.0);
}

TEST(Plan, SquareStraightEqualsInPlaceLength) {
  const PlanReport r = plan(square(100), Robot{}, square_config(CurveKind::Straight));
  EXPECT_NEAR(r.lr, 2972.5, 1e-9);
  EXPECT_NEAR(r.lr, r.l0, 1e-6 * r.l0);
  EXPECT_NEAR(r.turn_overhead, 0.0, 1e-12);
}

TEST(Plan, ReedsSheppNotLongerThanDubins) {
  const PlanReport d = plan(square(100), Robot{}, square_config(CurveKind::Dubins));
  const PlanReport rs = plan(square(100), Robot{}, square_config(CurveKind::ReedsShepp));
  EXPECT_LE(rs.lr, d.lr + 1e-9);
  EXPECT_EQ(rs.l0, d.l0);
}

TEST(Plan, EmptyMainlandCarriesHeadland) {
  PlanConfig cfg = square_config(CurveKind::Dubins);
  cfg.headland = HeadlandWidth::meters(50.0);
  try {
    plan(square(100), Robot{}, cfg);
    FAIL();
  } catch (const EmptyMainlandError& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyMainland);
    EXPECT_FALSE(e.headland().mainland);
    EXPECT_EQ(e.headland().headland_width, 50.0);
    EXPECT_EQ(e.headland().area_ratio, 0.0);
  }
}

TEST(Plan, ConfigValidation) {
  PlanConfig cfg;
  cfg.angle_step = 0.0;
  EXPECT_THROW(plan(square(100), Robot{}, cfg), Error);
  cfg = PlanConfig{};
  cfg.angle_step = 3.5;
  EXPECT_THROW(plan(square(100), Robot{}, cfg), Error);
  cfg = PlanConfig{};
  cfg.pattern = Pattern::spiral(0);
  EXPECT_THROW(plan(square(100), Robot{}, cfg), Error);
  Robot zero;
  zero.min_turn_radius = 0.0;
  try {
    plan(square(100), zero, PlanConfig{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Radius);
  }
  cfg = PlanConfig{};
  cfg.curve = CurveKind::Straight;
  EXPECT_NO_THROW(plan(square(100), zero, cfg));
}

TEST(Plan, DefaultHeadlandIsThreeWidths) {
  const PlanConfig cfg;
  EXPECT_DOUBLE_EQ(cfg.headland.resolve(Robot{}), 7.5);
  EXPECT_DOUBLE_EQ(cfg.angle_step, std::numbers::pi / 180.0);
  EXPECT_EQ(cfg.curve, CurveKind::Dubins);
  EXPECT_DOUBLE_EQ(cfg.sample_step, 0.1);
}

TEST(Plan, DeterministicGeometryAndTimings) {
  const auto fields = generate_convex_fields(3, 91, 10000.0);
  for (const FieldCase& f : fields) {
    PlanConfig cfg;
    cfg.objective = SwathObjective::SwathLength;
    cfg.pattern = Pattern::spiral(6);
    cfg.curve = CurveKind::ReedsShepp;
    const PlanReport a = plan(f.boundary, Robot{}, cfg);
    const PlanReport b = plan(f.boundary, Robot{}, cfg);
    EXPECT_EQ(a.swaths.angle, b.swaths.angle);
    EXPECT_EQ(a.l0, b.l0);
    EXPECT_EQ(a.lr, b.lr);
    ASSERT_EQ(a.path.states.size(), b.path.states.size());
    for (std::size_t i = 0; i < a.path.states.size(); ++i) {
      EXPECT_EQ(a.path.states[i].pose.position, b.path.states[i].pose.position);
      EXPECT_EQ(a.path.states[i].pose.heading, b.path.states[i].pose.heading);
    }
    const StageTimings& t = a.timings;
    for (double v : {t.headland_s, t.swath_s, t.route_s, t.path_s, t.total_s}) EXPECT_GE(v, 0.0);
    EXPECT_LE(t.headland_s + t.swath_s + t.route_s + t.path_s, t.total_s);
  }
}

TEST(Plan, TurnOverheadHelper) {
  EXPECT_DOUBLE_EQ(turn_overhead(90.0, 100.0), 0.1);
  EXPECT_DOUBLE_EQ(turn_overhead(0.0, 0.0), 0.0);
}
