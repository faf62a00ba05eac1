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

#include <algorithm>
#include <numeric>
#include <random>

#include "covplan/bench.hpp"
#include "covplan/route.hpp"
#include "oracles.hpp"

using namespace covplan;

namespace {

SwathSet lanes(std::size_t n, double length, double spacing) {
  SwathSet s;
  s.op_width = spacing;
  for (std::size_t i = 0; i < n; ++i) {
    const double y = spacing * static_cast<double>(i);
    s.swaths.push_back(Swath{Segment({0.0, y}, {length, y}), spacing, i, y});
  }
  return s;
}

std::vector<std::size_t> ids(const Route& r) {
  std::vector<std::size_t> out;
  for (const auto& d : r.ordered) out.push_back(d.swath.id);
  return out;
}

// Snake by filtering: evens in increasing order, then odds in decreasing order.
std::vector<std::size_t> snake_by_filter(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i % 2 == 0) out.push_back(i);
  }
  for (std::size_t i = n; i-- > 0;) {
    if (i % 2 == 1) out.push_back(i);
  }
  return out;
}

}  // namespace

TEST(Patterns, Boustrophedon) {
  EXPECT_EQ(ids(plan_route(lanes(6, 80, 2.5), Pattern::boustrophedon())),
            (std::vector<std::size_t>{0, 1, 2, 3, 4, 5}));
}

TEST(Patterns, Snake) {
  EXPECT_EQ(ids(plan_route(lanes(6, 80, 2.5), Pattern::snake())), (std::vector<std::size_t>{0, 2, 4, 5, 3, 1}));
  EXPECT_EQ(snake_order(5), (std::vector<std::size_t>{0, 2, 4, 3, 1}));
  EXPECT_EQ(snake_order(1), (std::vector<std::size_t>{0}));
  EXPECT_TRUE(snake_order(0).empty());
}

TEST(Patterns, SpiralEight) {
  EXPECT_EQ(ids(plan_route(lanes(8, 80, 2.5), Pattern::spiral(6))),
            (std::vector<std::size_t>{0, 2, 4, 5, 3, 1, 6, 7}));
}

TEST(Patterns, SpiralMatchesClusterEnumeration) {
  for (std::size_t n = 0; n <= 25; ++n) {
    for (std::size_t bulk = 1; bulk <= 9; ++bulk) {
      std::vector<std::size_t> expected;
      for (std::size_t base = 0; base < n; base += bulk) {
        for (std::size_t i : snake_by_filter(std::min(bulk, n - base))) expected.push_back(base + i);
      }
      EXPECT_EQ(spiral_order(n, bulk), expected) << n << " " << bulk;
    }
    EXPECT_EQ(snake_order(n), snake_by_filter(n));
  }
}

TEST(Patterns, Custom) {
  EXPECT_EQ(ids(plan_route(lanes(4, 10, 2.5), Pattern::custom({2, 0, 3, 1}))), (std::vector<std::size_t>{2, 0, 3, 1}));
  for (auto bad : {std::vector<std::size_t>{0, 1, 2}, {0, 1, 1, 2}, {0, 1, 2, 4}}) {
    try {
      plan_route(lanes(4, 10, 2.5), Pattern::custom(bad));
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidRoute);
    }
  }
  EXPECT_THROW(plan_route(lanes(4, 10, 2.5), Pattern::spiral(0)), Error);
}

TEST(Patterns, Names) {
  EXPECT_EQ(pattern_name(Pattern::boustrophedon()), "boustrophedon");
  EXPECT_EQ(pattern_name(Pattern::snake()), "snake");
  EXPECT_EQ(pattern_name(Pattern::spiral(6)), "spiral6");
}

TEST(RouteLength, TwoLanes) {
  const Route r = plan_route(lanes(2, 80, 2.5), Pattern::boustrophedon());
  EXPECT_DOUBLE_EQ(route_length_inplace(r), 162.5);
  EXPECT_FALSE(r.ordered[0].reversed);
  EXPECT_TRUE(r.ordered[1].reversed);
}

TEST(RouteLength, SingleSwath) {
  EXPECT_DOUBLE_EQ(route_length_inplace(plan_route(lanes(1, 42, 2.5), Pattern::snake())), 42.0);
}

TEST(RouteLength, SnakeSixLanes) {
  const Route r = plan_route(lanes(6, 80, 2.5), Pattern::snake());
  std::vector<double> gaps;
  for (std::size_t i = 1; i < r.size(); ++i) gaps.push_back(distance(r.ordered[i - 1].end(), r.ordered[i].start()));
  EXPECT_EQ(gaps, (std::vector<double>{5, 5, 2.5, 5, 5}));
  EXPECT_DOUBLE_EQ(route_length_inplace(r), 502.5);
}

TEST(RouteLength, TieKeepsGeneratedDirection) {
  SwathSet s;
  s.op_width = 1.0;
  s.swaths.push_back(Swath{Segment({0, 0}, {10, 0}), 1.0, 0, 0});
  // Both endpoints of the second swath are equidistant from the exit at (10, 0).
  s.swaths.push_back(Swath{Segment({5, 5}, {15, 5}), 1.0, 1, 5});
  const Route r = plan_route(s, Pattern::boustrophedon());
  EXPECT_FALSE(r.ordered[1].reversed);
}

TEST(Properties, PermutationAndLocalOptimality) {
  const auto fields = generate_convex_fields(10, 50, 10000.0);
  std::mt19937_64 rng(51);
  for (const FieldCase& f : fields) {
    const SwathSet s = generate_swaths(f.boundary, oracle::uniform(rng, 0.0, std::numbers::pi), 2.5);
    for (const Pattern& p : {Pattern::boustrophedon(), Pattern::snake(), Pattern::spiral(6), Pattern::spiral(4)}) {
      const Route r = plan_route(s, p);
      auto order = ids(r);
      std::sort(order.begin(), order.end());
      std::vector<std::size_t> expected(s.size());
      std::iota(expected.begin(), expected.end(), std::size_t{0});
      EXPECT_EQ(order, expected);
      EXPECT_FALSE(r.ordered.front().reversed);
      double swath_sum = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) {
        swath_sum += r.ordered[i].swath.length();
        if (i == 0) continue;
        const Point exit = r.ordered[i - 1].end();
        EXPECT_LE(distance(exit, r.ordered[i].start()), distance(exit, r.ordered[i].end()));
      }
      EXPECT_GE(route_length_inplace(r), swath_sum);
    }
  }
}

TEST(Properties, ZeroGapsGiveSwathSum) {
  SwathSet s;
  s.op_width = 1.0;
  s.swaths.push_back(Swath{Segment({0, 0}, {10, 0}), 1.0, 0, 0});
  s.swaths.push_back(Swath{Segment({10, 0}, {10, 7}), 1.0, 1, 1});
  EXPECT_DOUBLE_EQ(route_length_inplace(plan_route(s, Pattern::boustrophedon())), 17.0);
}

TEST(Properties, RectangleOrdering) {
  for (std::size_t n : {7u, 8u, 12u, 13u, 20u, 33u}) {
    const SwathSet s = lanes(n, 75.0, 2.5);
    const double b = route_length_inplace(plan_route(s, Pattern::boustrophedon()));
    const double sn = route_length_inplace(plan_route(s, Pattern::snake()));
    const double sp = route_length_inplace(plan_route(s, Pattern::spiral(6)));
    EXPECT_LT(b, sn) << n;
    EXPECT_LT(sn, sp) << n;
  }
}

TEST(Properties, MeanOrderingOnRandomFields) {
  const auto fields = generate_convex_fields(38, 7, 10000.0);
  double b = 0.0;
  double sn = 0.0;
  double sp = 0.0;
  for (const FieldCase& f : fields) {
    const auto m = buffer_inward(f.boundary, 7.5);
    ASSERT_TRUE(m);
    const SwathSet s = brute_force_angle(*m, Robot{}, SwathObjective::SwathCount, std::numbers::pi / 180.0).best;
    b += route_length_inplace(plan_route(s, Pattern::boustrophedon()));
    sn += route_length_inplace(plan_route(s, Pattern::snake()));
    sp += route_length_inplace(plan_route(s, Pattern::spiral(6)));
  }
  EXPECT_LT(b, sn);
  EXPECT_LT(sn, sp);
}
