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
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "covplan/bench.hpp"
#include "covplan/swath.hpp"
#include "oracles.hpp"

using namespace covplan;

namespace {

constexpr double kPi = std::numbers::pi;

Polygon rect(double w, double h) { return Polygon{{0, 0}, {w, 0}, {w, h}, {0, h}}; }

std::vector<Point> footprint_ring(const Swath& s) {
  const Point a = s.centerline.front();
  const Point b = s.centerline.back();
  const double len = std::hypot(b.x - a.x, b.y - a.y);
  const double nx = -(b.y - a.y) / len * s.width / 2;
  const double ny = (b.x - a.x) / len * s.width / 2;
  return {{a.x - nx, a.y - ny}, {b.x - nx, b.y - ny}, {b.x + nx, b.y + ny}, {a.x + nx, a.y + ny}};
}

double mc_coverage(const std::vector<Point>& mainland, const SwathSet& s, std::size_t samples, std::uint64_t seed) {
  std::vector<std::vector<Point>> rings;
  for (const Swath& sw : s.swaths) rings.push_back(footprint_ring(sw));
  const oracle::Box b = oracle::box_of(mainland);
  std::mt19937_64 rng(seed);
  std::size_t in = 0;
  std::size_t hit = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const Point p{oracle::uniform(rng, b.x0, b.x1), oracle::uniform(rng, b.y0, b.y1)};
    if (!oracle::inside(mainland, p)) continue;
    ++in;
    for (const auto& r : rings) {
      if (oracle::inside(r, p)) {
        ++hit;
        break;
      }
    }
  }
  return static_cast<double>(hit) / static_cast<double>(in);
}

}  // namespace

TEST(GenerateSwaths, SquareThirtyTwoLanes) {
  const SwathSet s = generate_swaths(rect(80, 80), 0.0, 2.5);
  ASSERT_EQ(s.size(), 32u);
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(s.swaths[i].id, i);
    EXPECT_NEAR(s.swaths[i].length(), 80.0, 1e-9);
    EXPECT_NEAR(s.swaths[i].centerline.front().y, 1.25 + 2.5 * static_cast<double>(i), 1e-9);
    EXPECT_DOUBLE_EQ(s.swaths[i].width, 2.5);
  }
  EXPECT_EQ(obj_swath_count(s), 32.0);
  EXPECT_NEAR(obj_swath_length(s), 2560.0, 1e-9);
  EXPECT_NEAR(obj_field_coverage(s, rect(80, 80)), 1.0, 1e-12);
}

TEST(GenerateSwaths, WideImplementYieldsSingleLane) {
  const SwathSet s = generate_swaths(rect(80, 80), 0.0, 100.0);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_NEAR(s.swaths[0].centerline.front().y, 40.0, 1e-9);
  const SwathSet thin = generate_swaths(rect(80, 1), 0.0, 2.5);
  ASSERT_EQ(thin.size(), 1u);
  EXPECT_NEAR(thin.swaths[0].centerline.front().y, 0.5, 1e-9);
  EXPECT_NEAR(s.swaths[0].length(), 80.0, 1e-9);
}

TEST(GenerateSwaths, EmptyMainland) {
  const SwathSet s = generate_swaths(std::optional<Polygon>{}, 0.3, 2.5);
  EXPECT_TRUE(s.empty());
  EXPECT_EQ(obj_swath_count(s), 0.0);
  EXPECT_EQ(obj_swath_length(s), 0.0);
  EXPECT_EQ(obj_field_coverage(s, rect(80, 80)), 0.0);
  EXPECT_THROW(generate_swaths(rect(10, 10), 0.0, 0.0), Error);
}

TEST(GenerateSwaths, CountMatchesStripeOracle) {
  const auto fields = generate_convex_fields(10, 5, 10000.0);
  for (const FieldCase& f : fields) {
    for (double a : {kPi / 4, 0.0, 1.1, 2.9}) {
      const SwathSet s = generate_swaths(f.boundary, a, 2.5);
      EXPECT_EQ(s.size(), oracle::stripe_count(f.boundary.vertices(), a, 2.5, kMinSwathLength)) << f.name << " " << a;
    }
  }
}

TEST(GenerateSwaths, ParallelAndEvenlySpaced) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const Polygon m(oracle::random_convex(rng, 12, 80.0, 50.0));
    const double a = oracle::uniform(rng, 0.0, kPi);
    const SwathSet s = generate_swaths(m, a, 2.5);
    EXPECT_NEAR(s.angle, a, 1e-12);
    const Point u{std::cos(a), std::sin(a)};
    const Point n{-u.y, u.x};
    for (std::size_t i = 0; i < s.size(); ++i) {
      const Point d = s.swaths[i].centerline.back() - s.swaths[i].centerline.front();
      EXPECT_LT(std::abs(cross(u, d)) / norm(d), 1e-9);
      EXPECT_GT(dot(u, d), 0.0);
      if (i > 0) {
        const double gap = dot(n, s.swaths[i].centerline.front() - s.swaths[i - 1].centerline.front());
        const double k = std::round(gap / 2.5);
        EXPECT_GE(k, 1.0);
        EXPECT_NEAR(gap, 2.5 * k, 1e-6);
        EXPECT_NEAR(s.swaths[i].offset - s.swaths[i - 1].offset, 2.5 * k, 1e-9);
      }
    }
  }
}

TEST(SwathLength, MatchesIndependentChords) {
  const auto fields = generate_convex_fields(8, 9, 10000.0);
  std::mt19937_64 rng(10);
  for (const FieldCase& f : fields) {
    const double a = oracle::uniform(rng, 0.0, kPi);
    const SwathSet s = generate_swaths(f.boundary, a, 2.5);
    // Independent chords: rotate the ring, cut at each centered stripe height.
    const auto& ring = f.boundary.vertices();
    std::vector<Point> rot;
    for (const Point& p : ring) {
      rot.push_back({std::cos(-a) * p.x - std::sin(-a) * p.y, std::sin(-a) * p.x + std::cos(-a) * p.y});
    }
    const oracle::Box b = oracle::box_of(rot);
    double expected = 0.0;
    int lanes = 0;
    while (2.5 * (lanes + 0.5) < b.y1 - b.y0) ++lanes;
    const double shift = 0.5 * ((b.y1 - b.y0) - 2.5 * lanes);
    for (int k = 0; k < lanes; ++k) {
      const double y = b.y0 + shift + 2.5 * (k + 0.5);
      if (auto c = oracle::line_chord(rot, {0.0, y}, 0.0)) {
        const double len = std::hypot(c->second.x - c->first.x, c->second.y - c->first.y);
        if (len >= kMinSwathLength) expected += len;
      }
    }
    EXPECT_NEAR(obj_swath_length(s), expected, 0.01 * expected) << f.name;
    EXPECT_NEAR(obj_swath_length(s), expected, 1e-6 * expected) << f.name;
  }
}

TEST(FieldCoverage, MatchesMonteCarlo) {
  const auto fields = generate_convex_fields(3, 17, 10000.0);
  std::mt19937_64 rng(18);
  for (const FieldCase& f : fields) {
    const double a = oracle::uniform(rng, 0.0, kPi);
    const SwathSet s = generate_swaths(f.boundary, a, 2.5);
    const double mc = mc_coverage(f.boundary.vertices(), s, 1'000'000, 19);
    EXPECT_NEAR(obj_field_coverage(s, f.boundary), mc, 0.005 * mc) << f.name;
  }
}

TEST(FieldCoverage, BoundedAndMonotoneInSwaths) {
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 20; ++trial) {
    const Polygon m(oracle::random_convex(rng, 10, 60.0, 40.0));
    const SwathSet full = generate_swaths(m, oracle::uniform(rng, 0.0, kPi), 2.5);
    SwathSet partial = full;
    partial.swaths.clear();
    double prev = 0.0;
    for (const Swath& sw : full.swaths) {
      partial.swaths.push_back(sw);
      const double c = obj_field_coverage(partial, m);
      EXPECT_GE(c, prev - 1e-12);
      EXPECT_LE(c, 1.0);
      EXPECT_GE(c, 0.0);
      prev = c;
    }
  }
}

TEST(Objective, NamesRoundTrip) {
  for (auto o : {SwathObjective::SwathCount, SwathObjective::FieldCoverage, SwathObjective::SwathLength}) {
    EXPECT_EQ(parse_objective(objective_name(o)), o);
  }
  EXPECT_TRUE(minimizes(SwathObjective::SwathCount));
  EXPECT_FALSE(minimizes(SwathObjective::FieldCoverage));
  EXPECT_THROW(parse_objective("fastest"), Error);
}

TEST(BruteForce, RectanglePrefersLongAxis) {
  const auto r = brute_force_angle(rect(80, 40), Robot{}, SwathObjective::SwathCount, 0.01);
  EXPECT_EQ(r.best.angle, 0.0);
  EXPECT_EQ(r.best.size(), 16u);
  EXPECT_EQ(r.value, 16.0);
  EXPECT_EQ(r.candidates, 315u);
}

TEST(BruteForce, SquareSwathLengthMatchesChordScan) {
  // Axis alignment gives exactly area / op_width. Slightly tilted lane
  // blocks lose a little more chord length at the corners than they gain,
  // so the minimum is not at axis alignment; the search must still find
  // the best grid angle, which an independent chord scan confirms.
  const Polygon sq = rect(80, 80);
  EXPECT_NEAR(obj_swath_length(generate_swaths(sq, 0.0, 2.5)), 2560.0, 1e-9);
  const auto r = brute_force_angle(sq, Robot{}, SwathObjective::SwathLength, 0.01);
  double grid_best = std::numeric_limits<double>::infinity();
  for (int k = 0; k * 0.01 < kPi; ++k) {
    const double a = k * 0.01;
    double sum = 0.0;
    std::vector<Point> rot;
    for (const Point& p : sq.vertices()) rot.push_back(rotate(p, sq.vertices().front(), -a));
    const oracle::Box b = oracle::box_of(rot);
    int lanes = 0;
    while (2.5 * (lanes + 0.5) < b.y1 - b.y0) ++lanes;
    const double shift = 0.5 * ((b.y1 - b.y0) - 2.5 * std::max(lanes, 1));
    for (int i = 0; i < std::max(lanes, 1); ++i) {
      if (auto c = oracle::line_chord(rot, {0.0, b.y0 + shift + 2.5 * (i + 0.5)}, 0.0)) {
        const double len = std::hypot(c->second.x - c->first.x, c->second.y - c->first.y);
        if (len >= kMinSwathLength) sum += len;
      }
    }
    grid_best = std::min(grid_best, sum);
  }
  EXPECT_NEAR(r.value, grid_best, 1e-6);
  EXPECT_LE(r.value, 2560.0);
  // Finer scan can only improve on the coarse optimum.
  double fine_best = std::numeric_limits<double>::infinity();
  for (double a = 0.0; a < kPi; a += 0.001) fine_best = std::min(fine_best, obj_swath_length(generate_swaths(sq, a, 2.5)));
  EXPECT_LE(fine_best, r.value + 1e-9);
}

TEST(BruteForce, TriangleCoverageAlignsWithAnEdge) {
  const Polygon tri{{0, 0}, {120, 0}, {30, 25}};
  const double step = kPi / 180.0;
  const auto r = brute_force_angle(tri, Robot{}, SwathObjective::FieldCoverage, step);
  const auto& v = tri.vertices();
  double best = kPi;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point e = v[(i + 1) % v.size()] - v[i];
    const double edge = normalize_half_angle(std::atan2(e.y, e.x));
    for (double target : {edge, normalize_half_angle(edge + kPi / 2)}) {
      const double d = std::abs(std::remainder(r.best.angle - target, kPi));
      best = std::min(best, d);
    }
  }
  EXPECT_LE(best, step) << "angle " << r.best.angle;
}

TEST(BruteForce, EmptyMainlandAndBadStep) {
  const auto r = brute_force_angle(std::optional<Polygon>{}, Robot{}, SwathObjective::SwathCount, 0.1);
  EXPECT_TRUE(r.best.empty());
  EXPECT_THROW(brute_force_angle(rect(10, 10), Robot{}, SwathObjective::SwathCount, 0.0), Error);
  EXPECT_THROW(brute_force_angle(rect(10, 10), Robot{}, SwathObjective::SwathCount, 4.0), Error);
}

TEST(BruteForce, ThreadedMatchesSequential) {
  const auto fields = generate_convex_fields(4, 23, 10000.0);
  for (const FieldCase& f : fields) {
    for (auto o : {SwathObjective::SwathCount, SwathObjective::SwathLength, SwathObjective::FieldCoverage}) {
      const double step = o == SwathObjective::FieldCoverage ? 0.05 : 0.01;
      const auto seq = brute_force_angle(f.boundary, Robot{}, o, step, 1);
      const auto par = brute_force_angle(f.boundary, Robot{}, o, step, 7);
      EXPECT_EQ(seq.best.angle, par.best.angle);
      EXPECT_EQ(seq.value, par.value);
      EXPECT_EQ(seq.best.size(), par.best.size());
    }
  }
}

TEST(Properties, SwathCountBound) {
  std::mt19937_64 rng(30);
  for (int trial = 0; trial < 40; ++trial) {
    const Polygon m(oracle::random_convex(rng, 10, oracle::uniform(rng, 5, 100), oracle::uniform(rng, 5, 100)));
    for (double a = 0.0; a < kPi; a += 0.2) {
      const double w = oracle::uniform(rng, 0.5, 5.0);
      const SwathSet s = generate_swaths(m, a, w);
      EXPECT_LE(obj_swath_count(s), area(m) / w);
    }
  }
}

TEST(Properties, SquareCountNearSqrtArea) {
  for (double side : {20.0, 37.0, 50.0, 85.0, 141.4, 200.0}) {
    const Polygon sq = rect(side, side);
    const auto r = brute_force_angle(sq, Robot{}, SwathObjective::SwathCount, kPi / 180.0);
    const double expected = std::ceil(std::sqrt(area(sq)) / 2.5);
    EXPECT_NEAR(r.value, expected, 1.0) << side;
  }
}

TEST(Properties, AnglePeriodicity) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const Polygon m(oracle::random_convex(rng, 10, 60.0, 60.0));
    const double a = oracle::uniform(rng, 0.0, kPi);
    const SwathSet s1 = generate_swaths(m, a, 2.5);
    const SwathSet s2 = generate_swaths(m, a + kPi, 2.5);
    ASSERT_EQ(s1.size(), s2.size());
    for (const Swath& sw : s1.swaths) {
      bool found = false;
      for (const Swath& other : s2.swaths) {
        const auto& p = sw.centerline;
        const auto& q = other.centerline;
        const bool same = distance(p.front(), q.front()) < 1e-6 && distance(p.back(), q.back()) < 1e-6;
        const bool flipped = distance(p.front(), q.back()) < 1e-6 && distance(p.back(), q.front()) < 1e-6;
        found = found || same || flipped;
      }
      EXPECT_TRUE(found);
    }
  }
}

TEST(Properties, RefinementDominance) {
  const auto fields = generate_convex_fields(5, 33, 10000.0);
  for (const FieldCase& f : fields) {
    for (auto o : {SwathObjective::SwathCount, SwathObjective::SwathLength}) {
      const auto coarse = brute_force_angle(f.boundary, Robot{}, o, kPi / 18.0);
      const auto fine = brute_force_angle(f.boundary, Robot{}, o, kPi / 180.0);
      EXPECT_LE(fine.value, coarse.value * (1 + 1e-12)) << f.name;
    }
    const auto coarse = brute_force_angle(f.boundary, Robot{}, SwathObjective::FieldCoverage, kPi / 6.0);
    const auto fine = brute_force_angle(f.boundary, Robot{}, SwathObjective::FieldCoverage, kPi / 60.0);
    EXPECT_GE(fine.value, coarse.value * (1 - 1e-12)) << f.name;
  }
}

TEST(Properties, RotationEquivariance) {
  const auto fields = generate_convex_fields(4, 35, 10000.0);
  const double step = kPi / 180.0;
  for (const FieldCase& f : fields) {
    for (int shift : {7, 45, 120}) {
      const double theta = shift * step;
      const Polygon rotated = rotate(f.boundary, centroid(f.boundary), theta);
      for (auto o : {SwathObjective::SwathCount, SwathObjective::SwathLength}) {
        const auto base = brute_force_angle(f.boundary, Robot{}, o, step);
        const auto turned = brute_force_angle(rotated, Robot{}, o, step);
        EXPECT_NEAR(turned.value, base.value, 1e-6 * std::abs(base.value)) << f.name << " shift " << shift;
      }
    }
  }
}

TEST(Properties, Deterministic) {
  const auto f = generate_convex_fields(1, 3, 10000.0).front();
  const auto a = brute_force_angle(f.boundary, Robot{}, SwathObjective::FieldCoverage, 0.05);
  const auto b = brute_force_angle(f.boundary, Robot{}, SwathObjective::FieldCoverage, 0.05);
  EXPECT_EQ(a.value, b.value);
  ASSERT_EQ(a.best.size(), b.best.size());
  for (std::size_t i = 0; i < a.best.size(); ++i) {
    EXPECT_EQ(a.best.swaths[i].centerline.points(), b.best.swaths[i].centerline.points());
  }
}
