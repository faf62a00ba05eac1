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
#include <string>
#include <string_view>
#include <vector>

#include "covplan/error.hpp"
#include "covplan/geometry.hpp"
#include "covplan/swath.hpp"

namespace covplan {

struct DirectedSwath {
  Swath swath;
  bool reversed{false};

  Point start() const { return reversed ? swath.centerline.back() : swath.centerline.front(); }
  Point end() const { return reversed ? swath.centerline.front() : swath.centerline.back(); }
  double heading() const {
    const Point d = end() - start();
    return normalize_angle(std::atan2(d.y, d.x));
  }
  Pose start_pose() const { return {start(), heading()}; }
  Pose end_pose() const { return {end(), heading()}; }
};

enum class PatternKind { Boustrophedon, Snake, Spiral, Custom };

struct Pattern {
  PatternKind kind{PatternKind::Boustrophedon};
  std::size_t spiral_bulk{6};
  std::vector<std::size_t> custom_order;

  static Pattern boustrophedon() { return {}; }
  static Pattern snake() { return {PatternKind::Snake, 6, {}}; }
  static Pattern spiral(std::size_t bulk) { return {PatternKind::Spiral, bulk, {}}; }
  static Pattern custom(std::vector<std::size_t> order) { return {PatternKind::Custom, 6, std::move(order)}; }
};

inline std::string pattern_name(const Pattern& p) {
  switch (p.kind) {
    case PatternKind::Boustrophedon: return "boustrophedon";
    case PatternKind::Snake: return "snake";
    case PatternKind::Spiral: return "spiral" + std::to_string(p.spiral_bulk);
    case PatternKind::Custom: return "custom";
  }
  return "unknown";
}

struct Route {
  Pattern pattern;
  std::vector<DirectedSwath> ordered;

  std::size_t size() const { return ordered.size(); }
  bool empty() const { return ordered.empty(); }
};

/// Evens ascending, then odds descending: 0,2,4,...,5,3,1.
inline std::vector<std::size_t> snake_order(std::size_t n) {
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t i = 0; i < n; i += 2) order.push_back(i);
  if (n >= 2) {
    for (std::size_t i = (n % 2 == 0) ? n - 1 : n - 2;; i -= 2) {
      order.push_back(i);
      if (i < 2) break;
    }
  }
  return order;
}

/// Snake order applied to consecutive clusters of `bulk` swaths.
inline std::vector<std::size_t> spiral_order(std::size_t n, std::size_t bulk) {
  if (bulk == 0) throw Error(ErrorCode::InvalidRoute, "spiral bulk must be at least 1");
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t base = 0; base < n; base += bulk) {
    for (std::size_t i : snake_order(std::min(bulk, n - base))) order.push_back(base + i);
  }
  return order;
}

inline std::vector<std::size_t> pattern_order(const Pattern& pattern, std::size_t n) {
  switch (pattern.kind) {
    case PatternKind::Boustrophedon: {
      std::vector<std::size_t> order(n);
      for (std::size_t i = 0; i < n; ++i) order[i] = i;
      return order;
    }
    case PatternKind::Snake: return snake_order(n);
    case PatternKind::Spiral: return spiral_order(n, pattern.spiral_bulk);
    case PatternKind::Custom: {
      const auto& order = pattern.custom_order;
      if (order.size() != n) {
        throw Error(ErrorCode::InvalidRoute, "custom order has " + std::to_string(order.size()) +
                                                 " entries for " + std::to_string(n) + " swaths");
      }
      std::vector<bool> seen(n, false);
      for (std::size_t i : order) {
        if (i >= n || seen[i]) throw Error(ErrorCode::InvalidRoute, "custom order is not a permutation");
        seen[i] = true;
      }
      return order;
    }
  }
  return {};
}

/// Orders swaths by the pattern. The first swath keeps its generated
/// direction; every later swath starts at whichever endpoint is nearer to
/// the previous exit (ties keep the generated direction).
inline Route plan_route(const SwathSet& s, const Pattern& pattern) {
  Route route;
  route.pattern = pattern;
  const auto order = pattern_order(pattern, s.size());
  route.ordered.reserve(order.size());
  for (std::size_t idx : order) {
    DirectedSwath d{s.swaths[idx], false};
    if (!route.ordered.empty()) {
      const Point exit = route.ordered.back().end();
      const double fwd = distance(exit, d.swath.centerline.front());
      const double rev = distance(exit, d.swath.centerline.back());
      d.reversed = rev < fwd;
    }
    route.ordered.push_back(std::move(d));
  }
  return route;
}

/// Path length with in-place turns: swath lengths plus straight gaps
/// between each exit and the next entry.
inline double route_length_inplace(const Route& r) {
  double total = 0.0;
  for (std::size_t i = 0; i < r.ordered.size(); ++i) {
    total += r.ordered[i].swath.length();
    if (i > 0) total += distance(r.ordered[i - 1].end(), r.ordered[i].start());
  }
  return total;
}

}  // namespace covplan
