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

// Shortest forward-only paths with a bounded turning radius. The six
// candidate words are solved in closed form in the frame where the start is
// at the origin, the goal on the +x axis and distances are in radii.

#include <array>
#include <cmath>
#include <numbers>
#include <optional>

#include "covplan/curve.hpp"
#include "covplan/error.hpp"
#include "covplan/geometry.hpp"

namespace covplan {

enum class DubinsWord { LSL, RSR, LSR, RSL, RLR, LRL };

inline constexpr std::array<DubinsWord, 6> kDubinsWords{DubinsWord::LSL, DubinsWord::RSR, DubinsWord::LSR,
                                                         DubinsWord::RSL, DubinsWord::RLR, DubinsWord::LRL};

namespace detail {

inline double mod2pi(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(a, two_pi);
  if (r < 0.0) r += two_pi;
  // A full revolution is never part of a shortest word; fold rounding noise.
  if (r > two_pi - 1e-10) r = 0.0;
  return r;
}

inline double clamp_unit(double c) {
  if (c > 1.0 && c < 1.0 + 1e-12) return 1.0;
  if (c < -1.0 && c > -1.0 - 1e-12) return -1.0;
  return c;
}

inline const char* dubins_name(DubinsWord w) {
  switch (w) {
    case DubinsWord::LSL: return "LSL";
    case DubinsWord::RSR: return "RSR";
    case DubinsWord::LSR: return "LSR";
    case DubinsWord::RSL: return "RSL";
    case DubinsWord::RLR: return "RLR";
    case DubinsWord::LRL: return "LRL";
  }
  return "";
}

inline std::array<SegmentType, 3> dubins_types(DubinsWord w) {
  using enum SegmentType;
  switch (w) {
    case DubinsWord::LSL: return {Left, Straight, Left};
    case DubinsWord::RSR: return {Right, Straight, Right};
    case DubinsWord::LSR: return {Left, Straight, Right};
    case DubinsWord::RSL: return {Right, Straight, Left};
    case DubinsWord::RLR: return {Right, Left, Right};
    case DubinsWord::LRL: return {Left, Right, Left};
  }
  return {};
}

/// Normalized segment parameters (t, p, q) of one word, if it exists.
inline std::optional<std::array<double, 3>> dubins_params(DubinsWord w, double d, double alpha, double beta) {
  const double sa = std::sin(alpha);
  const double sb = std::sin(beta);
  const double ca = std::cos(alpha);
  const double cb = std::cos(beta);
  const double c_ab = std::cos(alpha - beta);
  auto root = [](double sq) -> std::optional<double> {
    if (sq < 0.0) {
      if (sq > -1e-12) return 0.0;
      return std::nullopt;
    }
    return std::sqrt(sq);
  };

  switch (w) {
    case DubinsWord::LSL: {
      const auto p = root(2.0 + d * d - 2.0 * c_ab + 2.0 * d * (sa - sb));
      if (!p) return std::nullopt;
      const double tmp = std::atan2(cb - ca, d + sa - sb);
      return std::array{mod2pi(tmp - alpha), *p, mod2pi(beta - tmp)};
    }
    case DubinsWord::RSR: {
      const auto p = root(2.0 + d * d - 2.0 * c_ab + 2.0 * d * (sb - sa));
      if (!p) return std::nullopt;
      const double tmp = std::atan2(ca - cb, d - sa + sb);
      return std::array{mod2pi(alpha - tmp), *p, mod2pi(tmp - beta)};
    }
    case DubinsWord::LSR: {
      const auto p = root(-2.0 + d * d + 2.0 * c_ab + 2.0 * d * (sa + sb));
      if (!p) return std::nullopt;
      const double tmp = std::atan2(-ca - cb, d + sa + sb) - std::atan2(-2.0, *p);
      return std::array{mod2pi(tmp - alpha), *p, mod2pi(tmp - beta)};
    }
    case DubinsWord::RSL: {
      const auto p = root(-2.0 + d * d + 2.0 * c_ab - 2.0 * d * (sa + sb));
      if (!p) return std::nullopt;
      const double tmp = std::atan2(ca + cb, d - sa - sb) - std::atan2(2.0, *p);
      return std::array{mod2pi(alpha - tmp), *p, mod2pi(beta - tmp)};
    }
    case DubinsWord::RLR: {
      const double c = clamp_unit((6.0 - d * d + 2.0 * c_ab + 2.0 * d * (sa - sb)) / 8.0);
      if (std::abs(c) > 1.0) return std::nullopt;
      const double phi = std::atan2(ca - cb, d - sa + sb);
      const double p = mod2pi(2.0 * std::numbers::pi - std::acos(c));
      const double t = mod2pi(alpha - phi + mod2pi(p / 2.0));
      return std::array{t, p, mod2pi(alpha - beta - t + p)};
    }
    case DubinsWord::LRL: {
      const double c = clamp_unit((6.0 - d * d + 2.0 * c_ab + 2.0 * d * (sb - sa)) / 8.0);
      if (std::abs(c) > 1.0) return std::nullopt;
      const double phi = std::atan2(ca - cb, d + sa - sb);
      const double p = mod2pi(2.0 * std::numbers::pi - std::acos(c));
      const double t = mod2pi(-alpha - phi + p / 2.0);
      return std::array{t, p, mod2pi(beta - alpha - t + p)};
    }
  }
  return std::nullopt;
}

inline void check_radius(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::Radius, "turning radius must be positive for curved turns; use straight turns");
  }
}

}  // namespace detail

/// A single Dubins word between two poses, or nothing when it does not exist.
inline std::optional<Turn> dubins_word(const Pose& start, const Pose& goal, double radius, DubinsWord w) {
  detail::check_radius(radius);
  const Point delta = goal.position - start.position;
  const double d = norm(delta) / radius;
  const double theta = d > 0.0 ? detail::mod2pi(std::atan2(delta.y, delta.x)) : 0.0;
  const double alpha = detail::mod2pi(start.heading - theta);
  const double beta = detail::mod2pi(goal.heading - theta);
  const auto params = detail::dubins_params(w, d, alpha, beta);
  if (!params) return std::nullopt;
  const auto types = detail::dubins_types(w);
  Turn t;
  t.start = start;
  t.goal = goal;
  t.kind = CurveKind::Dubins;
  t.name = detail::dubins_name(w);
  t.radius = radius;
  for (std::size_t i = 0; i < 3; ++i) t.word.push_back({types[i], (*params)[i] * radius});
  t.length = word_length(t.word);
  return t;
}

/// All six words; infeasible ones are empty.
inline std::array<std::optional<Turn>, 6> dubins_all_words(const Pose& start, const Pose& goal, double radius) {
  std::array<std::optional<Turn>, 6> out;
  for (std::size_t i = 0; i < kDubinsWords.size(); ++i) out[i] = dubins_word(start, goal, radius, kDubinsWords[i]);
  return out;
}

/// Shortest Dubins path. Ties keep the earlier word in LSL, RSR, LSR, RSL,
/// RLR, LRL order.
inline Turn dubins_turn(const Pose& start, const Pose& goal, double radius) {
  std::optional<Turn> best;
  for (auto& cand : dubins_all_words(start, goal, radius)) {
    if (cand && (!best || cand->length < best->length)) best = std::move(cand);
  }
  if (!best) throw Error(ErrorCode::InvalidArgument, "no Dubins word found");
  return *best;
}

}  // namespace covplan
