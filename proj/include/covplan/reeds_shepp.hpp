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

// Shortest paths for a car that may drive forward and in reverse. Every
// candidate family (CSC, C|C|C, CC|CC, C|CSC, CSC|C, C|CSC|C) is solved in
// closed form for a base word; the remaining words follow by time-flip
// (x -> -x), reflection (y -> -y) and backwards traversal. Lengths inside
// this file are in radii until the final conversion to meters.

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "covplan/curve.hpp"
#include "covplan/dubins.hpp"
#include "covplan/geometry.hpp"

namespace covplan {

namespace detail::rs {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kZero = 10.0 * std::numeric_limits<double>::epsilon();

/// Wraps into [-π, π].
inline double wrap(double x) {
  double v = std::fmod(x, 2.0 * kPi);
  if (v < -kPi) {
    v += 2.0 * kPi;
  } else if (v > kPi) {
    v -= 2.0 * kPi;
  }
  return v;
}

inline void polar(double x, double y, double& r, double& theta) {
  r = std::sqrt(x * x + y * y);
  theta = std::atan2(y, x);
}

inline void tau_omega(double u, double v, double xi, double eta, double phi, double& tau, double& omega) {
  const double delta = wrap(u - v);
  const double a = std::sin(u) - std::sin(delta);
  const double b = std::cos(u) - std::cos(delta) - 1.0;
  const double t1 = std::atan2(eta * a - xi * b, xi * a + eta * b);
  const double t2 = 2.0 * (std::cos(delta) - std::cos(v) - std::cos(u)) + 3.0;
  tau = (t2 < 0.0) ? wrap(t1 + kPi) : wrap(t1);
  omega = wrap(tau - u + v - phi);
}

using enum SegmentType;
inline constexpr SegmentType kNone = Straight;  // unused trailing slots

struct Candidate {
  std::array<SegmentType, 5> types{};
  std::array<double, 5> lengths{};  // signed, in radii
  std::size_t count{0};
  double total() const {
    double s = 0.0;
    for (std::size_t i = 0; i < count; ++i) s += std::abs(lengths[i]);
    return s;
  }
};

// Segment patterns, indexed as used below.
inline constexpr std::array<std::array<SegmentType, 5>, 18> kTypes{{
    {Left, Right, Left, kNone, kNone},          // 0
    {Right, Left, Right, kNone, kNone},         // 1
    {Left, Right, Left, Right, kNone},          // 2
    {Right, Left, Right, Left, kNone},          // 3
    {Left, Right, Straight, Left, kNone},       // 4
    {Right, Left, Straight, Right, kNone},      // 5
    {Left, Straight, Right, Left, kNone},       // 6
    {Right, Straight, Left, Right, kNone},      // 7
    {Left, Right, Straight, Right, kNone},      // 8
    {Right, Left, Straight, Left, kNone},       // 9
    {Right, Straight, Right, Left, kNone},      // 10
    {Left, Straight, Left, Right, kNone},       // 11
    {Left, Straight, Right, kNone, kNone},      // 12
    {Right, Straight, Left, kNone, kNone},      // 13
    {Left, Straight, Left, kNone, kNone},       // 14
    {Right, Straight, Right, kNone, kNone},     // 15
    {Left, Right, Straight, Left, Right},       // 16
    {Right, Left, Straight, Right, Left},       // 17
}};

class Best {
 public:
  void offer(std::size_t type, std::initializer_list<double> lengths) {
    Candidate c;
    c.types = kTypes[type];
    for (double l : lengths) c.lengths[c.count++] = l;
    const double total = c.total();
    if (total < best_length_) {
      best_length_ = total;
      best_ = c;
    }
  }
  const Candidate& get() const { return best_; }
  double length() const { return best_length_; }

 private:
  Candidate best_;
  double best_length_{std::numeric_limits<double>::infinity()};
};

// L+ S+ L+
inline bool lp_sp_lp(double x, double y, double phi, double& t, double& u, double& v) {
  polar(x - std::sin(phi), y - 1.0 + std::cos(phi), u, t);
  if (t >= -kZero) {
    v = wrap(phi - t);
    if (v >= -kZero) return true;
  }
  return false;
}

// L+ S+ R+
inline bool lp_sp_rp(double x, double y, double phi, double& t, double& u, double& v) {
  double t1;
  double u1;
  polar(x + std::sin(phi), y - 1.0 - std::cos(phi), u1, t1);
  u1 = u1 * u1;
  if (u1 >= 4.0) {
    u = std::sqrt(u1 - 4.0);
    const double theta = std::atan2(2.0, u);
    t = wrap(t1 + theta);
    v = wrap(t - phi);
    return t >= -kZero && v >= -kZero;
  }
  return false;
}

inline void csc(double x, double y, double phi, Best& best) {
  double t;
  double u;
  double v;
  if (lp_sp_lp(x, y, phi, t, u, v)) best.offer(14, {t, u, v});
  if (lp_sp_lp(-x, y, -phi, t, u, v)) best.offer(14, {-t, -u, -v});
  if (lp_sp_lp(x, -y, -phi, t, u, v)) best.offer(15, {t, u, v});
  if (lp_sp_lp(-x, -y, phi, t, u, v)) best.offer(15, {-t, -u, -v});
  if (lp_sp_rp(x, y, phi, t, u, v)) best.offer(12, {t, u, v});
  if (lp_sp_rp(-x, y, -phi, t, u, v)) best.offer(12, {-t, -u, -v});
  if (lp_sp_rp(x, -y, -phi, t, u, v)) best.offer(13, {t, u, v});
  if (lp_sp_rp(-x, -y, phi, t, u, v)) best.offer(13, {-t, -u, -v});
}

// L+ R- L
inline bool lp_rm_l(double x, double y, double phi, double& t, double& u, double& v) {
  const double xi = x - std::sin(phi);
  const double eta = y - 1.0 + std::cos(phi);
  double u1;
  double theta;
  polar(xi, eta, u1, theta);
  if (u1 <= 4.0) {
    u = -2.0 * std::asin(0.25 * u1);
    t = wrap(theta + 0.5 * u + kPi);
    v = wrap(phi - t + u);
    return t >= -kZero && u <= kZero;
  }
  return false;
}

inline void ccc(double x, double y, double phi, Best& best) {
  double t;
  double u;
  double v;
  if (lp_rm_l(x, y, phi, t, u, v)) best.offer(0, {t, u, v});
  if (lp_rm_l(-x, y, -phi, t, u, v)) best.offer(0, {-t, -u, -v});
  if (lp_rm_l(x, -y, -phi, t, u, v)) best.offer(1, {t, u, v});
  if (lp_rm_l(-x, -y, phi, t, u, v)) best.offer(1, {-t, -u, -v});
  // backwards
  const double xb = x * std::cos(phi) + y * std::sin(phi);
  const double yb = x * std::sin(phi) - y * std::cos(phi);
  if (lp_rm_l(xb, yb, phi, t, u, v)) best.offer(0, {v, u, t});
  if (lp_rm_l(-xb, yb, -phi, t, u, v)) best.offer(0, {-v, -u, -t});
  if (lp_rm_l(xb, -yb, -phi, t, u, v)) best.offer(1, {v, u, t});
  if (lp_rm_l(-xb, -yb, phi, t, u, v)) best.offer(1, {-v, -u, -t});
}

// L+ R+ L- R-
inline bool lp_rup_lum_rm(double x, double y, double phi, double& t, double& u, double& v) {
  const double xi = x + std::sin(phi);
  const double eta = y - 1.0 - std::cos(phi);
  const double rho = 0.25 * (2.0 + std::sqrt(xi * xi + eta * eta));
  if (rho <= 1.0) {
    u = std::acos(rho);
    tau_omega(u, -u, xi, eta, phi, t, v);
    return t >= -kZero && v <= kZero;
  }
  return false;
}

// L+ R- L- R+
inline bool lp_rum_lum_rp(double x, double y, double phi, double& t, double& u, double& v) {
  const double xi = x + std::sin(phi);
  const double eta = y - 1.0 - std::cos(phi);
  const double rho = (20.0 - xi * xi - eta * eta) / 16.0;
  if (rho >= 0.0 && rho <= 1.0) {
    u = -std::acos(rho);
    if (u >= -0.5 * kPi) {
      tau_omega(u, u, xi, eta, phi, t, v);
      return t >= -kZero && v >= -kZero;
    }
  }
  return false;
}

inline void cccc(double x, double y, double phi, Best& best) {
  double t;
  double u;
  double v;
  if (lp_rup_lum_rm(x, y, phi, t, u, v)) best.offer(2, {t, u, -u, v});
  if (lp_rup_lum_rm(-x, y, -phi, t, u, v)) best.offer(2, {-t, -u, u, -v});
  if (lp_rup_lum_rm(x, -y, -phi, t, u, v)) best.offer(3, {t, u, -u, v});
  if (lp_rup_lum_rm(-x, -y, phi, t, u, v)) best.offer(3, {-t, -u, u, -v});
  if (lp_rum_lum_rp(x, y, phi, t, u, v)) best.offer(2, {t, u, u, v});
  if (lp_rum_lum_rp(-x, y, -phi, t, u, v)) best.offer(2, {-t, -u, -u, -v});
  if (lp_rum_lum_rp(x, -y, -phi, t, u, v)) best.offer(3, {t, u, u, v});
  if (lp_rum_lum_rp(-x, -y, phi, t, u, v)) best.offer(3, {-t, -u, -u, -v});
}

// L+ R-(π/2) S- L-
inline bool lp_rm_sm_lm(double x, double y, double phi, double& t, double& u, double& v) {
  const double xi = x - std::sin(phi);
  const double eta = y - 1.0 + std::cos(phi);
  double rho;
  double theta;
  polar(xi, eta, rho, theta);
  if (rho >= 2.0) {
    const double r = std::sqrt(rho * rho - 4.0);
    u = 2.0 - r;
    t = wrap(theta + std::atan2(r, -2.0));
    v = wrap(phi - 0.5 * kPi - t);
    return t >= -kZero && u <= kZero && v <= kZero;
  }
  return false;
}

// L+ R-(π/2) S- R-
inline bool lp_rm_sm_rm(double x, double y, double phi, double& t, double& u, double& v) {
  const double xi = x + std::sin(phi);
  const double eta = y - 1.0 - std::cos(phi);
  double rho;
  double theta;
  polar(-eta, xi, rho, theta);
  if (rho >= 2.0) {
    t = theta;
    u = 2.0 - rho;
    v = wrap(t + 0.5 * kPi - phi);
    return t >= -kZero && u <= kZero && v <= kZero;
  }
  return false;
}

inline void ccsc(double x, double y, double phi, Best& best) {
  constexpr double h = 0.5 * kPi;
  double t;
  double u;
  double v;
  if (lp_rm_sm_lm(x, y, phi, t, u, v)) best.offer(4, {t, -h, u, v});
  if (lp_rm_sm_lm(-x, y, -phi, t, u, v)) best.offer(4, {-t, h, -u, -v});
  if (lp_rm_sm_lm(x, -y, -phi, t, u, v)) best.offer(5, {t, -h, u, v});
  if (lp_rm_sm_lm(-x, -y, phi, t, u, v)) best.offer(5, {-t, h, -u, -v});
  if (lp_rm_sm_rm(x, y, phi, t, u, v)) best.offer(8, {t, -h, u, v});
  if (lp_rm_sm_rm(-x, y, -phi, t, u, v)) best.offer(8, {-t, h, -u, -v});
  if (lp_rm_sm_rm(x, -y, -phi, t, u, v)) best.offer(9, {t, -h, u, v});
  if (lp_rm_sm_rm(-x, -y, phi, t, u, v)) best.offer(9, {-t, h, -u, -v});
  // backwards
  const double xb = x * std::cos(phi) + y * std::sin(phi);
  const double yb = x * std::sin(phi) - y * std::cos(phi);
  if (lp_rm_sm_lm(xb, yb, phi, t, u, v)) best.offer(6, {v, u, -h, t});
  if (lp_rm_sm_lm(-xb, yb, -phi, t, u, v)) best.offer(6, {-v, -u, h, -t});
  if (lp_rm_sm_lm(xb, -yb, -phi, t, u, v)) best.offer(7, {v, u, -h, t});
  if (lp_rm_sm_lm(-xb, -yb, phi, t, u, v)) best.offer(7, {-v, -u, h, -t});
  if (lp_rm_sm_rm(xb, yb, phi, t, u, v)) best.offer(10, {v, u, -h, t});
  if (lp_rm_sm_rm(-xb, yb, -phi, t, u, v)) best.offer(10, {-v, -u, h, -t});
  if (lp_rm_sm_rm(xb, -yb, -phi, t, u, v)) best.offer(11, {v, u, -h, t});
  if (lp_rm_sm_rm(-xb, -yb, phi, t, u, v)) best.offer(11, {-v, -u, h, -t});
}

// L+ R-(π/2) S- L-(π/2) R+
inline bool lp_rm_slm_rp(double x, double y, double phi, double& t, double& u, double& v) {
  const double xi = x + std::sin(phi);
  const double eta = y - 1.0 - std::cos(phi);
  double rho;
  double theta;
  polar(xi, eta, rho, theta);
  if (rho >= 2.0) {
    u = 4.0 - std::sqrt(rho * rho - 4.0);
    if (u <= kZero) {
      t = wrap(std::atan2((4.0 - u) * xi - 2.0 * eta, -2.0 * xi + (u - 4.0) * eta));
      v = wrap(t - phi);
      return t >= -kZero && v >= -kZero;
    }
  }
  return false;
}

inline void ccscc(double x, double y, double phi, Best& best) {
  constexpr double h = 0.5 * kPi;
  double t;
  double u;
  double v;
  if (lp_rm_slm_rp(x, y, phi, t, u, v)) best.offer(16, {t, -h, u, -h, v});
  if (lp_rm_slm_rp(-x, y, -phi, t, u, v)) best.offer(16, {-t, h, -u, h, -v});
  if (lp_rm_slm_rp(x, -y, -phi, t, u, v)) best.offer(17, {t, -h, u, -h, v});
  if (lp_rm_slm_rp(-x, -y, phi, t, u, v)) best.offer(17, {-t, h, -u, h, -v});
}

inline char letter(SegmentType t) {
  switch (t) {
    case Left: return 'L';
    case Right: return 'R';
    case Straight: return 'S';
  }
  return '?';
}

}  // namespace detail::rs

/// Shortest Reeds-Shepp path between two poses.
inline Turn reeds_shepp_turn(const Pose& start, const Pose& goal, double radius) {
  detail::check_radius(radius);
  const Point delta = goal.position - start.position;
  const double c = std::cos(start.heading);
  const double s = std::sin(start.heading);
  const double x = (c * delta.x + s * delta.y) / radius;
  const double y = (-s * delta.x + c * delta.y) / radius;
  const double phi = goal.heading - start.heading;

  detail::rs::Best best;
  detail::rs::csc(x, y, phi, best);
  detail::rs::ccc(x, y, phi, best);
  detail::rs::cccc(x, y, phi, best);
  detail::rs::ccsc(x, y, phi, best);
  detail::rs::ccscc(x, y, phi, best);

  Turn t;
  t.start = start;
  t.goal = goal;
  t.kind = CurveKind::ReedsShepp;
  t.radius = radius;
  const auto& cand = best.get();
  for (std::size_t i = 0; i < cand.count; ++i) {
    t.name += detail::rs::letter(cand.types[i]);
    t.name += cand.lengths[i] < 0.0 ? '-' : '+';
    t.word.push_back({cand.types[i], cand.lengths[i] * radius});
  }
  t.length = word_length(t.word);
  return t;
}

}  // namespace covplan
