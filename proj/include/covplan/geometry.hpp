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

// Planar geometry kernel. All coordinates are meters in a local projected
// frame. Polygons are convex, counter-clockwise and hole-free.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "covplan/error.hpp"

namespace covplan {

/// Cross-product tolerance used for collinearity and convexity decisions.
inline constexpr double kCollinearTol = 1e-9;
/// Segments shorter than this are treated as degenerate.
inline constexpr double kSegmentTol = 1e-6;

struct Point {
  double x{0.0};
  double y{0.0};

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point a, Point b) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(b - a); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Wraps an angle into [0, 2π).
inline double normalize_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(a, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0;
  return r;
}

/// Wraps an angle into [0, π); used for undirected line orientations.
inline double normalize_half_angle(double a) {
  constexpr double pi = std::numbers::pi;
  double r = std::fmod(a, pi);
  if (r < 0.0) r += pi;
  if (r >= pi) r = 0.0;
  return r;
}

/// Smallest signed difference a - b, in (-π, π].
inline double angle_diff(double a, double b) {
  constexpr double pi = std::numbers::pi;
  double d = std::remainder(a - b, 2.0 * pi);
  if (d <= -pi) d += 2.0 * pi;
  return d;
}

struct Pose {
  Point position;
  double heading{0.0};  ///< radians, [0, 2π)

  Pose() = default;
  Pose(Point p, double h) : position(p), heading(normalize_angle(h)) {}
  Pose(double x, double y, double h) : Pose(Point{x, y}, h) {}
};

inline Point rotate(Point p, Point pivot, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const Point d = p - pivot;
  return {pivot.x + c * d.x - s * d.y, pivot.y + s * d.x + c * d.y};
}

/// Ordered polyline with at least two distinct consecutive points.
class LineString {
 public:
  LineString() = default;

  explicit LineString(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.size() < 2) {
      throw Error(ErrorCode::InvalidGeometry, "linestring needs at least two points");
    }
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (!is_finite(points_[i])) {
        throw Error(ErrorCode::InvalidGeometry, "linestring has non-finite coordinates");
      }
      if (i > 0 && distance(points_[i - 1], points_[i]) <= kCollinearTol) {
        throw Error(ErrorCode::InvalidGeometry, "linestring has repeated points");
      }
    }
  }

  LineString(Point a, Point b) : LineString(std::vector<Point>{a, b}) {}

  const std::vector<Point>& points() const { return points_; }
  Point front() const { return points_.front(); }
  Point back() const { return points_.back(); }
  bool empty() const { return points_.empty(); }

  double length() const {
    double sum = 0.0;
    for (std::size_t i = 1; i < points_.size(); ++i) sum += distance(points_[i - 1], points_[i]);
    return sum;
  }

 private:
  std::vector<Point> points_;
};

using Segment = LineString;

namespace detail {

inline double signed_ring_area(std::span<const Point> ring) {
  double a = 0.0;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = ring[i];
    const Point& q = ring[(i + 1) % n];
    a += p.x * q.y - q.x * p.y;
  }
  return 0.5 * a;
}

/// Drops the closing duplicate and consecutive near-duplicates.
inline std::vector<Point> dedupe_ring(std::span<const Point> in, double tol) {
  std::vector<Point> out;
  out.reserve(in.size());
  for (const Point& p : in) {
    if (out.empty() || distance(out.back(), p) > tol) out.push_back(p);
  }
  while (out.size() > 1 && distance(out.front(), out.back()) <= tol) out.pop_back();
  return out;
}

/// Removes vertices whose neighbouring edges are collinear.
inline std::vector<Point> drop_collinear(std::vector<Point> ring) {
  bool changed = true;
  while (changed && ring.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const Point& prev = ring[(i + ring.size() - 1) % ring.size()];
      const Point& cur = ring[i];
      const Point& next = ring[(i + 1) % ring.size()];
      const Point e1 = cur - prev;
      const Point e2 = next - cur;
      const double l1 = norm(e1);
      const double l2 = norm(e2);
      if (l1 <= kCollinearTol || l2 <= kCollinearTol ||
          (std::abs(cross(e1, e2)) / (l1 * l2) <= kCollinearTol && dot(e1, e2) > 0.0)) {
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return ring;
}

}  // namespace detail

/// Convex, counter-clockwise, hole-free polygon. The ring is stored open
/// (no repeated closing vertex); closed_ring() returns the closed form.
class Polygon {
 public:
  Polygon() = default;

  /// Validates and normalizes a ring. Accepts open or closed rings in either
  /// orientation. Throws InvalidGeometry for degenerate rings and NonConvex
  /// for rings that are not convex and simple.
  explicit Polygon(std::span<const Point> ring) {
    for (const Point& p : ring) {
      if (!is_finite(p)) throw Error(ErrorCode::InvalidGeometry, "polygon has non-finite coordinates");
    }
    std::vector<Point> pts = detail::dedupe_ring(ring, kCollinearTol);
    if (pts.size() < 3) throw Error(ErrorCode::InvalidGeometry, "polygon ring has fewer than 3 distinct vertices");
    const double signed_area = detail::signed_ring_area(pts);
    if (std::abs(signed_area) <= 0.0 || !std::isfinite(signed_area)) {
      throw Error(ErrorCode::InvalidGeometry, "polygon ring has zero area");
    }
    if (signed_area < 0.0) std::reverse(pts.begin(), pts.end());
    pts = detail::drop_collinear(std::move(pts));
    if (pts.size() < 3) throw Error(ErrorCode::InvalidGeometry, "polygon ring is degenerate");

    // Every turn must be a left turn, and the turns must wind exactly once.
    double winding = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Point e1 = pts[(i + 1) % pts.size()] - pts[i];
      const Point e2 = pts[(i + 2) % pts.size()] - pts[(i + 1) % pts.size()];
      const double c = cross(e1, e2) / (norm(e1) * norm(e2));
      if (c < -kCollinearTol) throw Error(ErrorCode::NonConvex, "polygon is not convex");
      winding += std::atan2(cross(e1, e2), dot(e1, e2));
    }
    if (std::abs(winding - 2.0 * std::numbers::pi) > 1e-6) {
      throw Error(ErrorCode::NonConvex, "polygon ring is self-intersecting");
    }
    ring_ = std::move(pts);
  }

  explicit Polygon(std::initializer_list<Point> ring)
      : Polygon(std::span<const Point>(ring.begin(), ring.size())) {}
  explicit Polygon(const std::vector<Point>& ring) : Polygon(std::span<const Point>(ring)) {}

  /// Open ring, counter-clockwise.
  const std::vector<Point>& vertices() const { return ring_; }
  std::size_t size() const { return ring_.size(); }
  bool empty() const { return ring_.empty(); }
  Point edge_start(std::size_t i) const { return ring_[i]; }
  Point edge_end(std::size_t i) const { return ring_[(i + 1) % ring_.size()]; }

  std::vector<Point> closed_ring() const {
    std::vector<Point> r = ring_;
    if (!r.empty()) r.push_back(r.front());
    return r;
  }

  /// Builds a polygon from a ring known to be convex and CCW, skipping
  /// validation. Used for rigid transforms of already-valid polygons.
  static Polygon trusted(std::vector<Point> ccw_ring) {
    Polygon p;
    p.ring_ = std::move(ccw_ring);
    return p;
  }

 private:
  std::vector<Point> ring_;
};

/// Shoelace area. Throws InvalidGeometry on a degenerate ring.
inline double area(const Polygon& poly) {
  if (poly.size() < 3) throw Error(ErrorCode::InvalidGeometry, "area of a degenerate ring");
  return std::abs(detail::signed_ring_area(poly.vertices()));
}

inline Point centroid(const Polygon& poly) {
  const auto& r = poly.vertices();
  const Point o = r.front();
  double a2 = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Point p = r[i] - o;
    const Point q = r[(i + 1) % r.size()] - o;
    const double w = cross(p, q);
    a2 += w;
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  return {o.x + cx / (3.0 * a2), o.y + cy / (3.0 * a2)};
}

struct BoundingBox {
  double min_x{0.0};
  double min_y{0.0};
  double max_x{0.0};
  double max_y{0.0};
  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
};

inline BoundingBox bounding_box(std::span<const Point> pts) {
  BoundingBox b{pts.front().x, pts.front().y, pts.front().x, pts.front().y};
  for (const Point& p : pts) {
    b.min_x = std::min(b.min_x, p.x);
    b.min_y = std::min(b.min_y, p.y);
    b.max_x = std::max(b.max_x, p.x);
    b.max_y = std::max(b.max_y, p.y);
  }
  return b;
}

inline BoundingBox bounding_box(const Polygon& poly) { return bounding_box(poly.vertices()); }

inline Polygon rotate(const Polygon& poly, Point pivot, double angle) {
  std::vector<Point> r;
  r.reserve(poly.size());
  for (const Point& p : poly.vertices()) r.push_back(rotate(p, pivot, angle));
  return Polygon::trusted(std::move(r));
}

inline Polygon translate(const Polygon& poly, Point offset) {
  std::vector<Point> r;
  r.reserve(poly.size());
  for (const Point& p : poly.vertices()) r.push_back(p + offset);
  return Polygon::trusted(std::move(r));
}

/// Uniform scaling about `pivot`; factor must be positive.
inline Polygon scale(const Polygon& poly, Point pivot, double factor) {
  if (!(factor > 0.0)) throw Error(ErrorCode::InvalidArgument, "scale factor must be positive");
  std::vector<Point> r;
  r.reserve(poly.size());
  for (const Point& p : poly.vertices()) r.push_back(pivot + factor * (p - pivot));
  return Polygon::trusted(std::move(r));
}

/// True when p lies inside or on the boundary (within tol meters).
inline bool contains(const Polygon& poly, Point p, double tol = kSegmentTol) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point a = poly.edge_start(i);
    const Point e = poly.edge_end(i) - a;
    if (cross(e, p - a) / norm(e) < -tol) return false;
  }
  return true;
}

/// Distance from p to the polygon region (0 for points inside).
inline double distance_outside(const Polygon& poly, Point p) {
  if (contains(poly, p, 0.0)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point a = poly.edge_start(i);
    const Point e = poly.edge_end(i) - a;
    const double t = std::clamp(dot(p - a, e) / dot(e, e), 0.0, 1.0);
    best = std::min(best, distance(p, a + t * e));
  }
  return best;
}

namespace detail {

/// Sutherland-Hodgman step: keeps the part of `ring` to the left of the
/// directed line through `a` with unit direction `u`, shifted left by `offset`.
inline std::vector<Point> clip_half_plane(const std::vector<Point>& ring, Point a, Point u, double offset) {
  std::vector<Point> out;
  if (ring.empty()) return out;
  out.reserve(ring.size() + 1);
  auto side = [&](Point p) { return cross(u, p - a) - offset; };
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point& p = ring[i];
    const Point& q = ring[(i + 1) % ring.size()];
    const double sp = side(p);
    const double sq = side(q);
    if (sp >= 0.0) out.push_back(p);
    if ((sp >= 0.0) != (sq >= 0.0)) {
      const double t = sp / (sp - sq);
      out.push_back(p + t * (q - p));
    }
  }
  return out;
}

/// Turns a clipped ring into a polygon, or nothing when it has collapsed.
inline std::optional<Polygon> make_convex_or_empty(const std::vector<Point>& ring) {
  std::vector<Point> pts = dedupe_ring(ring, kCollinearTol);
  if (pts.size() < 3) return std::nullopt;
  const double a = signed_ring_area(pts);
  if (!(a > 1e-12)) return std::nullopt;
  pts = drop_collinear(std::move(pts));
  if (pts.size() < 3) return std::nullopt;
  return Polygon::trusted(std::move(pts));
}

}  // namespace detail

/// Erosion of a convex polygon by `d` meters: the intersection of its edge
/// half-planes, each shifted inward by `d`. Returns nothing when the polygon
/// erodes away completely.
inline std::optional<Polygon> buffer_inward(const Polygon& poly, double d) {
  if (!(d >= 0.0) || !std::isfinite(d)) {
    throw Error(ErrorCode::InvalidArgument, "buffer distance must be finite and non-negative");
  }
  if (d == 0.0) return poly;
  std::vector<Point> ring = poly.vertices();
  for (std::size_t i = 0; i < poly.size() && !ring.empty(); ++i) {
    const Point a = poly.edge_start(i);
    const Point e = poly.edge_end(i) - a;
    ring = detail::clip_half_plane(ring, a, (1.0 / norm(e)) * e, d);
  }
  return detail::make_convex_or_empty(ring);
}

/// Intersection of two convex polygons.
inline std::optional<Polygon> intersect(const Polygon& subject, const Polygon& clip) {
  std::vector<Point> ring = subject.vertices();
  for (std::size_t i = 0; i < clip.size() && !ring.empty(); ++i) {
    const Point a = clip.edge_start(i);
    const Point e = clip.edge_end(i) - a;
    ring = detail::clip_half_plane(ring, a, (1.0 / norm(e)) * e, 0.0);
  }
  return detail::make_convex_or_empty(ring);
}

/// Chord of the infinite line through `anchor` with direction `direction`
/// (radians) inside a convex polygon. The segment runs along `direction`.
/// Chords shorter than kSegmentTol (tangencies) are reported as empty.
inline std::optional<Segment> clip_line(const Polygon& poly, Point anchor, double direction) {
  const Point u{std::cos(direction), std::sin(direction)};
  double t_lo = -std::numeric_limits<double>::infinity();
  double t_hi = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point a = poly.edge_start(i);
    const Point e = poly.edge_end(i) - a;
    const Point n = (1.0 / norm(e)) * Point{-e.y, e.x};  // inward for CCW
    const double num = dot(n, anchor - a);
    const double den = dot(n, u);
    if (std::abs(den) <= kCollinearTol) {
      if (num < 0.0) return std::nullopt;
      continue;
    }
    const double t = -num / den;
    if (den > 0.0) {
      t_lo = std::max(t_lo, t);
    } else {
      t_hi = std::min(t_hi, t);
    }
    if (t_hi - t_lo < kSegmentTol) return std::nullopt;
  }
  if (!(t_hi - t_lo >= kSegmentTol) || !std::isfinite(t_lo) || !std::isfinite(t_hi)) return std::nullopt;
  return Segment(anchor + t_lo * u, anchor + t_hi * u);
}

/// Exact area of the union of convex polygons by vertical slab decomposition.
/// Slab boundaries are all vertex abscissae plus all edge-edge crossings, so
/// inside a slab no boundary crosses another and the covered vertical length
/// is affine in x; the midpoint rule is therefore exact per slab.
inline double union_area(std::span<const Polygon> polys) {
  struct Item {
    const std::vector<Point>* ring;
    BoundingBox box;
  };
  std::vector<Item> items;
  items.reserve(polys.size());
  std::vector<double> xs;
  for (const Polygon& p : polys) {
    if (p.size() < 3) continue;
    items.push_back({&p.vertices(), bounding_box(p)});
    for (const Point& v : p.vertices()) xs.push_back(v.x);
  }
  if (items.empty()) return 0.0;

  // Proper crossings between edges of different polygons.
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      const BoundingBox& a = items[i].box;
      const BoundingBox& b = items[j].box;
      if (a.max_x < b.min_x || b.max_x < a.min_x || a.max_y < b.min_y || b.max_y < a.min_y) continue;
      const auto& ra = *items[i].ring;
      const auto& rb = *items[j].ring;
      for (std::size_t ea = 0; ea < ra.size(); ++ea) {
        const Point p = ra[ea];
        const Point r = ra[(ea + 1) % ra.size()] - p;
        for (std::size_t eb = 0; eb < rb.size(); ++eb) {
          const Point q = rb[eb];
          const Point s = rb[(eb + 1) % rb.size()] - q;
          const double den = cross(r, s);
          if (den == 0.0) continue;
          const double t = cross(q - p, s) / den;
          const double w = cross(q - p, r) / den;
          if (t > 0.0 && t < 1.0 && w > 0.0 && w < 1.0) xs.push_back(p.x + t * r.x);
        }
      }
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  double total = 0.0;
  std::vector<std::pair<double, double>> spans;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    const double x0 = xs[k];
    const double x1 = xs[k + 1];
    if (x1 - x0 <= 0.0) continue;
    const double xm = 0.5 * (x0 + x1);
    spans.clear();
    for (const Item& it : items) {
      if (!(it.box.min_x < xm && xm < it.box.max_x)) continue;
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      const auto& r = *it.ring;
      for (std::size_t e = 0; e < r.size(); ++e) {
        const Point a = r[e];
        const Point b = r[(e + 1) % r.size()];
        if ((a.x <= xm && xm < b.x) || (b.x <= xm && xm < a.x)) {
          const double y = a.y + (xm - a.x) * (b.y - a.y) / (b.x - a.x);
          lo = std::min(lo, y);
          hi = std::max(hi, y);
        }
      }
      if (hi > lo) spans.emplace_back(lo, hi);
    }
    if (spans.empty()) continue;
    std::sort(spans.begin(), spans.end());
    double covered = 0.0;
    double cur_lo = spans.front().first;
    double cur_hi = spans.front().second;
    for (std::size_t s = 1; s < spans.size(); ++s) {
      if (spans[s].first > cur_hi) {
        covered += cur_hi - cur_lo;
        cur_lo = spans[s].first;
        cur_hi = spans[s].second;
      } else {
        cur_hi = std::max(cur_hi, spans[s].second);
      }
    }
    covered += cur_hi - cur_lo;
    total += covered * (x1 - x0);
  }
  return total;
}

/// Andrew's monotone chain. Returns the CCW hull without collinear points.
inline std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i - 1] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace covplan
