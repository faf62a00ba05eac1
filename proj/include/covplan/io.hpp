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

// Field ingestion (WKT, GeoJSON) and path export (GeoJSON, CSV, SVG).

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "covplan/error.hpp"
#include "covplan/geometry.hpp"
#include "covplan/path.hpp"
#include "covplan/swath.hpp"

namespace covplan {

/// Origin of a local east/north tangent frame for geographic input.
struct GeoOrigin {
  double lon_deg{0.0};
  double lat_deg{0.0};
};

enum class FieldFormat { Wkt, GeoJson };

namespace detail {

inline std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

class WktReader {
 public:
  explicit WktReader(std::string_view text) : s_(text) {}

  std::vector<Point> first_ring() {
    const std::string tag = word();
    const std::string dims = word();
    if (!dims.empty() && dims != "Z" && dims != "M" && dims != "ZM") {
      throw Error(ErrorCode::Parse, "WKT: unexpected '" + dims + "' after " + tag);
    }
    if (tag == "POLYGON") {
      expect('(');
      return ring();
    }
    if (tag == "MULTIPOLYGON") {
      expect('(');
      expect('(');
      return ring();
    }
    throw Error(ErrorCode::Parse, "WKT: expected POLYGON or MULTIPOLYGON, got '" + tag + "'");
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  std::string word() {
    skip();
    std::string w;
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) {
      w += static_cast<char>(std::toupper(static_cast<unsigned char>(s_[i_++])));
    }
    return w;
  }
  void expect(char c) {
    skip();
    if (i_ >= s_.size() || s_[i_] != c) {
      throw Error(ErrorCode::Parse, std::string("WKT: expected '") + c + "' at offset " + std::to_string(i_));
    }
    ++i_;
  }
  double number() {
    skip();
    double v = 0.0;
    const auto [end, ec] = std::from_chars(s_.data() + i_, s_.data() + s_.size(), v);
    if (ec != std::errc{}) throw Error(ErrorCode::Parse, "WKT: expected number at offset " + std::to_string(i_));
    i_ = static_cast<std::size_t>(end - s_.data());
    return v;
  }
  std::vector<Point> ring() {
    expect('(');
    std::vector<Point> pts;
    for (;;) {
      const double x = number();
      const double y = number();
      skip();
      // Optional Z / M ordinates are ignored.
      while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '-' || s_[i_] == '+' ||
                                s_[i_] == '.')) {
        number();
        skip();
      }
      pts.push_back({x, y});
      skip();
      if (i_ < s_.size() && s_[i_] == ',') {
        ++i_;
        continue;
      }
      expect(')');
      break;
    }
    return pts;
  }

  std::string_view s_;
  std::size_t i_{0};
};

inline std::vector<Point> geojson_first_ring(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type")) throw Error(ErrorCode::Parse, "GeoJSON: missing 'type'");
  const std::string type = j.at("type").get<std::string>();
  if (type == "FeatureCollection") {
    for (const auto& f : j.at("features")) {
      const auto& g = f.at("geometry");
      if (g.is_object() && (g.value("type", "") == "Polygon" || g.value("type", "") == "MultiPolygon")) {
        return geojson_first_ring(g);
      }
    }
    throw Error(ErrorCode::Parse, "GeoJSON: no polygon feature");
  }
  if (type == "Feature") return geojson_first_ring(j.at("geometry"));
  const nlohmann::json* rings = nullptr;
  if (type == "Polygon") {
    rings = &j.at("coordinates");
  } else if (type == "MultiPolygon") {
    rings = &j.at("coordinates").at(0);
  } else {
    throw Error(ErrorCode::Parse, "GeoJSON: unsupported geometry type '" + type + "'");
  }
  std::vector<Point> pts;
  for (const auto& c : rings->at(0)) pts.push_back({c.at(0).get<double>(), c.at(1).get<double>()});
  return pts;
}

}  // namespace detail

inline std::vector<Point> parse_wkt_ring(std::string_view text) {
  return detail::WktReader(text).first_ring();
}

inline std::vector<Point> parse_geojson_ring(std::string_view text) {
  try {
    return detail::geojson_first_ring(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("GeoJSON: ") + e.what());
  }
}

/// Rings whose coordinates all fit in lon/lat range and span less than one
/// unit are taken to be geographic degrees; no metric field is that small.
inline bool looks_geographic(const std::vector<Point>& ring) {
  if (ring.empty()) return false;
  const BoundingBox b = bounding_box(ring);
  const bool in_range = b.min_x >= -180.0 && b.max_x <= 180.0 && b.min_y >= -90.0 && b.max_y <= 90.0;
  return in_range && std::hypot(b.width(), b.height()) < 1.0;
}

/// Equirectangular projection into a local metric frame about `origin`.
inline std::vector<Point> project_local(const std::vector<Point>& lonlat, const GeoOrigin& origin) {
  constexpr double earth_radius = 6371008.8;
  constexpr double deg = std::numbers::pi / 180.0;
  const double k = std::cos(origin.lat_deg * deg);
  std::vector<Point> out;
  out.reserve(lonlat.size());
  for (const Point& p : lonlat) {
    out.push_back({earth_radius * k * (p.x - origin.lon_deg) * deg, earth_radius * (p.y - origin.lat_deg) * deg});
  }
  return out;
}

/// Parses a field boundary. Geographic coordinates are rejected unless an
/// origin for the local projection is supplied.
inline Polygon parse_field(std::string_view text, FieldFormat format, const std::optional<GeoOrigin>& origin = {}) {
  std::vector<Point> ring = format == FieldFormat::Wkt ? parse_wkt_ring(text) : parse_geojson_ring(text);
  if (origin) {
    ring = project_local(ring, *origin);
  } else if (looks_geographic(ring)) {
    throw Error(ErrorCode::Parse, "field looks geographic (lon/lat); supply a projection origin");
  }
  return Polygon(ring);
}

inline FieldFormat format_from_path(const std::string& path) {
  const std::string p = detail::lower(path);
  auto ends_with = [&](std::string_view suf) {
    return p.size() >= suf.size() && p.compare(p.size() - suf.size(), suf.size(), suf) == 0;
  };
  if (ends_with(".geojson") || ends_with(".json")) return FieldFormat::GeoJson;
  if (ends_with(".wkt") || ends_with(".txt")) return FieldFormat::Wkt;
  throw Error(ErrorCode::Parse, "cannot infer field format from '" + path + "'");
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Polygon read_field_file(const std::string& path, const std::optional<GeoOrigin>& origin = {}) {
  return parse_field(read_text_file(path), format_from_path(path), origin);
}

/// Path vertices for export: straight pieces contribute their endpoints,
/// arcs are densified until the chord error falls below `chord_tol` meters.
inline std::vector<Point> path_polyline(const Path& path, double chord_tol = 1e-7) {
  std::vector<Point> out;
  auto push = [&](Point p) {
    if (out.empty() || distance(out.back(), p) > 0.0) out.push_back(p);
  };
  for (const PathElement& el : path.elements) {
    Pose at = el.start;
    push(at.position);
    for (const CurveSegment& seg : el.word) {
      if (seg.type == SegmentType::Straight || path.radius <= 0.0) {
        at = advance(at, seg.type, seg.length, path.radius);
        push(at.position);
        continue;
      }
      // Sagitta r(1 - cos(θ/2)) ≈ rθ²/8 must stay below chord_tol.
      const double max_angle = std::sqrt(8.0 * chord_tol / path.radius);
      const double angle = std::abs(seg.length) / path.radius;
      const auto n = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(angle / max_angle)));
      for (std::size_t i = 1; i <= n; ++i) {
        push(advance(at, seg.type, seg.length * static_cast<double>(i) / static_cast<double>(n), path.radius).position);
      }
      at = advance(at, seg.type, seg.length, path.radius);
    }
  }
  return out;
}

inline nlohmann::json path_to_geojson(const Path& path, double chord_tol = 1e-7) {
  nlohmann::json coords = nlohmann::json::array();
  for (const Point& p : path_polyline(path, chord_tol)) coords.push_back({p.x, p.y});
  return {{"type", "Feature"},
          {"geometry", {{"type", "LineString"}, {"coordinates", coords}}},
          {"properties",
           {{"total_length_m", path.total_length},
            {"turn_radius_m", path.radius},
            {"n_swaths", path.swath_spans.size()},
            {"n_turns", path.turn_spans.size()}}}};
}

/// Length of the LineString in a path GeoJSON document.
inline double geojson_linestring_length(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const auto& g = j.at("type") == "Feature" ? j.at("geometry") : j;
    if (g.at("type") != "LineString") throw Error(ErrorCode::Parse, "GeoJSON: expected a LineString");
    double len = 0.0;
    const auto& c = g.at("coordinates");
    for (std::size_t i = 1; i < c.size(); ++i) {
      len += std::hypot(c[i][0].get<double>() - c[i - 1][0].get<double>(),
                        c[i][1].get<double>() - c[i - 1][1].get<double>());
    }
    return len;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("GeoJSON: ") + e.what());
  }
}

inline void write_states_csv(std::ostream& os, const Path& path) {
  os << "x,y,heading,motion,curvature\n";
  char buf[160];
  for (const PathState& s : path.states) {
    std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.9f,%s,%.9f\n", s.pose.position.x, s.pose.position.y, s.pose.heading,
                  s.motion == Motion::Forward ? "forward" : "reverse", s.curvature);
    os << buf;
  }
}

/// Field, mainland, swath centerlines and path in one SVG (y axis up).
inline std::string plan_svg(const Polygon& field, const std::optional<Polygon>& mainland, const SwathSet& swaths,
                            const Path& path) {
  const BoundingBox box = bounding_box(field);
  const double margin = 0.05 * std::max(box.width(), box.height()) + 1.0;
  const double w = box.width() + 2.0 * margin;
  const double h = box.height() + 2.0 * margin;
  const double px = 800.0 / std::max(w, h);
  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return std::string(buf);
  };
  auto X = [&](double x) { return fmt((x - box.min_x + margin) * px); };
  auto Y = [&](double y) { return fmt((box.max_y + margin - y) * px); };
  auto points = [&](const std::vector<Point>& pts) {
    std::string s;
    for (const Point& p : pts) s += X(p.x) + "," + Y(p.y) + " ";
    return s;
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w * px) << "\" height=\"" << fmt(h * px)
     << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<polygon points=\"" << points(field.vertices()) << "\" fill=\"#c7e9c0\" stroke=\"#238b45\"/>\n";
  if (mainland) {
    os << "<polygon points=\"" << points(mainland->vertices()) << "\" fill=\"#fff7bc\" stroke=\"#d95f0e\"/>\n";
  }
  for (const Swath& s : swaths.swaths) {
    os << "<line x1=\"" << X(s.centerline.front().x) << "\" y1=\"" << Y(s.centerline.front().y) << "\" x2=\""
       << X(s.centerline.back().x) << "\" y2=\"" << Y(s.centerline.back().y)
       << "\" stroke=\"#bbbbbb\" stroke-width=\"" << fmt(s.width * px) << "\" stroke-opacity=\"0.5\"/>\n";
  }
  os << "<polyline points=\"" << points(path_polyline(path, 1e-3)) << "\" fill=\"none\" stroke=\"#08519c\" stroke-width=\"1\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace covplan
