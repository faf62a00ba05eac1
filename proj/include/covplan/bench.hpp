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

// Desk-scale experiment harness: synthetic convex fields, the
// objective x pattern x curve matrix and the computation-time sweep.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "covplan/curve.hpp"
#include "covplan/error.hpp"
#include "covplan/geometry.hpp"
#include "covplan/headland.hpp"
#include "covplan/path.hpp"
#include "covplan/pipeline.hpp"
#include "covplan/route.hpp"
#include "covplan/swath.hpp"

namespace covplan {

struct FieldCase {
  std::string name;
  Polygon boundary;
  double target_area{0.0};
};

/// Uniform scaling about the centroid so that the area equals `target`.
inline Polygon rescale_to_area(const Polygon& poly, double target) {
  if (!(target > 0.0) || !std::isfinite(target)) {
    throw Error(ErrorCode::InvalidArgument, "target area must be positive");
  }
  const double factor = std::sqrt(target / area(poly));
  if (factor == 1.0) return poly;
  return scale(poly, centroid(poly), factor);
}

namespace detail {

/// Uniform double in [0, 1) from the top 53 bits, identical on every
/// standard library (std::uniform_real_distribution is not).
inline double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * unit_uniform(rng); }

}  // namespace detail

/// `n` reproducible convex fields: hulls of 8-30 uniform points in a box of
/// aspect ratio 1-6, randomly rotated and rescaled to `target_area`.
inline std::vector<FieldCase> generate_convex_fields(std::size_t n, std::uint64_t seed, double target_area = 10000.0) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "need at least one field");
  std::mt19937_64 rng(seed);
  std::vector<FieldCase> out;
  out.reserve(n);
  while (out.size() < n) {
    const auto count = 8 + static_cast<std::size_t>(detail::unit_uniform(rng) * 23.0);
    const double aspect = detail::uniform(rng, 1.0, 6.0);
    const double rotation = detail::uniform(rng, 0.0, std::numbers::pi);
    std::vector<Point> pts(count);
    for (Point& p : pts) p = {detail::uniform(rng, 0.0, aspect), detail::uniform(rng, 0.0, 1.0)};
    std::vector<Point> hull = convex_hull(std::move(pts));
    if (hull.size() < 3) continue;
    for (Point& p : hull) p = rotate(p, {0.0, 0.0}, rotation);
    try {
      Polygon poly(hull);
      char name[32];
      std::snprintf(name, sizeof(name), "synth_%03zu", out.size());
      out.push_back({name, rescale_to_area(poly, target_area), target_area});
    } catch (const Error&) {
      continue;  // numerically degenerate hull, draw again
    }
  }
  return out;
}

struct MatrixAxes {
  std::vector<SwathObjective> objectives{SwathObjective::SwathLength, SwathObjective::SwathCount,
                                         SwathObjective::FieldCoverage};
  std::vector<Pattern> patterns{Pattern::boustrophedon(), Pattern::snake(), Pattern::spiral(6)};
  std::vector<CurveKind> curves{CurveKind::Dubins, CurveKind::ReedsShepp};
};

struct MatrixRow {
  std::string field;
  SwathObjective objective{};
  std::string pattern;
  CurveKind curve{};
  double angle{0.0};
  std::size_t n_swaths{0};
  double coverage{0.0};
  double l0{0.0};
  double lr{0.0};
  double overhead{0.0};
  double mainland_area{0.0};
  StageTimings timings;
  std::string status{"ok"};
};

struct MatrixSettings {
  HeadlandWidth headland{HeadlandWidth::multiple(3.0)};
  double angle_step{std::numbers::pi / 180.0};
  double sample_step{0.1};
  unsigned threads{0};
};

/// One row per field x objective x pattern x curve. Headlands, swaths and
/// routes are computed once and shared by the rows that use them; a failure
/// is recorded in the row status and the run continues.
inline std::vector<MatrixRow> run_matrix(const std::vector<FieldCase>& fields, const Robot& robot,
                                         const MatrixAxes& axes, const MatrixSettings& settings = {}) {
  if (fields.empty() || axes.objectives.empty() || axes.patterns.empty() || axes.curves.empty()) {
    throw Error(ErrorCode::InvalidArgument, "benchmark axes must be non-empty");
  }
  using clock = std::chrono::steady_clock;
  auto seconds = [](clock::time_point a, clock::time_point b) { return std::chrono::duration<double>(b - a).count(); };

  std::vector<MatrixRow> rows;
  rows.reserve(fields.size() * axes.objectives.size() * axes.patterns.size() * axes.curves.size());
  for (const FieldCase& fc : fields) {
    const auto th0 = clock::now();
    std::optional<HeadlandResult> hl;
    std::string hl_error;
    try {
      hl = constant_headland(fc.boundary, settings.headland.resolve(robot));
      if (!hl->mainland) hl_error = std::string(error_code_name(ErrorCode::EmptyMainland));
    } catch (const Error& e) {
      hl_error = std::string(error_code_name(e.code()));
    }
    const double t_headland = seconds(th0, clock::now());

    for (SwathObjective objective : axes.objectives) {
      MatrixRow base;
      base.field = fc.name;
      base.objective = objective;
      base.timings.headland_s = t_headland;
      std::optional<AngleSearchResult> search;
      std::string sw_error = hl_error;
      if (sw_error.empty()) {
        base.mainland_area = area(*hl->mainland);
        const auto ts0 = clock::now();
        try {
          search = brute_force_angle(*hl->mainland, robot, objective, settings.angle_step, settings.threads);
          if (search->best.empty()) sw_error = std::string(error_code_name(ErrorCode::NoSwaths));
        } catch (const Error& e) {
          sw_error = std::string(error_code_name(e.code()));
        }
        base.timings.swath_s = seconds(ts0, clock::now());
        if (search) {
          base.angle = search->best.angle;
          base.n_swaths = search->best.size();
          base.coverage = objective == SwathObjective::FieldCoverage
                              ? search->value
                              : obj_field_coverage(search->best, *hl->mainland);
        }
      }

      for (const Pattern& pattern : axes.patterns) {
        MatrixRow prow = base;
        prow.pattern = pattern_name(pattern);
        std::optional<Route> route;
        std::string rt_error = sw_error;
        if (rt_error.empty()) {
          const auto tr0 = clock::now();
          try {
            route = plan_route(search->best, pattern);
            prow.l0 = route_length_inplace(*route);
          } catch (const Error& e) {
            rt_error = std::string(error_code_name(e.code()));
          }
          prow.timings.route_s = seconds(tr0, clock::now());
        }

        for (CurveKind curve : axes.curves) {
          MatrixRow row = prow;
          row.curve = curve;
          if (!rt_error.empty()) {
            row.status = rt_error;
            rows.push_back(std::move(row));
            continue;
          }
          const auto tp0 = clock::now();
          try {
            const Path path = plan_path(*route, robot, curve, settings.sample_step);
            row.lr = path.total_length;
            row.overhead = turn_overhead(row.l0, row.lr);
          } catch (const Error& e) {
            row.status = std::string(error_code_name(e.code()));
          }
          row.timings.path_s = seconds(tp0, clock::now());
          row.timings.total_s =
              row.timings.headland_s + row.timings.swath_s + row.timings.route_s + row.timings.path_s;
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

inline constexpr const char* kMatrixCsvHeader =
    "field,objective,pattern,curve,angle_rad,n_swaths,coverage,L0_m,LR_m,overhead,"
    "t_headland_s,t_swath_s,t_route_s,t_path_s,status";

inline std::string format_matrix_row(const MatrixRow& r) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), "%s,%s,%s,%s,%.9f,%zu,%.9f,%.6f,%.6f,%.9f,%.6f,%.6f,%.6f,%.6f,%s",
                r.field.c_str(), std::string(objective_name(r.objective)).c_str(), r.pattern.c_str(),
                std::string(curve_name(r.curve)).c_str(), r.angle, r.n_swaths, r.coverage, r.l0, r.lr, r.overhead,
                r.timings.headland_s, r.timings.swath_s, r.timings.route_s, r.timings.path_s, r.status.c_str());
  return buf;
}

inline void write_matrix_csv(std::ostream& os, const std::vector<MatrixRow>& rows) {
  os << kMatrixCsvHeader << '\n';
  for (const MatrixRow& r : rows) os << format_matrix_row(r) << '\n';
}

namespace detail {

inline std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

inline const char* curve_color(CurveKind k) {
  switch (k) {
    case CurveKind::Straight: return "#555555";
    case CurveKind::Dubins: return "#d62728";
    case CurveKind::ReedsShepp: return "#1f77b4";
  }
  return "#000000";
}

}  // namespace detail

/// Scatter of L_R against L_0 for one (objective, pattern) cell, with the
/// 1:1 reference line. Returns the SVG document.
inline std::string scatter_svg(const std::vector<MatrixRow>& rows, SwathObjective objective,
                               const std::string& pattern) {
  constexpr double size = 400.0;
  constexpr double margin = 50.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  std::set<CurveKind> curves;
  for (const MatrixRow& r : rows) {
    if (r.objective != objective || r.pattern != pattern || r.status != "ok") continue;
    lo = std::min({lo, r.l0, r.lr});
    hi = std::max({hi, r.l0, r.lr});
    curves.insert(r.curve);
  }
  if (!(hi > lo)) {
    lo = 0.0;
    hi = 1.0;
  }
  const double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;
  auto sx = [&](double v) { return margin + (v - lo) / (hi - lo) * size; };
  auto sy = [&](double v) { return margin + size - (v - lo) / (hi - lo) * size; };

  std::ostringstream os;
  const double total = size + 2.0 * margin;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total << "\" height=\"" << total << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << margin << "\" y=\"30\" font-size=\"14\">" << objective_name(objective) << " / " << pattern
     << "</text>\n";
  os << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << size << "\" height=\"" << size
     << "\" fill=\"none\" stroke=\"#999\"/>\n";
  os << "<line x1=\"" << sx(lo) << "\" y1=\"" << sy(lo) << "\" x2=\"" << sx(hi) << "\" y2=\"" << sy(hi)
     << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << margin + size / 2 - 20 << "\" y=\"" << total - 12 << "\" font-size=\"12\">L0 [m]</text>\n";
  os << "<text x=\"12\" y=\"" << margin + size / 2 << "\" font-size=\"12\">LR [m]</text>\n";
  os << "<text x=\"" << margin << "\" y=\"" << total - 28 << "\" font-size=\"10\">" << detail::svg_num(lo)
     << "</text>\n";
  os << "<text x=\"" << margin + size - 40 << "\" y=\"" << total - 28 << "\" font-size=\"10\">"
     << detail::svg_num(hi) << "</text>\n";
  for (const MatrixRow& r : rows) {
    if (r.objective != objective || r.pattern != pattern || r.status != "ok") continue;
    os << "<circle cx=\"" << detail::svg_num(sx(r.l0)) << "\" cy=\"" << detail::svg_num(sy(r.lr))
       << "\" r=\"3\" fill=\"" << detail::curve_color(r.curve) << "\" fill-opacity=\"0.7\"/>\n";
  }
  double legend_y = margin + 15.0;
  for (CurveKind k : curves) {
    os << "<circle cx=\"" << margin + 10 << "\" cy=\"" << legend_y << "\" r=\"4\" fill=\"" << detail::curve_color(k)
       << "\"/><text x=\"" << margin + 20 << "\" y=\"" << legend_y + 4 << "\" font-size=\"11\">" << curve_name(k)
       << "</text>\n";
    legend_y += 16.0;
  }
  os << "</svg>\n";
  return os.str();
}

/// Least-squares fit y = c0 * x + c1.
struct TimingModelFit {
  double c0{0.0};
  double c1{0.0};
  double r_squared{0.0};
};

inline TimingModelFit fit_linear(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw Error(ErrorCode::InvalidArgument, "fit needs paired samples");
  const auto n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx <= 0.0) throw Error(ErrorCode::InvalidArgument, "fit needs distinct regressor values");
  TimingModelFit f;
  f.c0 = sxy / sxx;
  f.c1 = my - f.c0 * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - (f.c0 * x[i] + f.c1);
    ss_res += e * e;
  }
  f.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  return f;
}

enum class TimingModel { SqrtArea, LinearArea };

struct TimingPoint {
  double field_area{0.0};
  double mainland_area{0.0};
  double regressor{0.0};  ///< sqrt(A)/R_w or A, per model
  double seconds{0.0};    ///< median over repetitions
};

struct TimingSweep {
  SwathObjective objective{};
  TimingModel model{TimingModel::SqrtArea};
  std::vector<TimingPoint> points;
  TimingModelFit fit;
};

/// Swath count and swath length scale with the number of swaths, i.e. with
/// sqrt(A)/R_w; field coverage grows linearly in A.
inline TimingModel timing_model_for(SwathObjective o) {
  return o == SwathObjective::FieldCoverage ? TimingModel::LinearArea : TimingModel::SqrtArea;
}

struct TimingSettings {
  HeadlandWidth headland{HeadlandWidth::multiple(3.0)};
  Pattern pattern{Pattern::boustrophedon()};
  CurveKind curve{CurveKind::Dubins};
  double angle_step{std::numbers::pi / 180.0};
  double sample_step{0.1};
  unsigned threads{0};
  int repetitions{5};
};

/// Times plan() on square fields of the given areas (square meters) and fits
/// the computation-time model for the objective. Runs serially.
inline TimingSweep run_timing_sweep(const std::vector<double>& areas, SwathObjective objective, const Robot& robot,
                                    const TimingSettings& settings = {}) {
  std::set<double> distinct(areas.begin(), areas.end());
  if (distinct.size() < 4) throw Error(ErrorCode::InvalidArgument, "timing sweep needs at least 4 distinct areas");
  if (settings.repetitions < 1) throw Error(ErrorCode::InvalidArgument, "repetitions must be at least 1");

  TimingSweep sweep;
  sweep.objective = objective;
  sweep.model = timing_model_for(objective);
  PlanConfig cfg;
  cfg.headland = settings.headland;
  cfg.objective = objective;
  cfg.angle_step = settings.angle_step;
  cfg.pattern = settings.pattern;
  cfg.curve = settings.curve;
  cfg.sample_step = settings.sample_step;
  cfg.threads = settings.threads;

  std::vector<double> xs;
  std::vector<double> ys;
  for (double a : areas) {
    const double side = std::sqrt(a);
    const Polygon field{{0.0, 0.0}, {side, 0.0}, {side, side}, {0.0, side}};
    std::vector<double> samples;
    TimingPoint pt;
    pt.field_area = a;
    for (int rep = 0; rep < settings.repetitions; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      const PlanReport report = plan(field, robot, cfg);
      const auto t1 = std::chrono::steady_clock::now();
      samples.push_back(std::chrono::duration<double>(t1 - t0).count());
      pt.mainland_area = area(*report.headland.mainland);
    }
    std::sort(samples.begin(), samples.end());
    pt.seconds = samples[samples.size() / 2];
    pt.regressor = sweep.model == TimingModel::SqrtArea ? std::sqrt(pt.mainland_area) / robot.op_width
                                                        : pt.mainland_area;
    xs.push_back(pt.regressor);
    ys.push_back(pt.seconds);
    sweep.points.push_back(pt);
  }
  sweep.fit = fit_linear(xs, ys);
  return sweep;
}

}  // namespace covplan
