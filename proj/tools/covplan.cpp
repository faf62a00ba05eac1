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

// covplan: plan a coverage path for one field, or run the benchmark matrix
// and timing sweep over many fields.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "covplan/covplan.hpp"

namespace fs = std::filesystem;
using namespace covplan;

namespace {

enum ExitCode { kOk = 0, kInputError = 2, kScopeError = 3, kPlanningError = 4 };

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonConvex: return kScopeError;
    case ErrorCode::EmptyMainland:
    case ErrorCode::NoSwaths: return kPlanningError;
    default: return kInputError;
  }
}

struct PlanOptions {
  std::string field;
  double op_width{2.5};
  double robot_width{0.0};
  double radius{2.1};
  double headland{0.0};
  double headland_multiple{3.0};
  std::string objective{"swath-count"};
  std::string pattern{"boustrophedon"};
  std::size_t spiral_bulk{6};
  std::vector<std::size_t> custom_order;
  std::string curve{"dubins"};
  double angle_step_deg{1.0};
  double sample_step{0.1};
  unsigned threads{0};
  std::vector<double> origin;
  std::string out_dir{"."};
};

struct BenchOptions {
  std::uint64_t seed{7};
  std::size_t n_fields{38};
  double area{10000.0};
  std::string fields_dir;
  std::vector<std::string> objectives{"swath-length", "swath-count", "field-coverage"};
  std::vector<std::string> patterns{"boustrophedon", "snake", "spiral"};
  std::vector<std::string> curves{"dubins", "reeds-shepp"};
  std::size_t spiral_bulk{6};
  double op_width{2.5};
  double radius{2.1};
  double headland_multiple{3.0};
  double angle_step_deg{1.0};
  double sample_step{0.1};
  unsigned threads{0};
  std::string out_dir{"bench_out"};
  bool svg{true};
  bool timing{false};
  std::string objective{"swath-count"};
  std::vector<double> areas{2500.0, 5000.0, 10000.0, 20000.0, 40000.0};
  int repetitions{5};
};

Pattern parse_pattern(const std::string& name, std::size_t bulk, const std::vector<std::size_t>& order) {
  if (name == "boustrophedon") return Pattern::boustrophedon();
  if (name == "snake") return Pattern::snake();
  if (name == "spiral") return Pattern::spiral(bulk);
  if (name == "custom") {
    if (order.empty()) throw Error(ErrorCode::InvalidRoute, "--pattern custom needs --custom-order");
    return Pattern::custom(order);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown pattern '" + name + "'");
}

Robot make_robot(double op_width, double robot_width, double radius) {
  Robot r;
  r.op_width = op_width;
  r.robot_width = robot_width > 0.0 ? robot_width : op_width;
  r.min_turn_radius = radius;
  r.validate();
  return r;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + p.string() + "'");
  out << text;
  if (!out) throw Error(ErrorCode::Io, "failed writing '" + p.string() + "'");
}

void ensure_dir(const fs::path& p) {
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create '" + p.string() + "': " + ec.message());
}

int cmd_plan(const PlanOptions& o) {
  std::optional<GeoOrigin> origin;
  if (!o.origin.empty()) origin = GeoOrigin{o.origin[0], o.origin[1]};
  const Polygon field = read_field_file(o.field, origin);
  const Robot robot = make_robot(o.op_width, o.robot_width, o.radius);

  PlanConfig cfg;
  cfg.headland = o.headland > 0.0 ? HeadlandWidth::meters(o.headland) : HeadlandWidth::multiple(o.headland_multiple);
  cfg.objective = parse_objective(o.objective);
  cfg.angle_step = o.angle_step_deg * std::numbers::pi / 180.0;
  cfg.pattern = parse_pattern(o.pattern, o.spiral_bulk, o.custom_order);
  cfg.curve = parse_curve(o.curve);
  cfg.sample_step = o.sample_step;
  cfg.threads = o.threads;
  const PlanReport r = plan(field, robot, cfg);

  const fs::path dir(o.out_dir);
  ensure_dir(dir);
  write_file(dir / "path.geojson", path_to_geojson(r.path).dump(2) + "\n");
  std::ostringstream csv;
  write_states_csv(csv, r.path);
  write_file(dir / "states.csv", csv.str());
  write_file(dir / "plan.svg", plan_svg(field, r.headland.mainland, r.swaths, r.path));

  std::printf("field          %s\n", o.field.c_str());
  std::printf("field_area_m2  %.3f\n", area(field));
  std::printf("headland_m     %.3f\n", r.headland.headland_width);
  std::printf("area_ratio     %.6f\n", r.headland.area_ratio);
  std::printf("objective      %s = %.6f\n", std::string(objective_name(cfg.objective)).c_str(), r.swath_objective);
  std::printf("angle_rad      %.6f\n", r.swaths.angle);
  std::printf("angle_deg      %.3f\n", r.swaths.angle * 180.0 / std::numbers::pi);
  std::printf("n_swaths       %zu\n", r.swaths.size());
  std::printf("pattern        %s\n", pattern_name(cfg.pattern).c_str());
  std::printf("curve          %s\n", std::string(curve_name(cfg.curve)).c_str());
  std::printf("L0_m           %.6f\n", r.l0);
  std::printf("LR_m           %.6f\n", r.lr);
  std::printf("overhead       %.6f\n", r.turn_overhead);
  std::printf("max_excursion  %.6f\n", r.max_excursion);
  std::printf("n_states       %zu\n", r.path.states.size());
  std::printf("t_headland_s   %.6f\n", r.timings.headland_s);
  std::printf("t_swath_s      %.6f\n", r.timings.swath_s);
  std::printf("t_route_s      %.6f\n", r.timings.route_s);
  std::printf("t_path_s       %.6f\n", r.timings.path_s);
  std::printf("t_total_s      %.6f\n", r.timings.total_s);
  std::printf("outputs        %s\n", dir.string().c_str());
  return kOk;
}

std::vector<FieldCase> load_fields_dir(const std::string& dir, double target_area) {
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (!entry.is_regular_file()) continue;
    const std::string ext = entry.path().extension().string();
    if (ext == ".wkt" || ext == ".geojson" || ext == ".json") files.push_back(entry.path());
  }
  if (ec) throw Error(ErrorCode::Io, "cannot list '" + dir + "': " + ec.message());
  if (files.empty()) throw Error(ErrorCode::Io, "no field files in '" + dir + "'");
  std::sort(files.begin(), files.end());
  std::vector<FieldCase> out;
  for (const fs::path& f : files) {
    const Polygon p = read_field_file(f.string());
    out.push_back({f.stem().string(), rescale_to_area(p, target_area), target_area});
  }
  return out;
}

int cmd_timing(const BenchOptions& o, const Robot& robot) {
  TimingSettings ts;
  ts.headland = HeadlandWidth::multiple(o.headland_multiple);
  ts.angle_step = o.angle_step_deg * std::numbers::pi / 180.0;
  ts.sample_step = o.sample_step;
  ts.threads = o.threads;
  ts.repetitions = o.repetitions;
  const SwathObjective objective = parse_objective(o.objective);
  const TimingSweep sweep = run_timing_sweep(o.areas, objective, robot, ts);

  const bool sqrt_model = sweep.model == TimingModel::SqrtArea;
  std::ostringstream csv;
  csv << "area_m2,mainland_m2,regressor,seconds\n";
  std::printf("objective  %s\n", std::string(objective_name(objective)).c_str());
  std::printf("model      T = C0 * %s + C1\n", sqrt_model ? "sqrt(A)/Rw" : "A");
  std::printf("%12s %12s %12s %12s\n", "area_m2", "mainland_m2", "regressor", "seconds");
  for (const TimingPoint& p : sweep.points) {
    std::printf("%12.1f %12.1f %12.4f %12.6f\n", p.field_area, p.mainland_area, p.regressor, p.seconds);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%.3f,%.3f,%.9f,%.9f\n", p.field_area, p.mainland_area, p.regressor, p.seconds);
    csv << buf;
  }
  std::printf("C0         %.9g\n", sweep.fit.c0);
  std::printf("C1         %.9g\n", sweep.fit.c1);
  std::printf("r_squared  %.6f\n", sweep.fit.r_squared);

  const fs::path dir(o.out_dir);
  ensure_dir(dir);
  write_file(dir / ("timing_" + std::string(objective_name(objective)) + ".csv"), csv.str());
  return kOk;
}

int cmd_bench(const BenchOptions& o) {
  const Robot robot = make_robot(o.op_width, 0.0, o.radius);
  if (o.timing) return cmd_timing(o, robot);

  const std::vector<FieldCase> fields =
      o.fields_dir.empty() ? generate_convex_fields(o.n_fields, o.seed, o.area) : load_fields_dir(o.fields_dir, o.area);
  MatrixAxes axes;
  axes.objectives.clear();
  axes.patterns.clear();
  axes.curves.clear();
  for (const auto& s : o.objectives) axes.objectives.push_back(parse_objective(s));
  for (const auto& s : o.patterns) axes.patterns.push_back(parse_pattern(s, o.spiral_bulk, {}));
  for (const auto& s : o.curves) axes.curves.push_back(parse_curve(s));
  MatrixSettings ms;
  ms.headland = HeadlandWidth::multiple(o.headland_multiple);
  ms.angle_step = o.angle_step_deg * std::numbers::pi / 180.0;
  ms.sample_step = o.sample_step;
  ms.threads = o.threads;

  const auto rows = run_matrix(fields, robot, axes, ms);
  const fs::path dir(o.out_dir);
  ensure_dir(dir);
  std::ostringstream csv;
  write_matrix_csv(csv, rows);
  write_file(dir / "matrix.csv", csv.str());
  if (o.svg) {
    for (SwathObjective obj : axes.objectives) {
      for (const Pattern& p : axes.patterns) {
        const std::string name = "scatter_" + std::string(objective_name(obj)) + "_" + pattern_name(p) + ".svg";
        write_file(dir / name, scatter_svg(rows, obj, pattern_name(p)));
      }
    }
  }

  std::size_t failed = 0;
  for (const auto& r : rows) failed += r.status != "ok";
  std::printf("fields  %zu\n", fields.size());
  std::printf("rows    %zu\n", rows.size());
  std::printf("failed  %zu\n", failed);
  std::printf("%-16s %-14s %-12s %10s %10s %10s\n", "objective", "pattern", "curve", "mean_L0", "mean_LR", "mean_ovh");
  for (SwathObjective obj : axes.objectives) {
    for (const Pattern& p : axes.patterns) {
      for (CurveKind c : axes.curves) {
        double l0 = 0.0, lr = 0.0, ovh = 0.0;
        std::size_t n = 0;
        for (const auto& r : rows) {
          if (r.objective != obj || r.pattern != pattern_name(p) || r.curve != c || r.status != "ok") continue;
          l0 += r.l0;
          lr += r.lr;
          ovh += r.overhead;
          ++n;
        }
        if (n == 0) continue;
        std::printf("%-16s %-14s %-12s %10.1f %10.1f %10.4f\n", std::string(objective_name(obj)).c_str(),
                    pattern_name(p).c_str(), std::string(curve_name(c)).c_str(), l0 / n, lr / n, ovh / n);
      }
    }
  }
  std::printf("outputs %s\n", dir.string().c_str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coverage path planning for convex fields"};
  app.require_subcommand(1);

  PlanOptions po;
  auto* plan_cmd = app.add_subcommand("plan", "Plan a coverage path for one field");
  plan_cmd->add_option("--field", po.field, "Field boundary file (.wkt, .geojson, .json)")->required();
  plan_cmd->add_option("--op-width", po.op_width, "Operational width [m]")->capture_default_str();
  plan_cmd->add_option("--robot-width", po.robot_width, "Robot width [m] (default: op width)");
  plan_cmd->add_option("--radius", po.radius, "Minimum turning radius [m]")->capture_default_str();
  auto* hl_opt = plan_cmd->add_option("--headland", po.headland, "Headland width [m]");
  plan_cmd->add_option("--headland-multiple", po.headland_multiple, "Headland width as a multiple of the op width")
      ->capture_default_str()
      ->excludes(hl_opt);
  plan_cmd->add_option("--objective", po.objective, "swath-count | swath-length | field-coverage")
      ->capture_default_str();
  plan_cmd->add_option("--pattern", po.pattern, "boustrophedon | snake | spiral | custom")->capture_default_str();
  plan_cmd->add_option("--spiral-bulk", po.spiral_bulk, "Cluster size of the spiral pattern")->capture_default_str();
  plan_cmd->add_option("--custom-order", po.custom_order, "Swath order for the custom pattern, e.g. 0,2,1")
      ->delimiter(',');
  plan_cmd->add_option("--curve", po.curve, "straight | dubins | reeds-shepp")->capture_default_str();
  plan_cmd->add_option("--angle-step-deg", po.angle_step_deg, "Sweep angle step [deg]")->capture_default_str();
  plan_cmd->add_option("--sample-step", po.sample_step, "Path sampling step [m]")->capture_default_str();
  plan_cmd->add_option("--threads", po.threads, "Angle search threads (0 = all cores)")->capture_default_str();
  plan_cmd->add_option("--origin", po.origin, "Projection origin lon,lat for geographic input")
      ->delimiter(',')
      ->expected(2);
  plan_cmd->add_option("--out-dir", po.out_dir, "Output directory")->capture_default_str();

  BenchOptions bo;
  auto* bench_cmd = app.add_subcommand("bench", "Run the benchmark matrix or the timing sweep");
  bench_cmd->add_option("--seed", bo.seed, "Field generator seed")->capture_default_str();
  bench_cmd->add_option("--n-fields", bo.n_fields, "Number of synthetic fields")->capture_default_str();
  bench_cmd->add_option("--area", bo.area, "Field area after rescaling [m^2]")->capture_default_str();
  bench_cmd->add_option("--fields-dir", bo.fields_dir, "Use field files from this directory instead");
  bench_cmd->add_option("--objectives", bo.objectives, "Objectives axis")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--patterns", bo.patterns, "Patterns axis")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--curves", bo.curves, "Curves axis")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--spiral-bulk", bo.spiral_bulk, "Cluster size of the spiral pattern")->capture_default_str();
  bench_cmd->add_option("--op-width", bo.op_width, "Operational width [m]")->capture_default_str();
  bench_cmd->add_option("--radius", bo.radius, "Minimum turning radius [m]")->capture_default_str();
  bench_cmd->add_option("--headland-multiple", bo.headland_multiple, "Headland width in op widths")
      ->capture_default_str();
  bench_cmd->add_option("--angle-step-deg", bo.angle_step_deg, "Sweep angle step [deg]")->capture_default_str();
  bench_cmd->add_option("--sample-step", bo.sample_step, "Path sampling step [m]")->capture_default_str();
  bench_cmd->add_option("--threads", bo.threads, "Angle search threads (0 = all cores)")->capture_default_str();
  bench_cmd->add_option("--out-dir", bo.out_dir, "Output directory")->capture_default_str();
  bench_cmd->add_flag("!--no-svg", bo.svg, "Skip the scatter plots");
  bench_cmd->add_flag("--timing", bo.timing, "Run the timing sweep instead of the matrix");
  bench_cmd->add_option("--objective", bo.objective, "Objective for the timing sweep")->capture_default_str();
  bench_cmd->add_option("--areas", bo.areas, "Timing sweep field areas [m^2]")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--repetitions", bo.repetitions, "Timing repetitions per area")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s: %s\n", std::string(error_code_name(ErrorCode::InvalidArgument)).c_str(),
                 e.what());
    return kInputError;
  }

  try {
    if (plan_cmd->parsed()) return cmd_plan(po);
    return cmd_bench(bo);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s: %s\n", std::string(error_code_name(e.code())).c_str(), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s: %s\n", std::string(error_code_name(ErrorCode::Io)).c_str(), e.what());
    return kInputError;
  }
}
