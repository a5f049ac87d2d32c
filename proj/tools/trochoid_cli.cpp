// Command-line front end: periodic path generation, extent sweeps, the
// switching point, wind-invariance verification and terrain classification.
//
// Exit codes: 0 success, 2 no feasible path for the requested family,
// 3 input or configuration error, 4 invariant (containment) failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trochoid/dem.hpp"
#include "trochoid/extent.hpp"
#include "trochoid/safe_set.hpp"
#include "trochoid/solvers.hpp"
#include "trochoid/terrain.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitInputError = 3;
constexpr int kExitInvariantFailure = 4;

// All numeric output uses 9 significant digits with the C locale, so runs
// are byte-for-byte reproducible.
std::string fmt9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

struct Options {
  double va = 20.0;
  double rmin = 66.67;
  double eta = 0.3;
  double psi_w = 0.0;
  std::string family;
  int k = 0;
  int delta = 1;
  int samples = 0;  // 0 = per-command default
  std::string radii = "1,1.616,2,pi";
  double dmin = 50.0;
  double dmax = 120.0;
  std::string out;
  std::size_t n_eta = 64;
  std::size_t n_psi = 64;
  std::string radius_scale = "1";
};

double parse_scale_token(const std::string& token) {
  if (token == "pi") return std::numbers::pi;
  std::size_t pos = 0;
  const double v = std::stod(token, &pos);
  if (pos != token.size()) throw std::invalid_argument("bad number: " + token);
  return v;
}

std::vector<double> parse_radii_multipliers(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    out.push_back(parse_scale_token(token));
  }
  if (out.empty()) throw std::invalid_argument("empty radii list");
  return out;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << content;
}

int cmd_path(const Options& opt) {
  const trochoid::VehicleParams params(opt.va, opt.rmin);
  const trochoid::WindCondition wind(opt.eta, opt.psi_w);
  const std::string family = opt.family.empty() ? "mushroom" : opt.family;
  const std::size_t n = opt.samples > 0 ? static_cast<std::size_t>(opt.samples)
                                        : 1001;
  if (n < 2) {
    std::cerr << "error: --samples must be >= 2\n";
    return kExitInputError;
  }

  // Mushroom and BSB paths are anchored at the same tangent start state the
  // family admits from an arbitrary pose; the figure-eight is centered at
  // the origin.
  const trochoid::Pose2H start{0.0, 0.0, 0.1 * std::numbers::pi};
  std::optional<trochoid::PeriodicPath> path;
  if (family == "mushroom") {
    path = trochoid::solve_rsr_lsl_periodic(params, wind, start, opt.delta,
                                            opt.k);
    if (!path) {
      std::cerr << "error: no feasible mushroom path for delta=" << opt.delta
                << " k=" << opt.k << "\n";
      return kExitInfeasible;
    }
  } else if (family == "bsb") {
    if (opt.eta <= 0.0) {
      std::cerr << "error: bsb family requires eta > 0\n";
      return kExitInfeasible;
    }
    auto paths = trochoid::solve_rsl_lsr_periodic(params, wind, start,
                                                  opt.delta, opt.k);
    if (paths.empty()) {
      std::cerr << "error: no feasible bsb path for delta=" << opt.delta
                << " k=" << opt.k << "\n";
      return kExitInfeasible;
    }
    path = paths.front();
  } else if (family == "figure-eight") {
    if (opt.eta <= 0.0) {
      std::cerr << "error: figure-eight degenerates at eta = 0; use the "
                   "mushroom family (circle)\n";
      return kExitInfeasible;
    }
    path = trochoid::build_figure_eight(params, wind, {0.0, 0.0});
  } else {
    std::cerr << "error: unknown family '" << family
              << "' (mushroom|bsb|figure-eight)\n";
    return kExitInputError;
  }

  std::string csv = "t,x,y,psi,segment_index,segment_type\n";
  for (std::size_t i = 0; i < n; ++i) {
    const double t = path->total_duration * static_cast<double>(i) /
                     static_cast<double>(n - 1);
    const trochoid::Pose2H p = path->pose_at_world(t);
    const std::size_t seg = path->segment_index_at(t);
    const bool is_arc =
        std::holds_alternative<trochoid::TrochoidArc>(path->segments[seg]);
    csv += fmt9(t) + ',' + fmt9(p.x) + ',' + fmt9(p.y) + ',' + fmt9(p.psi) +
           ',' + std::to_string(seg) + ',' + (is_arc ? "arc" : "straight") +
           '\n';
  }
  write_output(opt.out, csv);
  return kExitOk;
}

int cmd_extent_sweep(const Options& opt) {
  const trochoid::VehicleParams params(opt.va, opt.rmin);
  const std::size_t n = opt.samples > 0 ? static_cast<std::size_t>(opt.samples)
                                        : 256;
  if (n < 16) {
    std::cerr << "error: sweep resolution must be >= 16\n";
    return kExitInputError;
  }
  const double r = params.min_turn_radius();
  std::string csv = "eta,D_mushroom_over_R,D_fig8_over_R,D_min_over_R,selected\n";
  for (std::size_t i = 0; i < n; ++i) {
    const double eta = (1.0 - 1e-3) * static_cast<double>(i) /
                       static_cast<double>(n - 1);
    const trochoid::ExtentCurvePoint p = trochoid::min_extent(eta, params);
    csv += fmt9(eta) + ',' + fmt9(p.d_mushroom / r) + ',' +
           fmt9(p.d_figure_eight / r) + ',' + fmt9(p.d_min / r) + ',' +
           trochoid::loiter_family_name(p.selected) + '\n';
  }
  write_output(opt.out, csv);
  return kExitOk;
}

int cmd_switch(const Options& opt) {
  const trochoid::VehicleParams params(opt.va, opt.rmin);
  const trochoid::SwitchingPoint sp =
      trochoid::find_switching_point(params, 1e-10);
  std::string report;
  report += "eta_star " + fmt9(sp.eta_star) + '\n';
  report += "D_min_m " + fmt9(sp.d_min) + '\n';
  report += "D_min_over_Rmin " + fmt9(sp.d_min_ratio) + '\n';
  report += "reduction_vs_mushroom_pct " +
            fmt9(100.0 * (1.0 - sp.d_min_ratio / std::numbers::pi)) + '\n';
  report += "reduction_vs_figure_eight_pct " +
            fmt9(100.0 * (1.0 - sp.d_min_ratio / 2.0)) + '\n';
  write_output(opt.out, report);
  return kExitOk;
}

int cmd_terrain(const Options& opt, const std::string& dem_path) {
  const trochoid::VehicleParams params(opt.va, opt.rmin);
  const trochoid::ClearanceConstraints clearance(opt.dmin, opt.dmax);

  std::vector<double> radii = parse_radii_multipliers(opt.radii);
  for (double& r : radii) r *= params.min_turn_radius();
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (!(radii[i] > radii[i - 1]))
      throw std::invalid_argument("--radii must be ascending");

  trochoid::DemGrid dem;
  try {
    dem = trochoid::load_dem_file(dem_path);
  } catch (const trochoid::DemParseError& e) {
    std::cerr << "error: " << dem_path << ": " << e.what() << "\n";
    return kExitInputError;
  }

  const double half_extent =
      0.5 * static_cast<double>(std::min(dem.n_rows, dem.n_cols)) *
      dem.cell_size;
  if (radii.back() > half_extent)
    std::cerr << "warning: radius " << fmt9(radii.back())
              << " m exceeds half the grid extent (" << fmt9(half_extent)
              << " m); boundary cells dominate\n";

  const trochoid::ValidityRaster raster =
      trochoid::valid_region_raster(dem, radii, clearance);

  const std::string prefix = opt.out.empty() ? "terrain" : opt.out;
  std::ostringstream asc, pgm, csv;
  trochoid::write_validity_asc(raster, dem, asc);
  trochoid::write_validity_pgm(raster, pgm);
  trochoid::write_coverage_csv(raster, csv);
  write_output(prefix + "_validity.asc", asc.str());
  write_output(prefix + "_validity.pgm", pgm.str());
  write_output(prefix + "_coverage.csv", csv.str());
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  const trochoid::VehicleParams params(opt.va, opt.rmin);
  if (opt.n_eta < 8 || opt.n_psi < 8) {
    std::cerr << "error: grid sizes must be >= 8\n";
    return kExitInputError;
  }

  const std::string family = opt.family.empty() ? "switching" : opt.family;
  trochoid::VerifyOptions options;
  double base_radius = 0.0;
  if (family == "switching") {
    base_radius = trochoid::safe_set_radius(params);
  } else if (family == "mushroom-only") {
    options.family = trochoid::LoiterFamily::kMushroom;
    base_radius = std::numbers::pi * params.min_turn_radius();
  } else if (family == "figure-eight-only") {
    options.family = trochoid::LoiterFamily::kFigureEight;
    options.eta_min = 1e-3;  // the figure-eight is undefined at eta = 0
    base_radius = 2.0 * params.min_turn_radius();
  } else {
    std::cerr << "error: unknown family '" << family
              << "' (switching|mushroom-only|figure-eight-only)\n";
    return kExitInputError;
  }
  const double scale = parse_scale_token(opt.radius_scale);
  if (!(scale > 0.0)) {
    std::cerr << "error: --radius-scale must be > 0\n";
    return kExitInputError;
  }
  const double radius = scale * base_radius;
  if (opt.samples > 1)
    options.samples_per_path = static_cast<std::size_t>(opt.samples);

  const trochoid::WindInvarianceReport report =
      trochoid::verify_wind_invariance(params, radius, opt.n_eta, opt.n_psi,
                                       options);

  std::string text;
  text += "family " + family + '\n';
  text += "radius_m " + fmt9(report.radius) + '\n';
  text += "radius_over_Rmin " + fmt9(report.radius / params.min_turn_radius()) +
          '\n';
  text += "grid " + std::to_string(report.n_eta) + "x" +
          std::to_string(report.n_psi) + '\n';
  text += "max_extent_m " + fmt9(report.max_extent) + '\n';
  const bool ok = report.all_pass();
  text += std::string("result ") + (ok ? "pass" : "fail") + '\n';
  if (!ok) {
    const auto band = report.failing_eta_band();
    text += "failing_eta_band " + fmt9(band->first) + " " +
            fmt9(band->second) + '\n';
    text += std::string("failing_band_contiguous ") +
            (report.failing_band_contiguous() ? "yes" : "no") + '\n';
  }
  write_output(opt.out, text);
  return ok ? kExitOk : kExitInvariantFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Periodic trochoidal loiter paths, wind-invariant safe sets "
               "and terrain classification"};
  app.require_subcommand(1);
  Options opt;

  app.add_option("--va", opt.va, "Airspeed (m/s)");
  app.add_option("--rmin", opt.rmin, "Minimum air-relative turn radius (m)");
  app.add_option("--eta", opt.eta, "Wind ratio V_w / V_a in [0, 1)");
  app.add_option("--psi-w", opt.psi_w, "Wind direction (rad)");
  app.add_option("--family", opt.family,
                 "Path family (path: mushroom|bsb|figure-eight; verify: "
                 "switching|mushroom-only|figure-eight-only)");
  app.add_option("--k", opt.k, "Winding index in {-3..2}");
  app.add_option("--delta", opt.delta, "First turn direction (+1 left, -1 right)");
  app.add_option("--samples", opt.samples,
                 "Sample count / sweep resolution (0 = command default)");
  app.add_option("--radii", opt.radii,
                 "Comma-separated radius tiers as multiples of R_min "
                 "('pi' allowed)");
  app.add_option("--dmin", opt.dmin, "Minimum clearance above ground (m)");
  app.add_option("--dmax", opt.dmax, "Maximum clearance above ground (m)");
  app.add_option("--out", opt.out, "Output file or prefix (default: stdout)");
  app.set_config("--config", "", "Flat key=value config file");

  CLI::App* sub_path = app.add_subcommand("path", "Sample one periodic path to CSV");
  CLI::App* sub_sweep =
      app.add_subcommand("extent-sweep", "Extent of both families over eta");
  CLI::App* sub_switch =
      app.add_subcommand("switch", "Switching point and radius reductions");
  CLI::App* sub_terrain =
      app.add_subcommand("terrain", "Classify valid loiter cells of a DEM");
  std::string dem_path;
  sub_terrain->add_option("dem", dem_path, "ESRI ASCII grid (.asc)")
      ->required();
  CLI::App* sub_verify =
      app.add_subcommand("verify", "Check containment over a wind grid");
  sub_verify->add_option("--n-eta", opt.n_eta, "Wind-ratio grid size");
  sub_verify->add_option("--n-psi", opt.n_psi, "Wind-direction grid size");
  sub_verify->add_option("--radius-scale", opt.radius_scale,
                         "Multiplier on the family's safe radius ('pi' allowed)");
  for (CLI::App* sub : {sub_path, sub_sweep, sub_switch, sub_terrain, sub_verify})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*sub_path) return cmd_path(opt);
    if (*sub_sweep) return cmd_extent_sweep(opt);
    if (*sub_switch) return cmd_switch(opt);
    if (*sub_terrain) return cmd_terrain(opt, dem_path);
    if (*sub_verify) return cmd_verify(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
