// End-to-end acceptance suite. Each numbered check prints one PASS/FAIL line
// with the measured values; the process exits nonzero if any check fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "trochoid/extent.hpp"
#include "trochoid/safe_set.hpp"
#include "trochoid/solvers.hpp"
#include "trochoid/terrain.hpp"

using namespace trochoid;
constexpr double kPi = std::numbers::pi;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool ok,
            const std::string& detail) {
  std::printf("%s  %d. %s (%s)\n", ok ? "PASS" : "FAIL", index, name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

const TrochoidArc& first_arc(const PeriodicPath& path) {
  return std::get<TrochoidArc>(path.segments.front());
}

// --- criterion 1: analytic extent limits ---------------------------------
void criterion_extent_limits(const VehicleParams& p) {
  const double r = p.min_turn_radius();
  const double m0 = extent_mushroom(0.0, p);
  const double m1 = extent_mushroom(1.0, p);
  const double f0 = extent_figure_eight(0.0, p);
  const double f1 = extent_figure_eight(1.0 - 1e-10, p);
  const bool ok = std::abs(m0 - r) <= 1e-9 * r &&
                  std::abs(m1 - kPi * r) <= 1e-9 * kPi * r &&
                  std::abs(f0 - 2.0 * r) <= 2e-9 * r && f1 <= 1e-9 * r;
  report(1, "extent limits", ok,
         "D_m(0)/R=" + fmt(m0 / r) + " D_m(1)/R=" + fmt(m1 / r) +
             " D_f8(0)/R=" + fmt(f0 / r) + " D_f8(1-)/R=" + fmt(f1 / r));
}

// --- criterion 2: switching point -----------------------------------------
void criterion_switching_point(const VehicleParams& p) {
  const SwitchingPoint sp = find_switching_point(p, 1e-10);
  const bool ok = sp.eta_star >= 0.34 && sp.eta_star <= 0.37 &&
                  sp.d_min_ratio >= 1.60 && sp.d_min_ratio <= 1.64;
  report(2, "switching point", ok,
         "eta*=" + fmt(sp.eta_star) + " D_min/R=" + fmt(sp.d_min_ratio));
}

// --- criterion 3: reduction percentages -----------------------------------
void criterion_reductions(const VehicleParams& p) {
  const SwitchingPoint sp = find_switching_point(p, 1e-10);
  const double vs_mushroom = 100.0 * (1.0 - sp.d_min_ratio / kPi);
  const double vs_eight = 100.0 * (1.0 - sp.d_min_ratio / 2.0);
  const bool ok =
      std::abs(vs_mushroom - 48.0) <= 2.0 && std::abs(vs_eight - 19.0) <= 2.0;
  report(3, "reduction percentages", ok,
         "vs mushroom " + fmt(vs_mushroom) + "%, vs figure-eight " +
             fmt(vs_eight) + "%");
}

// --- criterion 4: brute-force extent vs analytic --------------------------
void criterion_oracle_equivalence(const VehicleParams& p) {
  oracles::Rng rng(2024);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double eta = rng.uniform(0.05, 0.95);
    const WindCondition wind(eta, rng.uniform(0.0, kTwoPi));
    const PeriodicPath mushroom =
        representative_path(p, wind, {0.0, 0.0}, LoiterFamily::kMushroom);
    const double m_ref = extent_mushroom(eta, p);
    worst = std::max(worst,
                     std::abs(extent_bruteforce(mushroom, 100000) - m_ref) / m_ref);
    const PeriodicPath eight =
        representative_path(p, wind, {0.0, 0.0}, LoiterFamily::kFigureEight);
    const double f_ref = extent_figure_eight(eta, p);
    worst = std::max(worst,
                     std::abs(extent_bruteforce(eight, 100000) - f_ref) / f_ref);
  }
  report(4, "sampling oracle vs analytic extent", worst < 1e-3,
         "worst relative deviation " + fmt(worst) + " over 50 wind ratios");
}

// --- criterion 5: closure suite -------------------------------------------
void criterion_closure_suite(const VehicleParams& p) {
  const double r = p.min_turn_radius();
  oracles::Rng rng(555);

  int mushrooms = 0, attempts = 0, closure_failures = 0;
  while (mushrooms < 200 && attempts < 5000) {
    ++attempts;
    const WindCondition wind(rng.uniform(0.0, 0.95), rng.uniform(0.0, kTwoPi));
    const Pose2H start{rng.uniform(-300, 300), rng.uniform(-300, 300),
                       rng.uniform(0.0, kTwoPi)};
    const auto path = solve_rsr_lsl_periodic(p, wind, start, rng.sign(),
                                             rng.int_in(-3, 2));
    if (!path) continue;
    ++mushrooms;
    if (!path->is_closed(1e-6 * r, 1e-9)) ++closure_failures;
  }

  int bsb = 0, residual_failures = 0;
  while (bsb < 150 && attempts < 20000) {
    ++attempts;
    const double eta = rng.uniform(0.05, 0.95);
    const WindCondition wind(eta, rng.uniform(0.0, kTwoPi));
    const Pose2H start{rng.uniform(-300, 300), rng.uniform(-300, 300),
                       rng.uniform(0.0, kTwoPi)};
    const int d1 = rng.sign();
    for (const PeriodicPath& path :
         solve_rsl_lsr_periodic(p, wind, start, d1, 0)) {
      if (bsb >= 150) break;
      ++bsb;
      if (!path.is_closed(1e-6 * r, 1e-9)) ++closure_failures;

      // residual of the root function, recomputed from scratch
      const Pose2H s = path.start_pose();
      const double va = p.airspeed();
      const double vw = wind.wind_speed(p);
      const double om = p.max_yaw_rate();
      const double t2pi = p.turn_period();
      const int d2 = -d1;
      const double phi1 = s.psi;
      const double t_a = first_arc(path).duration;
      const double xt10 = s.x - va / (d1 * om) * std::sin(phi1);
      const double yt10 = s.y + va / (d1 * om) * std::cos(phi1);
      const double phit2 = phi1 - kTwoPi * d2;
      const double xt20 = s.x - va / (d2 * om) * std::sin(phi1) - vw * t2pi;
      const double yt20 = s.y + va / (d2 * om) * std::cos(phi1);
      const double e = va * (vw * (d1 - d2) / (d1 * d2 * om) - (yt20 - yt10));
      const double f =
          va * ((xt20 - xt10) +
                vw * (t_a * (static_cast<double>(d1) / d2 - 1.0) +
                      (phi1 - phit2 + 2.0 * path.k_index * kPi) / (d2 * om)));
      const double g =
          vw * (yt20 - yt10) + va * va * (d2 - d1) / (d1 * d2 * om);
      const double theta = d1 * om * t_a + phi1;
      const double residual =
          e * std::cos(theta) + f * std::sin(theta) - g;
      if (std::abs(residual) >=
          1e-9 * std::max({std::abs(e), std::abs(f), std::abs(g)}))
        ++residual_failures;
    }
  }

  int eights = 0;
  while (eights < 50) {
    const WindCondition wind(rng.uniform(0.02, 0.98), rng.uniform(0.0, kTwoPi));
    const PeriodicPath path = build_figure_eight(
        p, wind, {rng.uniform(-300, 300), rng.uniform(-300, 300)});
    ++eights;
    if (!path.is_closed(1e-6 * r, 1e-9)) ++closure_failures;
  }

  const bool ok = mushrooms == 200 && bsb == 150 && eights == 50 &&
                  closure_failures == 0 && residual_failures == 0;
  report(5, "closure property suite", ok,
         std::to_string(mushrooms) + " mushrooms, " + std::to_string(bsb) +
             " opposite-turn, " + std::to_string(eights) +
             " figure-eights; closure failures " +
             std::to_string(closure_failures) + ", residual failures " +
             std::to_string(residual_failures));
}

// --- criterion 6: wind-invariance grid -------------------------------------
void criterion_wind_invariance(const VehicleParams& p) {
  const double d = safe_set_radius(p);
  const auto full = verify_wind_invariance(p, d, 64, 64);
  const auto shrunk = verify_wind_invariance(p, 0.9 * d, 64, 64);
  const auto band = shrunk.failing_eta_band();
  const double eta_star = find_switching_point(p, 1e-10).eta_star;
  const bool band_ok = band.has_value() && shrunk.failing_band_contiguous() &&
                       band->first <= eta_star && band->second >= eta_star &&
                       band->first > 0.0 && band->second < 0.999;
  const bool ok = full.all_pass() && !shrunk.all_pass() && band_ok;
  std::string detail = "64x64 at D: " +
                       std::string(full.all_pass() ? "all pass" : "FAILS");
  if (band)
    detail += "; at 0.9D failing band [" + fmt(band->first) + ", " +
              fmt(band->second) + "]";
  report(6, "wind-invariance grid", ok, detail);
}

// --- criteria 7/8: terrain properties --------------------------------------
DemGrid synth_dem(std::size_t n, double cell, double amplitude,
                  unsigned seed) {
  oracles::Rng rng(seed);
  double fx[3], fy[3], px[3], py[3], amp[3];
  for (int k = 0; k < 3; ++k) {
    fx[k] = kTwoPi / rng.uniform(350.0, 1400.0);
    fy[k] = kTwoPi / rng.uniform(350.0, 1400.0);
    px[k] = rng.uniform(0.0, kTwoPi);
    py[k] = rng.uniform(0.0, kTwoPi);
    amp[k] = amplitude * rng.uniform(0.4, 1.0);
  }
  DemGrid dem;
  dem.n_rows = n;
  dem.n_cols = n;
  dem.cell_size = cell;
  dem.elevations.resize(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const double x = static_cast<double>(c) * cell;
      const double y = static_cast<double>(r) * cell;
      double e = 0.0;
      for (int k = 0; k < 3; ++k)
        e += amp[k] * std::sin(fx[k] * x + px[k]) *
             std::cos(fy[k] * y + py[k]);
      dem.elevations[r * n + c] = e;
    }
  return dem;
}

void criterion_terrain_properties(const VehicleParams& p) {
  const ClearanceConstraints clearance;  // 50 / 120 m
  const double r_min = p.min_turn_radius();
  const std::vector<double> radii{r_min, 1.616 * r_min, 2.0 * r_min,
                                  kPi * r_min};
  std::string detail;
  bool ok = true;

  {  // flat grid: coverage equals the interior fraction exactly
    DemGrid flat;
    flat.n_rows = flat.n_cols = 240;
    flat.cell_size = 10.0;
    flat.elevations.assign(240 * 240, 500.0);
    const ValidityRaster raster = valid_region_raster(flat, radii, clearance);
    bool flat_ok = true;
    for (std::size_t t = 1; t <= radii.size(); ++t) {
      const auto reach = static_cast<std::size_t>(
          std::floor(radii[t - 1] / flat.cell_size));
      const double interior =
          static_cast<double>((240 - 2 * reach) * (240 - 2 * reach)) /
          static_cast<double>(240 * 240);
      flat_ok = flat_ok && coverage(raster, t) == interior;
    }
    ok = ok && flat_ok;
    detail += std::string("flat exact: ") + (flat_ok ? "yes" : "NO");
  }

  {  // ramp with slope 0.3: valid at 1.616 R_min, invalid at 2 R_min
    DemGrid ramp;
    ramp.n_rows = ramp.n_cols = 60;
    ramp.cell_size = 10.0;
    ramp.elevations.resize(60 * 60);
    for (std::size_t r = 0; r < 60; ++r)
      for (std::size_t c = 0; c < 60; ++c)
        ramp.elevations[r * 60 + c] = 0.3 * 10.0 * static_cast<double>(c);
    const ValidityRaster raster = valid_region_raster(ramp, radii, clearance);
    const bool ramp_ok = raster.code(30, 30) == 2;
    ok = ok && ramp_ok;
    detail += std::string("; ramp tier=") + std::to_string(raster.code(30, 30));
  }

  {  // nesting on 20 random 200x200 grids, tier by tier
    bool nest_ok = true;
    for (unsigned seed = 0; seed < 20 && nest_ok; ++seed) {
      const DemGrid dem = synth_dem(200, 10.0, 30.0 + 4.0 * seed, 900 + seed);
      ValidityRaster prev;
      for (std::size_t t = 0; t < radii.size(); ++t) {
        const ValidityRaster single =
            valid_region_raster(dem, {radii[t]}, clearance);
        if (t > 0)
          for (std::size_t i = 0; i < single.codes.size(); ++i)
            if (single.codes[i] == 1 && prev.codes[i] != 1) nest_ok = false;
        prev = single;
      }
    }
    ok = ok && nest_ok;
    detail += std::string("; nesting on 20 grids: ") + (nest_ok ? "holds" : "BROKEN");
  }
  report(7, "terrain properties on synthetic grids", ok, detail);
}

void criterion_coverage_ordering(const VehicleParams& p) {
  const ClearanceConstraints clearance;
  const double r_min = p.min_turn_radius();
  const std::vector<double> radii{r_min, 1.616 * r_min, 2.0 * r_min,
                                  kPi * r_min};
  bool ok = true;
  std::string detail;
  const double amplitudes[] = {35.0, 55.0, 80.0};
  for (unsigned i = 0; i < 3; ++i) {
    const DemGrid dem = synth_dem(200, 10.0, amplitudes[i], 7000 + i);
    const ValidityRaster raster = valid_region_raster(dem, radii, clearance);
    std::string row;
    bool strict = true;
    double prev = 2.0;
    for (std::size_t t = 1; t <= 4; ++t) {
      const double c = coverage(raster, t);
      strict = strict && c < prev;
      prev = c;
      row += (t > 1 ? "/" : "") + fmt(c);
    }
    ok = ok && strict;
    detail += (i ? "; " : "") + row;
  }
  report(8, "coverage ordering across radius tiers", ok, detail);
}

// --- criterion 9: kinematic oracle ----------------------------------------
void criterion_kinematic_oracle(const VehicleParams& p) {
  oracles::Rng rng(99);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const WindCondition wind(rng.uniform(0.0, 0.99), rng.uniform(0.0, kTwoPi));
    const Pose2H start{rng.uniform(-500, 500), rng.uniform(-500, 500),
                       rng.uniform(0.0, kTwoPi)};
    const int dir = rng.sign();
    const double duration = rng.uniform(0.05, 2.0) * p.turn_period();
    const TrochoidArc arc(start, dir, duration, p);
    const Pose2H closed = trochoid_state(arc, wind, p, duration);
    const Pose2H rk4 =
        oracles::integrate_arc_rk4(start, dir, duration, wind, p, 10000);
    const double scale = std::max(
        p.min_turn_radius(), (closed.position() - start.position()).norm());
    worst = std::max(worst, (closed.position() - rk4.position()).norm() / scale);
  }
  report(9, "closed form vs RK4 integration", worst < 1e-6,
         "worst relative error " + fmt(worst) + " over 100 arcs");
}

}  // namespace

int main() {
  const VehicleParams params(20.0, 66.67);
  criterion_extent_limits(params);
  criterion_switching_point(params);
  criterion_reductions(params);
  criterion_oracle_equivalence(params);
  criterion_closure_suite(params);
  criterion_wind_invariance(params);
  criterion_terrain_properties(params);
  criterion_coverage_ordering(params);
  criterion_kinematic_oracle(params);

  if (g_failures == 0) {
    std::printf("all acceptance checks passed\n");
    return 0;
  }
  std::printf("%d acceptance check(s) failed\n", g_failures);
  return 1;
}
