#include "trochoid/safe_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trochoid/solvers.hpp"

namespace trochoid {

double safe_set_radius(const VehicleParams& params) {
  return find_switching_point(params, 1e-10).d_min;
}

SafeSet make_safe_set(const VehicleParams& params, Vec2 center) {
  return {center, safe_set_radius(params), params};
}

PeriodicPath representative_path(const VehicleParams& params,
                                 const WindCondition& wind, Vec2 center,
                                 std::optional<LoiterFamily> family) {
  const LoiterFamily pick =
      family.value_or(wind.eta() < find_switching_point(params, 1e-10).eta_star
                          ? LoiterFamily::kMushroom
                          : LoiterFamily::kFigureEight);

  if (pick == LoiterFamily::kFigureEight)
    return build_figure_eight(params, wind, center);

  // Mushroom: one full-turn arc plus the upwind straight. Placing the arc's
  // downwind-facing point half a straight-length downwind of the center puts
  // the wind-axis extrema symmetric about `center`, with the extreme points
  // on the wind axis through it.
  const double r = params.min_turn_radius();
  const double eta = wind.eta();
  const Vec2 c = to_wind_frame(center, wind);
  const Pose2H start_wind{c.x + eta * std::numbers::pi * r,
                          c.y + (1.0 - eta) * r, std::numbers::pi};
  std::optional<PeriodicPath> path = solve_rsr_lsl_periodic(
      params, wind, from_wind_frame(start_wind, wind), +1, 0);
  if (!path)
    throw std::logic_error("canonical mushroom construction failed");
  return *std::move(path);
}

bool WindInvarianceReport::all_pass() const {
  return std::all_of(cell_pass.begin(), cell_pass.end(),
                     [](unsigned char c) { return c != 0; });
}

bool WindInvarianceReport::pass(std::size_t i_eta, std::size_t i_psi) const {
  return cell_pass[i_eta * n_psi + i_psi] != 0;
}

std::optional<std::pair<double, double>>
WindInvarianceReport::failing_eta_band() const {
  double lo = 0.0, hi = 0.0;
  bool any = false;
  for (std::size_t i = 0; i < n_eta; ++i) {
    for (std::size_t j = 0; j < n_psi; ++j) {
      if (!pass(i, j)) {
        if (!any) lo = eta_values[i];
        hi = eta_values[i];
        any = true;
        break;
      }
    }
  }
  if (!any) return std::nullopt;
  return std::make_pair(lo, hi);
}

bool WindInvarianceReport::failing_band_contiguous() const {
  bool seen = false;
  bool ended = false;
  for (std::size_t i = 0; i < n_eta; ++i) {
    bool row_fails = false;
    for (std::size_t j = 0; j < n_psi; ++j)
      if (!pass(i, j)) {
        row_fails = true;
        break;
      }
    if (row_fails) {
      if (ended) return false;
      seen = true;
    } else if (seen) {
      ended = true;
    }
  }
  return true;
}

WindInvarianceReport verify_wind_invariance(const VehicleParams& params,
                                            double radius, std::size_t n_eta,
                                            std::size_t n_psi,
                                            const VerifyOptions& options) {
  if (n_eta < 8 || n_psi < 8)
    throw std::invalid_argument("verification grid must be at least 8x8");
  if (options.samples_per_path < 2)
    throw std::invalid_argument("samples_per_path must be >= 2");

  WindInvarianceReport report;
  report.radius = radius;
  report.n_eta = n_eta;
  report.n_psi = n_psi;
  report.cell_pass.assign(n_eta * n_psi, 0);
  report.eta_values.resize(n_eta);
  report.psi_values.resize(n_psi);

  for (std::size_t i = 0; i < n_eta; ++i)
    report.eta_values[i] =
        options.eta_min + (options.eta_max - options.eta_min) *
                              static_cast<double>(i) /
                              static_cast<double>(n_eta - 1);
  for (std::size_t j = 0; j < n_psi; ++j)
    report.psi_values[j] = kTwoPi * static_cast<double>(j) /
                           static_cast<double>(n_psi);

  const Vec2 center{0.0, 0.0};
  const double slack = 1e-6 * params.min_turn_radius();
  for (std::size_t i = 0; i < n_eta; ++i) {
    for (std::size_t j = 0; j < n_psi; ++j) {
      const WindCondition wind(report.eta_values[i], report.psi_values[j]);
      const PeriodicPath path =
          representative_path(params, wind, center, options.family);
      double max_dist = 0.0;
      for (const Pose2H& p : sample_path(path, options.samples_per_path))
        max_dist = std::max(max_dist, (p.position() - center).norm());
      report.max_extent = std::max(report.max_extent, max_dist);
      report.cell_pass[i * n_psi + j] = max_dist <= radius + slack ? 1 : 0;
    }
  }
  return report;
}

}  // namespace trochoid
