#ifndef TROCHOID_SAFE_SET_HPP
#define TROCHOID_SAFE_SET_HPP

#include <optional>
#include <string>
#include <vector>

#include "trochoid/extent.hpp"
#include "trochoid/periodic_path.hpp"

namespace trochoid {

/// Disk guaranteed to contain at least one periodic path for every wind
/// condition eta in [0, 1), psi_w in [0, 2*pi).
struct SafeSet {
  Vec2 center;      // world frame
  double radius{0.0};
  VehicleParams params;
};

/// Worst-case-over-eta radius of extent under the switching strategy,
/// find_switching_point(params).d_min.
double safe_set_radius(const VehicleParams& params);

SafeSet make_safe_set(const VehicleParams& params, Vec2 center);

/// Builds the minimum-extent periodic path for the given wind, with its
/// extent disk centered at `center` (world frame): a mushroom below the
/// switching wind ratio, a figure-eight at or above it. `family` forces one
/// family regardless of eta. The path lies inside the disk of radius
/// min_extent(eta) about `center`.
PeriodicPath representative_path(const VehicleParams& params,
                                 const WindCondition& wind, Vec2 center,
                                 std::optional<LoiterFamily> family = {});

struct VerifyOptions {
  std::size_t samples_per_path{2048};
  double eta_min{0.0};
  double eta_max{1.0 - 1e-3};
  std::optional<LoiterFamily> family{};  // empty = switching strategy
};

struct WindInvarianceReport {
  double radius{0.0};
  std::size_t n_eta{0};
  std::size_t n_psi{0};
  std::vector<double> eta_values;
  std::vector<double> psi_values;
  std::vector<unsigned char> cell_pass;  // row-major, eta-major
  double max_extent{0.0};

  bool all_pass() const;
  bool pass(std::size_t i_eta, std::size_t i_psi) const;
  /// Wind-ratio range [min, max] of rows with any failing cell, empty when
  /// all rows pass.
  std::optional<std::pair<double, double>> failing_eta_band() const;
  /// True when the failing rows form one contiguous index range.
  bool failing_band_contiguous() const;
};

/// Checks containment of the representative path in the disk of radius D for
/// every wind condition on an (n_eta x n_psi) grid. A cell passes when all
/// samples stay within D + 1e-6 * R_min of the disk center. Requires
/// n_eta, n_psi >= 8.
WindInvarianceReport verify_wind_invariance(const VehicleParams& params,
                                            double radius, std::size_t n_eta,
                                            std::size_t n_psi,
                                            const VerifyOptions& options = {});

}  // namespace trochoid

#endif  // TROCHOID_SAFE_SET_HPP
