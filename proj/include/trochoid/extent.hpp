#ifndef TROCHOID_EXTENT_HPP
#define TROCHOID_EXTENT_HPP

#include <span>
#include <vector>

#include "trochoid/periodic_path.hpp"

namespace trochoid {

enum class LoiterFamily { kMushroom, kFigureEight };

const char* loiter_family_name(LoiterFamily family);

/// Extent curve sample: the radius of extent of both families at one wind
/// ratio and the smaller of the two. Ties select the figure-eight.
struct ExtentCurvePoint {
  double eta{0.0};
  double d_mushroom{0.0};
  double d_figure_eight{0.0};
  double d_min{0.0};
  LoiterFamily selected{LoiterFamily::kMushroom};
};

/// Crossing of the two extent curves: the worst-case wind ratio of the
/// switching strategy and the radius it requires.
struct SwitchingPoint {
  double eta_star{0.0};
  double d_min{0.0};
  double d_min_ratio{0.0};  // d_min / R_min
};

/// Radius of extent of the canonical mushroom path,
///   D(eta) = R_min * (sqrt(1 - eta^2) + eta * arccos(-eta)),
/// the half-distance between the turn-drift extrema of a full-turn trochoid.
/// Strictly increasing from R_min at eta = 0 to pi * R_min at eta = 1.
/// Accepts eta in [0, 1].
double extent_mushroom(double eta, const VehicleParams& params);

/// Radius of extent of the figure-eight path,
///   D(eta) = R_min * (1 + cos(phi_bar)),
/// strictly decreasing from 2 * R_min (the eta = 0 continuity limit) toward
/// 0 as eta -> 1. Accepts eta in [0, 1).
double extent_figure_eight(double eta, const VehicleParams& params);

/// Half the maximum pairwise distance over n uniform time samples of a
/// closed path. Requires n >= 100 and a closed path. Internally accelerated
/// with a convex hull; identical to the exhaustive scan.
double extent_bruteforce(const PeriodicPath& path, std::size_t n);

/// Evaluates both families at eta and returns the argmin with its extent.
ExtentCurvePoint min_extent(double eta, const VehicleParams& params);

/// Bisection on extent_mushroom(eta) - extent_figure_eight(eta) over
/// [0.05, 0.95] down to |delta eta| < tol. Throws std::runtime_error if the
/// bracket carries no sign change (a formula regression).
SwitchingPoint find_switching_point(const VehicleParams& params,
                                    double tol = 1e-10);

/// Maximum pairwise distance of a point set (diameter), via monotone-chain
/// convex hull and rotating calipers.
double max_pairwise_distance(std::span<const Vec2> points);

}  // namespace trochoid

#endif  // TROCHOID_EXTENT_HPP
