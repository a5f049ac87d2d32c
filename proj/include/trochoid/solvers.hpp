#ifndef TROCHOID_SOLVERS_HPP
#define TROCHOID_SOLVERS_HPP

#include <optional>
#include <vector>

#include "trochoid/periodic_path.hpp"

namespace trochoid {

/// Solution of the figure-eight heading condition
///   eta * (pi - phi_bar) - sin(phi_bar) = 0
/// on the interior of (0, pi). arc_duration is the duration of each of the
/// two lobes, R_min * (2*pi - 2*phi_bar) / V_a.
struct FigureEightSolution {
  double phi_bar{0.0};
  double arc_duration{0.0};
  double eta{0.0};
};

/// Coefficients of the transcendental root function
///   f(t_A) = E cos(d1 w t_A + phi_1) + F sin(d1 w t_A + phi_1) - G
/// for the opposite-turn (RSL/LSR) periodic boundary problem. F depends on
/// t_A; the stored value is evaluated at the t_A passed to
/// bsb_coefficients().
struct BsbRootCoefficients {
  double e{0.0};
  double f{0.0};
  double g{0.0};
};

/// Builds a closed same-turn-direction (RSR/LSL) path through `start_world`:
/// one arc to the upwind-facing heading, a wind-aligned straight that cancels
/// the turn drift, and the remainder arc. k selects the winding of the
/// remainder arc; k = 0 is the single-loop solution for either direction.
/// Returns an empty optional when the (direction, k) combination requires a
/// negative segment duration. With eta = 0 the result degenerates to a
/// circle with a zero-length straight.
std::optional<PeriodicPath> solve_rsr_lsl_periodic(const VehicleParams& params,
                                                   const WindCondition& wind,
                                                   const Pose2H& start_world,
                                                   int direction, int k);

/// Solves the opposite-turn (RSL/LSR) periodic problem from `start_world` by
/// multi-start Newton-Raphson on the root function f(t_A), seeded uniformly
/// over one turn period. Every returned path has t_A in [0, t_2pi), a
/// non-negative straight duration, and passes the closure check. Roots whose
/// entry time on the second trochoid falls outside [0, t_2pi] are discarded,
/// which for the periodic boundary condition restricts solutions to k = 0.
/// Requires eta in (0, 1).
std::vector<PeriodicPath> solve_rsl_lsr_periodic(const VehicleParams& params,
                                                 const WindCondition& wind,
                                                 const Pose2H& start_world,
                                                 int direction1, int k,
                                                 int guesses = 32);

/// Interior root of eta * (pi - phi) - sin(phi) = 0, bisection-bracketed on
/// (0, arccos(-eta)) and Newton-polished to residual < 1e-12. Requires
/// eta in (0, 1).
FigureEightSolution solve_figure_eight_heading(double eta,
                                               const VehicleParams& params);

/// Builds the zero-straight figure-eight: two opposite-direction arcs of
/// equal duration whose wind drift matches the lobe chord. The crossing
/// point sits at `center_world` and the path is symmetric about the wind
/// axis through it. Requires eta in (0, 1).
PeriodicPath build_figure_eight(const VehicleParams& params,
                                const WindCondition& wind, Vec2 center_world);

/// Coefficients of f(t_A) for a wind-frame start pose, first-turn direction
/// and winding index, evaluated at t_a. Exposed so returned roots can be
/// validated against the root function they came from.
BsbRootCoefficients bsb_coefficients(const VehicleParams& params,
                                     const WindCondition& wind,
                                     const Pose2H& start_wind, int direction1,
                                     int k, double t_a);

double bsb_residual(const VehicleParams& params, const WindCondition& wind,
                    const Pose2H& start_wind, int direction1, int k,
                    double t_a);

}  // namespace trochoid

#endif  // TROCHOID_SOLVERS_HPP
