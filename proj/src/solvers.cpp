#include "trochoid/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trochoid {

namespace {

constexpr int kNewtonMaxIter = 50;
constexpr double kNewtonStepTolRel = 1e-12;   // of t_2pi
constexpr double kDerivativeFloor = 1e-14;
constexpr double kRootDedupRel = 1e-8;        // of t_2pi
constexpr double kDurationSlack = 1e-12;

PeriodicPath chain_path(PathType type, const VehicleParams& params,
                        const WindCondition& wind, const Pose2H& start_wind,
                        int k,
                        const std::vector<std::pair<int, double>>& arcs_and_straights) {
  // Encoded as (direction, duration) for arcs and (0, duration) for
  // straights; segments are chained so each starts at the previous end.
  PeriodicPath path{type, {}, 0.0, wind, params, k};
  Pose2H cursor = start_wind;
  for (const auto& [dir, duration] : arcs_and_straights) {
    if (dir == 0) {
      StraightSegment seg(cursor, duration, wind, params);
      cursor = straight_state(seg, wind, params, duration);
      path.segments.emplace_back(std::move(seg));
    } else {
      TrochoidArc arc(cursor, dir, duration, params);
      cursor = trochoid_state(arc, wind, params, duration);
      path.segments.emplace_back(std::move(arc));
    }
    path.total_duration += duration;
  }
  return path;
}

// f(t_A) and its t_A-derivative for the opposite-turn periodic problem.
struct BsbProblem {
  double va, vw, omega, t2pi;
  double phi1;
  int d1, d2, k;
  double e, g;          // independent of t_A
  double x21, y21;      // trochoid-center differences
  double phi_t2;

  BsbProblem(const VehicleParams& params, const WindCondition& wind,
             const Pose2H& start_wind, int direction1, int k_index)
      : va(params.airspeed()),
        vw(wind.wind_speed(params)),
        omega(params.max_yaw_rate()),
        t2pi(params.turn_period()),
        phi1(start_wind.psi),
        d1(direction1),
        d2(-direction1),
        k(k_index) {
    const double x0 = start_wind.x;
    const double y0 = start_wind.y;
    const double xt10 = x0 - va / (d1 * omega) * std::sin(phi1);
    const double yt10 = y0 + va / (d1 * omega) * std::cos(phi1);
    // The second trochoid is clocked so the vehicle returns to the start
    // state at parameter t_2pi; its phase reference is phi1 - 2*pi*d2.
    phi_t2 = phi1 - kTwoPi * d2;
    const double xt20 = x0 - va / (d2 * omega) * std::sin(phi1) - vw * t2pi;
    const double yt20 = y0 + va / (d2 * omega) * std::cos(phi1);
    x21 = xt20 - xt10;
    y21 = yt20 - yt10;
    e = va * (vw * (d1 - d2) / (d1 * d2 * omega) - y21);
    g = vw * y21 + va * va * (d2 - d1) / (d1 * d2 * omega);
  }

  double f_coeff(double t_a) const {
    return va * (x21 + vw * (t_a * (static_cast<double>(d1) / d2 - 1.0) +
                             (phi1 - phi_t2 + 2.0 * k * std::numbers::pi) /
                                 (d2 * omega)));
  }

  double f(double t_a) const {
    const double theta = d1 * omega * t_a + phi1;
    return e * std::cos(theta) + f_coeff(t_a) * std::sin(theta) - g;
  }

  double df(double t_a) const {
    const double theta = d1 * omega * t_a + phi1;
    const double dF = va * vw * (static_cast<double>(d1) / d2 - 1.0);
    return (-e * std::sin(theta) + f_coeff(t_a) * std::cos(theta)) * d1 * omega +
           dF * std::sin(theta);
  }

  double t_b(double t_a) const {
    return (static_cast<double>(d1) / d2) * t_a +
           (static_cast<double>(k) / d2) * t2pi + t2pi;
  }
};

// Bisection of f over [lo, hi]; requires a sign change.
double bisect(const BsbProblem& prob, double lo, double hi) {
  double flo = prob.f(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = prob.f(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    if (hi - lo < kNewtonStepTolRel * prob.t2pi) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::optional<PeriodicPath> solve_rsr_lsl_periodic(const VehicleParams& params,
                                                   const WindCondition& wind,
                                                   const Pose2H& start_world,
                                                   int direction, int k) {
  if (direction != 1 && direction != -1)
    throw std::invalid_argument("turn direction must be +1 or -1");
  if (k < -3 || k > 2)
    throw std::invalid_argument("winding index k must be in {-3..2}");

  const Pose2H start = to_wind_frame(start_world, wind);
  const double omega = params.max_yaw_rate();
  const double t2pi = params.turn_period();
  const double eta = wind.eta();
  const double phi1 = start.psi;

  // The straight segment lies on the wind axis: the arc hands over at a
  // heading facing directly upwind (alpha = pi) or downwind (alpha = 0).
  // Only the upwind branch can cancel the downwind turn drift when eta > 0;
  // both are tried and the feasible one kept, upwind preferred.
  std::optional<PeriodicPath> result;
  for (const double alpha : {std::numbers::pi, 0.0}) {
    double t_a = normalize_angle(direction * (alpha - phi1)) / omega;
    // A start heading within rounding of the branch target would otherwise
    // wrap into a spurious full turn.
    if (t2pi - t_a < 1e-9 * t2pi) t_a = 0.0;
    const double arc2 =
        (1.0 - static_cast<double>(k) / direction) * t2pi - t_a;
    if (arc2 < -kDurationSlack) continue;

    // Position closure along the wind axis fixes the straight duration.
    const double course_speed = params.airspeed() * (std::cos(alpha) + eta);
    const double drift = wind.wind_speed(params) * (t_a + std::max(arc2, 0.0));
    double t_s = 0.0;
    if (drift > 0.0) {
      t_s = -drift / course_speed;
      if (t_s < -kDurationSlack) continue;  // antiparallel: infeasible branch
    }

    const double total = t_a + std::max(t_s, 0.0) + std::max(arc2, 0.0);
    if (total <= kDurationSlack) continue;

    PeriodicPath path = chain_path(
        direction > 0 ? PathType::kMushroomLsl : PathType::kMushroomRsr,
        params, wind, start, k,
        {{direction, t_a}, {0, std::max(t_s, 0.0)}, {direction, std::max(arc2, 0.0)}});
    if (!path.is_closed()) continue;
    if (!result) result = std::move(path);
  }
  return result;
}

std::vector<PeriodicPath> solve_rsl_lsr_periodic(const VehicleParams& params,
                                                 const WindCondition& wind,
                                                 const Pose2H& start_world,
                                                 int direction1, int k,
                                                 int guesses) {
  if (direction1 != 1 && direction1 != -1)
    throw std::invalid_argument("turn direction must be +1 or -1");
  if (k < -3 || k > 2)
    throw std::invalid_argument("winding index k must be in {-3..2}");
  if (guesses < 1) throw std::invalid_argument("guesses must be >= 1");
  if (!(wind.eta() > 0.0))
    throw std::domain_error("RSL/LSR periodic solver requires eta > 0");

  const Pose2H start = to_wind_frame(start_world, wind);
  const BsbProblem prob(params, wind, start, direction1, k);
  const double t2pi = prob.t2pi;
  const double seed_step = t2pi / guesses;

  std::vector<double> roots;
  auto push_root = [&](double t_a) {
    if (t_a < -kNewtonStepTolRel * t2pi || t_a >= t2pi) return;
    t_a = std::max(t_a, 0.0);
    for (double r : roots)
      if (std::abs(r - t_a) <= kRootDedupRel * t2pi) return;
    roots.push_back(t_a);
  };

  for (int s = 0; s < guesses; ++s) {
    const double seed = (s + 0.5) * seed_step;
    double t = seed;
    bool converged = false;
    for (int it = 0; it < kNewtonMaxIter; ++it) {
      const double d = prob.df(t);
      if (std::abs(d) < kDerivativeFloor) break;  // stalled on a flat spot
      const double step = prob.f(t) / d;
      t -= step;
      if (std::abs(step) < kNewtonStepTolRel * t2pi) {
        converged = true;
        break;
      }
      if (!std::isfinite(t) || std::abs(t) > 8.0 * t2pi) break;
    }
    if (converged) {
      push_root(t);
      continue;
    }
    // Diverged or stalled: fall back to bisection on the seed's grid
    // interval when it brackets a sign change.
    const double lo = s * seed_step;
    const double hi = std::min((s + 1) * seed_step, t2pi);
    if (prob.f(lo) == 0.0) {
      push_root(lo);
    } else if ((prob.f(lo) > 0.0) != (prob.f(hi) > 0.0)) {
      push_root(bisect(prob, lo, hi));
    }
  }
  std::sort(roots.begin(), roots.end());

  std::vector<PeriodicPath> paths;
  for (double t_a : roots) {
    const double t_b = prob.t_b(t_a);
    if (t_b < -kDurationSlack || t_b > t2pi + kDurationSlack) continue;
    const double arc2 = std::clamp(t2pi - t_b, 0.0, t2pi);

    // Straight duration from the displacement between the first arc's end
    // and the entry point on the second trochoid, projected on the ground
    // course. An antiparallel projection is not a path.
    TrochoidArc arc1(start, prob.d1, t_a, params);
    const Pose2H hand_off = trochoid_state(arc1, wind, params, t_a);
    const double theta_b = prob.d2 * prob.omega * t_b + prob.phi_t2;
    const double xt20 =
        start.x - prob.va / (prob.d2 * prob.omega) * std::sin(prob.phi1) -
        prob.vw * t2pi;
    const double yt20 =
        start.y + prob.va / (prob.d2 * prob.omega) * std::cos(prob.phi1);
    const Vec2 entry{prob.va / (prob.d2 * prob.omega) * std::sin(theta_b) +
                         prob.vw * t_b + xt20,
                     -prob.va / (prob.d2 * prob.omega) * std::cos(theta_b) +
                         yt20};
    const Vec2 v = ground_velocity_wind(hand_off, wind, params);
    const Vec2 gap = entry - Vec2{hand_off.x, hand_off.y};
    const double t_s = gap.dot(v) / v.squared_norm();
    if (t_s < -kDurationSlack) continue;

    PeriodicPath path = chain_path(
        direction1 > 0 ? PathType::kBsbLsr : PathType::kBsbRsl, params, wind,
        start, k,
        {{prob.d1, t_a}, {0, std::max(t_s, 0.0)}, {prob.d2, arc2}});
    if (!path.is_closed()) continue;
    paths.push_back(std::move(path));
  }
  return paths;
}

FigureEightSolution solve_figure_eight_heading(double eta,
                                               const VehicleParams& params) {
  if (!(eta > 0.0 && eta < 1.0))
    throw std::domain_error("figure-eight heading requires eta in (0, 1)");

  const auto f = [eta](double phi) {
    return eta * (std::numbers::pi - phi) - std::sin(phi);
  };
  const auto df = [eta](double phi) { return -eta - std::cos(phi); };

  // f(0) = eta*pi > 0 and f(arccos(-eta)) < 0 bracket the unique interior
  // root; phi = pi itself is always a (spurious) root of f.
  double lo = 0.0;
  double hi = std::acos(-eta);
  for (int i = 0; i < 120 && hi - lo > 1e-14; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  double phi = 0.5 * (lo + hi);
  for (int i = 0; i < 8; ++i) {
    const double d = df(phi);
    if (std::abs(d) < kDerivativeFloor) break;
    phi -= f(phi) / d;
  }
  phi = std::clamp(phi, 0.0, std::numbers::pi);

  FigureEightSolution sol;
  sol.phi_bar = phi;
  sol.eta = eta;
  sol.arc_duration = params.min_turn_radius() *
                     (kTwoPi - 2.0 * phi) / params.airspeed();
  return sol;
}

PeriodicPath build_figure_eight(const VehicleParams& params,
                                const WindCondition& wind, Vec2 center_world) {
  const FigureEightSolution sol =
      solve_figure_eight_heading(wind.eta(), params);
  const Vec2 c = to_wind_frame(center_world, wind);

  // The two lobes cross exactly at the start point, which is also the
  // midpoint of the wind-axis extremes, so the path starts at the disk
  // center with relative heading phi_bar.
  const Pose2H start{c.x, c.y, sol.phi_bar};
  PeriodicPath path =
      chain_path(PathType::kFigureEight, params, wind, start, 0,
                 {{+1, sol.arc_duration}, {0, 0.0}, {-1, sol.arc_duration}});
  return path;
}

BsbRootCoefficients bsb_coefficients(const VehicleParams& params,
                                     const WindCondition& wind,
                                     const Pose2H& start_wind, int direction1,
                                     int k, double t_a) {
  const BsbProblem prob(params, wind, start_wind, direction1, k);
  return {prob.e, prob.f_coeff(t_a), prob.g};
}

double bsb_residual(const VehicleParams& params, const WindCondition& wind,
                    const Pose2H& start_wind, int direction1, int k,
                    double t_a) {
  const BsbProblem prob(params, wind, start_wind, direction1, k);
  return prob.f(t_a);
}

}  // namespace trochoid
