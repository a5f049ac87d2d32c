#include "trochoid/extent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trochoid/solvers.hpp"

namespace trochoid {

const char* loiter_family_name(LoiterFamily family) {
  return family == LoiterFamily::kMushroom ? "mushroom" : "figure-eight";
}

double extent_mushroom(double eta, const VehicleParams& params) {
  if (!(eta >= 0.0 && eta <= 1.0))
    throw std::domain_error("extent_mushroom requires eta in [0, 1]");
  return params.min_turn_radius() *
         (std::sqrt(1.0 - eta * eta) + eta * std::acos(-eta));
}

double extent_figure_eight(double eta, const VehicleParams& params) {
  if (!(eta >= 0.0 && eta < 1.0))
    throw std::domain_error("extent_figure_eight requires eta in [0, 1)");
  if (eta == 0.0) return 2.0 * params.min_turn_radius();  // continuity limit
  const FigureEightSolution sol = solve_figure_eight_heading(eta, params);
  return params.min_turn_radius() * (1.0 + std::cos(sol.phi_bar));
}

namespace {

// Monotone-chain convex hull, counterclockwise, collinear points dropped.
std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vec2& a, const Vec2& b) {
                          return a.x == b.x && a.y == b.y;
                        }),
            pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;

  std::vector<Vec2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 &&
           (hull[k - 1] - hull[k - 2]).cross(pts[i] - hull[k - 2]) <= 0.0)
      --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower &&
           (hull[k - 1] - hull[k - 2]).cross(pts[i] - hull[k - 2]) <= 0.0)
      --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

double max_pairwise_distance(std::span<const Vec2> points) {
  if (points.size() < 2) return 0.0;
  const std::vector<Vec2> hull =
      convex_hull(std::vector<Vec2>(points.begin(), points.end()));
  const std::size_t m = hull.size();
  if (m == 1) return 0.0;
  if (m == 2) return (hull[1] - hull[0]).norm();

  // Rotating calipers over antipodal vertex pairs.
  double best = 0.0;
  std::size_t j = 1;
  auto area2 = [&](std::size_t a, std::size_t b, std::size_t c) {
    return (hull[b] - hull[a]).cross(hull[c] - hull[a]);
  };
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t ni = (i + 1) % m;
    while (area2(i, ni, (j + 1) % m) > area2(i, ni, j)) j = (j + 1) % m;
    best = std::max(best, (hull[j] - hull[i]).squared_norm());
    best = std::max(best, (hull[j] - hull[ni]).squared_norm());
  }
  return std::sqrt(best);
}

double extent_bruteforce(const PeriodicPath& path, std::size_t n) {
  if (n < 100) throw std::invalid_argument("extent sampling requires n >= 100");
  if (!path.is_closed())
    throw std::invalid_argument("extent is defined for closed paths only");

  std::vector<Vec2> pts;
  pts.reserve(n);
  for (const Pose2H& p : sample_path_wind(path, n)) pts.push_back({p.x, p.y});
  return 0.5 * max_pairwise_distance(pts);
}

ExtentCurvePoint min_extent(double eta, const VehicleParams& params) {
  if (!(eta >= 0.0 && eta < 1.0))
    throw std::domain_error("min_extent requires eta in [0, 1)");
  ExtentCurvePoint p;
  p.eta = eta;
  p.d_mushroom = extent_mushroom(eta, params);
  p.d_figure_eight = extent_figure_eight(eta, params);
  p.d_min = std::min(p.d_mushroom, p.d_figure_eight);
  p.selected = p.d_figure_eight <= p.d_mushroom ? LoiterFamily::kFigureEight
                                                : LoiterFamily::kMushroom;
  return p;
}

SwitchingPoint find_switching_point(const VehicleParams& params, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  const auto g = [&](double eta) {
    return extent_mushroom(eta, params) - extent_figure_eight(eta, params);
  };
  double lo = 0.05;
  double hi = 0.95;
  double glo = g(lo);
  if (!(glo < 0.0) || !(g(hi) > 0.0))
    throw std::runtime_error(
        "extent curves do not cross inside [0.05, 0.95]: formula regression");
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if ((gm > 0.0) == (glo > 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  SwitchingPoint sp;
  sp.eta_star = 0.5 * (lo + hi);
  sp.d_min = std::min(extent_mushroom(sp.eta_star, params),
                      extent_figure_eight(sp.eta_star, params));
  sp.d_min_ratio = sp.d_min / params.min_turn_radius();
  return sp;
}

}  // namespace trochoid
