#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "support/oracles.hpp"
#include "trochoid/extent.hpp"
#include "trochoid/safe_set.hpp"
#include "trochoid/solvers.hpp"

using namespace trochoid;
constexpr double kPi = std::numbers::pi;

TEST_CASE("extent formulas at the family limits") {
  const VehicleParams p(20.0, 66.67);
  const double r = p.min_turn_radius();
  CHECK(extent_mushroom(0.0, p) == doctest::Approx(r).epsilon(1e-9));
  CHECK(extent_mushroom(1.0, p) == doctest::Approx(kPi * r).epsilon(1e-9));
  CHECK(extent_figure_eight(0.0, p) == doctest::Approx(2.0 * r).epsilon(1e-9));
  CHECK(extent_figure_eight(1.0 - 1e-10, p) <= 1e-9 * r);

  CHECK_THROWS_AS(extent_mushroom(-0.1, p), std::domain_error);
  CHECK_THROWS_AS(extent_mushroom(1.1, p), std::domain_error);
  CHECK_THROWS_AS(extent_figure_eight(1.0, p), std::domain_error);
}

TEST_CASE("extent values against the sampling oracle at eta = 0.5") {
  const VehicleParams p(20.0, 66.67);
  const double r = p.min_turn_radius();

  // closed forms, frozen from the independent bisection/brute-force oracle
  CHECK(extent_mushroom(0.5, p) / r ==
        doctest::Approx(1.9132229549810364).epsilon(1e-9));
  CHECK(extent_figure_eight(0.5, p) / r ==
        doctest::Approx(1.319022524142619).epsilon(1e-9));
  const double phi_oracle = oracles::figure_eight_root_bisect(0.5);
  CHECK(extent_figure_eight(0.5, p) ==
        doctest::Approx(r * (1.0 + std::cos(phi_oracle))).epsilon(1e-12));

  const WindCondition wind(0.5, 0.0);
  const PeriodicPath mushroom = representative_path(
      p, wind, {0.0, 0.0}, LoiterFamily::kMushroom);
  CHECK(extent_bruteforce(mushroom, 100000) ==
        doctest::Approx(extent_mushroom(0.5, p)).epsilon(1e-4));

  const PeriodicPath eight = build_figure_eight(p, wind, {0.0, 0.0});
  CHECK(extent_bruteforce(eight, 100000) ==
        doctest::Approx(extent_figure_eight(0.5, p)).epsilon(1e-4));
}

TEST_CASE("brute-force extent of the zero-wind circle") {
  const VehicleParams p(20.0, 66.67);
  const WindCondition wind(0.0, 0.0);
  const auto circle =
      solve_rsr_lsl_periodic(p, wind, {5.0, 1.0, 0.7}, +1, 0).value();
  CHECK(extent_bruteforce(circle, 10000) ==
        doctest::Approx(p.min_turn_radius()).epsilon(1e-6));
}

TEST_CASE("brute-force extent preconditions") {
  const VehicleParams p(20.0, 66.67);
  const WindCondition wind(0.4, 0.0);
  const auto path =
      solve_rsr_lsl_periodic(p, wind, {0.0, 0.0, 0.0}, +1, 0).value();
  CHECK_THROWS_AS(extent_bruteforce(path, 99), std::invalid_argument);

  // an open fragment is not a periodic path
  PeriodicPath open = path;
  open.segments.pop_back();
  open.total_duration -= segment_duration(path.segments.back());
  CHECK_THROWS_AS(extent_bruteforce(open, 1000), std::invalid_argument);
}

TEST_CASE("oracle equivalence across wind ratios") {
  const VehicleParams p(20.0, 66.67);
  oracles::Rng rng(31);
  for (int i = 0; i < 10; ++i) {
    const double eta = rng.uniform(0.05, 0.95);
    const WindCondition wind(eta, rng.uniform(0.0, kTwoPi));
    const PeriodicPath mushroom =
        representative_path(p, wind, {0.0, 0.0}, LoiterFamily::kMushroom);
    CHECK(std::abs(extent_bruteforce(mushroom, 20000) -
                   extent_mushroom(eta, p)) /
              extent_mushroom(eta, p) <
          1e-3);
    const PeriodicPath eight =
        representative_path(p, wind, {0.0, 0.0}, LoiterFamily::kFigureEight);
    CHECK(std::abs(extent_bruteforce(eight, 20000) -
                   extent_figure_eight(eta, p)) /
              extent_figure_eight(eta, p) <
          1e-3);
  }
}

TEST_CASE("monotonicity of the extent curves") {
  const VehicleParams p(20.0, 66.67);
  double prev_m = extent_mushroom(0.0, p);
  double prev_f = extent_figure_eight(0.0, p);
  for (int i = 1; i < 1000; ++i) {
    const double eta = 0.999 * i / 999.0;
    const double m = extent_mushroom(eta, p);
    const double f = extent_figure_eight(eta, p);
    CHECK(m > prev_m);
    CHECK(f < prev_f);
    prev_m = m;
    prev_f = f;
  }
}

TEST_CASE("containment of representative paths in their extent disk") {
  const VehicleParams p(20.0, 66.67);
  const double r = p.min_turn_radius();
  oracles::Rng rng(37);
  for (int i = 0; i < 10; ++i) {
    const double eta = rng.uniform(0.0, 0.95);
    const WindCondition wind(eta, rng.uniform(0.0, kTwoPi));
    const PeriodicPath path = representative_path(p, wind, {0.0, 0.0});
    const double radius = min_extent(eta, p).d_min;
    for (const Pose2H& q : sample_path(path, 10000))
      CHECK(q.position().norm() <= radius + 1e-6 * r);
  }
}

TEST_CASE("empirical minimality of the figure-eight within its family") {
  // Supports the observed-minimality assumption: opposite-turn paths with a
  // real straight segment should not beat the figure-eight. Deviations are
  // reported, not fatal.
  const VehicleParams p(20.0, 66.67);
  const double r = p.min_turn_radius();
  oracles::Rng rng(41);
  int checked = 0;
  int attempts = 0;
  while (checked < 20 && attempts < 400) {
    ++attempts;
    const double eta = rng.uniform(0.05, 0.95);
    const WindCondition wind(eta, rng.uniform(0.0, kTwoPi));
    const Pose2H start{rng.uniform(-100, 100), rng.uniform(-100, 100),
                       rng.uniform(0.0, kTwoPi)};
    const auto paths = solve_rsl_lsr_periodic(p, wind, start, rng.sign(), 0);
    for (const PeriodicPath& path : paths) {
      const auto& straight = std::get<StraightSegment>(path.segments[1]);
      if (straight.duration <= 1e-9) continue;
      ++checked;
      const double bf = extent_bruteforce(path, 20000);
      const double reference = extent_figure_eight(eta, p) - 1e-6 * r;
      WARN_MESSAGE(bf >= reference,
                   "straight-segment path at eta=" << eta
                   << " has extent " << bf << " below the figure-eight "
                   << reference);
    }
  }
  CHECK(checked >= 20);
}

TEST_CASE("family selection") {
  const VehicleParams p(20.0, 66.67);
  CHECK(min_extent(0.1, p).selected == LoiterFamily::kMushroom);
  CHECK(min_extent(0.8, p).selected == LoiterFamily::kFigureEight);

  const SwitchingPoint sp = find_switching_point(p, 1e-10);
  const ExtentCurvePoint at_star = min_extent(sp.eta_star, p);
  CHECK(std::abs(at_star.d_mushroom - at_star.d_figure_eight) <
        1e-9 * p.min_turn_radius());
  CHECK(at_star.d_min == std::min(at_star.d_mushroom, at_star.d_figure_eight));
  CHECK_THROWS_AS(min_extent(1.0, p), std::domain_error);
}

TEST_CASE("switching point and the published reductions") {
  const VehicleParams p(20.0, 66.67);
  const SwitchingPoint sp = find_switching_point(p, 1e-10);
  CHECK(sp.eta_star == doctest::Approx(0.3523880772928706).epsilon(1e-7));
  CHECK(sp.d_min_ratio == doctest::Approx(1.6162864358455173).epsilon(1e-7));
  CHECK(sp.eta_star > 0.34);
  CHECK(sp.eta_star < 0.37);
  CHECK(sp.d_min_ratio > 1.60);
  CHECK(sp.d_min_ratio < 1.64);

  const double vs_mushroom = 1.0 - sp.d_min_ratio / kPi;
  const double vs_eight = 1.0 - sp.d_min_ratio / 2.0;
  CHECK(std::abs(vs_mushroom - 0.48) < 0.02);
  CHECK(std::abs(vs_eight - 0.19) < 0.02);

  // scale invariance: the ratio does not depend on the vehicle
  const SwitchingPoint other = find_switching_point(VehicleParams(31.0, 120.0));
  CHECK(other.d_min_ratio == doctest::Approx(sp.d_min_ratio).epsilon(1e-8));
  CHECK_THROWS_AS(find_switching_point(p, 0.0), std::invalid_argument);
}

TEST_CASE("point-set diameter equals the exhaustive scan") {
  oracles::Rng rng(53);

  SUBCASE("random clouds") {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Vec2> pts;
      for (int i = 0; i < 400; ++i)
        pts.push_back({rng.uniform(-10, 10), rng.uniform(-10, 10)});
      const double fast = max_pairwise_distance(pts);
      const double slow = oracles::max_pairwise_distance_exhaustive(pts);
      CHECK(fast == doctest::Approx(slow).epsilon(1e-12));
    }
  }

  SUBCASE("all points on a circle (every point on the hull)") {
    std::vector<Vec2> pts;
    for (int i = 0; i < 2000; ++i) {
      const double a = kTwoPi * i / 2000.0;
      pts.push_back({3.0 * std::cos(a), 3.0 * std::sin(a)});
    }
    CHECK(max_pairwise_distance(pts) ==
          doctest::Approx(oracles::max_pairwise_distance_exhaustive(pts))
              .epsilon(1e-12));
  }

  SUBCASE("degenerate sets") {
    CHECK(max_pairwise_distance(std::vector<Vec2>{}) == 0.0);
    CHECK(max_pairwise_distance(std::vector<Vec2>{{1, 2}}) == 0.0);
    CHECK(max_pairwise_distance(std::vector<Vec2>{{0, 0}, {3, 4}}) ==
          doctest::Approx(5.0));
    // collinear with duplicates
    std::vector<Vec2> line;
    for (int i = 0; i < 50; ++i) line.push_back({i * 0.5, i * 1.0});
    line.push_back({0.0, 0.0});
    CHECK(max_pairwise_distance(line) ==
          doctest::Approx(oracles::max_pairwise_distance_exhaustive(line))
              .epsilon(1e-12));
    // axis-aligned grid corners
    std::vector<Vec2> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}};
    CHECK(max_pairwise_distance(square) == doctest::Approx(std::sqrt(2.0)));
  }
}
