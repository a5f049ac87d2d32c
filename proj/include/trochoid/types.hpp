#ifndef TROCHOID_TYPES_HPP
#define TROCHOID_TYPES_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace trochoid {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Closure tolerances for periodic paths: position relative to the minimum
/// turn radius, heading absolute (rad, mod 2*pi).
inline constexpr double kClosurePositionRel = 1e-6;
inline constexpr double kClosureHeadingTol = 1e-9;

/// Normalizes an angle into [0, 2*pi).
inline double normalize_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  // fmod can return exactly 2*pi after the correction when a is a tiny
  // negative number.
  if (a >= kTwoPi) a = 0.0;
  return a;
}

/// Wraps an angle into (-pi, pi].
inline double wrap_to_pi(double a) {
  a = normalize_angle(a);
  if (a > std::numbers::pi) a -= kTwoPi;
  return a;
}

struct Vec2 {
  double x{0.0};
  double y{0.0};

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double squared_norm() const { return x * x + y * y; }
  double norm() const { return std::hypot(x, y); }

  Vec2 rotated(double angle) const {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * x - s * y, s * x + c * y};
  }
};

/// Planar position plus heading. Heading is normalized to [0, 2*pi) by every
/// public operation that produces a pose.
struct Pose2H {
  double x{0.0};
  double y{0.0};
  double psi{0.0};

  Vec2 position() const { return {x, y}; }
};

/// Vehicle model: constant airspeed and air-relative minimum turn radius.
/// Maximum yaw rate and the full-turn period are derived.
class VehicleParams {
 public:
  VehicleParams(double airspeed, double min_turn_radius)
      : airspeed_(airspeed), min_turn_radius_(min_turn_radius) {
    if (!(airspeed > 0.0)) throw std::domain_error("airspeed must be > 0");
    if (!(min_turn_radius > 0.0))
      throw std::domain_error("min_turn_radius must be > 0");
  }

  double airspeed() const { return airspeed_; }
  double min_turn_radius() const { return min_turn_radius_; }
  double max_yaw_rate() const { return airspeed_ / min_turn_radius_; }
  double turn_period() const { return kTwoPi / max_yaw_rate(); }

 private:
  double airspeed_;
  double min_turn_radius_;
};

/// Uniform wind described by the wind ratio eta = V_w / V_a in [0, 1) and the
/// direction psi_w the wind blows toward.
class WindCondition {
 public:
  WindCondition(double eta, double psi_w)
      : eta_(eta), psi_w_(normalize_angle(psi_w)) {
    if (!(eta >= 0.0 && eta < 1.0))
      throw std::domain_error("wind ratio eta must be in [0, 1)");
  }

  double eta() const { return eta_; }
  double psi_w() const { return psi_w_; }
  double wind_speed(const VehicleParams& params) const {
    return eta_ * params.airspeed();
  }

 private:
  double eta_;
  double psi_w_;
};

}  // namespace trochoid

#endif  // TROCHOID_TYPES_HPP
