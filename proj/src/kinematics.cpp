#include "trochoid/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace trochoid {

namespace {

// Absolute slack for time-span checks, sized to the segment.
double span_slack(double duration) {
  return 1e-9 * std::max(1.0, duration);
}

}  // namespace

Pose2H to_wind_frame(const Pose2H& pose, const WindCondition& wind) {
  const Vec2 p = Vec2{pose.x, pose.y}.rotated(-wind.psi_w());
  return {p.x, p.y, normalize_angle(pose.psi - wind.psi_w())};
}

Pose2H from_wind_frame(const Pose2H& pose, const WindCondition& wind) {
  const Vec2 p = Vec2{pose.x, pose.y}.rotated(wind.psi_w());
  return {p.x, p.y, normalize_angle(pose.psi + wind.psi_w())};
}

Vec2 to_wind_frame(const Vec2& p, const WindCondition& wind) {
  return p.rotated(-wind.psi_w());
}

Vec2 from_wind_frame(const Vec2& p, const WindCondition& wind) {
  return p.rotated(wind.psi_w());
}

Vec2 ground_velocity_wind(const Pose2H& pose, const WindCondition& wind,
                          const VehicleParams& params) {
  const double va = params.airspeed();
  return {va * (std::cos(pose.psi) + wind.eta()), va * std::sin(pose.psi)};
}

Vec2 ground_velocity(const Pose2H& pose, const WindCondition& wind,
                     const VehicleParams& params) {
  return ground_velocity_wind(to_wind_frame(pose, wind), wind, params)
      .rotated(wind.psi_w());
}

TrochoidArc::TrochoidArc(const Pose2H& start_wind, int dir, double dur,
                         const VehicleParams& params)
    : start(start_wind), direction(dir), duration(dur), phase0(start_wind.psi) {
  if (direction != 1 && direction != -1)
    throw std::invalid_argument("turn direction must be +1 or -1");
  if (!(duration >= 0.0))
    throw std::invalid_argument("arc duration must be >= 0");
  const double r_signed = params.airspeed() / (direction * params.max_yaw_rate());
  center = {start.x - r_signed * std::sin(phase0),
            start.y + r_signed * std::cos(phase0)};
}

StraightSegment::StraightSegment(const Pose2H& start_wind, double dur,
                                 const WindCondition& wind,
                                 const VehicleParams& params)
    : start(start_wind), duration(dur) {
  if (!(duration >= 0.0))
    throw std::invalid_argument("straight duration must be >= 0");
  const Vec2 v = ground_velocity_wind(start, wind, params);
  ground_course = normalize_angle(std::atan2(v.y, v.x));
}

Pose2H trochoid_state(const TrochoidArc& arc, const WindCondition& wind,
                      const VehicleParams& params, double t) {
  const double slack = span_slack(arc.duration);
  if (t < -slack || t > arc.duration + slack)
    throw std::domain_error("trochoid_state: t outside [0, duration]");
  t = std::clamp(t, 0.0, arc.duration);

  const double omega = params.max_yaw_rate();
  const double r_signed = params.airspeed() / (arc.direction * omega);
  const double phase = arc.direction * omega * t + arc.phase0;
  const double vw = wind.wind_speed(params);
  return {r_signed * std::sin(phase) + vw * t + arc.center.x,
          -r_signed * std::cos(phase) + arc.center.y, normalize_angle(phase)};
}

Pose2H straight_state(const StraightSegment& seg, const WindCondition& wind,
                      const VehicleParams& params, double t) {
  const double slack = span_slack(seg.duration);
  if (t < -slack || t > seg.duration + slack)
    throw std::domain_error("straight_state: t outside [0, duration]");
  t = std::clamp(t, 0.0, seg.duration);

  const Vec2 v = ground_velocity_wind(seg.start, wind, params);
  return {seg.start.x + v.x * t, seg.start.y + v.y * t, seg.start.psi};
}

}  // namespace trochoid
