#ifndef TROCHOID_KINEMATICS_HPP
#define TROCHOID_KINEMATICS_HPP

#include "trochoid/types.hpp"

namespace trochoid {

/// Rotates a world-frame pose into the wind-aligned (trochoid) frame, whose
/// x-axis points along the wind direction. The round trip with
/// from_wind_frame is the identity.
Pose2H to_wind_frame(const Pose2H& pose, const WindCondition& wind);
Pose2H from_wind_frame(const Pose2H& pose, const WindCondition& wind);

Vec2 to_wind_frame(const Vec2& p, const WindCondition& wind);
Vec2 from_wind_frame(const Vec2& p, const WindCondition& wind);

/// Ground velocity of the vehicle in the wind frame. `pose` must be a
/// wind-frame pose, so pose.psi is the air-relative heading phi measured from
/// the wind axis.
Vec2 ground_velocity_wind(const Pose2H& pose, const WindCondition& wind,
                          const VehicleParams& params);

/// Ground velocity in the world frame for a world-frame pose.
Vec2 ground_velocity(const Pose2H& pose, const WindCondition& wind,
                     const VehicleParams& params);

/// One constant-rate turn segment of a trochoid. All poses are wind-frame.
/// The trochoid center and start phase are derived from the start pose at
/// construction and kept consistent with it.
struct TrochoidArc {
  Pose2H start;       // wind frame
  int direction{1};   // +1 turns left (ccw), -1 turns right
  double duration{0.0};
  Vec2 center;        // drifting-circle center at t = 0, wind frame
  double phase0{0.0}; // air-relative heading at t = 0

  TrochoidArc(const Pose2H& start_wind, int direction, double duration,
              const VehicleParams& params);
};

/// Constant-heading segment. The air-relative heading is constant; the ground
/// course alpha follows from the wind triangle and generally differs from it.
struct StraightSegment {
  Pose2H start;          // wind frame
  double duration{0.0};
  double ground_course{0.0};  // wind-frame course of the ground track

  StraightSegment(const Pose2H& start_wind, double duration,
                  const WindCondition& wind, const VehicleParams& params);
};

/// Evaluates the closed-form trochoid flow at time t in [0, arc.duration].
/// Returns the wind-frame pose; throws std::domain_error outside the span.
Pose2H trochoid_state(const TrochoidArc& arc, const WindCondition& wind,
                      const VehicleParams& params, double t);

/// Evaluates the straight segment at time t in [0, seg.duration].
Pose2H straight_state(const StraightSegment& seg, const WindCondition& wind,
                      const VehicleParams& params, double t);

}  // namespace trochoid

#endif  // TROCHOID_KINEMATICS_HPP
