#ifndef TROCHOID_PERIODIC_PATH_HPP
#define TROCHOID_PERIODIC_PATH_HPP

#include <variant>
#include <vector>

#include "trochoid/kinematics.hpp"
#include "trochoid/types.hpp"

namespace trochoid {

enum class PathType {
  kMushroomRsr,
  kMushroomLsl,
  kBsbRsl,
  kBsbLsr,
  kFigureEight,
};

const char* path_type_name(PathType type);

using Segment = std::variant<TrochoidArc, StraightSegment>;

double segment_duration(const Segment& seg);
const Pose2H& segment_start(const Segment& seg);

/// A closed sequence of trochoid arcs and straight segments. Segments are
/// stored in the wind frame and chained exactly: each segment starts at its
/// predecessor's end pose. The path closes on its start pose within the
/// closure tolerances.
struct PeriodicPath {
  PathType type{PathType::kMushroomLsl};
  std::vector<Segment> segments;
  double total_duration{0.0};
  WindCondition wind;
  VehicleParams params;
  int k_index{0};  // winding selector of the solution family

  Pose2H start_pose() const;       // wind frame
  Pose2H end_pose() const;         // wind frame
  Pose2H start_pose_world() const;

  /// Wind-frame pose at time t in [0, total_duration].
  Pose2H pose_at(double t) const;
  Pose2H pose_at_world(double t) const;

  /// Index of the segment active at time t.
  std::size_t segment_index_at(double t) const;

  bool is_closed(double pos_tol, double heading_tol) const;
  bool is_closed() const;
};

/// n poses at uniform time spacing over the total duration, in the world
/// frame. The first sample is the start pose and the last lands back on it
/// for a closed path. Requires n >= 2.
std::vector<Pose2H> sample_path(const PeriodicPath& path, std::size_t n);

/// Same sampling in the wind frame.
std::vector<Pose2H> sample_path_wind(const PeriodicPath& path, std::size_t n);

}  // namespace trochoid

#endif  // TROCHOID_PERIODIC_PATH_HPP
