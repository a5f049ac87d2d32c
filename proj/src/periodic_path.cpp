#include "trochoid/periodic_path.hpp"

#include <cmath>
#include <stdexcept>

namespace trochoid {

const char* path_type_name(PathType type) {
  switch (type) {
    case PathType::kMushroomRsr: return "mushroom-rsr";
    case PathType::kMushroomLsl: return "mushroom-lsl";
    case PathType::kBsbRsl: return "bsb-rsl";
    case PathType::kBsbLsr: return "bsb-lsr";
    case PathType::kFigureEight: return "figure-eight";
  }
  return "unknown";
}

double segment_duration(const Segment& seg) {
  return std::visit([](const auto& s) { return s.duration; }, seg);
}

const Pose2H& segment_start(const Segment& seg) {
  return std::visit([](const auto& s) -> const Pose2H& { return s.start; },
                    seg);
}

namespace {

Pose2H segment_state(const Segment& seg, const WindCondition& wind,
                     const VehicleParams& params, double t) {
  if (const auto* arc = std::get_if<TrochoidArc>(&seg))
    return trochoid_state(*arc, wind, params, t);
  return straight_state(std::get<StraightSegment>(seg), wind, params, t);
}

}  // namespace

Pose2H PeriodicPath::start_pose() const {
  if (segments.empty()) throw std::logic_error("empty path");
  return segment_start(segments.front());
}

Pose2H PeriodicPath::end_pose() const {
  if (segments.empty()) throw std::logic_error("empty path");
  const Segment& last = segments.back();
  return segment_state(last, wind, params, segment_duration(last));
}

Pose2H PeriodicPath::start_pose_world() const {
  return from_wind_frame(start_pose(), wind);
}

Pose2H PeriodicPath::pose_at(double t) const {
  const double slack = 1e-9 * std::max(1.0, total_duration);
  if (t < -slack || t > total_duration + slack)
    throw std::domain_error("pose_at: t outside [0, total_duration]");
  t = std::clamp(t, 0.0, total_duration);

  for (const Segment& seg : segments) {
    const double d = segment_duration(seg);
    if (t <= d) return segment_state(seg, wind, params, t);
    t -= d;
  }
  // Accumulated rounding can leave a residual beyond the last segment.
  return end_pose();
}

Pose2H PeriodicPath::pose_at_world(double t) const {
  return from_wind_frame(pose_at(t), wind);
}

std::size_t PeriodicPath::segment_index_at(double t) const {
  t = std::clamp(t, 0.0, total_duration);
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const double d = segment_duration(segments[i]);
    if (t <= d) return i;
    t -= d;
  }
  return segments.size() - 1;
}

bool PeriodicPath::is_closed(double pos_tol, double heading_tol) const {
  if (segments.empty()) return false;
  const Pose2H a = start_pose();
  const Pose2H b = end_pose();
  const double dpos = (Vec2{b.x, b.y} - Vec2{a.x, a.y}).norm();
  const double dpsi = std::abs(wrap_to_pi(b.psi - a.psi));
  return dpos <= pos_tol && dpsi <= heading_tol;
}

bool PeriodicPath::is_closed() const {
  return is_closed(kClosurePositionRel * params.min_turn_radius(),
                   kClosureHeadingTol);
}

namespace {

std::vector<Pose2H> sample_impl(const PeriodicPath& path, std::size_t n,
                                bool world) {
  if (n < 2) throw std::invalid_argument("sample count must be >= 2");
  std::vector<Pose2H> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t =
        path.total_duration * static_cast<double>(i) / static_cast<double>(n - 1);
    out.push_back(world ? path.pose_at_world(t) : path.pose_at(t));
  }
  return out;
}

}  // namespace

std::vector<Pose2H> sample_path(const PeriodicPath& path, std::size_t n) {
  return sample_impl(path, n, true);
}

std::vector<Pose2H> sample_path_wind(const PeriodicPath& path, std::size_t n) {
  return sample_impl(path, n, false);
}

}  // namespace trochoid
