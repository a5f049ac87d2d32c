#include "trochoid/terrain.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace trochoid {

ClearanceConstraints::ClearanceConstraints(double min_clearance,
                                           double max_clearance)
    : d_min(min_clearance), d_max(max_clearance) {
  if (!(d_min >= 0.0 && d_min < d_max))
    throw std::domain_error("clearance requires 0 <= d_min < d_max");
}

namespace {

// Offsets (drow, dcol) of all cells whose center lies within `radius` of the
// origin cell center. Membership is cell-center-in-disk.
std::vector<std::pair<int, int>> disk_offsets(double radius, double cell_size) {
  const double r_cells = radius / cell_size;
  const int k = static_cast<int>(std::floor(r_cells));
  const double r2 = r_cells * r_cells;
  std::vector<std::pair<int, int>> offsets;
  for (int di = -k; di <= k; ++di)
    for (int dj = -k; dj <= k; ++dj)
      if (static_cast<double>(di) * di + static_cast<double>(dj) * dj <= r2)
        offsets.emplace_back(di, dj);
  return offsets;
}

}  // namespace

FootprintStats footprint_minmax(const DemGrid& dem, std::size_t row,
                                std::size_t col, double radius) {
  FootprintStats stats;
  stats.min_elevation = std::numeric_limits<double>::infinity();
  stats.max_elevation = -std::numeric_limits<double>::infinity();
  const auto offsets = disk_offsets(radius, dem.cell_size);
  for (const auto& [di, dj] : offsets) {
    const long long r = static_cast<long long>(row) + di;
    const long long c = static_cast<long long>(col) + dj;
    if (r < 0 || c < 0 || r >= static_cast<long long>(dem.n_rows) ||
        c >= static_cast<long long>(dem.n_cols)) {
      stats.out_of_bounds = true;
      continue;
    }
    const double e = dem.at(static_cast<std::size_t>(r),
                            static_cast<std::size_t>(c));
    if (e == dem.nodata) {
      stats.nodata = true;
      continue;
    }
    stats.min_elevation = std::min(stats.min_elevation, e);
    stats.max_elevation = std::max(stats.max_elevation, e);
  }
  return stats;
}

ValidityRaster valid_region_raster(const DemGrid& dem,
                                   const std::vector<double>& radii,
                                   const ClearanceConstraints& clearance) {
  if (radii.empty()) throw std::invalid_argument("radii list is empty");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0)) throw std::invalid_argument("radii must be > 0");
    if (i && !(radii[i] > radii[i - 1]))
      throw std::invalid_argument("radii must be ascending");
  }

  ValidityRaster raster;
  raster.n_rows = dem.n_rows;
  raster.n_cols = dem.n_cols;
  raster.radii = radii;
  raster.codes.assign(dem.n_rows * dem.n_cols, 0);
  raster.valid_counts.assign(radii.size(), 0);
  for (std::size_t r = 0; r < dem.n_rows; ++r)
    for (std::size_t c = 0; c < dem.n_cols; ++c)
      if (!dem.is_nodata(r, c)) ++raster.total_cells;

  const double allowance = clearance.allowance();
  const long long n_rows = static_cast<long long>(dem.n_rows);
  const long long n_cols = static_cast<long long>(dem.n_cols);

  // Each tier is evaluated independently over the whole grid; nesting of the
  // valid sets is a consequence of the footprint rule, not of the loop
  // structure.
  for (std::size_t tier = 0; tier < radii.size(); ++tier) {
    const auto offsets = disk_offsets(radii[tier], dem.cell_size);
    int max_d = 0;
    for (const auto& [di, dj] : offsets)
      max_d = std::max({max_d, std::abs(di), std::abs(dj)});

    for (long long r = 0; r < n_rows; ++r) {
      for (long long c = 0; c < n_cols; ++c) {
        if (r < max_d || c < max_d || r >= n_rows - max_d ||
            c >= n_cols - max_d) {
          // Footprint would leave the grid: missing data cannot certify
          // safety.
          continue;
        }
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        bool ok = true;
        for (const auto& [di, dj] : offsets) {
          const double e = dem.at(static_cast<std::size_t>(r + di),
                                  static_cast<std::size_t>(c + dj));
          if (e == dem.nodata) {
            ok = false;
            break;
          }
          lo = std::min(lo, e);
          hi = std::max(hi, e);
          if (hi - lo > allowance) {
            ok = false;
            break;
          }
        }
        if (ok) {
          raster.codes[static_cast<std::size_t>(r) * dem.n_cols + c] =
              static_cast<int>(tier) + 1;
          ++raster.valid_counts[tier];
        }
      }
    }
  }
  return raster;
}

double coverage(const ValidityRaster& raster, std::size_t tier) {
  if (tier < 1 || tier > raster.radii.size())
    throw std::invalid_argument("unknown radius tier");
  if (raster.total_cells == 0) return 0.0;
  return static_cast<double>(raster.valid_counts[tier - 1]) /
         static_cast<double>(raster.total_cells);
}

void write_validity_asc(const ValidityRaster& raster, const DemGrid& dem,
                        std::ostream& out) {
  out << "ncols " << raster.n_cols << "\n";
  out << "nrows " << raster.n_rows << "\n";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", dem.x0);
  out << "xllcorner " << buf << "\n";
  std::snprintf(buf, sizeof(buf), "%.9g", dem.y0);
  out << "yllcorner " << buf << "\n";
  std::snprintf(buf, sizeof(buf), "%.9g", dem.cell_size);
  out << "cellsize " << buf << "\n";
  out << "NODATA_value -9999\n";
  for (std::size_t r = 0; r < raster.n_rows; ++r) {
    for (std::size_t c = 0; c < raster.n_cols; ++c) {
      if (c) out << ' ';
      out << raster.code(r, c);
    }
    out << '\n';
  }
}

void write_validity_pgm(const ValidityRaster& raster, std::ostream& out) {
  out << "P5\n" << raster.n_cols << " " << raster.n_rows << "\n255\n";
  const double n_tiers = static_cast<double>(raster.radii.size());
  std::vector<unsigned char> row(raster.n_cols);
  for (std::size_t r = 0; r < raster.n_rows; ++r) {
    for (std::size_t c = 0; c < raster.n_cols; ++c)
      row[c] = static_cast<unsigned char>(
          std::lround(255.0 * raster.code(r, c) / n_tiers));
    out.write(reinterpret_cast<const char*>(row.data()),
              static_cast<std::streamsize>(row.size()));
  }
}

void write_coverage_csv(const ValidityRaster& raster, std::ostream& out) {
  out << "radius_m,tier,valid_cells,total_cells,coverage\n";
  char buf[64];
  for (std::size_t tier = 1; tier <= raster.radii.size(); ++tier) {
    std::snprintf(buf, sizeof(buf), "%.9g", raster.radii[tier - 1]);
    out << buf << ',' << tier << ',' << raster.valid_counts[tier - 1] << ','
        << raster.total_cells << ',';
    std::snprintf(buf, sizeof(buf), "%.9g", coverage(raster, tier));
    out << buf << '\n';
  }
}

}  // namespace trochoid
