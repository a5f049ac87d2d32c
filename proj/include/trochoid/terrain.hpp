#ifndef TROCHOID_TERRAIN_HPP
#define TROCHOID_TERRAIN_HPP

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "trochoid/dem.hpp"

namespace trochoid {

/// Vertical clearance band above ground: the loiter disk must fit between
/// d_min and d_max meters above every terrain cell it covers.
struct ClearanceConstraints {
  double d_min{50.0};
  double d_max{120.0};

  ClearanceConstraints() = default;
  ClearanceConstraints(double d_min, double d_max);

  double allowance() const { return d_max - d_min; }
};

struct FootprintStats {
  double min_elevation{0.0};
  double max_elevation{0.0};
  bool nodata{false};         // footprint touches a nodata cell
  bool out_of_bounds{false};  // footprint extends past the grid edge
};

/// Min/max elevation over all cells whose center lies within horizontal
/// distance `radius` of the (row, col) cell center. Out-of-bounds parts of
/// the footprint are flagged and excluded from the min/max.
FootprintStats footprint_minmax(const DemGrid& dem, std::size_t row,
                                std::size_t col, double radius);

/// Per-cell classification at a set of radii. code 0 = invalid at every
/// tested radius, code k = valid at tier k (1-based into `radii`) and, by
/// nesting, at every smaller tier.
struct ValidityRaster {
  std::size_t n_rows{0};
  std::size_t n_cols{0};
  std::vector<double> radii;       // ascending, meters
  std::vector<int> codes;          // row-major
  std::vector<std::size_t> valid_counts;  // per tier
  std::size_t total_cells{0};      // non-nodata cells of the source DEM

  int code(std::size_t row, std::size_t col) const {
    return codes[row * n_cols + col];
  }
  bool valid_at(std::size_t row, std::size_t col, std::size_t tier) const {
    return code(row, col) >= static_cast<int>(tier);
  }
};

/// Classifies every cell at every radius: a cell is valid at radius D iff
/// its footprint stays inside the grid, touches no nodata cell, and the
/// footprint relief (max - min elevation) does not exceed the clearance
/// allowance d_max - d_min. Radii must be ascending and positive.
ValidityRaster valid_region_raster(const DemGrid& dem,
                                   const std::vector<double>& radii,
                                   const ClearanceConstraints& clearance);

/// Fraction of non-nodata cells valid at the given 1-based tier.
double coverage(const ValidityRaster& raster, std::size_t tier);

/// Writers for the validity raster (.asc with integer codes, binary 8-bit
/// PGM with gray = round(255 * code / n_tiers)) and the per-tier coverage
/// CSV `radius_m,tier,valid_cells,total_cells,coverage`.
void write_validity_asc(const ValidityRaster& raster, const DemGrid& dem,
                        std::ostream& out);
void write_validity_pgm(const ValidityRaster& raster, std::ostream& out);
void write_coverage_csv(const ValidityRaster& raster, std::ostream& out);

}  // namespace trochoid

#endif  // TROCHOID_TERRAIN_HPP
