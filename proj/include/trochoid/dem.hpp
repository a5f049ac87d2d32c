#ifndef TROCHOID_DEM_HPP
#define TROCHOID_DEM_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace trochoid {

/// Error raised for malformed ESRI ASCII grids; carries the 1-based line
/// number of the offending input line.
class DemParseError : public std::runtime_error {
 public:
  DemParseError(const std::string& message, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Elevation raster. Rows are stored north-first (row 0 is the northernmost),
/// matching the ESRI ASCII layout. (x0, y0) is the lower-left corner.
struct DemGrid {
  std::size_t n_rows{0};
  std::size_t n_cols{0};
  double cell_size{0.0};
  double x0{0.0};
  double y0{0.0};
  double nodata{-9999.0};
  std::vector<double> elevations;  // row-major, n_rows * n_cols

  double at(std::size_t row, std::size_t col) const {
    return elevations[row * n_cols + col];
  }
  bool is_nodata(std::size_t row, std::size_t col) const {
    return at(row, col) == nodata;
  }
};

/// Parses an ESRI ASCII grid (.asc): header lines ncols, nrows, xllcorner,
/// yllcorner, cellsize and optional NODATA_value, then row-major values with
/// the north row first. Header keys are case-insensitive. Throws
/// DemParseError with the line number on malformed input.
DemGrid load_dem(std::istream& in);
DemGrid load_dem_file(const std::string& path);

/// Writes the grid back in the same layout. Elevations are printed with
/// shortest round-trip formatting, so a save/load round trip is bit-exact.
void save_dem(const DemGrid& dem, std::ostream& out);
void save_dem_file(const DemGrid& dem, const std::string& path);

}  // namespace trochoid

#endif  // TROCHOID_DEM_HPP
