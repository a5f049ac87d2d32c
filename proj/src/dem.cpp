#include "trochoid/dem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace trochoid {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool parse_double(const std::string& token, double& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

DemGrid load_dem(std::istream& in) {
  DemGrid dem;
  std::size_t line_no = 0;
  std::string line;

  bool have_ncols = false, have_nrows = false, have_xll = false,
       have_yll = false, have_cell = false;
  long long ncols = 0, nrows = 0;

  const auto strip_cr = [](std::string& s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
  };

  // Header: key/value lines until the first line that does not start with a
  // known key.
  std::streampos data_start = in.tellg();
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    std::istringstream ls(line);
    std::string key, value, extra;
    if (!(ls >> key)) {  // blank line inside the header
      data_start = in.tellg();
      continue;
    }
    const std::string k = lower(key);
    const bool is_header_key = k == "ncols" || k == "nrows" ||
                               k == "xllcorner" || k == "yllcorner" ||
                               k == "cellsize" || k == "nodata_value";
    if (!is_header_key) break;
    if (!(ls >> value) || (ls >> extra))
      throw DemParseError("header line must be '<key> <value>'", line_no);
    double v = 0.0;
    if (!parse_double(value, v))
      throw DemParseError("non-numeric header value '" + value + "'", line_no);
    if (k == "ncols") {
      ncols = static_cast<long long>(v);
      if (ncols <= 0 || static_cast<double>(ncols) != v)
        throw DemParseError("ncols must be a positive integer", line_no);
      have_ncols = true;
    } else if (k == "nrows") {
      nrows = static_cast<long long>(v);
      if (nrows <= 0 || static_cast<double>(nrows) != v)
        throw DemParseError("nrows must be a positive integer", line_no);
      have_nrows = true;
    } else if (k == "xllcorner") {
      dem.x0 = v;
      have_xll = true;
    } else if (k == "yllcorner") {
      dem.y0 = v;
      have_yll = true;
    } else if (k == "cellsize") {
      if (!(v > 0.0)) throw DemParseError("cellsize must be > 0", line_no);
      dem.cell_size = v;
      have_cell = true;
    } else {
      dem.nodata = v;
    }
    data_start = in.tellg();
  }
  if (!have_ncols || !have_nrows || !have_xll || !have_yll || !have_cell)
    throw DemParseError(
        "incomplete header: need ncols, nrows, xllcorner, yllcorner, cellsize",
        line_no);

  dem.n_rows = static_cast<std::size_t>(nrows);
  dem.n_cols = static_cast<std::size_t>(ncols);
  dem.elevations.reserve(dem.n_rows * dem.n_cols);

  // Re-read from the first data line; `line` already holds it.
  in.clear();
  in.seekg(data_start);
  line_no -= 1;
  std::size_t count = 0;
  const std::size_t expected = dem.n_rows * dem.n_cols;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    std::istringstream ls(line);
    std::string token;
    while (ls >> token) {
      double v = 0.0;
      if (!parse_double(token, v))
        throw DemParseError("non-numeric cell value '" + token + "'", line_no);
      if (++count > expected)
        throw DemParseError("more values than nrows * ncols", line_no);
      dem.elevations.push_back(v);
    }
  }
  if (count != expected)
    throw DemParseError("expected " + std::to_string(expected) +
                            " values, got " + std::to_string(count),
                        line_no);
  return dem;
}

DemGrid load_dem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DemParseError("cannot open '" + path + "'", 0);
  return load_dem(in);
}

void save_dem(const DemGrid& dem, std::ostream& out) {
  out << "ncols " << dem.n_cols << "\n";
  out << "nrows " << dem.n_rows << "\n";
  out << "xllcorner " << format_double(dem.x0) << "\n";
  out << "yllcorner " << format_double(dem.y0) << "\n";
  out << "cellsize " << format_double(dem.cell_size) << "\n";
  out << "NODATA_value " << format_double(dem.nodata) << "\n";
  for (std::size_t r = 0; r < dem.n_rows; ++r) {
    for (std::size_t c = 0; c < dem.n_cols; ++c) {
      if (c) out << ' ';
      out << format_double(dem.at(r, c));
    }
    out << '\n';
  }
}

void save_dem_file(const DemGrid& dem, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  save_dem(dem, out);
}

}  // namespace trochoid
