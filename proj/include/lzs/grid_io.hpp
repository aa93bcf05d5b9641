#pragma once

#include <string>

#include "lzs/sweep.hpp"

namespace lzs {

/// Data-row formatting: 12 significant digits.
std::string format_double(double x);

/// Shortest representation that parses back to the identical double; used
/// for the parameter echo so configs survive a write/load cycle exactly.
std::string format_double_exact(double x);

/// CSV layout: '#'-prefixed metadata lines echoing every parameter, a
/// "dphi_dc,phi_rf,p_left" header, then one row per node in row-major
/// order (phi_rf outer), 12 significant digits, LF endings.
void write_grid_csv(const SweepGrid& grid, const std::string& path);

/// Reads a file produced by write_grid_csv (metadata preserved verbatim).
SweepGrid read_grid_csv(const std::string& path);

/// Binary 16-bit PGM (P5, maxval 65535, big-endian samples), rows ordered
/// by descending phi_rf, linear map of [vmin, vmax] onto [0, 65535] with
/// clamping. Requires vmax > vmin.
void write_grid_pgm(const SweepGrid& grid, const std::string& path, double vmin, double vmax);

}  // namespace lzs
