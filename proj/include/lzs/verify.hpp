#pragma once

#include <ostream>

namespace lzs {

/// Built-in oracle-equivalence suite behind `lzs-sim verify`: stationary
/// solvers vs time-domain relaxation, closed forms vs linear solves, and
/// the Bessel kernel vs a power-series oracle. Prints one line per check;
/// returns true when everything passes.
bool run_verify(std::ostream& out);

}  // namespace lzs
