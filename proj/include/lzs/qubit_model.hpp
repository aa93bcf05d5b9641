#pragma once

#include <array>
#include <vector>

namespace lzs {

/// Boltzmann constant over Planck constant, GHz per kelvin.
inline constexpr double kBoltzmannGHzPerKelvin = 20.8366;

enum class Well { right, left };

/// One diabatic flux-qubit level: E(dphi) = slope * dphi + intercept.
/// Right-well states |0>,|1> have negative slope, left-well |2>,|3> positive.
struct DiabaticLevel {
    int index = 0;          // 0..3
    double slope = 0.0;     // GHz per mPhi0, signed
    double intercept = 0.0; // GHz at dphi = 0
    Well well = Well::right;
};

/// Avoided crossing between right-well level i and left-well level j.
struct CrossingSpec {
    int i = 0;       // right-well index, 0 or 1
    int j = 2;       // left-well index, 2 or 3
    double gap = 0.0;  // Delta_ij, GHz
};

/// Static description of the four-level qubit.
struct QubitSpec {
    std::array<DiabaticLevel, 4> levels{};
    std::vector<CrossingSpec> crossings;  // (0,2) (1,2) (0,3) (1,3)
    double gamma10 = 0.0;     // intra-well relaxation |1> -> |0>, GHz
    double gamma20 = 0.0;     // inter-well relaxation |2> -> |0>, GHz
    double gamma32 = 0.0;     // intra-well relaxation |3> -> |2>, GHz
    double temperature = 0.0; // kelvin

    const CrossingSpec& crossing(int i, int j) const;
};

/// Drive and decoherence working point. All frequencies are ordinary
/// (the paper's omega/2pi, Gamma/2pi) in GHz.
struct DriveSpec {
    double omega = 0.0;    // GHz
    double phi_rf = 0.0;   // mPhi0
    double dphi_dc = 0.0;  // mPhi0
    double gamma2 = 0.0;   // GHz
};

/// Per-crossing drive parameters derived from the flux working point.
struct CrossingChannel {
    CrossingSpec crossing;
    double location = 0.0;        // mPhi0 where the levels intersect
    double combined_slope = 0.0;  // |m_i| + |m_j|, GHz per mPhi0
    double epsilon = 0.0;         // combined_slope * (dphi_dc - location), GHz
    double amplitude = 0.0;       // combined_slope * phi_rf, GHz
};

/// Throws std::invalid_argument when any QubitSpec invariant is violated.
void validate_qubit(const QubitSpec& q);

/// Flux at which levels i and j are degenerate. Throws std::domain_error
/// for parallel levels.
double crossing_location(const std::array<DiabaticLevel, 4>& levels, int i, int j);

/// Channel parameters for a declared crossing (i,j). Throws
/// std::out_of_range for an undeclared pair.
CrossingChannel channel(const QubitSpec& q, const DriveSpec& d, int i, int j);

/// Diabatic energy separation |s_ij * (dphi_dc - location)| in GHz.
/// The avoided-crossing hybridization is neglected.
double energy_gap(const QubitSpec& q, int i, int j, double dphi_dc);

/// Thermal excitation rate Gamma02 = gamma20 * exp(-e02 / kB T).
double thermal_rate(double gamma20, double e02, double temperature);

}  // namespace lzs
