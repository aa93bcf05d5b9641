#pragma once

#include <array>

namespace lzs {

/// Occupations p0..p3. Solvers return states with sum(p) = 1 within 1e-9
/// and negatives below 1e-12 clipped to zero.
struct PopulationVector {
    std::array<double, 4> p{1.0, 0.0, 0.0, 0.0};

    double sum() const { return p[0] + p[1] + p[2] + p[3]; }
    double left_well() const { return p[2] + p[3]; }
    double operator[](int i) const { return p[static_cast<std::size_t>(i)]; }
};

/// Full set of transition rates of the combined model, GHz.
/// LZ rates are symmetric (W_ij = W_ji); g02 is the thermal excitation.
struct TransitionRates {
    double w02 = 0.0, w12 = 0.0, w03 = 0.0, w13 = 0.0;
    double g10 = 0.0, g20 = 0.0, g32 = 0.0;
    double g02 = 0.0;
};

enum class Regime { closed, two_level, pumped_back };

/// Markov generator on 4 states, column convention: pdot = G * p,
/// G[i][j] = rate j -> i for i != j, columns sum to zero.
using RateMatrix = std::array<std::array<double, 4>, 4>;

RateMatrix first_diamond_generator(double w02, double w12, double g10, double g20);
RateMatrix second_diamond_generator(double w03, double w12, double g10, double g20, double g32);
RateMatrix combined_generator(const TransitionRates& r);

/// Stationary p of a 4x4 generator: one conservation row replaces the last
/// equation, partial-pivot elimination with deterministic tie-breaking.
/// Throws degenerate_system_error when rank-deficient beyond conservation.
PopulationVector stationary_solve(const RateMatrix& generator);

/// Exact stationary p2 of the three-level first-diamond system.
double first_diamond_closed_form(double w02, double w12, double g10, double g20);

/// Linear solve of the three-level system; p3 = 0 in the result.
PopulationVector first_diamond_solve(double w02, double w12, double g10, double g20);

/// Linear solve of the four-level second-diamond system.
PopulationVector second_diamond_solve(double w03, double w12, double g10, double g20, double g32);

/// p_L ~= W03 / (W03 + W12 + Gamma20), valid for Gamma10, Gamma32 >> W.
double second_diamond_approx(double w03, double w12, double g20);

/// Linear solve of the combined model with thermal excitation.
PopulationVector combined_solve(const TransitionRates& r);

/// closed / two_level / pumped_back split by comparing the two pump rates
/// against on_threshold (a channel is on when it outruns the threshold).
Regime classify_regime(double w02, double w12, double on_threshold);

}  // namespace lzs
