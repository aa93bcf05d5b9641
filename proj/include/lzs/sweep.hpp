#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lzs/qubit_model.hpp"
#include "lzs/steady_state.hpp"

namespace lzs {

enum class Model { first_diamond, second_diamond, combined };

const char* model_name(Model m);
Model model_from_name(const std::string& name);  // throws std::invalid_argument

/// Rectangular (dphi_dc, phi_rf) grid, inclusive endpoints.
struct GridSpec {
    double dphi_min = 0.0, dphi_max = 0.0;
    int dphi_steps = 0;
    double phi_rf_min = 0.0, phi_rf_max = 0.0;
    int phi_rf_steps = 0;

    double dphi_at(int ix) const;
    double phi_rf_at(int iy) const;
};

void validate_grid(const GridSpec& g);  // throws std::invalid_argument

/// Left-well population map. values is row-major with phi_rf as the row
/// index: values[iy * dphi_steps + ix].
struct SweepGrid {
    GridSpec spec;
    Model model = Model::first_diamond;
    std::vector<double> values;
    std::vector<std::pair<std::string, std::string>> metadata;  // parameter echo
    long degenerate_points = 0;  // grid nodes that fell back to the ground state

    double at(int ix, int iy) const {
        return values[static_cast<std::size_t>(iy) * static_cast<std::size_t>(spec.dphi_steps) +
                      static_cast<std::size_t>(ix)];
    }
};

/// All channel rates entering the chosen model at one working point.
struct PointRates {
    double w02 = 0.0, w12 = 0.0, w03 = 0.0, w13 = 0.0;
    double g02 = 0.0;  // thermal excitation (combined model only)
};

PointRates compute_point_rates(const QubitSpec& q, const DriveSpec& d, Model model);

struct PointSample {
    double p_left = 0.0;
    bool degenerate_fallback = false;
};

/// Left-well population at one working point (first_diamond: p2,
/// otherwise p2+p3). Solver degeneracy falls back to the ground state.
PointSample sample_point(const QubitSpec& q, const DriveSpec& d, Model model);
double evaluate_point(const QubitSpec& q, const DriveSpec& d, Model model);

/// Full population map; grid points are evaluated independently, output is
/// identical for any thread count (threads = 0 picks the hardware count).
SweepGrid sweep_grid(const QubitSpec& q, double omega, double gamma2,
                     const GridSpec& grid, Model model, int threads = 1);

/// Peak-to-valley contrast of W along the detuning axis between resonances
/// n and n+1 of one crossing, at fixed drive amplitude:
/// (W_peak - W_valley)/(W_peak + W_valley). Requires the amplitude to reach
/// the crossing from resonance n (A >= n*omega); std::domain_error otherwise.
double resonance_contrast(const QubitSpec& q, double omega, double gamma2,
                          int i, int j, double phi_rf, int n);

/// Cartesian product of sweeps, row-major with gamma2 as the outer index.
std::vector<SweepGrid> study_matrix(const QubitSpec& q, const std::vector<double>& omegas,
                                    const std::vector<double>& gamma2s, const GridSpec& grid,
                                    Model model, int threads = 1);

}  // namespace lzs
