#pragma once

#include <vector>

#include "lzs/steady_state.hpp"

namespace lzs {

/// Time-domain relaxation record; times in ns (rates in GHz = 1/ns).
struct Trajectory {
    std::vector<double> times;
    std::vector<PopulationVector> states;
};

/// Largest total outflow rate max_j(-G[j][j]); stability scale of the
/// fixed-step integrator.
double max_outflow(const RateMatrix& generator);

/// Classical fixed-step 4th-order integration of pdot = G p from p_init.
/// Requires dt <= 0.1 / max_outflow (step_size_error otherwise).
/// Stores the state at t = 0, dt, 2dt, ... up to t_max.
Trajectory integrate(const RateMatrix& generator, const PopulationVector& p_init,
                     double dt, double t_max);

/// Integrates until ||G p||_inf < tol * (max transition rate); returns the
/// final state. Step budget: 50/(min nonzero rate), capped at 1e7 steps;
/// convergence_error when exhausted.
PopulationVector converge(const RateMatrix& generator, const PopulationVector& p_init,
                          double tol);

}  // namespace lzs
