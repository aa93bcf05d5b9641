#include "lzs/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "lzs/config.hpp"
#include "lzs/errors.hpp"
#include "lzs/lz_rates.hpp"

namespace lzs {

const char* model_name(Model m) {
    switch (m) {
        case Model::first_diamond: return "first_diamond";
        case Model::second_diamond: return "second_diamond";
        case Model::combined: return "combined";
    }
    return "?";
}

Model model_from_name(const std::string& name) {
    if (name == "first_diamond") return Model::first_diamond;
    if (name == "second_diamond") return Model::second_diamond;
    if (name == "combined") return Model::combined;
    throw std::invalid_argument("unknown model '" + name +
                                "' (expected first_diamond, second_diamond or combined)");
}

double GridSpec::dphi_at(int ix) const {
    return dphi_min + (dphi_max - dphi_min) * static_cast<double>(ix) /
                          static_cast<double>(dphi_steps - 1);
}

double GridSpec::phi_rf_at(int iy) const {
    return phi_rf_min + (phi_rf_max - phi_rf_min) * static_cast<double>(iy) /
                            static_cast<double>(phi_rf_steps - 1);
}

void validate_grid(const GridSpec& g) {
    if (g.dphi_steps < 2 || g.phi_rf_steps < 2)
        throw std::invalid_argument("grid: steps must be >= 2");
    if (!(g.dphi_max > g.dphi_min) || !(g.phi_rf_max > g.phi_rf_min))
        throw std::invalid_argument("grid: max must exceed min");
}

namespace {

double channel_rate(const QubitSpec& q, const DriveSpec& d, int i, int j) {
    const CrossingChannel ch = channel(q, d, i, j);
    return lz_rate(RateParams{ch.crossing.gap, ch.epsilon, ch.amplitude, d.omega, d.gamma2});
}

}  // namespace

PointRates compute_point_rates(const QubitSpec& q, const DriveSpec& d, Model model) {
    PointRates r;
    switch (model) {
        case Model::first_diamond:
            r.w02 = channel_rate(q, d, 0, 2);
            r.w12 = channel_rate(q, d, 1, 2);
            break;
        case Model::second_diamond:
            r.w03 = channel_rate(q, d, 0, 3);
            r.w12 = channel_rate(q, d, 1, 2);
            break;
        case Model::combined:
            r.w02 = channel_rate(q, d, 0, 2);
            r.w12 = channel_rate(q, d, 1, 2);
            r.w03 = channel_rate(q, d, 0, 3);
            r.w13 = channel_rate(q, d, 1, 3);
            r.g02 = thermal_rate(q.gamma20, energy_gap(q, 0, 2, d.dphi_dc), q.temperature);
            break;
    }
    return r;
}

PointSample sample_point(const QubitSpec& q, const DriveSpec& d, Model model) {
    const PointRates r = compute_point_rates(q, d, model);
    try {
        switch (model) {
            case Model::first_diamond:
                return {first_diamond_solve(r.w02, r.w12, q.gamma10, q.gamma20).p[2], false};
            case Model::second_diamond:
                return {second_diamond_solve(r.w03, r.w12, q.gamma10, q.gamma20, q.gamma32).left_well(),
                        false};
            case Model::combined: {
                TransitionRates t{r.w02, r.w12, r.w03, r.w13, q.gamma10, q.gamma20, q.gamma32, r.g02};
                return {combined_solve(t).left_well(), false};
            }
        }
    } catch (const degenerate_system_error&) {
        // undriven qubit rests in the ground state
        return {0.0, true};
    }
    return {0.0, true};
}

double evaluate_point(const QubitSpec& q, const DriveSpec& d, Model model) {
    return sample_point(q, d, model).p_left;
}

SweepGrid sweep_grid(const QubitSpec& q, double omega, double gamma2, const GridSpec& grid,
                     Model model, int threads) {
    validate_grid(grid);
    SweepGrid out;
    out.spec = grid;
    out.model = model;
    out.values.assign(static_cast<std::size_t>(grid.dphi_steps) *
                          static_cast<std::size_t>(grid.phi_rf_steps),
                      0.0);

    RunConfig echo;
    echo.qubit = q;
    echo.omega = omega;
    echo.gamma2 = gamma2;
    echo.grid = grid;
    echo.model = model;
    out.metadata = echo_config(echo);

    int nthreads = threads > 0 ? threads
                               : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    nthreads = std::min(nthreads, grid.phi_rf_steps);

    std::atomic<long> degenerate{0};
    auto run_rows = [&](int row_begin, int row_end) {
        long local_degenerate = 0;
        for (int iy = row_begin; iy < row_end; ++iy) {
            const double phirf = grid.phi_rf_at(iy);
            for (int ix = 0; ix < grid.dphi_steps; ++ix) {
                DriveSpec d{omega, phirf, grid.dphi_at(ix), gamma2};
                const PointSample s = sample_point(q, d, model);
                out.values[static_cast<std::size_t>(iy) * static_cast<std::size_t>(grid.dphi_steps) +
                           static_cast<std::size_t>(ix)] = s.p_left;
                if (s.degenerate_fallback) ++local_degenerate;
            }
        }
        degenerate += local_degenerate;
    };

    if (nthreads <= 1) {
        run_rows(0, grid.phi_rf_steps);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        const int rows = grid.phi_rf_steps;
        for (int t = 0; t < nthreads; ++t) {
            const int begin = static_cast<int>(static_cast<long>(rows) * t / nthreads);
            const int end = static_cast<int>(static_cast<long>(rows) * (t + 1) / nthreads);
            pool.emplace_back(run_rows, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    out.degenerate_points = degenerate.load();
    return out;
}

double resonance_contrast(const QubitSpec& q, double omega, double gamma2, int i, int j,
                          double phi_rf, int n) {
    if (n < 1) throw std::domain_error("resonance_contrast: n must be >= 1");
    if (!(omega > 0.0) || !(gamma2 > 0.0))
        throw std::invalid_argument("resonance_contrast: omega and gamma2 must be > 0");
    const CrossingSpec& cs = q.crossing(i, j);
    const double slope = std::abs(q.levels[static_cast<std::size_t>(i)].slope) +
                         std::abs(q.levels[static_cast<std::size_t>(j)].slope);
    const double amplitude = slope * phi_rf;
    if (amplitude < static_cast<double>(n) * omega)
        throw std::domain_error("resonance_contrast: amplitude does not reach the crossing from "
                                "resonance n");

    // sample densely against the Lorentzian width
    int npts = static_cast<int>(std::ceil(omega / (gamma2 / 20.0))) + 1;
    npts = std::clamp(npts, 201, 50001);
    double wmax = 0.0, wmin = 0.0;
    for (int k = 0; k < npts; ++k) {
        const double eps = (static_cast<double>(n) +
                            static_cast<double>(k) / static_cast<double>(npts - 1)) * omega;
        const double w = lz_rate(RateParams{cs.gap, eps, amplitude, omega, gamma2});
        if (k == 0) {
            wmax = wmin = w;
        } else {
            wmax = std::max(wmax, w);
            wmin = std::min(wmin, w);
        }
    }
    return (wmax - wmin) / (wmax + wmin);
}

std::vector<SweepGrid> study_matrix(const QubitSpec& q, const std::vector<double>& omegas,
                                    const std::vector<double>& gamma2s, const GridSpec& grid,
                                    Model model, int threads) {
    if (omegas.empty() || gamma2s.empty())
        throw std::invalid_argument("study_matrix: omega and gamma2 lists must be nonempty");
    std::vector<SweepGrid> out;
    out.reserve(omegas.size() * gamma2s.size());
    for (double g2 : gamma2s)
        for (double w : omegas) out.push_back(sweep_grid(q, w, g2, grid, model, threads));
    return out;
}

}  // namespace lzs
