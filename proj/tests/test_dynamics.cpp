#include <doctest.h>

#include <cmath>
#include <random>

#include "lzs/dynamics.hpp"
#include "lzs/errors.hpp"
#include "lzs/lz_rates.hpp"
#include "lzs/qubit_model.hpp"
#include "test_helpers.hpp"

using namespace lzs;

namespace {

RateMatrix two_state_exchange(double w) {
    RateMatrix g{};
    g[0][0] = -w;
    g[2][0] = w;
    g[2][2] = -w;
    g[0][2] = w;
    return g;
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

double inf_dist(const PopulationVector& a, const PopulationVector& b) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a.p[i] - b.p[i]));
    return m;
}

}  // namespace

TEST_CASE("zero generator keeps the state constant") {
    const Trajectory t = integrate(RateMatrix{}, PopulationVector{{0.2, 0.3, 0.4, 0.1}}, 0.5, 5.0);
    CHECK(t.states.size() == 11);
    for (const auto& s : t.states) {
        CHECK(s.p[0] == 0.2);
        CHECK(s.p[3] == 0.1);
    }
}

TEST_CASE("two-state exchange follows the analytic relaxation") {
    const double w = 0.8;
    const RateMatrix g = two_state_exchange(w);
    const double dt = 0.1 / (2.0 * w) / 2.0;
    const double t_probe = 1.0 / (2.0 * w);
    const long n = static_cast<long>(std::round(t_probe / dt));
    const Trajectory traj = integrate(g, PopulationVector{}, t_probe / static_cast<double>(n), t_probe);
    const double p0 = traj.states.back().p[0];
    CHECK(std::abs(p0 - 0.5 * (1.0 + std::exp(-2.0 * w * t_probe))) < 1e-8);
}

TEST_CASE("trajectory conserves probability") {
    const QubitSpec q = lzs::testing::fig2_qubit();
    const DriveSpec d{0.16, 4.0, 2.0, 0.05};
    const CrossingChannel c02 = channel(q, d, 0, 2);
    const CrossingChannel c12 = channel(q, d, 1, 2);
    const double w02 = lz_rate(RateParams{c02.crossing.gap, c02.epsilon, c02.amplitude, d.omega, d.gamma2});
    const double w12 = lz_rate(RateParams{c12.crossing.gap, c12.epsilon, c12.amplitude, d.omega, d.gamma2});
    const RateMatrix g = first_diamond_generator(w02, w12, q.gamma10, q.gamma20);
    const Trajectory traj = integrate(g, PopulationVector{}, 0.05 / max_outflow(g), 200.0);
    for (const auto& s : traj.states) CHECK(std::abs(s.sum() - 1.0) < 1e-9);
}

TEST_CASE("step size above the stability bound is rejected") {
    const RateMatrix g = two_state_exchange(1.0);
    CHECK_THROWS_AS(integrate(g, PopulationVector{}, 0.2, 1.0), step_size_error);
    CHECK_THROWS_AS(integrate(g, PopulationVector{}, 0.0, 1.0), step_size_error);
}

TEST_CASE("relaxation reaches the stationary solution") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 30; ++t) {
        TransitionRates r;
        r.w02 = log_uniform(rng, 1e-2, 1.0);
        r.w12 = log_uniform(rng, 1e-2, 1.0);
        r.w03 = log_uniform(rng, 1e-2, 1.0);
        r.w13 = log_uniform(rng, 1e-2, 1.0);
        r.g10 = log_uniform(rng, 1e-2, 1.0);
        r.g20 = log_uniform(rng, 1e-2, 1.0);
        r.g32 = log_uniform(rng, 1e-2, 1.0);
        r.g02 = log_uniform(rng, 1e-2, 1.0);
        const RateMatrix g = combined_generator(r);

        double min_rate = 1e300;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (i != j && g[i][j] > 0.0) min_rate = std::min(min_rate, g[i][j]);
        const double dt = 0.1 / max_outflow(g);
        const double t_max = 50.0 / min_rate;
        const Trajectory traj = integrate(g, PopulationVector{}, dt, t_max);
        CHECK(inf_dist(traj.states.back(), combined_solve(r)) < 1e-6);
    }
}

TEST_CASE("converge returns an already-stationary state unchanged") {
    const RateMatrix g = two_state_exchange(0.5);
    PopulationVector even{{0.5, 0.0, 0.5, 0.0}};
    const PopulationVector out = converge(g, even, 1e-8);
    CHECK(inf_dist(out, even) < 1e-8);
}

TEST_CASE("converge agrees with the first-diamond solve at a driven point") {
    const QubitSpec q = lzs::testing::fig2_qubit();
    const DriveSpec d{0.16, 3.0, 2.0, 0.05};  // on the n = 36 resonance
    const CrossingChannel c02 = channel(q, d, 0, 2);
    const CrossingChannel c12 = channel(q, d, 1, 2);
    const double w02 = lz_rate(RateParams{c02.crossing.gap, c02.epsilon, c02.amplitude, d.omega, d.gamma2});
    const double w12 = lz_rate(RateParams{c12.crossing.gap, c12.epsilon, c12.amplitude, d.omega, d.gamma2});
    const RateMatrix g = first_diamond_generator(w02, w12, q.gamma10, q.gamma20);
    // the slow filling mode is ~1e-4 GHz against a 0.6 GHz rate scale, so the
    // residual target must sit well below tol * gap
    const PopulationVector relaxed = converge(g, PopulationVector{}, 1e-11);
    CHECK(inf_dist(relaxed, first_diamond_solve(w02, w12, q.gamma10, q.gamma20)) < 1e-6);
}

TEST_CASE("halving the step leaves the relaxed state unchanged") {
    const QubitSpec q = lzs::testing::fig2_qubit();
    const RateMatrix g = first_diamond_generator(2e-3, 1e-3, q.gamma10, 1e-3);
    const double dt = 0.1 / max_outflow(g);
    const double t_max = 30.0 / 1e-3;
    const Trajectory a = integrate(g, PopulationVector{}, dt, t_max);
    const Trajectory b = integrate(g, PopulationVector{}, dt / 2.0, t_max);
    CHECK(inf_dist(a.states.back(), b.states.back()) < 1e-8);
}

TEST_CASE("fourth-order accuracy on the analytic two-state decay") {
    const double w = 0.9;
    const RateMatrix g = two_state_exchange(w);
    const double t_end = 2.0;
    auto err_at = [&](double dt) {
        const long n = static_cast<long>(std::round(t_end / dt));
        const Trajectory traj = integrate(g, PopulationVector{}, t_end / static_cast<double>(n), t_end);
        return std::abs(traj.states.back().p[0] - 0.5 * (1.0 + std::exp(-2.0 * w * t_end)));
    };
    const double e1 = err_at(0.05);
    const double e2 = err_at(0.025);
    CHECK(e1 / e2 > 12.0);  // order 4 halving gain ~16
    CHECK(e1 / e2 < 20.0);
}

TEST_CASE("residual decays monotonically after the transient") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 20; ++t) {
        TransitionRates r;
        r.w02 = log_uniform(rng, 1e-2, 1.0);
        r.w12 = log_uniform(rng, 1e-2, 1.0);
        r.g10 = log_uniform(rng, 1e-2, 1.0);
        r.g20 = log_uniform(rng, 1e-2, 1.0);
        r.g32 = log_uniform(rng, 1e-2, 1.0);
        r.w03 = log_uniform(rng, 1e-2, 1.0);
        const RateMatrix g = combined_generator(r);
        const double dt = 0.1 / max_outflow(g);
        const Trajectory traj = integrate(g, PopulationVector{}, dt, 400.0 * dt);

        auto residual = [&](const PopulationVector& s) {
            double m = 0.0;
            for (int i = 0; i < 4; ++i) {
                double acc = 0.0;
                for (int j = 0; j < 4; ++j) acc += g[i][j] * s.p[j];
                m = std::max(m, std::abs(acc));
            }
            return m;
        };
        const std::size_t tail_start = traj.states.size() / 2;
        const double floor = 1e-13 * max_outflow(g);  // roundoff plateau
        double prev = residual(traj.states[tail_start]);
        for (std::size_t k = tail_start + 1; k < traj.states.size(); ++k) {
            const double cur = residual(traj.states[k]);
            if (cur > floor || prev > floor) CHECK(cur <= prev * (1.0 + 1e-9) + floor);
            prev = cur;
        }
    }
}

TEST_CASE("converge raises on an exhausted budget") {
    // glacial leak next to a fast exchange: residual floor sits above target
    RateMatrix g = two_state_exchange(1.0);
    g[0][1] = 1e-280;
    g[1][1] = -1e-280;
    g[0][3] = 1e-280;
    g[3][3] = -1e-280;
    PopulationVector uneven{{0.9, 0.05, 0.0, 0.05}};
    CHECK_THROWS_AS(converge(g, uneven, 1e-300), convergence_error);
}
