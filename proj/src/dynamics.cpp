#include "lzs/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "lzs/errors.hpp"

namespace lzs {
namespace {

using Vec4 = std::array<double, 4>;

inline Vec4 mat_vec(const RateMatrix& g, const Vec4& p) {
    Vec4 out{};
    for (int i = 0; i < 4; ++i) {
        double s = 0.0;
        for (int j = 0; j < 4; ++j)
            s += g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                 p[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = s;
    }
    return out;
}

/// One classical RK4 step of pdot = G p.
inline void rk4_step(const RateMatrix& g, Vec4& p, double dt) {
    const Vec4 k1 = mat_vec(g, p);
    Vec4 tmp;
    for (int i = 0; i < 4; ++i) tmp[i] = p[i] + 0.5 * dt * k1[i];
    const Vec4 k2 = mat_vec(g, tmp);
    for (int i = 0; i < 4; ++i) tmp[i] = p[i] + 0.5 * dt * k2[i];
    const Vec4 k3 = mat_vec(g, tmp);
    for (int i = 0; i < 4; ++i) tmp[i] = p[i] + dt * k3[i];
    const Vec4 k4 = mat_vec(g, tmp);
    for (int i = 0; i < 4; ++i)
        p[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

inline double inf_norm(const Vec4& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double max_transition_rate(const RateMatrix& g) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) m = std::max(m, g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return m;
}

double min_nonzero_rate(const RateMatrix& g) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const double r = g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (i != j && r > 0.0) m = (m == 0.0) ? r : std::min(m, r);
        }
    return m;
}

}  // namespace

double max_outflow(const RateMatrix& generator) {
    double m = 0.0;
    for (int j = 0; j < 4; ++j)
        m = std::max(m, -generator[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)]);
    return m;
}

Trajectory integrate(const RateMatrix& generator, const PopulationVector& p_init,
                     double dt, double t_max) {
    if (!(dt > 0.0)) throw step_size_error("integrate: dt must be > 0");
    const double outflow = max_outflow(generator);
    if (outflow > 0.0 && dt > 0.1 / outflow)
        throw step_size_error("integrate: dt exceeds the stability bound 0.1/max outflow");

    Trajectory traj;
    const long steps = static_cast<long>(std::ceil(t_max / dt - 1e-12));
    traj.times.reserve(static_cast<std::size_t>(steps) + 1);
    traj.states.reserve(static_cast<std::size_t>(steps) + 1);

    Vec4 p = p_init.p;
    traj.times.push_back(0.0);
    traj.states.push_back(PopulationVector{p});
    for (long s = 1; s <= steps; ++s) {
        rk4_step(generator, p, dt);
        traj.times.push_back(static_cast<double>(s) * dt);
        traj.states.push_back(PopulationVector{p});
    }
    return traj;
}

PopulationVector converge(const RateMatrix& generator, const PopulationVector& p_init,
                          double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("converge: tol must be > 0");
    const double rate_scale = max_transition_rate(generator);
    Vec4 p = p_init.p;
    if (rate_scale == 0.0) return PopulationVector{p};  // nothing moves

    const double target = tol * rate_scale;
    if (inf_norm(mat_vec(generator, p)) < target) return PopulationVector{p};

    const double dt = 0.1 / max_outflow(generator);
    const double horizon = 50.0 / min_nonzero_rate(generator);
    const long budget = std::min<long>(10'000'000, static_cast<long>(std::ceil(horizon / dt)));

    constexpr long kCheckEvery = 32;
    for (long s = 0; s < budget; ++s) {
        rk4_step(generator, p, dt);
        if ((s + 1) % kCheckEvery == 0 && inf_norm(mat_vec(generator, p)) < target)
            return PopulationVector{p};
    }
    if (inf_norm(mat_vec(generator, p)) < target) return PopulationVector{p};
    throw convergence_error("converge: residual target not reached within the step budget");
}

}  // namespace lzs
