#include "lzs/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lzs/errors.hpp"

namespace lzs {
namespace {

void require_nonnegative(std::initializer_list<double> rates, const char* who) {
    for (double r : rates)
        if (r < 0.0 || std::isnan(r)) throw std::invalid_argument(std::string(who) + ": rates must be >= 0");
}

/// Solves G p = 0 with the last equation replaced by sum(p) = 1, for an
/// n x n leading block of a RateMatrix. Partial pivoting, smallest row
/// index wins ties.
std::array<double, 4> solve_stationary_block(const RateMatrix& g, int n) {
    double a[4][5] = {};
    double scale = 0.0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            a[r][c] = g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            scale = std::max(scale, std::abs(a[r][c]));
        }
    for (int c = 0; c < n; ++c) a[n - 1][c] = 1.0;  // conservation row
    a[n - 1][n] = 1.0;
    if (scale == 0.0) throw degenerate_system_error("all-zero generator: stationary state not unique");
    const double tol = 1e-13 * std::max(scale, 1.0);

    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (std::abs(a[pivot][col]) <= tol)
            throw degenerate_system_error("rate system is rank-deficient beyond conservation");
        if (pivot != col)
            for (int c = col; c <= n; ++c) std::swap(a[pivot][c], a[col][c]);
        for (int r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (int c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    std::array<double, 4> p{0.0, 0.0, 0.0, 0.0};
    for (int r = n - 1; r >= 0; --r) {
        double s = a[r][n];
        for (int c = r + 1; c < n; ++c) s -= a[r][c] * p[static_cast<std::size_t>(c)];
        p[static_cast<std::size_t>(r)] = s / a[r][r];
    }
    for (int r = 0; r < n; ++r) {
        double& v = p[static_cast<std::size_t>(r)];
        if (v < 0.0) {
            if (v < -1e-9) throw degenerate_system_error("stationary solve produced a negative population");
            v = 0.0;
        }
    }
    return p;
}

void add_rate(RateMatrix& g, int to, int from, double rate) {
    g[static_cast<std::size_t>(to)][static_cast<std::size_t>(from)] += rate;
    g[static_cast<std::size_t>(from)][static_cast<std::size_t>(from)] -= rate;
}

}  // namespace

RateMatrix first_diamond_generator(double w02, double w12, double g10, double g20) {
    require_nonnegative({w02, w12, g10, g20}, "first_diamond");
    RateMatrix g{};
    add_rate(g, 2, 0, w02);
    add_rate(g, 0, 2, w02);
    add_rate(g, 2, 1, w12);
    add_rate(g, 1, 2, w12);
    add_rate(g, 0, 1, g10);
    add_rate(g, 0, 2, g20);
    return g;  // state 3 disconnected
}

RateMatrix second_diamond_generator(double w03, double w12, double g10, double g20, double g32) {
    require_nonnegative({w03, w12, g10, g20, g32}, "second_diamond");
    RateMatrix g{};
    add_rate(g, 3, 0, w03);
    add_rate(g, 0, 3, w03);
    add_rate(g, 2, 1, w12);
    add_rate(g, 1, 2, w12);
    add_rate(g, 0, 1, g10);
    add_rate(g, 0, 2, g20);
    add_rate(g, 2, 3, g32);
    return g;
}

RateMatrix combined_generator(const TransitionRates& r) {
    require_nonnegative({r.w02, r.w12, r.w03, r.w13, r.g10, r.g20, r.g32, r.g02}, "combined");
    RateMatrix g{};
    add_rate(g, 2, 0, r.w02);
    add_rate(g, 0, 2, r.w02);
    add_rate(g, 3, 0, r.w03);
    add_rate(g, 0, 3, r.w03);
    add_rate(g, 2, 1, r.w12);
    add_rate(g, 1, 2, r.w12);
    add_rate(g, 3, 1, r.w13);
    add_rate(g, 1, 3, r.w13);
    add_rate(g, 2, 0, r.g02);
    add_rate(g, 0, 1, r.g10);
    add_rate(g, 0, 2, r.g20);
    add_rate(g, 2, 3, r.g32);
    return g;
}

PopulationVector stationary_solve(const RateMatrix& generator) {
    PopulationVector out;
    out.p = solve_stationary_block(generator, 4);
    return out;
}

double first_diamond_closed_form(double w02, double w12, double g10, double g20) {
    require_nonnegative({w02, w12, g10, g20}, "first_diamond_closed_form");
    const double num = w02 * (w12 + g10);
    const double den = w12 * (3.0 * w02 + g20) + g10 * (2.0 * w02 + w12 + g20);
    if (den <= 0.0) throw degenerate_system_error("first-diamond closed form: zero denominator");
    return num / den;
}

PopulationVector first_diamond_solve(double w02, double w12, double g10, double g20) {
    const RateMatrix g = first_diamond_generator(w02, w12, g10, g20);
    PopulationVector out;
    auto p = solve_stationary_block(g, 3);
    out.p = {p[0], p[1], p[2], 0.0};
    return out;
}

PopulationVector second_diamond_solve(double w03, double w12, double g10, double g20, double g32) {
    return stationary_solve(second_diamond_generator(w03, w12, g10, g20, g32));
}

double second_diamond_approx(double w03, double w12, double g20) {
    require_nonnegative({w03, w12, g20}, "second_diamond_approx");
    const double den = w03 + w12 + g20;
    if (den <= 0.0) throw degenerate_system_error("second-diamond approximation: zero denominator");
    return w03 / den;
}

PopulationVector combined_solve(const TransitionRates& r) {
    return stationary_solve(combined_generator(r));
}

Regime classify_regime(double w02, double w12, double on_threshold) {
    if (!(on_threshold > 0.0)) throw std::invalid_argument("classify_regime: threshold must be > 0");
    if (w02 < on_threshold) return Regime::closed;
    return w12 < on_threshold ? Regime::two_level : Regime::pumped_back;
}

}  // namespace lzs
