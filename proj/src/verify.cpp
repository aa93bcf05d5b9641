#include "lzs/verify.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "lzs/bessel.hpp"
#include "lzs/dynamics.hpp"
#include "lzs/lz_rates.hpp"
#include "lzs/steady_state.hpp"

namespace lzs {
namespace {

/// Power-series oracle for J_n, independent of the shipped kernel's
/// downward-recurrence path.
long double oracle_jn(int n, long double x) {
    const long double half = x * 0.5L;
    long double term = 1.0L;
    for (int i = 1; i <= n; ++i) term *= half / static_cast<long double>(i);
    long double sum = term;
    for (int k = 1; k <= 400; ++k) {
        term *= -(half * half) / (static_cast<long double>(k) * static_cast<long double>(n + k));
        sum += term;
        if (fabsl(term) < 1e-30L) break;
    }
    return sum;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

double state_distance(const PopulationVector& a, const PopulationVector& b) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a.p[i] - b.p[i]));
    return m;
}

struct Reporter {
    std::ostream& out;
    bool all_ok = true;

    void line(bool ok, const std::string& what) {
        out << (ok ? "[ok]   " : "[FAIL] ") << what << "\n";
        all_ok = all_ok && ok;
    }
};

void check_oracle_equivalence(Reporter& rep) {
    std::mt19937_64 rng(0x1234abcdULL);
    const double tol_state = 1e-6;
    const int trials = 200;
    const PopulationVector ground;

    auto run = [&](const char* name, auto make) {
        double worst = 0.0;
        for (int t = 0; t < trials; ++t) {
            auto [gen, solved] = make();
            const PopulationVector relaxed = converge(gen, ground, 1e-9);
            worst = std::max(worst, state_distance(relaxed, solved));
        }
        rep.line(worst < tol_state,
                 std::string("stationary vs dynamics, ") + name + ": worst inf-norm " +
                     fmt(worst) + " < 1e-6 over " + std::to_string(trials) + " rate sets");
    };

    run("first diamond", [&] {
        const double w02 = log_uniform(rng, 1e-2, 1.0), w12 = log_uniform(rng, 1e-2, 1.0);
        const double g10 = log_uniform(rng, 1e-2, 1.0), g20 = log_uniform(rng, 1e-2, 1.0);
        return std::pair<RateMatrix, PopulationVector>{first_diamond_generator(w02, w12, g10, g20),
                                                       first_diamond_solve(w02, w12, g10, g20)};
    });
    run("second diamond", [&] {
        const double w03 = log_uniform(rng, 1e-2, 1.0), w12 = log_uniform(rng, 1e-2, 1.0);
        const double g10 = log_uniform(rng, 1e-2, 1.0), g20 = log_uniform(rng, 1e-2, 1.0);
        const double g32 = log_uniform(rng, 1e-2, 1.0);
        return std::pair<RateMatrix, PopulationVector>{
            second_diamond_generator(w03, w12, g10, g20, g32),
            second_diamond_solve(w03, w12, g10, g20, g32)};
    });
    run("combined", [&] {
        TransitionRates r;
        r.w02 = log_uniform(rng, 1e-2, 1.0);
        r.w12 = log_uniform(rng, 1e-2, 1.0);
        r.w03 = log_uniform(rng, 1e-2, 1.0);
        r.w13 = log_uniform(rng, 1e-2, 1.0);
        r.g10 = log_uniform(rng, 1e-2, 1.0);
        r.g20 = log_uniform(rng, 1e-2, 1.0);
        r.g32 = log_uniform(rng, 1e-2, 1.0);
        r.g02 = log_uniform(rng, 1e-2, 1.0);
        return std::pair<RateMatrix, PopulationVector>{combined_generator(r), combined_solve(r)};
    });
}

void check_closed_forms(Reporter& rep) {
    std::mt19937_64 rng(0x9876fedcULL);

    double worst_rel = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const double w02 = log_uniform(rng, 1e-3, 1.0), w12 = log_uniform(rng, 1e-3, 1.0);
        const double g10 = log_uniform(rng, 1e-3, 1.0), g20 = log_uniform(rng, 1e-3, 1.0);
        const double cf = first_diamond_closed_form(w02, w12, g10, g20);
        const double lin = first_diamond_solve(w02, w12, g10, g20).p[2];
        worst_rel = std::max(worst_rel, std::abs(cf - lin) / std::abs(cf));
    }
    rep.line(worst_rel < 1e-10, "first-diamond closed form vs linear solve: worst relative " +
                                    fmt(worst_rel) + " < 1e-10 over 1000 rate sets");

    double worst_approx = 0.0;
    for (int t = 0; t < 500; ++t) {
        const double w03 = log_uniform(rng, 1e-4, 1e-2), w12 = log_uniform(rng, 1e-4, 1e-2);
        const double g20 = log_uniform(rng, 1e-6, 1e-3);
        std::uniform_real_distribution<double> mult(1.0, 10.0);
        const double big = 100.0 * (w03 + w12) * mult(rng);
        const double approx = second_diamond_approx(w03, w12, g20);
        const double exact = second_diamond_solve(w03, w12, big, g20, big).left_well();
        worst_approx = std::max(worst_approx, std::abs(approx - exact) / exact);
    }
    rep.line(worst_approx < 0.05, "left-well approximation vs four-level solve: worst relative " +
                                      fmt(worst_approx) +
                                      " < 0.05 with fast intra-well relaxation (500 rate sets)");
}

void check_bessel(Reporter& rep) {
    rep.line(bessel_j(0, 0.0) == 1.0, "J0(0) == 1 exactly");
    const double at_zero = std::abs(bessel_j(0, 2.404826));
    rep.line(at_zero < 1e-6, "|J0(2.404826)| = " + fmt(at_zero) + " < 1e-6");

    double worst_abs = 0.0;
    for (int n = 0; n <= 50; ++n)
        for (double x = 0.0; x <= 20.0 + 1e-9; x += 0.5) {
            const double err =
                std::abs(bessel_j(n, x) - static_cast<double>(oracle_jn(n, static_cast<long double>(x))));
            worst_abs = std::max(worst_abs, err);
        }
    rep.line(worst_abs < 1e-12, "kernel vs power-series oracle (n <= 50, x <= 20): worst abs " +
                                    fmt(worst_abs) + " < 1e-12");

    std::mt19937_64 rng(0x55aa55aaULL);
    double worst_tail = 0.0;
    for (int t = 0; t < 100; ++t) {
        RateParams p;
        p.gap = log_uniform(rng, 1e-3, 1.0);
        p.gamma2 = log_uniform(rng, 1e-2, 1.0);
        p.omega = log_uniform(rng, 5e-2, 2.0);
        std::uniform_real_distribution<double> xdist(0.0, 500.0);
        p.amplitude = xdist(rng) * p.omega;
        std::uniform_real_distribution<double> edist(-1.5, 1.5);
        p.epsilon = edist(rng) * p.amplitude;
        const int order = truncation_order(p.amplitude / p.omega);
        const double w1 = detail::lz_rate_truncated(p, order);
        const double w2 = detail::lz_rate_truncated(p, 2 * order);
        worst_tail = std::max(worst_tail, std::abs(w2 - w1) / w1);
    }
    rep.line(worst_tail < 1e-10, "rate-sum tail: doubling the truncation order moves W by " +
                                     fmt(worst_tail) + " < 1e-10 relative (100 sets)");
}

}  // namespace

bool run_verify(std::ostream& out) {
    Reporter rep{out};
    check_oracle_equivalence(rep);
    check_closed_forms(rep);
    check_bessel(rep);
    out << (rep.all_ok ? "verify: all checks passed\n" : "verify: FAILURES detected\n");
    return rep.all_ok;
}

}  // namespace lzs
