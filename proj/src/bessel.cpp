#include "lzs/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace lzs {
namespace {

constexpr double kMaxOrder = 2000;
constexpr double kMaxArg = 1000.0;
constexpr double kSeriesCutoff = 12.0;  // alternating series stays well-conditioned below this

void check_domain(int n, double x) {
    if (!(x >= 0.0) || x > kMaxArg)
        throw std::domain_error("bessel_j: argument must be in [0, 1000]");
    if (n < -kMaxOrder || n > kMaxOrder)
        throw std::domain_error("bessel_j: order must satisfy |n| <= 2000");
}

/// Ascending power series, long double accumulation.
long double series_jn(int n, long double x) {
    const long double half = x * 0.5L;
    long double t = 1.0L;
    for (int i = 1; i <= n; ++i) {
        t *= half / static_cast<long double>(i);
        if (t == 0.0L) return 0.0L;  // (x/2)^n/n! underflowed; J_n is far below 1e-12
    }
    long double sum = t;
    const long double q = half * half;
    for (int k = 1; k <= 200; ++k) {
        t *= -q / (static_cast<long double>(k) * static_cast<long double>(n + k));
        sum += t;
        if (fabsl(t) < 1e-27L + 1e-22L * fabsl(sum)) break;
    }
    return sum;
}

/// Miller downward recurrence normalized by J0 + 2*sum J_{2k} = 1.
/// Fills out[0..n_max] in one pass.
void miller_jn(int n_max, double x, std::vector<double>& out) {
    const double top = std::max(static_cast<double>(n_max), x);
    int start = static_cast<int>(std::ceil(top + 10.0 * std::cbrt(top) + 50.0));
    if (start % 2 != 0) ++start;

    constexpr long double kRescaleAt = 1e3500L;
    constexpr long double kRescaleBy = 1e-3500L;

    std::vector<long double> buf(static_cast<std::size_t>(n_max) + 1, 0.0L);
    long double fp = 0.0L;     // f_{k+1}
    long double f = 1e-100L;   // f_k, arbitrary seed; normalization removes it
    long double acc = 0.0L;    // 2 * sum of even-order f's, J0 included twice
    for (int k = start; k >= 1; --k) {
        const long double fm = (2.0L * static_cast<long double>(k) / static_cast<long double>(x)) * f - fp;
        fp = f;
        f = fm;
        const int order = k - 1;
        if (order <= n_max) buf[static_cast<std::size_t>(order)] = f;
        if ((order & 1) == 0) acc += 2.0L * f;
        if (fabsl(f) > kRescaleAt) {
            f *= kRescaleBy;
            fp *= kRescaleBy;
            acc *= kRescaleBy;
            for (auto& b : buf) b *= kRescaleBy;
        }
    }
    const long double norm = acc - f;  // f now holds f_0
    for (std::size_t i = 0; i < buf.size(); ++i)
        out[i] = static_cast<double>(buf[i] / norm);
}

}  // namespace

int truncation_order(double x) {
    if (!(x >= 0.0)) throw std::domain_error("truncation_order: x must be >= 0");
    return static_cast<int>(std::ceil(x + 10.0 * std::cbrt(x) + 20.0));
}

double bessel_j(int n, double x) {
    check_domain(n, x);
    const double sign = (n < 0 && (n & 1)) ? -1.0 : 1.0;  // J_{-n} = (-1)^n J_n
    const int m = n < 0 ? -n : n;
    if (x == 0.0) return m == 0 ? 1.0 : 0.0;
    if (x <= kSeriesCutoff) return sign * static_cast<double>(series_jn(m, x));
    std::vector<double> out(static_cast<std::size_t>(m) + 1);
    miller_jn(m, x, out);
    return sign * out[static_cast<std::size_t>(m)];
}

std::vector<double> bessel_jn(int n_max, double x) {
    if (n_max < 0) throw std::domain_error("bessel_jn: n_max must be >= 0");
    check_domain(n_max, x);
    std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
    if (x == 0.0) {
        out[0] = 1.0;
        return out;
    }
    if (x <= kSeriesCutoff) {
        for (int n = 0; n <= n_max; ++n)
            out[static_cast<std::size_t>(n)] = static_cast<double>(series_jn(n, x));
        return out;
    }
    miller_jn(n_max, x, out);
    return out;
}

}  // namespace lzs
