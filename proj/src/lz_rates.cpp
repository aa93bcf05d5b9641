#include "lzs/lz_rates.hpp"

#include <stdexcept>
#include <vector>

#include "lzs/bessel.hpp"

namespace lzs {
namespace {

void check_params(const RateParams& p) {
    if (!(p.omega > 0.0)) throw std::invalid_argument("lz_rate: omega must be > 0");
    if (!(p.gamma2 > 0.0)) throw std::invalid_argument("lz_rate: gamma2 must be > 0");
    if (p.amplitude < 0.0) throw std::invalid_argument("lz_rate: amplitude must be >= 0");
    if (p.gap < 0.0) throw std::invalid_argument("lz_rate: gap must be >= 0");
}

double rate_sum(const RateParams& p, int order) {
    const double x = p.amplitude / p.omega;
    const std::vector<double> jn = bessel_jn(order, x);
    const double g2sq = p.gamma2 * p.gamma2;
    double w = 0.0;
    for (int n = -order; n <= order; ++n) {
        const double j = jn[static_cast<std::size_t>(n < 0 ? -n : n)];
        const double d = p.epsilon - static_cast<double>(n) * p.omega;
        w += p.gamma2 * j * j / (d * d + g2sq);
    }
    return 0.5 * p.gap * p.gap * w;
}

}  // namespace

double lz_rate(const RateParams& p) {
    check_params(p);
    if (p.gap == 0.0) return 0.0;
    return rate_sum(p, truncation_order(p.amplitude / p.omega));
}

namespace detail {

double lz_rate_truncated(const RateParams& p, int order) {
    check_params(p);
    if (p.gap == 0.0) return 0.0;
    return rate_sum(p, order);
}

}  // namespace detail
}  // namespace lzs
