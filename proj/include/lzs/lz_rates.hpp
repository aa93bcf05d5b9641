#pragma once

namespace lzs {

/// Inputs of the dephasing-broadened multiphoton LZ rate.
struct RateParams {
    double gap = 0.0;        // Delta_ij, GHz
    double epsilon = 0.0;    // dc energy detuning, GHz, signed
    double amplitude = 0.0;  // drive amplitude in energy units, GHz, >= 0
    double omega = 0.0;      // drive frequency, GHz, > 0
    double gamma2 = 0.0;     // dephasing rate, GHz, > 0
};

/// W = (gap^2/2) * sum_n gamma2 * J_n(x)^2 / ((eps - n*omega)^2 + gamma2^2)
/// with x = amplitude/omega, |n| <= truncation_order(x). GHz, >= 0.
double lz_rate(const RateParams& p);

namespace detail {
/// Same sum truncated at a caller-chosen order (tail-bound checks).
double lz_rate_truncated(const RateParams& p, int order);
}  // namespace detail

}  // namespace lzs
