#pragma once

#include <vector>

namespace lzs {

/// Smallest order N such that all |n| > N terms of the rate sum are
/// negligible: N = ceil(x + 10 x^(1/3) + 20).
int truncation_order(double x);

/// Bessel function of the first kind J_n(x), |n| <= 2000, 0 <= x <= 1000,
/// absolute error <= 1e-12. Negative orders via J_{-n} = (-1)^n J_n.
/// Throws std::domain_error outside the contract.
double bessel_j(int n, double x);

/// J_0(x) .. J_{n_max}(x) in one downward-recurrence pass.
/// Same contract as bessel_j.
std::vector<double> bessel_jn(int n_max, double x);

}  // namespace lzs
