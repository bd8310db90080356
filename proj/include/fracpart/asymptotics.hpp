#pragma once

#include <cstdint>

#include "fracpart/frac_dp.hpp"

namespace fracpart {

namespace constants {
inline constexpr double kEulerGamma = 0.5772156649015328606;
inline constexpr double kExpNegGamma = 0.5614594835668851698;   // e^{-gamma}
inline constexpr double kExpEMinusOne = 5.5749415247608806;     // e^{e-1}
}  // namespace constants

/// Two-point fit of ratio(n) ~ c0 + c1/n through (n1, r1) and (n2, r2).
struct AnsatzFit {
    std::uint32_t n1, n2;
    double c0;  // limit estimate
    double c1;  // 1/n correction
};

/// Exact 2x2 solve; throws std::invalid_argument when n1 == n2.
AnsatzFit ansatz_fit(std::uint32_t n1, double r1, std::uint32_t n2, double r2);

/// exp(log m - H_m), the m-th partial evaluation of the harmonic product
/// whose limit is e^{-gamma}. H_m summed in increasing order.
double gamma_product_partial(std::uint64_t m);

/// Combined convergence report at N: the raw ratio b(N)/N, the two-point
/// fit at (N-1, N), and each one's gap to e^{-gamma}.
struct CReport {
    std::uint32_t N;
    double raw_ratio;
    double c0;
    double c1;
    double raw_gap;     // |raw_ratio - e^{-gamma}|
    double ansatz_gap;  // |c0 - e^{-gamma}|
};

CReport estimate_C(std::uint32_t N, bool compensated = false);
CReport estimate_C(const BnSeriesFloat& bn);

/// Composite trapezoid over the sample grid, with the leftmost sample value
/// extended to x = 0. Requires at least 10 grid points.
double integrate_f(const FxSample& s);

}  // namespace fracpart
