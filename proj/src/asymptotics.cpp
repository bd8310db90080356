#include "fracpart/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace fracpart {

AnsatzFit ansatz_fit(std::uint32_t n1, double r1, std::uint32_t n2, double r2) {
    if (n1 == n2) throw std::invalid_argument("ansatz_fit: singular system, n1 == n2");
    if (!std::isfinite(r1) || !std::isfinite(r2))
        throw std::invalid_argument("ansatz_fit: ratios must be finite");
    double c1 = (r1 - r2) / (1.0 / n1 - 1.0 / n2);
    double c0 = r1 - c1 / n1;
    return AnsatzFit{n1, n2, c0, c1};
}

double gamma_product_partial(std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("gamma_product_partial: m >= 1");
    double h = 0.0;
    for (std::uint64_t n = 1; n <= m; ++n) h += 1.0 / double(n);
    return std::exp(std::log(double(m)) - h);
}

CReport estimate_C(const BnSeriesFloat& bn) {
    if (bn.N < 2) throw std::invalid_argument("estimate_C: need N >= 2");
    const std::uint32_t N = bn.N;
    double r1 = bn.values[N - 1] / (N - 1);
    double r2 = bn.values[N] / N;
    auto fit = ansatz_fit(N - 1, r1, N, r2);
    return CReport{N, r2, fit.c0, fit.c1,
                   std::abs(r2 - constants::kExpNegGamma),
                   std::abs(fit.c0 - constants::kExpNegGamma)};
}

CReport estimate_C(std::uint32_t N, bool compensated) {
    return estimate_C(b_series_float(N, compensated));
}

double integrate_f(const FxSample& s) {
    if (s.grid.size() < 10) throw std::invalid_argument("integrate_f: need at least 10 grid points");
    double total = 0.0;
    // [0, h] takes the leftmost sample value; near 0 the profile is pinned
    // at 1 by b(n,1) = 1 anyway.
    double x_prev = 0.0, f_prev = s.grid.front().second;
    for (auto [x, f] : s.grid) {
        total += 0.5 * (f_prev + f) * (x - x_prev);
        x_prev = x;
        f_prev = f;
    }
    return total;
}

}  // namespace fracpart
