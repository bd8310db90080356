#include "fracpart/frac_dp.hpp"

#include <stdexcept>
#include <string>

namespace fracpart {

Rat FracTriangle::row_sum(std::uint32_t n) const {
    Rat s = 0;
    for (const auto& v : rows[n - 1]) s += v;
    return s;
}

FracTriangle bnk_exact(std::uint32_t N, std::uint32_t cap) {
    if (N < 1) throw std::invalid_argument("bnk_exact: N must be >= 1");
    if (N > cap)
        throw BudgetError("bnk_exact: N = " + std::to_string(N) +
                          " exceeds exact cap " + std::to_string(cap));
    FracTriangle t{N, {}};
    t.rows.resize(N);
    for (std::uint32_t n = 1; n <= N; ++n) {
        t.rows[n - 1].assign(n, Rat(0));
        t.rows[n - 1][0] = 1;  // b(n,1) = 1
        for (std::uint32_t k = 2; k <= n; ++k) {
            Rat v = Rat(k - 1, k) * t.at(n - 1, k - 1);
            if (n - k >= k) v += t.at(n - k, k) / k;  // b(n-k,k) = 0 for 0 <= n-k < k
            t.rows[n - 1][k - 1] = v;
        }
    }
    return t;
}

BnSeriesExact b_series_exact(std::uint32_t N, std::uint32_t cap) {
    auto t = bnk_exact(N, cap);
    BnSeriesExact s{N, {}};
    s.values.reserve(N + 1);
    s.values.emplace_back(1);  // b(0): the empty partition
    for (std::uint32_t n = 1; n <= N; ++n) s.values.push_back(t.row_sum(n));
    return s;
}

BnSeriesFloat b_series_float(std::uint32_t N, bool compensated) {
    if (N < 1) throw std::invalid_argument("b_series_float: N must be >= 1");
    std::vector<double> prev(N + 1, 0.0), cur(N + 1, 0.0);
    std::vector<double> b(N + 1, 0.0), comp(compensated ? N + 1 : 0, 0.0);
    b[0] = 1.0;

    auto accumulate = [&](std::uint32_t n, double v) {
        if (!compensated) {
            b[n] += v;
        } else {
            double y = v - comp[n];
            double t = b[n] + y;
            comp[n] = (t - b[n]) - y;
            b[n] = t;
        }
    };

    for (std::uint32_t k = 1; k <= N; ++k) {
        if (k == 1) {
            for (std::uint32_t n = 1; n <= N; ++n) cur[n] = 1.0;
        } else {
            for (std::uint32_t n = 0; n < k; ++n) cur[n] = 0.0;
            const double lead = double(k - 1) / double(k);
            const double inv_k = 1.0 / double(k);
            for (std::uint32_t n = k; n <= N; ++n) {
                double v = lead * prev[n - 1];
                if (n - k >= k) v += inv_k * cur[n - k];
                cur[n] = v;
            }
        }
        for (std::uint32_t n = k; n <= N; ++n) accumulate(n, cur[n]);
        std::swap(prev, cur);
    }
    return BnSeriesFloat{N, std::move(b)};
}

FracTriangleFloat bnk_float(std::uint32_t N) {
    if (N < 1) throw std::invalid_argument("bnk_float: N must be >= 1");
    FracTriangleFloat t{N, {}};
    t.rows.resize(N);
    for (std::uint32_t n = 1; n <= N; ++n) {
        t.rows[n - 1].assign(n, 0.0);
        t.rows[n - 1][0] = 1.0;
        for (std::uint32_t k = 2; k <= n; ++k) {
            double v = (double(k - 1) / k) * t.at(n - 1, k - 1);
            if (n - k >= k) v += t.at(n - k, k) / k;
            t.rows[n - 1][k - 1] = v;
        }
    }
    return t;
}

std::vector<std::pair<std::uint32_t, double>> ratio_series(const BnSeriesFloat& bn) {
    std::vector<std::pair<std::uint32_t, double>> r;
    r.reserve(bn.N);
    for (std::uint32_t n = 1; n <= bn.N; ++n) r.emplace_back(n, bn.values[n] / n);
    return r;
}

std::vector<std::pair<std::uint32_t, Rat>> ratio_series(const BnSeriesExact& bn) {
    std::vector<std::pair<std::uint32_t, Rat>> r;
    r.reserve(bn.N);
    for (std::uint32_t n = 1; n <= bn.N; ++n) r.emplace_back(n, bn.values[n] / n);
    return r;
}

FxSample sample_f(std::uint32_t n, std::uint32_t res_inv) {
    if (res_inv < 1) throw std::invalid_argument("sample_f: resolution must be a unit fraction 1/r, r >= 1");
    if (n < res_inv)
        throw std::invalid_argument("sample_f: need n >= 1/resolution so every grid point hits a column");

    // Column sweep to n, keeping only row n: row[k-1] = b(n,k).
    std::vector<double> prev(n + 1, 0.0), cur(n + 1, 0.0);
    std::vector<double> row(n, 0.0);
    for (std::uint32_t k = 1; k <= n; ++k) {
        if (k == 1) {
            for (std::uint32_t m = 1; m <= n; ++m) cur[m] = 1.0;
        } else {
            for (std::uint32_t m = 0; m < k; ++m) cur[m] = 0.0;
            const double lead = double(k - 1) / double(k);
            const double inv_k = 1.0 / double(k);
            for (std::uint32_t m = k; m <= n; ++m) {
                double v = lead * prev[m - 1];
                if (m - k >= k) v += inv_k * cur[m - k];
                cur[m] = v;
            }
        }
        row[k - 1] = cur[n];
        std::swap(prev, cur);
    }

    FxSample s{n, res_inv, {}};
    s.grid.reserve(res_inv);
    for (std::uint32_t j = 1; j <= res_inv; ++j) {
        // floor(n * j/res_inv) exactly, in integers; j = res_inv gives k = n.
        std::uint64_t k = static_cast<std::uint64_t>(n) * j / res_inv;
        s.grid.emplace_back(double(j) / double(res_inv), row[k - 1]);
    }
    return s;
}

}  // namespace fracpart
