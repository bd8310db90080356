#pragma once

#include <cstdint>
#include <vector>

#include "fracpart/rational.hpp"

namespace fracpart {

// b(n,k): the reciprocal-product-weighted count of partitions of n with
// largest part k. Recurrence:
//   b(n,k) = ((k-1)/k) * b(n-1,k-1) + (1/k) * b(n-k,k)
// with b(n,1) = 1 and b(n,k) = 0 for k > n.

inline constexpr std::uint32_t kDefaultExactCap = 400;

/// Exact triangle b(n,k) for 1 <= k <= n <= N. rows[n-1][k-1] = b(n,k).
struct FracTriangle {
    std::uint32_t N;
    std::vector<std::vector<Rat>> rows;

    const Rat& at(std::uint32_t n, std::uint32_t k) const {
        return rows[n - 1][k - 1];
    }
    Rat row_sum(std::uint32_t n) const;
};

/// Throws BudgetError when N exceeds the cap (numerators grow fast).
FracTriangle bnk_exact(std::uint32_t N, std::uint32_t cap = kDefaultExactCap);

/// b(0..N) as exact rationals; b(0) = 1, b(n) = sum_k b(n,k).
struct BnSeriesExact {
    std::uint32_t N;
    std::vector<Rat> values;  // index n
};

BnSeriesExact b_series_exact(std::uint32_t N, std::uint32_t cap = kDefaultExactCap);

/// b(0..N) in 64-bit floats via the column sweep: column k needs only
/// column k-1 (offset 1) and itself (offset k), so memory is O(N) and
/// time O(N^2). Columns accumulate into b(n) in increasing k; Kahan
/// accumulation behind the `compensated` flag.
struct BnSeriesFloat {
    std::uint32_t N;
    std::vector<double> values;  // index n
};

BnSeriesFloat b_series_float(std::uint32_t N, bool compensated = false);

/// Full float triangle, for residual checks at moderate N (O(N^2) memory).
struct FracTriangleFloat {
    std::uint32_t N;
    std::vector<std::vector<double>> rows;

    double at(std::uint32_t n, std::uint32_t k) const {
        return k > n ? 0.0 : rows[n - 1][k - 1];
    }
};

FracTriangleFloat bnk_float(std::uint32_t N);

/// (n, b(n)/n) for 1 <= n <= N.
std::vector<std::pair<std::uint32_t, double>> ratio_series(const BnSeriesFloat& bn);
std::vector<std::pair<std::uint32_t, Rat>> ratio_series(const BnSeriesExact& bn);

/// Grid samples of x -> b(n, floor(n*x)) at x = h, 2h, ..., 1 with h = 1/res_inv.
/// Grid indices floor(n*j/res_inv) are computed in integer arithmetic, so
/// x = 1 lands exactly on k = n.
struct FxSample {
    std::uint32_t n;
    std::uint32_t res_inv;                        // 1/h
    std::vector<std::pair<double, double>> grid;  // (x, b(n, floor(n*x)))
};

/// Requires n >= res_inv so that every grid point has floor(n*x) >= 1.
FxSample sample_f(std::uint32_t n, std::uint32_t res_inv);

}  // namespace fracpart
