#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fracpart/rational.hpp"

namespace fracpart {

/// Truncated formal power series: coefficients 0..order, nothing beyond.
/// T is Rat (exact) or double. Binary operations require equal orders;
/// truncation never happens silently.
template <typename T>
struct PowerSeries {
    std::uint32_t order;
    std::vector<T> c;  // size order + 1

    explicit PowerSeries(std::uint32_t ord) : order(ord), c(ord + 1, T(0)) {}

    const T& operator[](std::uint32_t i) const { return c[i]; }
    T& operator[](std::uint32_t i) { return c[i]; }
};

using RatSeries = PowerSeries<Rat>;
using FloatSeries = PowerSeries<double>;

template <typename T>
PowerSeries<T> ps_one(std::uint32_t order) {
    PowerSeries<T> r(order);
    r[0] = T(1);
    return r;
}

template <typename T>
void check_orders(const PowerSeries<T>& a, const PowerSeries<T>& b) {
    if (a.order != b.order) throw std::invalid_argument("power series order mismatch");
}

template <typename T>
PowerSeries<T> ps_add(const PowerSeries<T>& a, const PowerSeries<T>& b) {
    check_orders(a, b);
    PowerSeries<T> r(a.order);
    for (std::uint32_t i = 0; i <= a.order; ++i) r[i] = a[i] + b[i];
    return r;
}

template <typename T>
PowerSeries<T> ps_sub(const PowerSeries<T>& a, const PowerSeries<T>& b) {
    check_orders(a, b);
    PowerSeries<T> r(a.order);
    for (std::uint32_t i = 0; i <= a.order; ++i) r[i] = a[i] - b[i];
    return r;
}

/// Cauchy product truncated at the common order.
template <typename T>
PowerSeries<T> ps_mul(const PowerSeries<T>& a, const PowerSeries<T>& b) {
    check_orders(a, b);
    PowerSeries<T> r(a.order);
    for (std::uint32_t i = 0; i <= a.order; ++i) {
        if (a[i] == T(0)) continue;
        for (std::uint32_t j = 0; i + j <= a.order; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

/// Multiplicative inverse; requires a[0] != 0.
template <typename T>
PowerSeries<T> ps_inv(const PowerSeries<T>& a) {
    if (a[0] == T(0)) throw std::invalid_argument("ps_inv: zero constant term");
    PowerSeries<T> r(a.order);
    r[0] = T(1) / a[0];
    for (std::uint32_t n = 1; n <= a.order; ++n) {
        T acc(0);
        for (std::uint32_t j = 1; j <= n; ++j) acc += a[j] * r[n - j];
        r[n] = -acc / a[0];
    }
    return r;
}

/// exp of a series with zero constant term, via the coefficient recurrence
/// for y' = a'y (keeps intermediate rationals small).
template <typename T>
PowerSeries<T> ps_exp(const PowerSeries<T>& a) {
    if (a[0] != T(0)) throw std::invalid_argument("ps_exp: nonzero constant term");
    PowerSeries<T> r(a.order);
    r[0] = T(1);
    for (std::uint32_t n = 1; n <= a.order; ++n) {
        T acc(0);
        for (std::uint32_t j = 1; j <= n; ++j) acc += T(j) * a[j] * r[n - j];
        r[n] = acc / T(n);
    }
    return r;
}

/// log of a series with constant term 1; inverse of ps_exp.
template <typename T>
PowerSeries<T> ps_log(const PowerSeries<T>& a) {
    if (a[0] != T(1)) throw std::invalid_argument("ps_log: constant term must be 1");
    PowerSeries<T> r(a.order);
    for (std::uint32_t n = 1; n <= a.order; ++n) {
        T acc = T(n) * a[n];
        for (std::uint32_t j = 1; j < n; ++j) acc -= T(j) * r[j] * a[n - j];
        r[n] = acc / T(n);
    }
    return r;
}

// ---- generating functions ----

/// prod_{j=1..N} 1/(1 - q^j/j), truncated at N; coefficient n is b(n).
/// Factor j first perturbs coefficient j, so factors j > N are dropped.
RatSeries euler_product_b(std::uint32_t N);

/// (q^k/k) / prod_{j<=k} (1 - q^j/j); coefficient n is b(n,k).
RatSeries gf_bnk(std::uint32_t N, std::uint32_t k);

/// exp(sum q^i/i) = 1/(1-q); every coefficient is 1.
RatSeries cycle_identity_series(std::uint32_t N);

/// exp(exp(q) - 1); coefficient n is Bell(n)/n!.
RatSeries bell_series(std::uint32_t N);

/// Bell(0..N) by the Bell-triangle recurrence (independent of bell_series).
std::vector<Int> bell_triangle(std::uint32_t N);

/// Coefficients of (1-q)^2 * prod 1/(1 - q^j/j): the twisted series whose
/// partial sums telescope to b(m) - b(m-1).
RatSeries twisted_coeffs(std::uint32_t N);

/// Partial sums of the twisted coefficients, both directly summed and in
/// telescoped form, plus the running absolute sum.
struct TwistedTail {
    std::uint32_t m;
    Rat partial_sum;      // sum of c_S(0..m)
    Rat telescoped;       // b(m) - b(m-1)
    Rat abs_partial_sum;  // sum of |c_S(0..m)|
};

std::vector<TwistedTail> twisted_partial_sums(std::uint32_t N);

}  // namespace fracpart
