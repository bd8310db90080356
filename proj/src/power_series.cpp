#include "fracpart/power_series.hpp"

namespace fracpart {

namespace {

// In-place multiply by the sparse binomial (1 + coeff * q^j), truncated.
void mul_binomial(RatSeries& s, std::uint32_t j, const Rat& coeff) {
    for (std::uint32_t n = s.order; n >= j; --n) {
        s[n] += coeff * s[n - j];
        if (n == j) break;
    }
}

// prod_{j=1..upto} (1 - q^j/j), truncated at order.
RatSeries denominator_product(std::uint32_t order, std::uint32_t upto) {
    auto d = ps_one<Rat>(order);
    for (std::uint32_t j = 1; j <= upto && j <= order; ++j)
        mul_binomial(d, j, Rat(-1, j));
    return d;
}

}  // namespace

RatSeries euler_product_b(std::uint32_t N) {
    return ps_inv(denominator_product(N, N));
}

RatSeries gf_bnk(std::uint32_t N, std::uint32_t k) {
    if (k < 1 || k > N) throw std::invalid_argument("gf_bnk: need 1 <= k <= N");
    auto inv = ps_inv(denominator_product(N, k));
    // shift by q^k/k
    RatSeries r(N);
    for (std::uint32_t n = k; n <= N; ++n) r[n] = inv[n - k] / k;
    return r;
}

RatSeries cycle_identity_series(std::uint32_t N) {
    RatSeries a(N);
    for (std::uint32_t i = 1; i <= N; ++i) a[i] = Rat(1, i);
    return ps_exp(a);
}

RatSeries bell_series(std::uint32_t N) {
    RatSeries a(N);
    Int fac = 1;
    for (std::uint32_t i = 1; i <= N; ++i) {
        fac *= i;
        a[i] = Rat(1, fac);
        a[i].canonicalize();
    }
    return ps_exp(a);
}

std::vector<Int> bell_triangle(std::uint32_t N) {
    std::vector<Int> bell;
    bell.reserve(N + 1);
    std::vector<Int> row{1};
    bell.push_back(1);  // Bell(0)
    for (std::uint32_t n = 1; n <= N; ++n) {
        std::vector<Int> next;
        next.reserve(n + 1);
        next.push_back(row.back());
        for (std::size_t i = 0; i < row.size(); ++i) next.push_back(next.back() + row[i]);
        bell.push_back(next.front());
        row = std::move(next);
    }
    return bell;
}

RatSeries twisted_coeffs(std::uint32_t N) {
    if (N < 2) throw std::invalid_argument("twisted_coeffs: need N >= 2");
    auto s = euler_product_b(N);
    mul_binomial(s, 1, Rat(-1));
    mul_binomial(s, 1, Rat(-1));
    return s;
}

std::vector<TwistedTail> twisted_partial_sums(std::uint32_t N) {
    if (N < 2) throw std::invalid_argument("twisted_partial_sums: need N >= 2");
    auto cs = twisted_coeffs(N);
    auto b = euler_product_b(N);
    std::vector<TwistedTail> out;
    out.reserve(N + 1);
    Rat sum = 0, abs_sum = 0;
    for (std::uint32_t m = 0; m <= N; ++m) {
        sum += cs[m];
        abs_sum += abs(cs[m]);
        Rat tel = (m == 0) ? b[0] : b[m] - b[m - 1];
        out.push_back(TwistedTail{m, sum, tel, abs_sum});
    }
    return out;
}

}  // namespace fracpart
