#include "fracpart/partition.hpp"

#include <numeric>

namespace fracpart {

std::uint64_t Partition::sum() const {
    return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
}

bool Partition::valid() const {
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1]) return false;
    return parts.empty() || parts.back() >= 1;
}

FrequencyVector frequencies(const Partition& p) {
    FrequencyVector f;
    for (auto part : p.parts) ++f[part];
    return f;
}

Rat weight(const Partition& p, WeightScheme s) {
    Int denom = 1;
    switch (s) {
        case WeightScheme::ReciprocalProduct:
            for (auto part : p.parts) denom *= part;
            break;
        case WeightScheme::CycleIndex:
            for (auto [i, a] : frequencies(p)) {
                Int t;
                mpz_ui_pow_ui(t.get_mpz_t(), i, a);  // i^a
                denom *= t;
                mpz_fac_ui(t.get_mpz_t(), a);  // a!
                denom *= t;
            }
            break;
        case WeightScheme::FactorialCycle:
            for (auto [i, a] : frequencies(p)) {
                Int fac;
                mpz_fac_ui(fac.get_mpz_t(), i);  // i!
                Int t;
                mpz_pow_ui(t.get_mpz_t(), fac.get_mpz_t(), a);
                denom *= t;
                mpz_fac_ui(t.get_mpz_t(), a);
                denom *= t;
            }
            break;
    }
    Rat w(1, denom);
    w.canonicalize();
    return w;
}

PartitionStream::PartitionStream(std::uint64_t n) : n_(n) {}

bool PartitionStream::next(Partition& out) {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        parts_.clear();
        if (n_ > 0) parts_.assign(1, static_cast<std::uint32_t>(n_));
        out.parts = parts_;
        if (n_ == 0) done_ = true;
        return true;
    }
    // Successor in reverse-lex order: strip trailing 1s, decrement the last
    // part > 1, refill greedily with that size.
    std::uint64_t rem = 0;
    while (!parts_.empty() && parts_.back() == 1) {
        parts_.pop_back();
        ++rem;
    }
    if (parts_.empty()) {
        done_ = true;
        return false;
    }
    std::uint32_t m = --parts_.back();
    rem += 1;
    while (rem > m) {
        parts_.push_back(m);
        rem -= m;
    }
    if (rem > 0) parts_.push_back(static_cast<std::uint32_t>(rem));
    out.parts = parts_;
    return true;
}

Rat brute_force_sum(std::uint64_t n, WeightScheme s, std::uint64_t cap) {
    if (n > cap)
        throw BudgetError("brute_force_sum: n = " + std::to_string(n) +
                          " exceeds enumeration cap " + std::to_string(cap));
    Rat total = 0;
    PartitionStream stream(n);
    Partition p;
    while (stream.next(p)) total += weight(p, s);
    return total;
}

std::uint64_t PartitionTable::row_sum(std::uint32_t n) const {
    return std::accumulate(rows[n - 1].begin(), rows[n - 1].end(), std::uint64_t{0});
}

PartitionTable p_table(std::uint32_t N) {
    PartitionTable t{N, {}};
    t.rows.resize(N);
    for (std::uint32_t n = 1; n <= N; ++n) {
        t.rows[n - 1].assign(n, 0);
        t.rows[n - 1][0] = 1;  // p(n,1) = 1
        for (std::uint32_t k = 2; k <= n; ++k)
            t.rows[n - 1][k - 1] = t.at(n - 1, k - 1) + (n >= k ? t.at(n - k, k) : 0);
    }
    return t;
}

std::vector<int> mobius_sieve(std::uint32_t N) {
    std::vector<std::uint32_t> spf(N + 1, 0);
    std::vector<std::uint32_t> primes;
    std::vector<int> mu(N + 1, 0);
    if (N >= 1) mu[1] = 1;
    for (std::uint32_t i = 2; i <= N; ++i) {
        if (spf[i] == 0) {
            spf[i] = i;
            primes.push_back(i);
            mu[i] = -1;
        }
        for (auto p : primes) {
            if (static_cast<std::uint64_t>(p) * i > N) break;
            spf[p * i] = p;
            if (p == spf[i]) {
                mu[p * i] = 0;
                break;
            }
            mu[p * i] = -mu[i];
        }
    }
    mu.erase(mu.begin());  // 1-based result: mu[i-1] = mu(i)
    return mu;
}

std::vector<std::int64_t> mertens(std::uint32_t N) {
    auto mu = mobius_sieve(N);
    std::vector<std::int64_t> m(N);
    std::int64_t acc = 0;
    for (std::uint32_t i = 0; i < N; ++i) {
        acc += mu[i];
        m[i] = acc;
    }
    return m;
}

}  // namespace fracpart
