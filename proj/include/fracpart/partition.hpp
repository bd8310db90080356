#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fracpart/rational.hpp"

namespace fracpart {

/// A partition of n: parts weakly decreasing, all >= 1.
/// The empty partition is the unique partition of 0.
struct Partition {
    std::vector<std::uint32_t> parts;

    std::uint64_t sum() const;
    bool valid() const;
};

/// Frequency view: part size -> multiplicity (absent sizes omitted).
using FrequencyVector = std::map<std::uint32_t, std::uint32_t>;

FrequencyVector frequencies(const Partition& p);

/// The three per-partition credits.
enum class WeightScheme {
    ReciprocalProduct,  // 1 / (p1 * p2 * ... * pk)
    CycleIndex,         // 1 / prod(i^a_i * a_i!)
    FactorialCycle,     // 1 / prod(i!^a_i * a_i!)
};

/// The credit of p under scheme s. The empty partition gets 1 (empty product).
Rat weight(const Partition& p, WeightScheme s);

/// Streams the partitions of n in reverse-lexicographic order:
/// [n], ..., [1,1,...,1]. For n = 0 yields the single empty partition.
/// Single consumer; call next() until it returns false.
class PartitionStream {
public:
    explicit PartitionStream(std::uint64_t n);

    /// Advances to the next partition; returns false when exhausted.
    bool next(Partition& out);

private:
    std::uint64_t n_;
    bool started_ = false;
    bool done_ = false;
    std::vector<std::uint32_t> parts_;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 45;

/// Sum of weight(p, s) over all partitions of n, by full enumeration.
/// Throws BudgetError when n exceeds the cap.
Rat brute_force_sum(std::uint64_t n, WeightScheme s,
                    std::uint64_t cap = kDefaultEnumerationCap);

/// p(n,k) = number of partitions of n with largest part k, for 1 <= k <= n <= N.
/// rows[n-1][k-1] = p(n,k); row sums give p(n). Values overflow 64 bits
/// around N = 400; callers stay well below that.
struct PartitionTable {
    std::uint32_t N;
    std::vector<std::vector<std::uint64_t>> rows;

    std::uint64_t at(std::uint32_t n, std::uint32_t k) const {
        return k > n ? 0 : rows[n - 1][k - 1];
    }
    std::uint64_t row_sum(std::uint32_t n) const;
};

PartitionTable p_table(std::uint32_t N);

/// Mobius function mu(1..N) by smallest-prime-factor sieve.
std::vector<int> mobius_sieve(std::uint32_t N);

/// Mertens function M(1..N), prefix sums of mu. result[n-1] = M(n).
std::vector<std::int64_t> mertens(std::uint32_t N);

}  // namespace fracpart
