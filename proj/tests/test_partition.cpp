#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "fracpart/partition.hpp"
#include "fracpart/power_series.hpp"

using namespace fracpart;

namespace {

std::vector<Partition> collect(std::uint64_t n) {
    std::vector<Partition> out;
    PartitionStream s(n);
    Partition p;
    while (s.next(p)) out.push_back(p);
    return out;
}

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("enumeration of small n") {
    auto p0 = collect(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].parts.empty());

    auto p3 = collect(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0].parts == std::vector<std::uint32_t>{3});
    CHECK(p3[1].parts == std::vector<std::uint32_t>{2, 1});
    CHECK(p3[2].parts == std::vector<std::uint32_t>{1, 1, 1});

    CHECK(collect(10).size() == 42);
}

TEST_CASE("enumeration count equals p_table row sums up to 50") {
    auto t = p_table(50);
    for (std::uint32_t n = 1; n <= 50; ++n) {
        std::uint64_t count = 0;
        PartitionStream s(n);
        Partition p;
        while (s.next(p)) ++count;
        CHECK(count == t.row_sum(n));
    }
}

TEST_CASE("enumeration is strictly decreasing reverse-lex, partitions valid") {
    for (std::uint32_t n : {1u, 5u, 12u, 20u}) {
        auto all = collect(n);
        for (std::size_t i = 0; i < all.size(); ++i) {
            CHECK(all[i].valid());
            CHECK(all[i].sum() == n);
            if (i > 0) CHECK(all[i].parts < all[i - 1].parts);  // lexicographic on parts
        }
    }
}

TEST_CASE("weights") {
    Partition p21{{2, 1}};
    CHECK(weight(p21, WeightScheme::ReciprocalProduct) == Rat(1, 2));

    Partition empty{};
    CHECK(weight(empty, WeightScheme::ReciprocalProduct) == 1);
    CHECK(weight(empty, WeightScheme::CycleIndex) == 1);
    CHECK(weight(empty, WeightScheme::FactorialCycle) == 1);

    Partition p11{{1, 1}};
    CHECK(weight(p11, WeightScheme::CycleIndex) == Rat(1, 2));  // 1/(1^2 * 2!)
}

TEST_CASE("brute-force sums: displayed values and the cap") {
    CHECK(brute_force_sum(3, WeightScheme::ReciprocalProduct) == Rat(11, 6));
    CHECK(brute_force_sum(2, WeightScheme::CycleIndex) == 1);
    CHECK(brute_force_sum(3, WeightScheme::FactorialCycle) == Rat(5, 6));
    CHECK(brute_force_sum(0, WeightScheme::ReciprocalProduct) == 1);
    CHECK_THROWS_AS(brute_force_sum(46, WeightScheme::ReciprocalProduct), BudgetError);
    CHECK_NOTHROW(brute_force_sum(46, WeightScheme::CycleIndex, 50));
}

TEST_CASE("cycle-index sums are 1 up to 40") {
    for (std::uint32_t n = 1; n <= 40; ++n)
        CHECK(brute_force_sum(n, WeightScheme::CycleIndex) == 1);
}

TEST_CASE("factorial-cycle sums match the Bell triangle up to 25") {
    auto bell = bell_triangle(25);
    Int fac = 1;
    for (std::uint32_t n = 1; n <= 25; ++n) {
        fac *= n;
        CHECK(brute_force_sum(n, WeightScheme::FactorialCycle) * fac == bell[n]);
    }
}

TEST_CASE("p_table") {
    auto t = p_table(10);
    CHECK(t.at(3, 1) == 1);
    CHECK(t.at(3, 2) == 1);
    CHECK(t.at(3, 3) == 1);
    CHECK(t.row_sum(3) == 3);
    CHECK(t.row_sum(5) == 7);
    CHECK(t.row_sum(10) == 42);
    for (std::uint32_t n = 1; n <= 10; ++n) CHECK(t.at(n, 1) == 1);
    CHECK(t.at(3, 7) == 0);  // k > n
}

TEST_CASE("mobius and mertens") {
    const std::uint32_t N = 1000;
    auto mu = mobius_sieve(N);
    auto m = mertens(N);
    CHECK(m[0] == 1);
    CHECK(m[1] == 0);
    CHECK(m[9] == -1);
    for (std::uint32_t i = 1; i <= N; ++i) {
        CHECK((mu[i - 1] == -1 || mu[i - 1] == 0 || mu[i - 1] == 1));
        if (is_prime(i)) CHECK(mu[i - 1] == -1);
        if (i >= 2) CHECK(m[i - 1] - m[i - 2] == mu[i - 1]);
        CHECK(std::abs(m[i - 1]) <= i);
    }
    // squarefull numbers vanish
    CHECK(mu[4 - 1] == 0);
    CHECK(mu[12 - 1] == 0);
    CHECK(mu[6 - 1] == 1);
}
