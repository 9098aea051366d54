#include "saplab/stats.hpp"

#include "saplab/conjecture.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

using namespace saplab;

TEST_CASE("histogram hand counts") {
    const std::vector<std::int64_t> primes{2, 3, 5, 7};
    const Histogram h = histogram(primes, 2, std::pair<std::int64_t, std::int64_t>{0, 8});
    CHECK(h.counts == std::vector<std::uint64_t>{2, 2});
    CHECK(h.total == 4);

    const Histogram empty = histogram(std::vector<std::int64_t>{}, 3,
                                      std::pair<std::int64_t, std::int64_t>{0, 9});
    CHECK(empty.counts == std::vector<std::uint64_t>{0, 0, 0});
    CHECK(empty.total == 0);
}

TEST_CASE("histogram derives its range as [min, max+1]") {
    const std::vector<std::int64_t> values{2, 3, 5, 7};
    const Histogram h = histogram(values, 3);
    CHECK(h.lo == 2);
    CHECK(h.hi == 8);
    // width 2: [2,4) {2,3}, [4,6) {5}, [6,8) {7}
    CHECK(h.counts == std::vector<std::uint64_t>{2, 1, 1});
    CHECK(h.total == 4);
}

TEST_CASE("histogram edge semantics") {
    // half-open bins, right-closed final bin: v == hi lands in the last bin
    const std::vector<std::int64_t> values{0, 4, 8};
    const Histogram h = histogram(values, 2, std::pair<std::int64_t, std::int64_t>{0, 8});
    CHECK(h.counts == std::vector<std::uint64_t>{1, 2});
    CHECK(h.total == 3);

    // out-of-range values are not counted
    const std::vector<std::int64_t> mixed{-5, 0, 3, 9, 100};
    const Histogram m = histogram(mixed, 2, std::pair<std::int64_t, std::int64_t>{0, 8});
    CHECK(m.total == 2);
    CHECK(std::accumulate(m.counts.begin(), m.counts.end(), std::uint64_t{0}) == m.total);
}

TEST_CASE("histogram errors") {
    CHECK_THROWS_AS(histogram(std::vector<std::int64_t>{}, 3), std::domain_error);
    CHECK_THROWS_AS(histogram(std::vector<std::int64_t>{1}, 0), std::domain_error);
    CHECK_THROWS_AS(
        histogram(std::vector<std::int64_t>{1}, 2, std::pair<std::int64_t, std::int64_t>{5, 5}),
        std::domain_error);
}

TEST_CASE("histogram edges are evenly spaced and pinned to the range") {
    const Histogram h =
        histogram(std::vector<std::int64_t>{1, 2, 3}, 4, std::pair<std::int64_t, std::int64_t>{0, 10});
    const std::vector<double> e = h.edges();
    REQUIRE(e.size() == 5);
    CHECK(e.front() == 0.0);
    CHECK(e.back() == 10.0);
    CHECK(e[2] == 5.0);
}

TEST_CASE("conservation and permutation invariance") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<std::int64_t> dist(-500, 500);
    std::vector<std::int64_t> values(2'000);
    for (auto& v : values) v = dist(rng);

    const Histogram h = histogram(values, 17);
    CHECK(std::accumulate(h.counts.begin(), h.counts.end(), std::uint64_t{0}) == values.size());

    std::vector<std::int64_t> shuffled = values;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(histogram(shuffled, 17) == h);
}

TEST_CASE("compare_distributions: identical inputs give identical histograms") {
    const std::vector<std::int64_t> values{2, 3, 5, 7, 11, 13};
    const DistributionComparison cmp = compare_distributions(values, values, 4);
    CHECK(cmp.condition == cmp.all);
    CHECK(cmp.condition.edges() == cmp.all.edges());
}

TEST_CASE("compare_distributions: disjoint ranges populate disjoint bins") {
    const std::vector<std::int64_t> low{0, 1, 2, 3};
    const std::vector<std::int64_t> high{1000, 1001, 1002};
    const DistributionComparison cmp = compare_distributions(low, high, 10);
    for (std::size_t i = 0; i < cmp.condition.counts.size(); ++i)
        CHECK((cmp.condition.counts[i] == 0 || cmp.all.counts[i] == 0));
    CHECK(cmp.condition.total == low.size());
    CHECK(cmp.all.total == high.size());
}

TEST_CASE("compare_distributions summary stats") {
    const std::vector<std::int64_t> values{1, 2, 3, 4};
    const DistributionComparison cmp = compare_distributions(values, values, 2);
    CHECK(cmp.condition_stats.count == 4);
    CHECK(cmp.condition_stats.min == 1);
    CHECK(cmp.condition_stats.max == 4);
    CHECK(cmp.condition_stats.mean == doctest::Approx(2.5));
    CHECK(cmp.condition_stats.median == doctest::Approx(2.5));

    const std::vector<std::int64_t> odd{9, 1, 5};
    const DistributionComparison cmp2 = compare_distributions(odd, odd, 2);
    CHECK(cmp2.condition_stats.median == doctest::Approx(5.0));
}

TEST_CASE("compare_distributions rejects empty sides") {
    const std::vector<std::int64_t> some{1};
    CHECK_THROWS_AS(compare_distributions(std::vector<std::int64_t>{}, some, 2),
                    std::domain_error);
    CHECK_THROWS_AS(compare_distributions(some, std::vector<std::int64_t>{}, 2),
                    std::domain_error);
}

TEST_CASE("comparison counts match an independent per-bin recount") {
    const PrimeTable table = sieve(10'000);
    const auto condition = condition_primes(table, WindowMode::strict);
    const std::vector<std::int64_t> cond(condition.begin(), condition.end());
    const std::vector<std::int64_t> all(table.primes.begin(), table.primes.end());
    const DistributionComparison cmp = compare_distributions(cond, all, 20);

    // recount without division: v sits in bin i iff i*span <= (v-lo)*B < (i+1)*span
    auto recount = [&](const std::vector<std::int64_t>& values) {
        const Histogram& h = cmp.condition;
        const unsigned __int128 span = static_cast<std::uint64_t>(h.hi - h.lo);
        std::vector<std::uint64_t> counts(h.counts.size(), 0);
        for (std::int64_t v : values) {
            if (v < h.lo || v > h.hi) continue;
            if (v == h.hi) {
                ++counts.back();
                continue;
            }
            const unsigned __int128 scaled =
                static_cast<unsigned __int128>(static_cast<std::uint64_t>(v - h.lo)) *
                counts.size();
            for (std::size_t i = 0; i < counts.size(); ++i) {
                if (i * span <= scaled && scaled < (i + 1) * span) {
                    ++counts[i];
                    break;
                }
            }
        }
        return counts;
    };

    CHECK(cmp.condition.counts == recount(cond));
    CHECK(cmp.all.counts == recount(all));
}

TEST_CASE("condition primes vs all primes share bit-identical edges") {
    const PrimeTable table = sieve(10'000);
    const auto condition = condition_primes(table, WindowMode::strict);
    REQUIRE(!condition.empty());

    const std::vector<std::int64_t> cond(condition.begin(), condition.end());
    const std::vector<std::int64_t> all(table.primes.begin(), table.primes.end());
    const DistributionComparison cmp = compare_distributions(cond, all, 20);

    CHECK(cmp.condition.edges() == cmp.all.edges());
    CHECK(cmp.condition.counts != cmp.all.counts);  // same edges, different distributions
    CHECK(cmp.condition.total == cond.size());
    CHECK(cmp.all.total == all.size());
    CHECK(std::accumulate(cmp.all.counts.begin(), cmp.all.counts.end(), std::uint64_t{0}) ==
          all.size());
}
