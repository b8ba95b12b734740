#include "waring/smooth.hpp"

#include "waring/dickman.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

using namespace waring;

TEST_CASE("trial-division smoothness") {
    CHECK(is_smooth(12, 3));      // 2^2 * 3
    CHECK_FALSE(is_smooth(14, 3));  // factor 7
    CHECK(is_smooth(1, 1.5));     // empty factorization
    CHECK(is_smooth(1, 1.0));
    CHECK_FALSE(is_smooth(2, 1.5));
}

TEST_CASE("smooth set construction") {
    SUBCASE("P=10, B=3") {
        const auto set = smooth_set(10.0, std::log(3.0) / std::log(10.0));
        CHECK(set.members == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 8, 9});
        CHECK(set.size() == 7);
    }
    SUBCASE("eta=1 admits everything") {
        const auto set = smooth_set(10.0, 1.0);
        CHECK(set.size() == 10);
        CHECK(set.members.front() == 1);
        CHECK(set.members.back() == 10);
    }
    SUBCASE("B < 2 leaves only 1") {
        const auto set = smooth_set(2.0, 0.5);
        CHECK(set.members == std::vector<std::uint64_t>{1});
    }
}

TEST_CASE("sieve agrees with trial division up to 1e4") {
    const double P = 1e4;
    const double eta = 0.5;
    const auto set = smooth_set(P, eta);
    std::size_t idx = 0;
    for (std::uint64_t m = 1; m <= 10000; ++m) {
        const bool in_set = idx < set.members.size() && set.members[idx] == m;
        if (in_set) ++idx;
        CHECK(in_set == is_smooth(m, set.bound));
    }
    CHECK(idx == set.members.size());
}

TEST_CASE("smooth sets are monotone in eta and P") {
    auto subset = [](const SmoothSet& small, const SmoothSet& big) {
        for (const auto m : small.members)
            if (!big.contains(m)) return false;
        return true;
    };
    const auto a = smooth_set(300.0, 0.3);
    const auto b = smooth_set(300.0, 0.5);
    const auto c = smooth_set(300.0, 0.9);
    CHECK(subset(a, b));
    CHECK(subset(b, c));
    const auto d = smooth_set(500.0, 0.5);
    CHECK(subset(b, d));
}

TEST_CASE("dickman rho") {
    CHECK(dickman_rho(0.0) == 1.0);
    CHECK(dickman_rho(1.0) == 1.0);
    CHECK(dickman_rho(0.3) == 1.0);

    // rho(2) = 1 - ln 2, exactly
    CHECK(std::abs(dickman_rho(2.0) - (1.0 - std::log(2.0))) < 5e-8);
    // rho(3) from an independent high-resolution integration
    CHECK(std::abs(dickman_rho(3.0) - 0.0486083883) < 1e-7);

    SUBCASE("strictly decreasing past 1, positive") {
        double prev = dickman_rho(1.0);
        for (double x = 1.2; x <= 8.0; x += 0.2) {
            const double cur = dickman_rho(x);
            CHECK(cur > 0.0);
            CHECK(cur < prev);
            prev = cur;
        }
    }
    SUBCASE("halving the step moves values by less than 1e-8 on [0,5]") {
        for (const double x : {1.5, 2.0, 2.5, 3.0, 3.7, 4.4, 5.0})
            CHECK(std::abs(dickman_rho(x, 1e-4) - dickman_rho(x, 5e-5)) < 1e-8);
    }
}

TEST_CASE("smooth density tracks dickman") {
    SUBCASE("eta=1 density is 1") {
        const auto rep = smooth_density(1e4, 1.0);
        CHECK(rep.density == 1.0);
    }
    SUBCASE("exact counts at eta=1/2, frozen from independent enumeration") {
        CHECK(smooth_density(1e4, 0.5).count == 3716);
        CHECK(smooth_density(1e5, 0.5).count == 35819);
    }
    SUBCASE("the density sits above rho and converges toward it as P grows") {
        // the second-order term of the smooth-counting asymptotic is positive
        // and of size O(1/log P); at desk scale it is a 10-20% relative effect
        const auto r4 = smooth_density(1e4, 0.5);
        const auto r5 = smooth_density(1e5, 0.5);
        CHECK(r4.density > r4.dickman);
        CHECK(r5.density > r5.dickman);
        CHECK(r5.rel_gap < r4.rel_gap);
        CHECK(r5.rel_gap < 0.20);
    }
    SUBCASE("eta=1/3: exact count, and the same qualitative behaviour") {
        const auto rep = smooth_density(1e5, 1.0 / 3.0);
        CHECK(rep.count == 8740);
        CHECK(rep.dickman == dickman_rho(3.0));
        CHECK(rep.density > rep.dickman);
        const auto rep6 = smooth_density(1e6, 1.0 / 3.0);
        CHECK(rep6.count == 72271);
        CHECK(rep6.rel_gap < rep.rel_gap);
    }
}

TEST_CASE("member cache round-trips") {
    const auto dir = std::filesystem::temp_directory_path() / "waring_cache_test";
    std::filesystem::remove_all(dir);

    const auto fresh = smooth_set_cached(dir.string(), 500.0, 0.5);
    SmoothSet loaded;
    REQUIRE(load_smooth_cache(dir.string(), 500.0, 0.5, loaded));
    CHECK(loaded.members == fresh.members);

    const auto again = smooth_set_cached(dir.string(), 500.0, 0.5);
    CHECK(again.members == fresh.members);

    // a different key misses
    SmoothSet other;
    CHECK_FALSE(load_smooth_cache(dir.string(), 600.0, 0.5, other));
    std::filesystem::remove_all(dir);
}
