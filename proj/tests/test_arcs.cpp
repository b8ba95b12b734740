#include "waring/arcs.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace waring;

TEST_CASE("classification at rational points") {
    for (const int k : {3, 7})
        for (const double P : {10.0, 100.0}) {
            const auto c = classify(0.5, k, P);
            CHECK(c.major);
            CHECK(c.label.q == 2);
            CHECK(c.label.a == 1);
        }
    SUBCASE("exact centers with small denominator land on a label with q' <= q") {
        const auto c = classify(3.0 / 7.0, 3, 50.0);
        CHECK(c.major);
        CHECK(c.label.q <= 7);
        CHECK(c.distance < 1e-12);
    }
    SUBCASE("alpha = 0 and alpha near 1 use the q = 1 labels") {
        const auto c0 = classify(0.0, 3, 10.0);
        CHECK(c0.major);
        CHECK(c0.label.q == 1);
        CHECK(c0.label.a == 0);
        const auto c1 = classify(0.9999, 3, 10.0);
        CHECK(c1.major);
        CHECK(c1.label.q == 1);
        CHECK(c1.label.a == 1);
    }
}

TEST_CASE("the golden ratio is minor at k=3, P=10") {
    const auto c = classify(0.6180339887, 3, 10.0);
    CHECK_FALSE(c.major);
    // the best approach over q <= 10 is ~0.0557 at q = 8, far above 1/600
    double best = 1.0;
    for (int q = 1; q <= 10; ++q) {
        const double d = std::abs(q * 0.6180339887 - std::round(q * 0.6180339887));
        best = std::min(best, d);
    }
    CHECK(best > 0.05);
    CHECK(best < 0.06);
}

TEST_CASE("continued-fraction classification agrees with exhaustive search") {
    std::mt19937_64 rng(987654);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 4000; ++trial) {
        const double alpha = unif(rng);
        const int k = trial % 2 ? 3 : 7;
        const double P = trial % 3 ? 50.0 : 100.0;
        const auto slow = classify(alpha, k, P);
        const auto fast = classify_convergents(alpha, k, P);
        CHECK(slow.major == fast.major);
        if (slow.major) {
            CHECK(slow.label.q == fast.label.q);
            CHECK(slow.label.a == fast.label.a);
        }
    }
}

TEST_CASE("major arc construction at k=3, P=2") {
    const auto set = major_arcs(3, 2.0);
    REQUIRE(set.intervals.size() == 3);
    // sorted by lo: (1,0), (2,1), (1,1)
    CHECK(set.intervals[0].label.q == 1);
    CHECK(set.intervals[0].label.a == 0);
    CHECK(set.intervals[1].label.q == 2);
    CHECK(set.intervals[1].label.a == 1);
    CHECK(set.intervals[2].label.q == 1);
    CHECK(set.intervals[2].label.a == 1);

    CHECK(set.intervals[0].half_width == doctest::Approx(1.0 / 24).epsilon(1e-12));
    CHECK(set.intervals[1].half_width == doctest::Approx(1.0 / 48).epsilon(1e-12));

    // clipped: [0,1/24], [1/2 - 1/48, 1/2 + 1/48], [1 - 1/24, 1)
    const double measure = arc_measure(set);
    CHECK(measure == doctest::Approx(1.0 / 24 + 1.0 / 24 + 1.0 / 24).epsilon(1e-12));
    CHECK(pairwise_disjoint(set));

    // independent union oracle
    std::vector<std::pair<double, double>> ivals;
    for (const auto& arc : set.intervals) ivals.emplace_back(arc.lo, arc.hi);
    CHECK(measure == doctest::Approx(oracle::union_measure(ivals)).epsilon(1e-14));
}

TEST_CASE("disjointness and measure bounds for k >= 3") {
    for (const int k : {3, 4, 7})
        for (const double P : {10.0, 37.5, 100.0}) {
            const auto set = major_arcs(k, P);
            CHECK(pairwise_disjoint(set));
            const double measure = arc_measure(set);
            CHECK(measure <= std::pow(P, 2 - k));
            // total clipped length equals the union measure when disjoint
            CHECK(measure == doctest::Approx(total_length(set)).epsilon(1e-12));
            // complement sweep: major + minor measures fill [0,1)
            std::vector<std::pair<double, double>> ivals;
            for (const auto& arc : set.intervals) ivals.emplace_back(arc.lo, arc.hi);
            const double minor_measure = 1.0 - oracle::union_measure(ivals);
            CHECK(measure + minor_measure == doctest::Approx(1.0).epsilon(1e-12));
        }
}

TEST_CASE("pruned arcs") {
    SUBCASE("W=2 gives exactly the three narrow intervals") {
        const auto set = pruned_arcs(3, 20.0, 2.0);
        REQUIRE(set.intervals.size() == 3);
        CHECK(set.intervals[0].label.q == 1);
        CHECK(set.intervals[1].label.q == 2);
        CHECK(set.intervals[2].label.q == 1);
        for (const auto& arc : set.intervals)
            CHECK(arc.half_width == doctest::Approx(2.0 / 8000.0).epsilon(1e-12));
    }
    SUBCASE("W=1 keeps only the q=1 endpoints") {
        const auto set = pruned_arcs(3, 20.0, 1.0);
        REQUIRE(set.intervals.size() == 2);
        CHECK(set.intervals[0].label.q == 1);
        CHECK(set.intervals[1].label.q == 1);
    }
    SUBCASE("the pruned set nests inside the major set when widths allow") {
        const int k = 3;
        const double P = 30.0, W = 2.0;
        REQUIRE(W * std::pow(P, -k) <= std::pow(P, 1.0 - k) / (2 * k) / W);
        const auto narrow = pruned_arcs(k, P, W);
        const auto wide = major_arcs(k, P);
        for (const auto& arc : narrow.intervals) {
            bool contained = false;
            for (const auto& big : wide.intervals)
                if (big.lo <= arc.lo && arc.hi <= big.hi) contained = true;
            CHECK(contained);
        }
    }
}

TEST_CASE("classification cross-validates against interval membership") {
    std::mt19937_64 rng(13579);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (const int k : {3, 7}) {
        const double P = 20.0;
        const auto set = major_arcs(k, P);
        for (int trial = 0; trial < 10000; ++trial) {
            const double alpha = unif(rng);
            const auto c = classify(alpha, k, P);
            CHECK(c.major == covers(set, alpha));
        }
    }
}
