#include <gtest/gtest.h>

#include <cmath>

#include "clusterability/analytics.hpp"
#include "clusterability/engine.hpp"
#include "clusterability/generators.hpp"
#include "clusterability/rng.hpp"
#include "support/test_oracles.hpp"

using namespace clusterability;

namespace {

long double ref_equal(long double k) {
    const long double a = k * k * (k + 1) * (k + 1);
    return std::pow(a / (a + k - 1), k - 1);
}

long double ref_unbalanced(long double k, long double n, long double m, long double big) {
    const long double a = k * k * n * (2 + n / m);
    return std::pow(a / (a + (k - 1) * big), k - 1);
}

long double ref_core(long double k, long double n, long double m, long double big, long double p) {
    const long double a = k * k * (1 + p) * n * (2 + n / m);
    return std::pow(a * (1 - p) / (a + (k - 1) * big), k - 1);
}

}  // namespace

TEST(PSeedEqual, FailureProbabilityBrackets) {
    EXPECT_NEAR(p_seed_equal(2), 36.0 / 37.0, 1e-12);
    EXPECT_LT(1.0 - p_seed_equal(2), 0.03);
    EXPECT_NEAR(p_seed_equal(8), std::pow(5184.0 / 5191.0, 7.0), 1e-12);
    EXPECT_LT(1.0 - p_seed_equal(8), 0.01);
    EXPECT_LT(1.0 - p_seed_equal(30), 0.001);
}

TEST(PSeedEqual, MatchesReferenceAndImprovesWithKFromThree) {
    // 1 - p is about (k-1)^2 / (k^2 (k+1)^2): it rises once from k = 2 to k = 3.
    EXPECT_LT(p_seed_equal(3), p_seed_equal(2));
    double previous_error = 1.0;
    for (std::size_t k = 2; k <= 100; ++k) {
        const double p = p_seed_equal(k);
        EXPECT_NEAR(p, static_cast<double>(ref_equal(static_cast<long double>(k))), 1e-12);
        EXPECT_GT(p, 0.0);
        EXPECT_LE(p, 1.0);
        if (k >= 4) EXPECT_LT(1.0 - p, previous_error) << "k = " << k;
        previous_error = 1.0 - p;
        EXPECT_NEAR(p_seed_equal_approx(k), p, 1e-3);
    }
    EXPECT_THROW(p_seed_equal(1), std::invalid_argument);
}

TEST(PSeedUnbalanced, EqualSizesTrackTheEqualRegime) {
    // With m = M = n/k the failure probabilities differ by a factor near 1 + 1/(k(k+2)).
    for (std::size_t k = 2; k <= 30; ++k) {
        const double kk = static_cast<double>(k);
        const double n = 100.0 * kk;
        const double pu = p_seed_unbalanced(k, n, n / kk, n / kk);
        const double pe = p_seed_equal(k);
        EXPECT_LE(pu, pe) << "k = " << k;
        EXPECT_NEAR((1.0 - pu) / (1.0 - pe), 1.0 + 1.0 / (kk * (kk + 2.0)), 0.05 / kk)
            << "k = " << k;
    }
    EXPECT_NEAR(p_seed_unbalanced(30, 3000, 100, 100), p_seed_equal(30), 1e-5);
    EXPECT_NEAR(p_seed_unbalanced(2, 1000, 500, 500), 32.0 / 33.0, 1e-12);
}

TEST(PSeedUnbalanced, TwentyFoldImbalance) {
    const double base = 500.0;
    const double p = p_seed_unbalanced(2, 1000, base / std::sqrt(20.0), base * std::sqrt(20.0));
    EXPECT_GE(p, 0.95);
    EXPECT_NEAR(p, static_cast<double>(ref_unbalanced(2, 1000, base / std::sqrt(20.0L),
                                                      base * std::sqrt(20.0L))),
                1e-12);
}

TEST(PSeedUnbalanced, DecreasingInBothSizeExtremes) {
    double previous = 2.0;
    for (double big = 250; big <= 400; big += 10) {
        const double p = p_seed_unbalanced(4, 1000, 100, big);
        EXPECT_LT(p, previous);
        previous = p;
    }
    previous = 2.0;
    for (double small = 10; small <= 250; small += 10) {
        const double p = p_seed_unbalanced(4, 1000, small, 400);
        EXPECT_LT(p, previous);
        previous = p;
    }
}

TEST(PSeedUnbalanced, RejectsInconsistentSizes) {
    EXPECT_THROW(p_seed_unbalanced(3, 100, 50, 40), std::invalid_argument);
    EXPECT_THROW(p_seed_unbalanced(3, 100, 0, 40), std::invalid_argument);
    EXPECT_THROW(p_seed_unbalanced(3, 100, 40, 50), std::invalid_argument);  // k m > n
    EXPECT_THROW(p_seed_unbalanced(3, 100, 10, 20), std::invalid_argument);  // n > k M
    EXPECT_THROW(p_seed_unbalanced(1, 100, 100, 100), std::invalid_argument);
}

TEST(PSeedCore, ZeroPFrakEqualsUnbalanced) {
    EXPECT_NEAR(p_seed_core(3, 300, 50, 150, 0.0), p_seed_unbalanced(3, 300, 50, 150), 1e-15);
}

TEST(PSeedCore, MatchesReferenceAndDecreasesInPFrak) {
    double previous = 2.0;
    for (int i = 0; i < 99; ++i) {
        const double p_frak = i / 100.0;
        const double p = p_seed_core(5, 1000, 120, 300, p_frak);
        EXPECT_NEAR(p, static_cast<double>(ref_core(5, 1000, 120, 300, p_frak)), 1e-12);
        EXPECT_LT(p, previous);
        previous = p;
    }
    EXPECT_THROW(p_seed_core(5, 1000, 120, 300, 1.0), std::invalid_argument);
}

TEST(PSeedCore, LargeImbalanceApproachesTheLimit) {
    for (double p_frak : {0.05, 0.1, 0.3}) {
        const double n = 1e6;
        const double p = p_seed_core(3, n, 1, n - 2, p_frak);
        const double limit = p_seed_core_limit(3, p_frak);
        EXPECT_NEAR(p / limit, 1.0, 0.01);
        EXPECT_NEAR(limit, std::pow(1 - p_frak, 2.0), 1e-15);
        EXPECT_NEAR(p_seed_core_approx(3, n, 1, n - 2, p_frak), p, 1e-3);
    }
}

TEST(Repetitions, HandExamples) {
    EXPECT_EQ(required_repetitions(1.0, 0.95).runs, 1u);
    EXPECT_EQ(required_repetitions(0.69, 0.95).runs, 3u);
    EXPECT_EQ(required_repetitions(36.0 / 37.0, 0.95).runs, 1u);
    EXPECT_THROW(required_repetitions(0.0, 0.95), std::invalid_argument);
    EXPECT_THROW(required_repetitions(0.5, 1.0), std::invalid_argument);
    EXPECT_THROW(required_repetitions(0.5, 0.0), std::invalid_argument);
    EXPECT_THROW(required_repetitions(1.5, 0.5), std::invalid_argument);
}

TEST(Repetitions, MinimalAgainstCountingOracle) {
    Rng rng(17);
    for (int t = 0; t < 3000; ++t) {
        const double p = std::max(1e-3, rng.uniform01());
        const double pr = std::clamp(rng.uniform01(), 1e-6, 1 - 1e-6);
        const auto r = required_repetitions(p, pr);
        ASSERT_TRUE(r.reachable);
        EXPECT_EQ(r.runs, oracle_ref::naive_repetitions(p, pr)) << p << " " << pr;
        const double runs = static_cast<double>(r.runs);
        EXPECT_LT(std::pow(1 - p, runs), 1 - pr);
        if (r.runs > 1) EXPECT_GE(std::pow(1 - p, runs - 1), 1 - pr);
    }
}

TEST(Repetitions, CapFlagsUnreachableTargets) {
    const auto r = required_repetitions(1e-9, 0.95);
    EXPECT_FALSE(r.reachable);
    EXPECT_EQ(r.runs, default_max_repetitions);
    const auto small_cap = required_repetitions(0.01, 0.99, 100);
    EXPECT_FALSE(small_cap.reachable);
    EXPECT_EQ(small_cap.runs, 100u);
}

TEST(AnalyzeSeeding, RegimesAndInvariants) {
    const auto eq = analyze_seeding(SeedingRegime::equal, 4, 400, 0, 0, std::nullopt, 0.95);
    EXPECT_DOUBLE_EQ(eq.m, 100.0);
    EXPECT_DOUBLE_EQ(eq.p_single, p_seed_equal(4));
    const auto core = analyze_seeding(SeedingRegime::core, 3, 300, 50, 150, 0.2, 0.9);
    EXPECT_LT(std::pow(1 - core.p_single, static_cast<double>(core.repetitions.runs)), 0.1);
    EXPECT_THROW(analyze_seeding(SeedingRegime::core, 3, 300, 50, 150, std::nullopt, 0.9),
                 std::invalid_argument);
    EXPECT_EQ(parse_seeding_regime("unbalanced"), SeedingRegime::unbalanced);
    EXPECT_THROW(parse_seeding_regime("other"), std::invalid_argument);
}

TEST(Curves, EqualCurveShape) {
    const auto rows = curve_equal(2, 30, 0.95);
    ASSERT_EQ(rows.size(), 29u);
    EXPECT_NEAR(rows[0].p_single, 36.0 / 37.0, 1e-15);
    EXPECT_NEAR(rows[3].g_over_r, 5.0 * std::sqrt(35.0), 1e-12);
    EXPECT_NEAR(rows[3].g_over_r, 29.58, 5e-3);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_GT(rows[i].g_over_r, rows[i - 1].g_over_r);
        if (i >= 2) EXPECT_GT(rows[i].p_single, rows[i - 1].p_single);
    }
    EXPECT_THROW(curve_equal(1, 5, 0.95), std::invalid_argument);
    EXPECT_THROW(curve_equal(6, 5, 0.95), std::invalid_argument);
}

TEST(Curves, UnbalancedAndCoreShapes) {
    const auto unb = curve_unbalanced(3, 900, {1, 2, 5, 10, 20, 50}, 0.95);
    for (std::size_t i = 1; i < unb.size(); ++i) {
        EXPECT_LT(unb[i].p_single, unb[i - 1].p_single);
        EXPECT_GT(unb[i].g_over_r, unb[i - 1].g_over_r);
    }
    std::vector<double> ps;
    for (int i = 0; i <= 10; ++i) ps.push_back(0.05 * i);
    const auto core = curve_core(5, 1000, 1.0, ps, 0.95);
    for (std::size_t i = 1; i < core.size(); ++i) {
        EXPECT_GE(core[i].repetitions.runs, core[i - 1].repetitions.runs);
        EXPECT_LT(core[i].p_single, core[i - 1].p_single);
        EXPECT_LT(core[i].p_limit, core[i - 1].p_limit);
    }
    const auto csv = curve_to_csv(core, SeedingRegime::core);
    EXPECT_EQ(csv.rfind("p_frak,k,g_over_r,p_single,p_approx,p_limit,R,reachable\n", 0), 0u);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 12);
}

TEST(SeedingProperty, EmpiricalFrequencyMeetsTheBound) {
    struct Case {
        std::vector<std::size_t> sizes;
        std::uint64_t seed;
    };
    for (const auto& c : {Case{{40, 40, 40}, 1}, Case{{20, 60, 100}, 2}, Case{{30, 30}, 3}}) {
        const std::size_t k = c.sizes.size();
        const std::vector<double> radii(k, 1.0);
        const auto planted = gen_well_clusterable(k, c.sizes, radii, 3, 1.0, c.seed);
        double n = 0;
        for (auto s : c.sizes) n += static_cast<double>(s);
        const double m = static_cast<double>(*std::min_element(c.sizes.begin(), c.sizes.end()));
        const double big = static_cast<double>(*std::max_element(c.sizes.begin(), c.sizes.end()));
        const double bound = p_seed_unbalanced(k, n, m, big);
        const std::size_t trials = 2000;
        std::size_t hits = 0;
        for (std::size_t t = 0; t < trials; ++t) {
            const auto s = seed_kmeanspp(planted.dataset, k, derive_seed(c.seed, t), Exec::serial);
            std::vector<char> seen(k, 0);
            for (auto idx : s.source_indices) seen[planted.planted_partition.label(idx)] = 1;
            if (std::all_of(seen.begin(), seen.end(), [](char v) { return v != 0; })) ++hits;
        }
        const double freq = static_cast<double>(hits) / trials;
        EXPECT_GE(freq, bound - 3.0 * oracle_ref::binomial_tail_stderr(bound, trials));
    }
}
