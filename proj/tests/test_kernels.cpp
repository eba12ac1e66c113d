#include <gtest/gtest.h>

#include "clusterability/kernels.hpp"
#include "clusterability/rng.hpp"
#include "support/test_oracles.hpp"

using namespace clusterability;
namespace ks = clusterability::kernels;

namespace {

Dataset random_points(std::uint64_t seed, std::size_t n, std::size_t d) {
    Rng rng(seed);
    std::vector<double> c(n * d);
    for (double& v : c) v = rng.normal() * 3.0;
    return Dataset(d, std::move(c));
}

}  // namespace

TEST(KernelParity, AssignNearest) {
    const auto data = random_points(1, 777, 4);
    const auto centers = random_points(2, 9, 4);
    std::vector<std::size_t> ls(data.size()), lp(data.size());
    std::vector<double> ds(data.size()), dp(data.size());
    ks::serial::assign_nearest(data, centers, ls, ds);
    ks::parallel::assign_nearest(data, centers, lp, dp);
    EXPECT_EQ(ls, lp);
    EXPECT_EQ(ds, dp);
}

TEST(KernelParity, AssignNearestBreaksTiesTowardLowestIndex) {
    const auto data = Dataset::from_rows({{0.0}});
    const auto centers = Dataset::from_rows({{1.0}, {-1.0}, {1.0}});
    std::vector<std::size_t> l(1);
    std::vector<double> d(1);
    ks::serial::assign_nearest(data, centers, l, d);
    EXPECT_EQ(l[0], 0u);
    ks::parallel::assign_nearest(data, centers, l, d);
    EXPECT_EQ(l[0], 0u);
}

TEST(KernelParity, MinSqDistanceAndAssignedDistances) {
    const auto data = random_points(3, 500, 3);
    std::vector<double> a(data.size(), 1e300), b(data.size(), 1e300);
    for (std::size_t c = 0; c < 5; ++c) {
        ks::serial::update_min_sq_dist(data, data.point(c * 7), a);
        ks::parallel::update_min_sq_dist(data, data.point(c * 7), b);
    }
    EXPECT_EQ(a, b);

    const auto centers = random_points(4, 3, 3);
    std::vector<std::size_t> labels(data.size());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = i % 3;
    std::vector<double> sa(data.size()), sb(data.size());
    ks::serial::sq_dist_to_assigned(data, centers, labels, sa);
    ks::parallel::sq_dist_to_assigned(data, centers, labels, sb);
    EXPECT_EQ(sa, sb);
}

TEST(KernelParity, PairwiseKernels) {
    const auto data = random_points(5, 400, 5);
    std::vector<std::size_t> labels(data.size());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = (i * 7) % 4;
    std::vector<double> ra(data.size()), rb(data.size());
    ks::serial::same_cluster_pair_sums(data, labels, ra);
    ks::parallel::same_cluster_pair_sums(data, labels, rb);
    EXPECT_EQ(ra, rb);

    const double ms = ks::serial::max_pairwise_distance(data);
    EXPECT_EQ(ms, ks::parallel::max_pairwise_distance(data));
    const auto hs = ks::serial::pairwise_distance_counts(data, 37, ms);
    EXPECT_EQ(hs, ks::parallel::pairwise_distance_counts(data, 37, ms));
    std::uint64_t total = 0;
    for (auto c : hs) total += c;
    EXPECT_EQ(total, data.size() * (data.size() - 1) / 2);
}

TEST(KernelParity, OrderedSumIsLeftToRight) {
    const std::vector<double> v{1e16, 1.0, -1e16, 1.0};
    double expected = 0.0;
    for (double x : v) expected += x;
    EXPECT_EQ(ks::ordered_sum(v), expected);
}

TEST(Enumeration, ExaminesStirlingManyPartitions) {
    for (std::size_t n = 1; n <= 9; ++n) {
        const auto data = random_points(10 + n, n, 2);
        for (std::size_t k = 1; k <= n; ++k) {
            const auto s = ks::serial::enumerate_partitions(data, k);
            const auto p = ks::parallel::enumerate_partitions(data, k);
            EXPECT_EQ(s.examined, oracle_ref::stirling2(n, k)) << n << "," << k;
            EXPECT_EQ(p.examined, s.examined);
            EXPECT_EQ(p.labels, s.labels);
            EXPECT_EQ(p.cost, s.cost);
        }
    }
}

TEST(Enumeration, MatchesNaiveLabelingSearch) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto data = random_points(seed + 100, 7, 2);
        const auto pts = oracle_ref::to_points(data);
        for (std::size_t k = 2; k <= 3; ++k) {
            const auto got = ks::parallel::enumerate_partitions(data, k);
            const auto ref = oracle_ref::naive_optimum(pts, k);
            EXPECT_NEAR(got.cost, ref.cost, 1e-9 * std::max(1.0, ref.cost));
            EXPECT_TRUE(equivalent(Partition(got.labels, k), Partition(ref.labels, k)));
        }
    }
}

TEST(Enumeration, LabelsAreRestrictedGrowthStrings) {
    const auto data = random_points(77, 8, 3);
    const auto r = ks::parallel::enumerate_partitions(data, 3);
    std::size_t next = 0;
    for (auto l : r.labels) {
        ASSERT_LE(l, next);
        if (l == next) ++next;
    }
    EXPECT_EQ(next, 3u);
}

TEST(Enumeration, RejectsBadK) {
    const auto data = random_points(1, 4, 1);
    EXPECT_THROW(ks::serial::enumerate_partitions(data, 0), std::invalid_argument);
    EXPECT_THROW(ks::parallel::enumerate_partitions(data, 5), std::invalid_argument);
}
