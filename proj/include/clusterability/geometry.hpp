#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "clusterability/dataset.hpp"
#include "clusterability/kernels.hpp"

namespace clusterability {

using kernels::Exec;

/// Per-cluster summary measured around the cluster centroid.
struct ClusterStats {
    std::vector<double> centroid;
    std::size_t cardinality = 0;
    double enclosing_radius = 0.0;  // max member distance to the centroid
    double variance = 0.0;          // mean squared member distance to the centroid
};

/// Surface gaps g_pq = |mu_p - mu_q| - r_p - r_q between enclosing balls.
struct GapReport {
    std::size_t k = 0;
    std::vector<double> pair_gaps;  // k x k, row-major, diagonal NaN
    double min_gap = 0.0;
    std::size_t min_p = 0;
    std::size_t min_q = 0;

    double gap(std::size_t p, std::size_t q) const { return pair_gaps[p * k + q]; }
};

/// Arithmetic means of the clusters, one row per cluster index.
Dataset centroids(const Dataset& data, const Partition& partition);

std::vector<ClusterStats> compute_stats(const Dataset& data, const Partition& partition);

/// sum_i |x_i - mu_{label(i)}|^2.
double cost_centroid(const Dataset& data, const Partition& partition, Exec exec = Exec::parallel);

/// sum_j (1/n_j) sum over unordered pairs {i, l} in C_j of |x_i - x_l|^2.
double cost_pairwise(const Dataset& data, const Partition& partition, Exec exec = Exec::parallel);

/// Gaps between balls of the given radii centered at the given points; needs >= 2 balls.
GapReport ball_gaps(const std::vector<std::vector<double>>& centers, std::span<const double> radii);

GapReport gap_report(std::span<const ClusterStats> stats);

}  // namespace clusterability
