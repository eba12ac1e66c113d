#include "clusterability/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace clusterability {

Dataset centroids(const Dataset& data, const Partition& partition) {
    validate(data, partition);
    const std::size_t k = partition.k();
    const std::size_t dim = data.dim();
    std::vector<double> sums(k * dim, 0.0);
    const auto counts = partition.cardinalities();
    for (std::size_t i = 0; i < data.size(); ++i) {
        const auto p = data.point(i);
        auto* s = sums.data() + partition.label(i) * dim;
        for (std::size_t j = 0; j < dim; ++j) s[j] += p[j];
    }
    for (std::size_t c = 0; c < k; ++c) {
        const double inv = 1.0 / static_cast<double>(counts[c]);
        for (std::size_t j = 0; j < dim; ++j) sums[c * dim + j] *= inv;
    }
    return Dataset(dim, std::move(sums));
}

std::vector<ClusterStats> compute_stats(const Dataset& data, const Partition& partition) {
    const Dataset centers = centroids(data, partition);
    const auto counts = partition.cardinalities();
    std::vector<ClusterStats> stats(partition.k());
    for (std::size_t c = 0; c < partition.k(); ++c) {
        const auto mu = centers.point(c);
        stats[c].centroid.assign(mu.begin(), mu.end());
        stats[c].cardinality = counts[c];
    }
    std::vector<double> max_sq(partition.k(), 0.0);
    std::vector<double> sum_sq(partition.k(), 0.0);
    for (std::size_t i = 0; i < data.size(); ++i) {
        const std::size_t c = partition.label(i);
        const double d = squared_distance(data.point(i), centers.point(c));
        max_sq[c] = std::max(max_sq[c], d);
        sum_sq[c] += d;
    }
    for (std::size_t c = 0; c < partition.k(); ++c) {
        stats[c].enclosing_radius = std::sqrt(max_sq[c]);
        stats[c].variance = sum_sq[c] / static_cast<double>(counts[c]);
    }
    return stats;
}

double cost_centroid(const Dataset& data, const Partition& partition, Exec exec) {
    const Dataset centers = centroids(data, partition);
    std::vector<double> per_point(data.size());
    kernels::sq_dist_to_assigned(exec, data, centers, partition.labels(), per_point);
    return kernels::ordered_sum(per_point);
}

double cost_pairwise(const Dataset& data, const Partition& partition, Exec exec) {
    validate(data, partition);
    std::vector<double> rows(data.size());
    kernels::same_cluster_pair_sums(exec, data, partition.labels(), rows);
    std::vector<double> per_cluster(partition.k(), 0.0);
    for (std::size_t i = 0; i < data.size(); ++i) per_cluster[partition.label(i)] += rows[i];
    const auto counts = partition.cardinalities();
    double total = 0.0;
    for (std::size_t c = 0; c < partition.k(); ++c) {
        total += per_cluster[c] / static_cast<double>(counts[c]);
    }
    return total;
}

GapReport ball_gaps(const std::vector<std::vector<double>>& centers, std::span<const double> radii) {
    const std::size_t k = centers.size();
    if (k < 2) {
        throw std::invalid_argument("gap report needs at least 2 clusters");
    }
    if (radii.size() != k) {
        throw std::invalid_argument("gap report needs one radius per center");
    }
    GapReport report;
    report.k = k;
    report.pair_gaps.assign(k * k, std::numeric_limits<double>::quiet_NaN());
    report.min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < k; ++p) {
        for (std::size_t q = p + 1; q < k; ++q) {
            const double g = distance(centers[p], centers[q]) - radii[p] - radii[q];
            report.pair_gaps[p * k + q] = g;
            report.pair_gaps[q * k + p] = g;
            if (g < report.min_gap) {
                report.min_gap = g;
                report.min_p = p;
                report.min_q = q;
            }
        }
    }
    return report;
}

GapReport gap_report(std::span<const ClusterStats> stats) {
    std::vector<std::vector<double>> centers;
    std::vector<double> radii;
    for (const auto& s : stats) {
        centers.push_back(s.centroid);
        radii.push_back(s.enclosing_radius);
    }
    return ball_gaps(centers, radii);
}

}  // namespace clusterability
