#include <cmath>
#include <limits>
#include <stdexcept>

#include "clusterability/kernels.hpp"
#include "kernel_detail.hpp"

namespace clusterability::kernels {

double ordered_sum(std::span<const double> values) noexcept {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

namespace serial {

void assign_nearest(const Dataset& data, const Dataset& centers, std::span<std::size_t> labels,
                    std::span<double> sq_dist) {
    const std::size_t k = centers.size();
    for (std::size_t i = 0; i < data.size(); ++i) {
        const auto p = data.point(i);
        std::size_t best = 0;
        double best_d = squared_distance(p, centers.point(0));
        for (std::size_t c = 1; c < k; ++c) {
            const double d = squared_distance(p, centers.point(c));
            if (d < best_d) {
                best_d = d;
                best = c;
            }
        }
        labels[i] = best;
        sq_dist[i] = best_d;
    }
}

void update_min_sq_dist(const Dataset& data, std::span<const double> center,
                        std::span<double> min_sq) {
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double d = squared_distance(data.point(i), center);
        if (d < min_sq[i]) min_sq[i] = d;
    }
}

void sq_dist_to_assigned(const Dataset& data, const Dataset& centers,
                         std::span<const std::size_t> labels, std::span<double> out) {
    for (std::size_t i = 0; i < data.size(); ++i) {
        out[i] = squared_distance(data.point(i), centers.point(labels[i]));
    }
}

void same_cluster_pair_sums(const Dataset& data, std::span<const std::size_t> labels,
                            std::span<double> row_sums) {
    const std::size_t n = data.size();
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        const auto p = data.point(i);
        for (std::size_t l = i + 1; l < n; ++l) {
            if (labels[l] == labels[i]) s += squared_distance(p, data.point(l));
        }
        row_sums[i] = s;
    }
}

double max_pairwise_distance(const Dataset& data) {
    double best = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        for (std::size_t l = i + 1; l < data.size(); ++l) {
            best = std::max(best, squared_distance(data.point(i), data.point(l)));
        }
    }
    return std::sqrt(best);
}

std::vector<std::uint64_t> pairwise_distance_counts(const Dataset& data, std::size_t bins,
                                                    double upper) {
    std::vector<std::uint64_t> counts(bins, 0);
    for (std::size_t i = 0; i < data.size(); ++i) {
        for (std::size_t l = i + 1; l < data.size(); ++l) {
            ++counts[detail::bin_index(distance(data.point(i), data.point(l)), upper, bins)];
        }
    }
    return counts;
}

EnumerationResult enumerate_partitions(const Dataset& data, std::size_t k) {
    detail::check_enumeration_args(data, k);
    detail::PartitionEnumerator walker(data, k);
    walker.search();
    return walker.best();
}

}  // namespace serial
}  // namespace clusterability::kernels
