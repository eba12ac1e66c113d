#include <cmath>
#include <cstdint>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "clusterability/kernels.hpp"
#include "kernel_detail.hpp"

namespace clusterability::kernels {

int max_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace parallel {

void assign_nearest(const Dataset& data, const Dataset& centers, std::span<std::size_t> labels,
                    std::span<double> sq_dist) {
    const auto n = static_cast<std::int64_t>(data.size());
    const std::size_t k = centers.size();
#pragma omp parallel for schedule(static)
    for (std::int64_t ii = 0; ii < n; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
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
    const auto n = static_cast<std::int64_t>(data.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t ii = 0; ii < n; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        const double d = squared_distance(data.point(i), center);
        if (d < min_sq[i]) min_sq[i] = d;
    }
}

void sq_dist_to_assigned(const Dataset& data, const Dataset& centers,
                         std::span<const std::size_t> labels, std::span<double> out) {
    const auto n = static_cast<std::int64_t>(data.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t ii = 0; ii < n; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        out[i] = squared_distance(data.point(i), centers.point(labels[i]));
    }
}

void same_cluster_pair_sums(const Dataset& data, std::span<const std::size_t> labels,
                            std::span<double> row_sums) {
    const std::size_t n = data.size();
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t ii = 0; ii < static_cast<std::int64_t>(n); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        double s = 0.0;
        const auto p = data.point(i);
        for (std::size_t l = i + 1; l < n; ++l) {
            if (labels[l] == labels[i]) s += squared_distance(p, data.point(l));
        }
        row_sums[i] = s;
    }
}

double max_pairwise_distance(const Dataset& data) {
    const std::size_t n = data.size();
    double best = 0.0;
#pragma omp parallel for schedule(dynamic, 16) reduction(max : best)
    for (std::int64_t ii = 0; ii < static_cast<std::int64_t>(n); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        for (std::size_t l = i + 1; l < n; ++l) {
            best = std::max(best, squared_distance(data.point(i), data.point(l)));
        }
    }
    return std::sqrt(best);
}

std::vector<std::uint64_t> pairwise_distance_counts(const Dataset& data, std::size_t bins,
                                                    double upper) {
    const std::size_t n = data.size();
    std::vector<std::uint64_t> counts(bins, 0);
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(bins, 0);
#pragma omp for schedule(dynamic, 16) nowait
        for (std::int64_t ii = 0; ii < static_cast<std::int64_t>(n); ++ii) {
            const auto i = static_cast<std::size_t>(ii);
            for (std::size_t l = i + 1; l < n; ++l) {
                ++local[detail::bin_index(distance(data.point(i), data.point(l)), upper, bins)];
            }
        }
#pragma omp critical
        for (std::size_t b = 0; b < bins; ++b) counts[b] += local[b];
    }
    return counts;
}

namespace {

void collect_prefixes(detail::PartitionEnumerator& walker, std::size_t depth,
                      std::vector<std::vector<std::size_t>>& out) {
    if (!walker.feasible()) return;
    if (walker.depth() == depth) {
        out.emplace_back(walker.prefix().begin(), walker.prefix().end());
        return;
    }
    const std::size_t limit = walker.max_next_label();
    for (std::size_t b = 0; b <= limit; ++b) {
        walker.push(b);
        collect_prefixes(walker, depth, out);
        walker.pop();
    }
}

}  // namespace

EnumerationResult enumerate_partitions(const Dataset& data, std::size_t k) {
    detail::check_enumeration_args(data, k);

    // Split the walk into independent subtrees at the shallowest depth that
    // yields enough tasks; prefixes come out in serial-walk order.
    const std::size_t wanted = 16 * static_cast<std::size_t>(max_threads());
    std::vector<std::vector<std::size_t>> prefixes;
    for (std::size_t depth = 1; depth <= data.size(); ++depth) {
        prefixes.clear();
        detail::PartitionEnumerator walker(data, k);
        collect_prefixes(walker, depth, prefixes);
        if (prefixes.size() >= wanted) break;
    }

    std::vector<EnumerationResult> partial(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(prefixes.size()); ++t) {
        detail::PartitionEnumerator walker(data, k);
        for (std::size_t b : prefixes[static_cast<std::size_t>(t)]) walker.push(b);
        walker.search();
        partial[static_cast<std::size_t>(t)] = walker.best();
    }

    EnumerationResult best;
    best.cost = std::numeric_limits<double>::infinity();
    for (const auto& part : partial) {
        best.examined += part.examined;
        if (part.cost < best.cost) {
            best.cost = part.cost;
            best.labels = part.labels;
        }
    }
    return best;
}

}  // namespace parallel
}  // namespace clusterability::kernels
