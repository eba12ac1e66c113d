#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "clusterability/dataset.hpp"
#include "clusterability/geometry.hpp"

namespace clusterability {

/**
 * A synthetic dataset with a known ground-truth partition. Points are stored in
 * consecutive blocks, cluster 0 first.
 *
 * For plain instances per_cluster_radius holds the enclosing radii and
 * realized_min_gap the smallest gap between full enclosing balls. For core
 * instances they refer to the planted cores, and the straggler fields describe
 * the points added outside them.
 */
struct PlantedDataset {
    Dataset dataset;
    Partition planted_partition;
    std::vector<std::vector<double>> planted_centers;
    std::vector<double> per_cluster_radius;
    double realized_min_gap = 0.0;
    double required_gap = 0.0;
    double margin = 1.0;
    double center_spacing = 0.0;
    std::uint64_t rng_seed = 0;

    std::optional<double> p_frak;
    std::optional<double> realized_p_frak;  // largest straggler cost share over clusters
    std::vector<std::size_t> straggler_counts;
    std::vector<double> full_radius;  // enclosing radius including stragglers
};

/**
 * Places k balls so that every surface gap is at least margin times the plain
 * required gap and fills each with uniformly drawn points, recentred and scaled
 * so the centroid is the planted center and the farthest member sits exactly at
 * the stated radius. Centers form a regular simplex when dim >= k and a line
 * otherwise, followed by a random rotation.
 *
 * Throws std::invalid_argument for k < 2, dim = 0, margin < 1, mismatched
 * lengths, negative radii or a positive radius on a single-point cluster.
 */
PlantedDataset gen_well_clusterable(std::size_t k, std::span<const std::size_t> cardinalities,
                                    std::span<const double> radii, std::size_t dim, double margin,
                                    std::uint64_t rng_seed);

/**
 * Like gen_well_clusterable, but cardinalities and radii describe the cores and
 * the gap requirement is the core one at p_frak. Each cluster also receives
 * antipodal straggler pairs outside its core and inside a full ball whose
 * surface gap to its neighbours is at least twice the largest core radius. The straggler
 * cost stays just below the p_frak share so the extracted core is exactly the
 * planted one. When no pair fits between the core radius and the full ball the
 * cluster gets none; its extracted core may then drop a few outermost members,
 * and per_cluster_radius reports the extracted radius. realized_p_frak reports
 * the largest straggler share achieved.
 */
PlantedDataset gen_core_clusterable(std::size_t k, std::span<const std::size_t> cardinalities,
                                    std::span<const double> radii, std::size_t dim, double p_frak,
                                    double margin, std::uint64_t rng_seed);

/// n points in the plane, uniform in angle, radius uniform in [R - t/2, R + t/2].
Dataset gen_ring(std::size_t n, double ring_radius, double thickness, std::uint64_t rng_seed);

struct Histogram {
    std::vector<double> bin_edges;  // bins + 1 edges
    std::vector<std::uint64_t> counts;
};

/// Histogram of all n(n-1)/2 pairwise distances over [0, max distance].
Histogram distance_histogram(const Dataset& data, std::size_t bins, Exec exec = Exec::parallel);

/// Number of strict local maxima after merging runs of equal counts; an end run
/// counts when it exceeds its single neighbour.
std::size_t count_local_maxima(std::span<const std::uint64_t> counts);

struct CounterexampleReport {
    Dataset dataset;
    Partition gap_partition;          // big cluster 0, small cluster 1
    Partition alternative_partition;  // -r half alone, +r half merged with the small cluster
    double q_gap = 0.0;
    double q_alt = 0.0;
    double v_d = 0.0;
    double x3_lower_bound = 0.0;
    double r = 0.0;
    double surface_gap = 0.0;
    double gap_multiple = 0.0;
    std::size_t n_big = 0;
    std::size_t n_small = 0;
    std::uint64_t rng_seed = 0;
    bool succeeded = false;  // q_alt < q_gap
};

/**
 * One-dimensional instance: n_big/2 points at -r and n_big/2 at +r (enclosing
 * radius r, V_d = r^2) and n_small points at r + gap_multiple * r. The
 * construction is deterministic; rng_seed is only echoed.
 * Requires r > 0, even n_big >= 2, n_small >= 1 and gap_multiple >= 4.
 */
CounterexampleReport gen_unbalanced_counterexample(double r, double gap_multiple,
                                                   std::size_t n_big, std::size_t n_small,
                                                   std::uint64_t rng_seed = 0);

/// Same layout with the small cluster at an arbitrary centre distance > r from the big centroid.
CounterexampleReport unbalanced_instance(double r, double centre_distance, std::size_t n_big,
                                         std::size_t n_small);

}  // namespace clusterability
