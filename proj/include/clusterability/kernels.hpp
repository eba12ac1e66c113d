#pragma once

// Data-parallel inner loops. Every kernel has a serial reference in
// kernels::serial and an OpenMP version in kernels::parallel; the two are
// required to produce bitwise-identical results (reductions over doubles are
// done as a parallel map followed by a serial, index-ordered sum).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "clusterability/dataset.hpp"

namespace clusterability::kernels {

enum class Exec { serial, parallel };

/// Best partition found by exhaustive enumeration of restricted-growth strings.
struct EnumerationResult {
    std::vector<std::size_t> labels;
    double cost = 0.0;  // incremental-sum cost, not re-verified
    std::uint64_t examined = 0;
};

namespace serial {

/// Nearest center per point (ties to the lowest center index) and its squared distance.
void assign_nearest(const Dataset& data, const Dataset& centers,
                    std::span<std::size_t> labels, std::span<double> sq_dist);
/// min_sq[i] = min(min_sq[i], |x_i - center|^2).
void update_min_sq_dist(const Dataset& data, std::span<const double> center,
                        std::span<double> min_sq);
/// out[i] = |x_i - centers[labels[i]]|^2.
void sq_dist_to_assigned(const Dataset& data, const Dataset& centers,
                         std::span<const std::size_t> labels, std::span<double> out);
/// row_sums[i] = sum over l > i with labels[l] == labels[i] of |x_i - x_l|^2.
void same_cluster_pair_sums(const Dataset& data, std::span<const std::size_t> labels,
                            std::span<double> row_sums);
double max_pairwise_distance(const Dataset& data);
/// Counts of all n(n-1)/2 pairwise distances in `bins` equal-width bins over [0, upper];
/// distances >= upper land in the last bin.
std::vector<std::uint64_t> pairwise_distance_counts(const Dataset& data, std::size_t bins,
                                                    double upper);
/// Exhaustive search over all partitions into exactly k blocks; the lexicographically
/// smallest label string wins ties.
EnumerationResult enumerate_partitions(const Dataset& data, std::size_t k);

}  // namespace serial

namespace parallel {

// OpenMP versions; same contracts and results as serial::.
void assign_nearest(const Dataset& data, const Dataset& centers,
                    std::span<std::size_t> labels, std::span<double> sq_dist);
void update_min_sq_dist(const Dataset& data, std::span<const double> center,
                        std::span<double> min_sq);
void sq_dist_to_assigned(const Dataset& data, const Dataset& centers,
                         std::span<const std::size_t> labels, std::span<double> out);
void same_cluster_pair_sums(const Dataset& data, std::span<const std::size_t> labels,
                            std::span<double> row_sums);
double max_pairwise_distance(const Dataset& data);
std::vector<std::uint64_t> pairwise_distance_counts(const Dataset& data, std::size_t bins,
                                                    double upper);
EnumerationResult enumerate_partitions(const Dataset& data, std::size_t k);


}  // namespace parallel

/// Sum in index order; the deterministic reduction shared by both variants.
double ordered_sum(std::span<const double> values) noexcept;

inline void assign_nearest(Exec e, const Dataset& data, const Dataset& centers,
                           std::span<std::size_t> labels, std::span<double> sq_dist) {
    e == Exec::serial ? serial::assign_nearest(data, centers, labels, sq_dist)
                      : parallel::assign_nearest(data, centers, labels, sq_dist);
}

inline void update_min_sq_dist(Exec e, const Dataset& data, std::span<const double> center,
                               std::span<double> min_sq) {
    e == Exec::serial ? serial::update_min_sq_dist(data, center, min_sq)
                      : parallel::update_min_sq_dist(data, center, min_sq);
}

inline void sq_dist_to_assigned(Exec e, const Dataset& data, const Dataset& centers,
                                std::span<const std::size_t> labels, std::span<double> out) {
    e == Exec::serial ? serial::sq_dist_to_assigned(data, centers, labels, out)
                      : parallel::sq_dist_to_assigned(data, centers, labels, out);
}

inline void same_cluster_pair_sums(Exec e, const Dataset& data,
                                   std::span<const std::size_t> labels,
                                   std::span<double> row_sums) {
    e == Exec::serial ? serial::same_cluster_pair_sums(data, labels, row_sums)
                      : parallel::same_cluster_pair_sums(data, labels, row_sums);
}

inline double max_pairwise_distance(Exec e, const Dataset& data) {
    return e == Exec::serial ? serial::max_pairwise_distance(data)
                             : parallel::max_pairwise_distance(data);
}

inline std::vector<std::uint64_t> pairwise_distance_counts(Exec e, const Dataset& data,
                                                           std::size_t bins, double upper) {
    return e == Exec::serial ? serial::pairwise_distance_counts(data, bins, upper)
                             : parallel::pairwise_distance_counts(data, bins, upper);
}

inline EnumerationResult enumerate_partitions(Exec e, const Dataset& data, std::size_t k) {
    return e == Exec::serial ? serial::enumerate_partitions(data, k)
                             : parallel::enumerate_partitions(data, k);
}

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads() noexcept;

}  // namespace clusterability::kernels
