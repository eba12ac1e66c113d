#pragma once

#include <cstddef>
#include <cstdint>

#include "clusterability/dataset.hpp"
#include "clusterability/geometry.hpp"

namespace clusterability {

struct OracleResult {
    Partition best_partition;
    double best_cost = 0.0;  // recomputed with cost_centroid
    std::uint64_t partitions_examined = 0;
};

inline constexpr std::size_t default_oracle_max_n = 14;

/**
 * Global k-means optimum by exhaustive enumeration of every partition of the
 * points into exactly k non-empty blocks (restricted-growth label strings, so
 * each unlabeled partition is visited once). Among equal costs the
 * lexicographically smallest label string wins.
 *
 * Throws std::invalid_argument when n > max_n or k is not in [1, n].
 */
OracleResult brute_force_optimal(const Dataset& data, std::size_t k,
                                 std::size_t max_n = default_oracle_max_n,
                                 Exec exec = Exec::parallel);

}  // namespace clusterability
