#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "clusterability/dataset.hpp"
#include "clusterability/geometry.hpp"

namespace clusterability {

/// Initial centers chosen among the data points.
struct SeedSet {
    Dataset centers;
    std::vector<std::size_t> source_indices;  // empty when centers were supplied by the caller
};

struct LloydOptions {
    std::size_t max_iters = 100;
    double tol = 1e-10;  // stop when no center moves further than this
    Exec exec = Exec::parallel;
    /// Called after each iteration with the iteration number (from 1), the
    /// updated centers and the partition they were computed from.
    std::function<void(std::size_t, const Dataset&, const Partition&)> on_iteration;
};

struct RunResult {
    Partition partition;
    Dataset centers;  // centroids of `partition`
    double cost = 0.0;
    std::size_t iterations = 0;
    SeedSet seed;
    std::vector<double> cost_trace;  // cost after each iteration
    bool converged = false;          // false when max_iters ran out
};

/**
 * k-means++ seeding: the first center is uniform over the points, each further
 * center is drawn with probability proportional to its squared distance to the
 * nearest center chosen so far. When every remaining point coincides with a
 * chosen center the draw falls back to a uniform pick among unchosen indices.
 * Reproducible for a given rng_seed.
 */
SeedSet seed_kmeanspp(const Dataset& data, std::size_t k, std::uint64_t rng_seed,
                      Exec exec = Exec::parallel);

/**
 * Lloyd iteration from the given centers: assign each point to its nearest
 * center (lowest index on ties), then move centers to the cluster means.
 * Stops when membership is unchanged, no center moved more than `tol`, or
 * `max_iters` iterations ran. A center left without members takes over the
 * point farthest from its own center, so every cluster stays non-empty.
 */
RunResult lloyd(const Dataset& data, const Dataset& initial_centers, const LloydOptions& opts = {});

/// k-means++ seeding followed by Lloyd iteration.
RunResult run_kmeanspp(const Dataset& data, std::size_t k, std::uint64_t rng_seed,
                       const LloydOptions& opts = {});

/**
 * Best of `repetitions` independent k-means++ runs; run r uses
 * derive_seed(rng_seed, r). Lowest cost wins, ties go to the lower run index,
 * so the result does not depend on the execution policy.
 */
RunResult multi_restart(const Dataset& data, std::size_t k, std::size_t repetitions,
                        std::uint64_t rng_seed, const LloydOptions& opts = {},
                        Exec exec = Exec::parallel);

}  // namespace clusterability
