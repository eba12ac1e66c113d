#include "clusterability/engine.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <optional>
#include <stdexcept>

#include "clusterability/rng.hpp"

namespace clusterability {

SeedSet seed_kmeanspp(const Dataset& data, std::size_t k, std::uint64_t rng_seed, Exec exec) {
    const std::size_t n = data.size();
    if (k == 0 || k > n) {
        throw std::invalid_argument("k-means++ seeding needs 1 <= k <= n");
    }
    Rng rng(rng_seed);
    std::vector<std::size_t> chosen;
    chosen.reserve(k);
    std::vector<char> taken(n, 0);
    std::vector<double> min_sq(n, std::numeric_limits<double>::infinity());

    auto take = [&](std::size_t idx) {
        chosen.push_back(idx);
        taken[idx] = 1;
        kernels::update_min_sq_dist(exec, data, data.point(idx), min_sq);
    };

    take(rng.uniform_index(n));
    while (chosen.size() < k) {
        const double total = kernels::ordered_sum(min_sq);
        std::size_t pick = n;
        if (total > 0.0) {
            const double target = rng.uniform01() * total;
            double cumulative = 0.0;
            std::size_t last_positive = n;
            for (std::size_t i = 0; i < n; ++i) {
                if (min_sq[i] <= 0.0) continue;
                last_positive = i;
                cumulative += min_sq[i];
                if (cumulative > target) {
                    pick = i;
                    break;
                }
            }
            if (pick == n) pick = last_positive;  // rounding left target at the very top
        } else {
            std::size_t nth = rng.uniform_index(n - chosen.size());
            for (std::size_t i = 0; i < n; ++i) {
                if (taken[i]) continue;
                if (nth-- == 0) {
                    pick = i;
                    break;
                }
            }
        }
        take(pick);
    }

    std::vector<double> coords;
    coords.reserve(k * data.dim());
    for (std::size_t idx : chosen) {
        const auto p = data.point(idx);
        coords.insert(coords.end(), p.begin(), p.end());
    }
    return SeedSet{Dataset(data.dim(), std::move(coords)), std::move(chosen)};
}

namespace {

// Moves the point farthest from its center into each empty cluster.
void repair_empty_clusters(std::vector<std::size_t>& labels, std::vector<double>& sq_dist,
                           std::size_t k) {
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t l : labels) ++counts[l];
    for (std::size_t c = 0; c < k; ++c) {
        if (counts[c] != 0) continue;
        std::size_t donor = labels.size();
        double worst = -1.0;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (counts[labels[i]] > 1 && sq_dist[i] > worst) {
                worst = sq_dist[i];
                donor = i;
            }
        }
        if (donor == labels.size()) {
            throw std::logic_error("no point available to refill an empty cluster");
        }
        --counts[labels[donor]];
        labels[donor] = c;
        counts[c] = 1;
        sq_dist[donor] = 0.0;
    }
}

}  // namespace

RunResult lloyd(const Dataset& data, const Dataset& initial_centers, const LloydOptions& opts) {
    const std::size_t n = data.size();
    const std::size_t k = initial_centers.size();
    if (initial_centers.dim() != data.dim()) {
        throw std::invalid_argument("centers and data differ in dimension");
    }
    if (k > n) {
        throw std::invalid_argument("Lloyd iteration needs k <= n");
    }
    if (opts.max_iters == 0) {
        throw std::invalid_argument("max_iters must be at least 1");
    }

    Dataset centers = initial_centers;
    std::vector<std::size_t> labels(n, 0);
    std::vector<std::size_t> previous;
    std::vector<double> sq_dist(n, 0.0);
    std::vector<double> per_point(n, 0.0);
    std::vector<double> trace;
    std::size_t iterations = 0;
    bool converged = false;
    std::optional<Partition> partition;

    for (std::size_t it = 1; it <= opts.max_iters; ++it) {
        kernels::assign_nearest(opts.exec, data, centers, labels, sq_dist);
        repair_empty_clusters(labels, sq_dist, k);
        const bool changed = previous != labels;

        partition.emplace(labels, k);
        Dataset updated = centroids(data, *partition);
        double shift = 0.0;
        for (std::size_t c = 0; c < k; ++c) {
            shift = std::max(shift, distance(updated.point(c), centers.point(c)));
        }
        centers = std::move(updated);

        kernels::sq_dist_to_assigned(opts.exec, data, centers, labels, per_point);
        trace.push_back(kernels::ordered_sum(per_point));
        iterations = it;
        if (opts.on_iteration) opts.on_iteration(it, centers, *partition);

        if (!changed || shift < opts.tol) {
            converged = true;
            break;
        }
        previous = labels;
    }

    RunResult result{*partition, centers, cost_centroid(data, *partition, opts.exec), iterations,
                     SeedSet{initial_centers, {}}, std::move(trace), converged};
    return result;
}

RunResult run_kmeanspp(const Dataset& data, std::size_t k, std::uint64_t rng_seed,
                       const LloydOptions& opts) {
    SeedSet seed = seed_kmeanspp(data, k, rng_seed, opts.exec);
    RunResult result = lloyd(data, seed.centers, opts);
    result.seed = std::move(seed);
    return result;
}

RunResult multi_restart(const Dataset& data, std::size_t k, std::size_t repetitions,
                        std::uint64_t rng_seed, const LloydOptions& opts, Exec exec) {
    if (repetitions == 0) {
        throw std::invalid_argument("multi_restart needs at least one repetition");
    }
    std::vector<std::optional<RunResult>> runs(repetitions);
    std::vector<std::exception_ptr> errors(repetitions);
    const auto total = static_cast<std::int64_t>(repetitions);

#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::parallel)
    for (std::int64_t r = 0; r < total; ++r) {
        const auto idx = static_cast<std::size_t>(r);
        try {
            runs[idx] = run_kmeanspp(data, k, derive_seed(rng_seed, idx), opts);
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    }

    std::optional<std::size_t> best;
    for (std::size_t r = 0; r < repetitions; ++r) {
        if (runs[r] && (!best || runs[r]->cost < runs[*best]->cost)) best = r;
    }
    if (!best) {
        std::rethrow_exception(errors.front());
    }
    return std::move(*runs[*best]);
}

}  // namespace clusterability
