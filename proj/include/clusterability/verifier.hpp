#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clusterability/dataset.hpp"
#include "clusterability/geometry.hpp"

namespace clusterability {

/**
 * Minimum surface gap between enclosing balls that certifies a partition as
 * the global k-means optimum, with every input echoed so the numbers can be
 * recomputed independently.
 *
 * Plain form, for every pair p != q:
 *   g >= r_max * sqrt(k (M + n) / m)
 *   g >= k r_max sqrt(n_p/2 + n_q/2 + n/2) sqrt(2 n / (n_p n_q))
 * Core form, with f = (1 + p_frak) / (1 - p_frak):
 *   g >= max_i r_i * sqrt(k f (M + n) / m)
 *   g >= k sqrt(n_p + n_q + n) sqrt(f sum_i n_i r_i^2 / (n_p n_q))
 */
struct GapRequirement {
    double g_balanced_bound = 0.0;  // the (M + n) / m bound
    double g_pairwise_bound = 0.0;  // pair bound maximized over p != q
    double g_required = 0.0;        // max of the two
    std::size_t k = 0;
    std::size_t n = 0;
    std::vector<std::size_t> cardinalities;
    std::vector<double> radii;  // plain: {r_max}; core: r_i per cluster
    std::size_t max_cardinality = 0;
    std::size_t min_cardinality = 0;
    std::optional<double> p_frak;
};

GapRequirement required_gap_plain(std::size_t k, std::span<const std::size_t> cardinalities,
                                  double r_max);

GapRequirement required_gap_core(std::size_t k, std::span<const std::size_t> cardinalities,
                                 std::span<const double> radii, double p_frak);

/// Plain pair bound in product form: k r sqrt(n_p/2 + n_q/2 + n/2) sqrt(2n / (n_p n_q)).
double pair_bound_plain(std::size_t k, std::size_t n_p, std::size_t n_q, std::size_t n, double r);

/// The same bound in its restated form k r sqrt(n (n_p + n_q + n) / (n_p n_q)).
double pair_bound_plain_restated(std::size_t k, std::size_t n_p, std::size_t n_q, std::size_t n,
                                 double r);

double pair_bound_core(std::size_t k, std::size_t n_p, std::size_t n_q, std::size_t n,
                       double weighted_sq_radius_sum, double p_frak);

/// A centered sub-ball of a cluster retaining at least 1 - p_frak of its cost.
struct CoreProfile {
    std::size_t cluster = 0;
    std::vector<std::size_t> core_member_indices;  // dataset indices, ascending
    double core_radius = 0.0;
    std::size_t core_cardinality = 0;
    double achieved_fraction = 1.0;  // Q(core) / Q(cluster), both around the full-cluster centroid
    double p_frak = 0.0;
};

/**
 * Smallest centered ball (around the full-cluster centroid) whose members carry
 * at least 1 - p_frak of the cluster's summed squared distances. Members at equal
 * distance enter together, so the core is exactly the set within core_radius.
 * A zero-cost cluster is its own core with achieved_fraction 1.
 */
CoreProfile extract_core(const Dataset& data, const Partition& partition, std::size_t cluster,
                         double p_frak);

enum class VerifyMode { plain, core };

std::string to_string(VerifyMode mode);
VerifyMode parse_verify_mode(const std::string& text);

struct PairDetail {
    std::size_t p = 0;
    std::size_t q = 0;
    double measured_gap = 0.0;
    double required_bound = 0.0;  // max(balanced bound, pair bound for p, q)
};

struct ClusterabilityVerdict {
    VerifyMode mode = VerifyMode::plain;
    double margin = 1.0;
    double measured_min_gap = 0.0;
    GapRequirement required;
    bool well_clusterable = false;
    std::vector<PairDetail> per_pair_detail;
    std::vector<ClusterStats> clusters;
    std::vector<CoreProfile> cores;  // core mode only
};

/**
 * A posteriori check of a partition. Plain mode compares the smallest gap between
 * full enclosing balls against required_gap_plain. Core mode extracts a core per
 * cluster and compares the smallest gap between core balls (centered at the
 * full-cluster centroids) against required_gap_core with every r_i set to the
 * largest core radius. Passes when measured_min_gap >= margin * g_required.
 */
ClusterabilityVerdict verify(const Dataset& data, const Partition& partition, VerifyMode mode,
                             std::optional<double> p_frak = std::nullopt, double margin = 1.0);

/// Two clusters of common enclosing radius rho whose centers are 2 rho + gap apart.
struct CorePreservationConfig {
    std::vector<double> center_a;
    std::vector<double> center_b;
    double rho = 0.0;
    double gap = 0.0;

    double core_radius() const noexcept { return gap / 2.0; }
};

/**
 * Reclusters both point sets around X (from A's core) and Y (from B's core) with
 * one nearest-center step and reports whether the original clusters come back.
 * Throws std::invalid_argument when the configuration does not meet the
 * hypotheses (points outside their balls, wrong center distance, X or Y outside
 * the cores).
 */
bool check_core_preservation(const CorePreservationConfig& config, const Dataset& cluster_a,
                             const Dataset& cluster_b, std::span<const double> x,
                             std::span<const double> y);

}  // namespace clusterability
