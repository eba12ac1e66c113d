#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace clusterability {

// Lower bounds on the probability that a single k-means++ seeding puts exactly
// one seed into every cluster (or cluster core) of a well-clusterable dataset,
// and the number of independent restarts needed to reach a target success
// probability. Cluster sizes are reals so that worst-case M/m constructions
// with non-integer sizes can be evaluated.

/// (k^2 (k+1)^2 / (k^2 (k+1)^2 + k - 1))^(k-1); equal cluster sizes, k >= 2.
double p_seed_equal(std::size_t k);

/// exp(-(k-1)^2 / (k^2 (k+1)^2 + k - 1)); approximation of p_seed_equal.
double p_seed_equal_approx(std::size_t k);

/// (k^2 n (2 + n/m) / (k^2 n (2 + n/m) + (k-1) M))^(k-1); smallest cluster m, largest M.
double p_seed_unbalanced(std::size_t k, double n, double m, double max_size);

/// exp(-(k-1)^2 M / (k^2 n (2 + n/m) + (k-1) M)).
double p_seed_unbalanced_approx(std::size_t k, double n, double m, double max_size);

/// (k^2 (1-p)(1+p) n (2 + n/m) / (k^2 (1+p) n (2 + n/m) + (k-1) M))^(k-1); p = p_frak.
double p_seed_core(std::size_t k, double n, double m, double max_size, double p_frak);

/// (1-p)^(k-1) exp(-(k-1)^2 M / (k^2 (1+p) n (2 + n/m) + (k-1) M)).
double p_seed_core_approx(std::size_t k, double n, double m, double max_size, double p_frak);

/// (1-p)^(k-1), the large-n/m limit of p_seed_core.
double p_seed_core_limit(std::size_t k, double p_frak);

struct Repetitions {
    std::uint64_t runs = 1;
    bool reachable = true;  // false when the cap was hit before reaching the target
};

inline constexpr std::uint64_t default_max_repetitions = 1'000'000;

/**
 * Smallest R with (1 - p_single)^R < 1 - pr_succ. p_single = 1 gives R = 1;
 * p_single = 0 throws. When R would exceed `max_runs` the result is
 * {max_runs, reachable = false}.
 */
Repetitions required_repetitions(double p_single, double pr_succ,
                                 std::uint64_t max_runs = default_max_repetitions);

enum class SeedingRegime { equal, unbalanced, core };

std::string to_string(SeedingRegime regime);
SeedingRegime parse_seeding_regime(const std::string& text);

struct SeedingAnalysis {
    SeedingRegime regime = SeedingRegime::equal;
    std::size_t k = 0;
    double n = 0.0;
    double m = 0.0;
    double max_size = 0.0;
    std::optional<double> p_frak;
    double p_single = 0.0;
    double p_approx = 0.0;
    double pr_succ_target = 0.95;
    Repetitions repetitions;
};

/// Equal regime ignores m and max_size (uses n/k); core regime needs p_frak.
SeedingAnalysis analyze_seeding(SeedingRegime regime, std::size_t k, double n, double m,
                                double max_size, std::optional<double> p_frak, double pr_succ);

/// Worst-case gap-to-radius ratio: max of sqrt(k (M+n)/m) and the pair bound at n_p = n_q = m,
/// inflated by sqrt((1+p)/(1-p)) when p_frak is given.
double worst_case_gap_over_radius(std::size_t k, double n, double m, double max_size,
                                  std::optional<double> p_frak = std::nullopt);

/// One row of a plotted curve.
struct CurveRow {
    double x = 0.0;  // k, M/m ratio or p_frak depending on the sweep
    std::size_t k = 0;
    double g_over_r = 0.0;
    double p_single = 0.0;
    double p_approx = 0.0;
    double p_limit = 0.0;  // core sweeps only
    Repetitions repetitions;
};

/// Rows for k in [k_min, k_max], equal sizes: g/r from the equal-size pair bound k sqrt(2k + k^2).
std::vector<CurveRow> curve_equal(std::size_t k_min, std::size_t k_max, double pr_succ);

/// Rows for each M/m ratio, with M = (n/k) sqrt(ratio) and m = (n/k) / sqrt(ratio).
std::vector<CurveRow> curve_unbalanced(std::size_t k, double n, const std::vector<double>& ratios,
                                       double pr_succ);

/// Rows for each p_frak at fixed k, n and M/m ratio.
std::vector<CurveRow> curve_core(std::size_t k, double n, double ratio,
                                 const std::vector<double>& p_values, double pr_succ);

std::string curve_to_csv(const std::vector<CurveRow>& rows, SeedingRegime regime);

}  // namespace clusterability
