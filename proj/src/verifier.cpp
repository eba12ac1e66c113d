#include "clusterability/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace clusterability {

namespace {

struct CardinalitySummary {
    std::size_t n = 0;
    std::size_t max = 0;
    std::size_t min = 0;
};

CardinalitySummary summarize(std::size_t k, std::span<const std::size_t> cardinalities) {
    if (k < 2) {
        throw std::invalid_argument("gap requirement needs k >= 2");
    }
    if (cardinalities.size() != k) {
        throw std::invalid_argument("need exactly one cardinality per cluster");
    }
    CardinalitySummary s;
    s.min = cardinalities.front();
    for (std::size_t c : cardinalities) {
        if (c == 0) {
            throw std::invalid_argument("cluster cardinalities must be positive");
        }
        s.n += c;
        s.max = std::max(s.max, c);
        s.min = std::min(s.min, c);
    }
    return s;
}

void check_p_frak(double p_frak) {
    if (!(p_frak >= 0.0 && p_frak < 1.0)) {
        throw std::invalid_argument("p_frak must lie in [0, 1)");
    }
}

double inflation(double p_frak) { return (1.0 + p_frak) / (1.0 - p_frak); }

}  // namespace

double pair_bound_plain(std::size_t k, std::size_t n_p, std::size_t n_q, std::size_t n, double r) {
    const double kp = static_cast<double>(k);
    const double np = static_cast<double>(n_p);
    const double nq = static_cast<double>(n_q);
    const double nn = static_cast<double>(n);
    return kp * r * std::sqrt(np / 2.0 + nq / 2.0 + nn / 2.0) * std::sqrt(2.0 * nn / (np * nq));
}

double pair_bound_plain_restated(std::size_t k, std::size_t n_p, std::size_t n_q, std::size_t n,
                                 double r) {
    const double np = static_cast<double>(n_p);
    const double nq = static_cast<double>(n_q);
    const double nn = static_cast<double>(n);
    return static_cast<double>(k) * r * std::sqrt(nn * (np + nq + nn) / (np * nq));
}

double pair_bound_core(std::size_t k, std::size_t n_p, std::size_t n_q, std::size_t n,
                       double weighted_sq_radius_sum, double p_frak) {
    const double np = static_cast<double>(n_p);
    const double nq = static_cast<double>(n_q);
    const double nn = static_cast<double>(n);
    return static_cast<double>(k) * std::sqrt(np + nq + nn) *
           std::sqrt(inflation(p_frak) * weighted_sq_radius_sum / (np * nq));
}

GapRequirement required_gap_plain(std::size_t k, std::span<const std::size_t> cardinalities,
                                  double r_max) {
    const auto s = summarize(k, cardinalities);
    if (!(r_max >= 0.0) || !std::isfinite(r_max)) {
        throw std::invalid_argument("r_max must be finite and non-negative");
    }
    GapRequirement req;
    req.k = k;
    req.n = s.n;
    req.cardinalities.assign(cardinalities.begin(), cardinalities.end());
    req.radii = {r_max};
    req.max_cardinality = s.max;
    req.min_cardinality = s.min;

    const double kk = static_cast<double>(k);
    req.g_balanced_bound =
        r_max * std::sqrt(kk * static_cast<double>(s.max + s.n) / static_cast<double>(s.min));
    for (std::size_t p = 0; p < k; ++p) {
        for (std::size_t q = p + 1; q < k; ++q) {
            const double product_form =
                pair_bound_plain(k, cardinalities[p], cardinalities[q], s.n, r_max);
            const double restated =
                pair_bound_plain_restated(k, cardinalities[p], cardinalities[q], s.n, r_max);
            if (std::abs(product_form - restated) > 1e-12 * std::max(1.0, std::abs(restated))) {
                throw std::logic_error("pair bound forms disagree");
            }
            req.g_pairwise_bound = std::max(req.g_pairwise_bound, product_form);
        }
    }
    req.g_required = std::max(req.g_balanced_bound, req.g_pairwise_bound);
    return req;
}

GapRequirement required_gap_core(std::size_t k, std::span<const std::size_t> cardinalities,
                                 std::span<const double> radii, double p_frak) {
    check_p_frak(p_frak);
    const auto s = summarize(k, cardinalities);
    if (radii.size() != k) {
        throw std::invalid_argument("need exactly one radius per cluster");
    }
    double r_max = 0.0;
    double weighted = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        if (!(radii[i] >= 0.0) || !std::isfinite(radii[i])) {
            throw std::invalid_argument("radii must be finite and non-negative");
        }
        r_max = std::max(r_max, radii[i]);
        weighted += static_cast<double>(cardinalities[i]) * radii[i] * radii[i];
    }
    GapRequirement req;
    req.k = k;
    req.n = s.n;
    req.cardinalities.assign(cardinalities.begin(), cardinalities.end());
    req.radii.assign(radii.begin(), radii.end());
    req.max_cardinality = s.max;
    req.min_cardinality = s.min;
    req.p_frak = p_frak;

    const double kk = static_cast<double>(k);
    req.g_balanced_bound = r_max * std::sqrt(kk * inflation(p_frak) *
                                             static_cast<double>(s.max + s.n) /
                                             static_cast<double>(s.min));
    for (std::size_t p = 0; p < k; ++p) {
        for (std::size_t q = p + 1; q < k; ++q) {
            req.g_pairwise_bound = std::max(
                req.g_pairwise_bound,
                pair_bound_core(k, cardinalities[p], cardinalities[q], s.n, weighted, p_frak));
        }
    }
    req.g_required = std::max(req.g_balanced_bound, req.g_pairwise_bound);
    return req;
}

CoreProfile extract_core(const Dataset& data, const Partition& partition, std::size_t cluster,
                         double p_frak) {
    check_p_frak(p_frak);
    validate(data, partition);
    if (cluster >= partition.k()) {
        throw std::invalid_argument("cluster index out of range");
    }
    const Dataset centers = centroids(data, partition);
    const auto center = centers.point(cluster);
    const auto members = partition.members(cluster);

    std::vector<double> sq(members.size());
    for (std::size_t m = 0; m < members.size(); ++m) {
        sq[m] = squared_distance(data.point(members[m]), center);
    }
    std::vector<std::size_t> order(members.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return sq[a] < sq[b]; });

    double total = 0.0;
    for (std::size_t m : order) total += sq[m];

    CoreProfile core;
    core.cluster = cluster;
    core.p_frak = p_frak;

    std::size_t end = order.size();
    if (total > 0.0) {
        const double target = 1.0 - p_frak;
        double prefix = 0.0;
        std::size_t pos = 0;
        while (pos < order.size()) {
            const double level = sq[order[pos]];
            while (pos < order.size() && sq[order[pos]] == level) prefix += sq[order[pos++]];
            if (prefix / total >= target) break;
        }
        end = pos;
        core.achieved_fraction = prefix / total;
    }
    core.core_radius = end == 0 ? 0.0 : std::sqrt(sq[order[end - 1]]);
    for (std::size_t pos = 0; pos < end; ++pos) {
        core.core_member_indices.push_back(members[order[pos]]);
    }
    std::sort(core.core_member_indices.begin(), core.core_member_indices.end());
    core.core_cardinality = core.core_member_indices.size();
    return core;
}

std::string to_string(VerifyMode mode) { return mode == VerifyMode::plain ? "plain" : "core"; }

VerifyMode parse_verify_mode(const std::string& text) {
    if (text == "plain") return VerifyMode::plain;
    if (text == "core") return VerifyMode::core;
    throw std::invalid_argument("unknown verification mode '" + text + "'");
}

ClusterabilityVerdict verify(const Dataset& data, const Partition& partition, VerifyMode mode,
                             std::optional<double> p_frak, double margin) {
    validate(data, partition);
    if (partition.k() < 2) {
        throw std::invalid_argument("verification needs k >= 2");
    }
    if (!(margin > 0.0) || !std::isfinite(margin)) {
        throw std::invalid_argument("margin must be positive");
    }
    if (mode == VerifyMode::core && !p_frak) {
        throw std::invalid_argument("core verification needs p_frak");
    }

    ClusterabilityVerdict verdict;
    verdict.mode = mode;
    verdict.margin = margin;
    verdict.clusters = compute_stats(data, partition);
    const std::size_t k = partition.k();

    std::vector<std::vector<double>> centers;
    for (const auto& s : verdict.clusters) centers.push_back(s.centroid);

    GapReport gaps;
    std::vector<std::size_t> cards;
    double r_max = 0.0;
    double weighted = 0.0;
    if (mode == VerifyMode::plain) {
        gaps = gap_report(verdict.clusters);
        for (const auto& s : verdict.clusters) {
            cards.push_back(s.cardinality);
            r_max = std::max(r_max, s.enclosing_radius);
        }
        verdict.required = required_gap_plain(k, cards, r_max);
    } else {
        std::vector<double> core_radii;
        for (std::size_t c = 0; c < k; ++c) {
            verdict.cores.push_back(extract_core(data, partition, c, *p_frak));
            core_radii.push_back(verdict.cores.back().core_radius);
            cards.push_back(verdict.cores.back().core_cardinality);
            r_max = std::max(r_max, core_radii.back());
        }
        gaps = ball_gaps(centers, core_radii);
        const std::vector<double> maxed(k, r_max);
        verdict.required = required_gap_core(k, cards, maxed, *p_frak);
        for (std::size_t c = 0; c < k; ++c) {
            weighted += static_cast<double>(cards[c]) * r_max * r_max;
        }
    }

    verdict.measured_min_gap = gaps.min_gap;
    for (std::size_t p = 0; p < k; ++p) {
        for (std::size_t q = p + 1; q < k; ++q) {
            const std::size_t n = verdict.required.n;
            const double pair = mode == VerifyMode::plain
                                    ? pair_bound_plain(k, cards[p], cards[q], n, r_max)
                                    : pair_bound_core(k, cards[p], cards[q], n, weighted, *p_frak);
            verdict.per_pair_detail.push_back(
                {p, q, gaps.gap(p, q), std::max(verdict.required.g_balanced_bound, pair)});
        }
    }
    verdict.well_clusterable = verdict.measured_min_gap >= margin * verdict.required.g_required;
    return verdict;
}

bool check_core_preservation(const CorePreservationConfig& config, const Dataset& cluster_a,
                             const Dataset& cluster_b, std::span<const double> x,
                             std::span<const double> y) {
    const std::size_t dim = config.center_a.size();
    if (dim == 0 || config.center_b.size() != dim || cluster_a.dim() != dim ||
        cluster_b.dim() != dim || x.size() != dim || y.size() != dim) {
        throw std::invalid_argument("core preservation inputs differ in dimension");
    }
    if (!(config.gap > 0.0) || !(config.rho >= 0.0)) {
        throw std::invalid_argument("core preservation needs gap > 0 and rho >= 0");
    }
    const double separation = 2.0 * config.rho + config.gap;
    const double tol = 1e-9 * separation;
    if (std::abs(distance(config.center_a, config.center_b) - separation) > tol) {
        throw std::invalid_argument("centers must be 2 rho + gap apart");
    }
    for (std::size_t i = 0; i < cluster_a.size(); ++i) {
        if (distance(cluster_a.point(i), config.center_a) > config.rho + tol) {
            throw std::invalid_argument("a point of cluster A lies outside its ball");
        }
    }
    for (std::size_t i = 0; i < cluster_b.size(); ++i) {
        if (distance(cluster_b.point(i), config.center_b) > config.rho + tol) {
            throw std::invalid_argument("a point of cluster B lies outside its ball");
        }
    }
    if (distance(x, config.center_a) > config.core_radius() + tol ||
        distance(y, config.center_b) > config.core_radius() + tol) {
        throw std::invalid_argument("X and Y must lie in the cores of A and B");
    }

    // Center X has index 0 and wins ties.
    for (std::size_t i = 0; i < cluster_a.size(); ++i) {
        if (squared_distance(cluster_a.point(i), y) < squared_distance(cluster_a.point(i), x)) {
            return false;
        }
    }
    for (std::size_t i = 0; i < cluster_b.size(); ++i) {
        if (squared_distance(cluster_b.point(i), x) <= squared_distance(cluster_b.point(i), y)) {
            return false;
        }
    }
    return true;
}

}  // namespace clusterability
