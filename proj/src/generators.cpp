#include "clusterability/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "clusterability/rng.hpp"
#include "clusterability/verifier.hpp"

namespace clusterability {

namespace {

void check_planted_args(std::size_t k, std::span<const std::size_t> cardinalities,
                        std::span<const double> radii, std::size_t dim, double margin) {
    if (k < 2) {
        throw std::invalid_argument("planted datasets need k >= 2");
    }
    if (dim == 0) {
        throw std::invalid_argument("dim must be positive");
    }
    if (!(margin >= 1.0) || !std::isfinite(margin)) {
        throw std::invalid_argument("margin must be a finite value >= 1");
    }
    if (cardinalities.size() != k || radii.size() != k) {
        throw std::invalid_argument("need one cardinality and one radius per cluster");
    }
    for (std::size_t c = 0; c < k; ++c) {
        if (cardinalities[c] == 0) {
            throw std::invalid_argument("cluster cardinalities must be positive");
        }
        if (!(radii[c] >= 0.0) || !std::isfinite(radii[c])) {
            throw std::invalid_argument("radii must be finite and non-negative");
        }
        if (radii[c] > 0.0 && cardinalities[c] < 2) {
            throw std::invalid_argument("a single-point cluster has radius 0");
        }
    }
}

// k centers with pairwise distance >= spacing: a regular simplex when dim >= k,
// points on a line otherwise; centred at the origin and randomly rotated.
std::vector<std::vector<double>> layout_centers(std::size_t k, std::size_t dim, double spacing,
                                                Rng& rng) {
    std::vector<std::vector<double>> centers(k, std::vector<double>(dim, 0.0));
    if (dim >= k) {
        for (std::size_t c = 0; c < k; ++c) centers[c][c] = spacing / std::numbers::sqrt2;
    } else {
        for (std::size_t c = 0; c < k; ++c) centers[c][0] = static_cast<double>(c) * spacing;
    }
    std::vector<double> mean(dim, 0.0);
    for (const auto& c : centers) {
        for (std::size_t j = 0; j < dim; ++j) mean[j] += c[j] / static_cast<double>(k);
    }
    const auto rot = random_rotation(rng, dim);
    for (auto& c : centers) {
        std::vector<double> shifted(dim);
        for (std::size_t j = 0; j < dim; ++j) shifted[j] = c[j] - mean[j];
        for (std::size_t row = 0; row < dim; ++row) {
            double v = 0.0;
            for (std::size_t j = 0; j < dim; ++j) v += rot[row * dim + j] * shifted[j];
            c[row] = v;
        }
    }
    return centers;
}

// n offsets with zero mean and largest norm exactly `radius`.
std::vector<std::vector<double>> ball_offsets(Rng& rng, std::size_t n, std::size_t dim,
                                              double radius) {
    std::vector<std::vector<double>> pts(n, std::vector<double>(dim, 0.0));
    if (radius == 0.0) return pts;
    std::vector<double> mean(dim, 0.0);
    for (auto& p : pts) {
        p = uniform_in_ball(rng, dim, radius);
        for (std::size_t j = 0; j < dim; ++j) mean[j] += p[j];
    }
    for (double& v : mean) v /= static_cast<double>(n);
    double max_norm = 0.0;
    for (auto& p : pts) {
        double s = 0.0;
        for (std::size_t j = 0; j < dim; ++j) {
            p[j] -= mean[j];
            s += p[j] * p[j];
        }
        max_norm = std::max(max_norm, std::sqrt(s));
    }
    if (max_norm == 0.0) {
        throw std::logic_error("sampled cluster collapsed to a point");
    }
    const double scale = radius / max_norm;
    for (auto& p : pts) {
        for (double& v : p) v *= scale;
    }
    return pts;
}

double sum_sq_norms(const std::vector<std::vector<double>>& offsets) {
    double s = 0.0;
    for (const auto& p : offsets) {
        for (double v : p) s += v * v;
    }
    return s;
}

}  // namespace

PlantedDataset gen_well_clusterable(std::size_t k, std::span<const std::size_t> cardinalities,
                                    std::span<const double> radii, std::size_t dim, double margin,
                                    std::uint64_t rng_seed) {
    check_planted_args(k, cardinalities, radii, dim, margin);
    Rng rng(rng_seed);

    const double r_max = *std::max_element(radii.begin(), radii.end());
    const double g = required_gap_plain(k, cardinalities, r_max).g_required;
    double spacing = (2.0 * r_max + margin * g) * (1.0 + 1e-9);
    if (spacing == 0.0) spacing = 1.0;

    PlantedDataset out{Dataset(1, {0.0}), Partition({0}, 1), {}, {}, 0.0, 0.0, margin,
                       spacing, rng_seed, std::nullopt, std::nullopt, {}, {}};
    out.planted_centers = layout_centers(k, dim, spacing, rng);

    std::vector<double> coords;
    std::vector<std::size_t> labels;
    for (std::size_t c = 0; c < k; ++c) {
        for (const auto& off : ball_offsets(rng, cardinalities[c], dim, radii[c])) {
            for (std::size_t j = 0; j < dim; ++j) {
                coords.push_back(out.planted_centers[c][j] + off[j]);
            }
            labels.push_back(c);
        }
    }
    out.dataset = Dataset(dim, std::move(coords));
    out.planted_partition = Partition(std::move(labels), k);

    const auto verdict = verify(out.dataset, out.planted_partition, VerifyMode::plain, std::nullopt,
                                margin);
    for (const auto& s : verdict.clusters) out.per_cluster_radius.push_back(s.enclosing_radius);
    out.full_radius = out.per_cluster_radius;
    out.realized_min_gap = verdict.measured_min_gap;
    out.required_gap = verdict.required.g_required;
    if (!verdict.well_clusterable) {
        throw std::logic_error("planted dataset does not meet its own gap requirement");
    }
    return out;
}

PlantedDataset gen_core_clusterable(std::size_t k, std::span<const std::size_t> cardinalities,
                                    std::span<const double> radii, std::size_t dim, double p_frak,
                                    double margin, std::uint64_t rng_seed) {
    check_planted_args(k, cardinalities, radii, dim, margin);
    if (!(p_frak >= 0.0 && p_frak < 1.0)) {
        throw std::invalid_argument("p_frak must lie in [0, 1)");
    }
    Rng rng(rng_seed);

    const double r_max = *std::max_element(radii.begin(), radii.end());
    const std::vector<double> maxed(k, r_max);
    const double g = required_gap_core(k, cardinalities, maxed, p_frak).g_required;
    const double rho = margin * g / 2.0;

    PlantedDataset out{Dataset(1, {0.0}), Partition({0}, 1), {}, {}, 0.0, 0.0, margin,
                       0.0, rng_seed, p_frak, 0.0, {}, {}};
    Rng layout_rng = rng;
    layout_centers(k, dim, 1.0, rng);

    std::vector<std::vector<std::vector<double>>> cluster_offsets(k);
    std::vector<std::size_t> core_cards(k);
    double core_r_max = 0.0;
    double realized = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
        auto offsets = ball_offsets(rng, cardinalities[c], dim, radii[c]);
        const double core_cost = sum_sq_norms(offsets);

        std::size_t pairs = 0;
        double s = 0.0;
        if (p_frak > 0.0 && core_cost > 0.0 && rho > 0.0) {
            const double r2 = radii[c] * radii[c];
            const double delta = std::min(0.05, 0.5 * r2 / (p_frak * core_cost));
            const double budget = p_frak / (1.0 - p_frak) * core_cost * (1.0 - delta);
            pairs = static_cast<std::size_t>(std::ceil(budget / (2.0 * rho * rho)));
            s = std::sqrt(budget / (2.0 * static_cast<double>(pairs)));
            if (!(s > radii[c] * (1.0 + 1e-6))) pairs = 0;
        }
        for (std::size_t j = 0; j < pairs; ++j) {
            auto u = random_unit_vector(rng, dim);
            std::vector<double> plus(dim), minus(dim);
            for (std::size_t d = 0; d < dim; ++d) {
                plus[d] = s * u[d];
                minus[d] = -s * u[d];
            }
            offsets.push_back(std::move(plus));
            offsets.push_back(std::move(minus));
        }
        const double straggler_cost = 2.0 * static_cast<double>(pairs) * s * s;
        if (pairs > 0) realized = std::max(realized, straggler_cost / (core_cost + straggler_cost));
        out.straggler_counts.push_back(2 * pairs);

        const auto alone = Dataset::from_rows(offsets);
        const auto core = extract_core(alone, Partition(std::vector<std::size_t>(alone.size(), 0), 1),
                                       0, p_frak);
        core_cards[c] = core.core_cardinality;
        core_r_max = std::max(core_r_max, core.core_radius);
        cluster_offsets[c] = std::move(offsets);
    }

    const std::vector<double> core_maxed(k, core_r_max);
    const double g_cores = required_gap_core(k, core_cards, core_maxed, p_frak).g_required;
    double spacing = (2.0 * r_max + margin * std::max(g, g_cores)) * (1.0 + 1e-9);
    if (spacing == 0.0) spacing = 1.0;
    out.center_spacing = spacing;
    out.planted_centers = layout_centers(k, dim, spacing, layout_rng);

    std::vector<double> coords;
    std::vector<std::size_t> labels;
    for (std::size_t c = 0; c < k; ++c) {
        for (const auto& off : cluster_offsets[c]) {
            for (std::size_t d = 0; d < dim; ++d) {
                coords.push_back(out.planted_centers[c][d] + off[d]);
            }
            labels.push_back(c);
        }
    }
    out.dataset = Dataset(dim, std::move(coords));
    out.planted_partition = Partition(std::move(labels), k);
    out.realized_p_frak = realized;

    const auto verdict =
        verify(out.dataset, out.planted_partition, VerifyMode::core, p_frak, margin);
    for (std::size_t c = 0; c < k; ++c) {
        if (out.straggler_counts[c] > 0 && verdict.cores[c].core_cardinality != cardinalities[c]) {
            throw std::logic_error("extracted core differs from the planted core");
        }
        out.per_cluster_radius.push_back(verdict.cores[c].core_radius);
        out.full_radius.push_back(verdict.clusters[c].enclosing_radius);
    }
    out.realized_min_gap = verdict.measured_min_gap;
    out.required_gap = verdict.required.g_required;
    if (!verdict.well_clusterable) {
        throw std::logic_error("planted cores do not meet their own gap requirement");
    }
    return out;
}

Dataset gen_ring(std::size_t n, double ring_radius, double thickness, std::uint64_t rng_seed) {
    if (n < 3) {
        throw std::invalid_argument("ring needs at least 3 points");
    }
    if (!(ring_radius > 0.0) || !(thickness >= 0.0) || !(thickness < ring_radius)) {
        throw std::invalid_argument("ring needs 0 <= thickness < ring_radius");
    }
    Rng rng(rng_seed);
    std::vector<double> coords;
    coords.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const double radius =
            thickness == 0.0
                ? ring_radius
                : rng.uniform(ring_radius - thickness / 2.0, ring_radius + thickness / 2.0);
        coords.push_back(radius * std::cos(angle));
        coords.push_back(radius * std::sin(angle));
    }
    return Dataset(2, std::move(coords));
}

Histogram distance_histogram(const Dataset& data, std::size_t bins, Exec exec) {
    if (bins < 2) {
        throw std::invalid_argument("histogram needs at least 2 bins");
    }
    if (data.size() < 2) {
        throw std::invalid_argument("histogram needs at least 2 points");
    }
    double upper = kernels::max_pairwise_distance(exec, data);
    if (upper == 0.0) upper = 1.0;
    Histogram h;
    h.counts = kernels::pairwise_distance_counts(exec, data, bins, upper);
    h.bin_edges.resize(bins + 1);
    for (std::size_t b = 0; b < bins; ++b) {
        h.bin_edges[b] = upper * static_cast<double>(b) / static_cast<double>(bins);
    }
    h.bin_edges[bins] = upper;
    return h;
}

std::size_t count_local_maxima(std::span<const std::uint64_t> counts) {
    std::vector<std::uint64_t> runs;
    for (auto c : counts) {
        if (runs.empty() || runs.back() != c) runs.push_back(c);
    }
    if (runs.size() < 2) return 0;
    std::size_t maxima = 0;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const bool above_left = i == 0 || runs[i] > runs[i - 1];
        const bool above_right = i + 1 == runs.size() || runs[i] > runs[i + 1];
        if (above_left && above_right) ++maxima;
    }
    return maxima;
}

CounterexampleReport unbalanced_instance(double r, double centre_distance, std::size_t n_big,
                                         std::size_t n_small) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw std::invalid_argument("r must be positive");
    }
    if (n_big < 2 || n_big % 2 != 0) {
        throw std::invalid_argument("n_big must be even and at least 2");
    }
    if (n_small == 0) {
        throw std::invalid_argument("n_small must be positive");
    }
    if (!(centre_distance > r) || !std::isfinite(centre_distance)) {
        throw std::invalid_argument("the small cluster must lie outside the big ball");
    }

    std::vector<double> coords;
    std::vector<std::size_t> gap_labels;
    std::vector<std::size_t> alt_labels;
    for (std::size_t i = 0; i < n_big; ++i) {
        const bool right = i >= n_big / 2;
        coords.push_back(right ? r : -r);
        gap_labels.push_back(0);
        alt_labels.push_back(right ? 1 : 0);
    }
    for (std::size_t i = 0; i < n_small; ++i) {
        coords.push_back(centre_distance);
        gap_labels.push_back(1);
        alt_labels.push_back(1);
    }

    CounterexampleReport rep{Dataset(1, std::move(coords)),
                             Partition(std::move(gap_labels), 2),
                             Partition(std::move(alt_labels), 2),
                             0.0, 0.0, 0.0, 0.0, r, 0.0, 0.0, n_big, n_small, 0, false};
    rep.q_gap = cost_centroid(rep.dataset, rep.gap_partition, Exec::serial);
    rep.q_alt = cost_centroid(rep.dataset, rep.alternative_partition, Exec::serial);
    rep.v_d = compute_stats(rep.dataset, rep.gap_partition)[0].variance;
    rep.x3_lower_bound = rep.v_d / (3.0 * r);
    rep.surface_gap = gap_report(compute_stats(rep.dataset, rep.gap_partition)).min_gap;
    rep.gap_multiple = rep.surface_gap / r;
    rep.succeeded = rep.q_alt < rep.q_gap;
    return rep;
}

CounterexampleReport gen_unbalanced_counterexample(double r, double gap_multiple,
                                                   std::size_t n_big, std::size_t n_small,
                                                   std::uint64_t rng_seed) {
    if (!(gap_multiple >= 4.0) || !std::isfinite(gap_multiple)) {
        throw std::invalid_argument("gap_multiple must be at least 4");
    }
    auto rep = unbalanced_instance(r, r + gap_multiple * r, n_big, n_small);
    rep.gap_multiple = gap_multiple;
    rep.rng_seed = rng_seed;
    return rep;
}

}  // namespace clusterability
