// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "clusterability/analytics.hpp"
#include "clusterability/engine.hpp"
#include "clusterability/generators.hpp"
#include "clusterability/geometry.hpp"
#include "clusterability/oracle.hpp"
#include "clusterability/rng.hpp"
#include "clusterability/verifier.hpp"

using namespace clusterability;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

struct Criterion {
    std::string id;
    std::string title;
    double time_limit_seconds;  // <= 0 means no limit
    std::function<Outcome()> body;
};

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

Outcome cost_forms_agree() {
    Rng rng(1001);
    int agree = 0;
    double worst = 0.0;
    for (int t = 0; t < 500; ++t) {
        const std::size_t k = 1 + rng.uniform_index(8);
        const std::size_t n = k + rng.uniform_index(200 - k + 1);
        const std::size_t dim = 1 + rng.uniform_index(10);
        const double scale = std::pow(10.0, rng.uniform(-2.0, 3.0));
        std::vector<double> coords(n * dim);
        for (auto& c : coords) c = scale * rng.normal() + rng.uniform(-5.0, 5.0);
        std::vector<std::size_t> labels(n);
        for (std::size_t i = 0; i < n; ++i) labels[i] = i < k ? i : rng.uniform_index(k);
        rng.shuffle(labels);
        const Dataset data(dim, coords);
        const Partition part(labels, k);
        const double a = cost_centroid(data, part);
        const double b = cost_pairwise(data, part);
        const double rel = std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
        worst = std::max(worst, rel);
        if (rel <= 1e-9) ++agree;
    }
    return {agree == 500, fmt("%d/500 pairs agree, worst relative difference %.3g", agree, worst)};
}

Outcome seeding_equal_brackets() {
    const double p2 = p_seed_equal(2);
    const double p8 = p_seed_equal(8);
    const double p30 = p_seed_equal(30);
    auto formula = [](double k) {
        const double a = k * k * (k + 1) * (k + 1);
        return std::pow(a / (a + k - 1), k - 1);
    };
    const bool exact = std::abs(p2 - 36.0 / 37.0) <= 1e-12 && std::abs(p8 - formula(8)) <= 1e-12 &&
                       std::abs(p30 - formula(30)) <= 1e-12;
    const bool brackets = 1 - p2 < 0.03 && 1 - p8 < 0.01 && 1 - p30 < 0.001;
    return {exact && brackets, fmt("failure %.3f%%/%.3f%%/%.4f%% for k=2/8/30 (36/37 diff %.1e)",
                                   100 * (1 - p2), 100 * (1 - p8),
                                   100 * (1 - p30), std::abs(p2 - 36.0 / 37.0))};
}

Outcome equal_gap_curve() {
    double worst = 0.0;
    bool increasing = true;
    double previous = 0.0;
    for (std::size_t k = 2; k <= 30; ++k) {
        const double kk = static_cast<double>(k);
        const std::vector<std::size_t> cards(k, 10);
        const auto req = required_gap_plain(k, cards, 1.0);
        const double balanced = std::sqrt(kk * (kk + 1));
        const double pair = kk * std::sqrt(2 * kk + kk * kk);
        worst = std::max({worst, std::abs(req.g_balanced_bound - balanced) / balanced,
                          std::abs(req.g_pairwise_bound - pair) / pair,
                          std::abs(req.g_required - std::max(balanced, pair)) / pair});
        if (k > 2 && !(req.g_required > previous)) increasing = false;
        previous = req.g_required;
    }
    const auto rows = curve_equal(2, 30, 0.95);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (!(rows[i].g_over_r > rows[i - 1].g_over_r)) increasing = false;
    }
    return {worst <= 1e-12 && increasing,
            fmt("k=2..30 worst relative error %.2g, increasing=%s", worst, increasing ? "yes" : "no")};
}

Outcome planted_plain_recovery() {
    Rng rng(2024);
    const std::size_t ks[] = {2, 3, 5};
    const std::size_t dims[] = {2, 3, 5};
    int recovered = 0;
    std::uint64_t total_reps = 0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t k = ks[t % 3];
        const std::size_t dim = dims[rng.uniform_index(3)];
        std::vector<std::size_t> cards(k);
        std::vector<double> radii(k);
        for (std::size_t c = 0; c < k; ++c) {
            cards[c] = 20 + rng.uniform_index(600 / k - 20 + 1);
            radii[c] = rng.uniform(0.5, 2.0);
        }
        const auto planted = gen_well_clusterable(k, cards, radii, dim, 1.0, rng.next_u64());
        const double n = static_cast<double>(planted.dataset.size());
        const double m = static_cast<double>(*std::min_element(cards.begin(), cards.end()));
        const double big = static_cast<double>(*std::max_element(cards.begin(), cards.end()));
        const auto reps = required_repetitions(p_seed_unbalanced(k, n, m, big), 0.95);
        total_reps += reps.runs;
        const auto run = multi_restart(planted.dataset, k, reps.runs, rng.next_u64());
        if (equivalent(run.partition, planted.planted_partition)) ++recovered;
    }
    return {recovered >= 180,
            fmt("%d/200 recovered (need >= 180), %llu restarts in total", recovered,
                static_cast<unsigned long long>(total_reps))};
}

Outcome oracle_finds_planted() {
    Rng rng(77);
    int hits = 0;
    for (int t = 0; t < 50; ++t) {
        const std::size_t k = 2 + t % 2;
        const std::size_t dim = 1 + rng.uniform_index(3);
        std::vector<std::size_t> cards(k);
        std::vector<double> radii(k);
        for (std::size_t c = 0; c < k; ++c) {
            cards[c] = 2 + rng.uniform_index(k == 2 ? 5 : 3);
            radii[c] = rng.uniform(0.5, 1.5);
        }
        const auto planted = gen_well_clusterable(k, cards, radii, dim, 1.0, rng.next_u64());
        const auto best = brute_force_optimal(planted.dataset, k);
        if (equivalent(best.best_partition, planted.planted_partition)) ++hits;
    }
    return {hits == 50, fmt("%d/50 planted partitions are the global optimum", hits)};
}

Outcome unbalanced_counterexample() {
    const auto rep = gen_unbalanced_counterexample(1.0, 9.0, 1000, 2);
    const bool costs = std::abs(rep.q_gap - 1000.0) <= 1e-9 && rep.q_alt < 200.0 &&
                       rep.q_alt < rep.q_gap;
    const auto shrunk = unbalanced_instance(1.0, 3.0, 10, 2);
    const auto best = brute_force_optimal(shrunk.dataset, 2);
    const bool beaten = best.best_cost < shrunk.q_gap - 1e-9 &&
                        !equivalent(best.best_partition, shrunk.gap_partition);
    return {costs && beaten,
            fmt("Q_gap=%.9f Q_alt=%.4f; n=12 instance: gap split %.4f vs optimum %.4f", rep.q_gap,
                rep.q_alt, shrunk.q_gap, best.best_cost)};
}

Outcome ring_is_bimodal() {
    const auto ring = gen_ring(2000, 1.0, 0.05, 7);
    const auto hist = distance_histogram(ring, 50);
    const auto maxima = count_local_maxima(hist.counts);
    return {maxima >= 2, fmt("%zu local maxima in 50 bins", maxima)};
}

Outcome core_preservation() {
    Rng rng(8080);
    const std::size_t dims[] = {1, 2, 3, 5};
    int held = 0;
    for (int t = 0; t < 10000; ++t) {
        const std::size_t dim = dims[t % 4];
        const double rho = rng.uniform(0.05, 5.0);
        const double g = rng.uniform(1e-3, 5.0);
        const double core = g / 2.0;
        const auto u = random_unit_vector(rng, dim);
        std::vector<double> a(dim), b(dim), x(dim), y(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            a[j] = rng.uniform(-10, 10);
            b[j] = a[j] + (2 * rho + g) * u[j];
        }
        // Half of the trials push X and Y to the core surface facing the other cluster.
        const bool adversarial = t % 2 == 1;
        const auto ox = adversarial ? std::vector<double>(dim, 0.0) : uniform_in_ball(rng, dim, core);
        const auto oy = adversarial ? std::vector<double>(dim, 0.0) : uniform_in_ball(rng, dim, core);
        for (std::size_t j = 0; j < dim; ++j) {
            x[j] = a[j] + (adversarial ? 0.999999 * core * u[j] : ox[j]);
            y[j] = b[j] + (adversarial ? -0.999999 * core * u[j] : oy[j]);
        }
        std::vector<double> pa, pb;
        const std::size_t count = 5 + rng.uniform_index(40);
        for (std::size_t i = 0; i < count; ++i) {
            const auto oa = i < 2 ? random_unit_vector(rng, dim) : uniform_in_ball(rng, dim, rho);
            const auto ob = i < 2 ? random_unit_vector(rng, dim) : uniform_in_ball(rng, dim, rho);
            for (std::size_t j = 0; j < dim; ++j) {
                const double sa = i < 2 ? 0.999999 * rho : 1.0;
                const double sb = i < 2 ? 0.999999 * rho : 1.0;
                pa.push_back(a[j] + (i == 0 ? 0.999999 * rho * u[j] : sa * oa[j]));
                pb.push_back(b[j] + (i == 0 ? -0.999999 * rho * u[j] : sb * ob[j]));
            }
        }
        const CorePreservationConfig cfg{a, b, rho, g};
        if (check_core_preservation(cfg, Dataset(dim, pa), Dataset(dim, pb), x, y)) ++held;
    }
    return {held == 10000, fmt("%d/10000 configurations keep both clusters", held)};
}

Outcome planted_core_recovery() {
    Rng rng(9090);
    const double p_values[] = {0.05, 0.1, 0.2};
    int recovered = 0;
    int verified = 0;
    for (int t = 0; t < 100; ++t) {
        const double p = p_values[t % 3];
        const std::size_t k = 2 + (t / 3) % 2;
        const std::size_t dim = 2 + rng.uniform_index(3);
        std::vector<std::size_t> cards(k);
        std::vector<double> radii(k);
        for (std::size_t c = 0; c < k; ++c) {
            cards[c] = 30 + rng.uniform_index(91);
            radii[c] = rng.uniform(0.5, 2.0);
        }
        const auto planted = gen_core_clusterable(k, cards, radii, dim, p, 1.0, rng.next_u64());
        const auto reps = required_repetitions(p_seed_core_limit(k, p), 0.95);
        const auto run = multi_restart(planted.dataset, k, reps.runs, rng.next_u64());
        if (!equivalent(run.partition, planted.planted_partition)) continue;
        ++recovered;
        if (verify(planted.dataset, run.partition, VerifyMode::core, p).well_clusterable) ++verified;
    }
    return {recovered >= 90 && verified == recovered,
            fmt("%d/100 recovered (need >= 90), core verification passed on %d/%d", recovered,
                verified, recovered)};
}

Outcome unbalanced_bound() {
    const double n = 1000.0;
    const double base = n / 2.0;
    const double big = base * std::sqrt(20.0);
    const double small = base / std::sqrt(20.0);
    const double p = p_seed_unbalanced(2, n, small, big);
    const double a = 4.0 * n * (2.0 + n / small);
    const double expected = a / (a + big);
    return {p >= 0.95 && std::abs(p - expected) <= 1e-12,
            fmt("p_single=%.6f at M/m=20 (formula diff %.1e)", p, std::abs(p - expected))};
}

Outcome repetition_minimality() {
    Rng rng(1111);
    int minimal = 0;
    for (int t = 0; t < 1000; ++t) {
        const double p = std::pow(10.0, rng.uniform(-4.0, 0.0)) * (1.0 - 1e-12);
        const double pr = rng.uniform(0.01, 0.999);
        const auto r = required_repetitions(p, pr);
        const double runs = static_cast<double>(r.runs);
        const bool enough = std::pow(1 - p, runs) < 1 - pr;
        const bool tight = r.runs == 1 || std::pow(1 - p, runs - 1) >= 1 - pr;
        if (r.reachable && enough && tight) ++minimal;
    }
    return {minimal == 1000, fmt("%d/1000 repetition counts are minimal", minimal)};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"AC1", "cost-form equivalence", 10, cost_forms_agree},
        {"AC2", "equal-size seeding bound", 0, seeding_equal_brackets},
        {"AC3", "equal-size gap curve", 0, equal_gap_curve},
        {"AC4", "planted plain recovery", 120, planted_plain_recovery},
        {"AC5", "oracle global minimum", 60, oracle_finds_planted},
        {"AC6", "unbalanced counterexample", 5, unbalanced_counterexample},
        {"AC7", "ring distance histogram", 5, ring_is_bimodal},
        {"AC8", "core preservation", 30, core_preservation},
        {"AC9", "planted core recovery", 180, planted_core_recovery},
        {"AC10", "unbalanced seeding bound", 0, unbalanced_bound},
        {"AC11", "repetition minimality", 1, repetition_minimality},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.body();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.time_limit_seconds <= 0 || seconds < c.time_limit_seconds;
        const bool pass = outcome.ok && in_time;
        if (!pass) ++failures;
        std::printf("[%s] %-4s %-28s %s (%.2f s%s)\n", pass ? "PASS" : "FAIL", c.id.c_str(),
                    c.title.c_str(), outcome.detail.c_str(), seconds,
                    in_time ? "" : ", over time limit");
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
