#include "clusterability/analytics.hpp"

#include <cmath>
#include <stdexcept>

#include "clusterability/io.hpp"

namespace clusterability {

namespace {

void check_k(std::size_t k) {
    if (k < 2) {
        throw std::invalid_argument("seeding bounds need k >= 2");
    }
}

void check_sizes(std::size_t k, double n, double m, double max_size) {
    check_k(k);
    const double kk = static_cast<double>(k);
    const double slack = 1e-9 * n;
    if (!(n > 0.0) || !(m > 0.0) || !(m <= max_size) || !std::isfinite(max_size) ||
        kk * m > n + slack || n > kk * max_size + slack) {
        throw std::invalid_argument(
            "inconsistent cluster sizes: need 0 < m <= M and k*m <= n <= k*M");
    }
}

void check_p_frak(double p_frak) {
    if (!(p_frak >= 0.0 && p_frak < 1.0)) {
        throw std::invalid_argument("p_frak must lie in [0, 1)");
    }
}

double seeding_scale(std::size_t k, double n, double m) {
    const double kk = static_cast<double>(k);
    return kk * kk * n * (2.0 + n / m);
}

}  // namespace

double p_seed_equal(std::size_t k) {
    check_k(k);
    const double kk = static_cast<double>(k);
    const double a = kk * kk * (kk + 1.0) * (kk + 1.0);
    return std::pow(a / (a + (kk - 1.0)), kk - 1.0);
}

double p_seed_equal_approx(std::size_t k) {
    check_k(k);
    const double kk = static_cast<double>(k);
    const double a = kk * kk * (kk + 1.0) * (kk + 1.0);
    return std::exp(-(kk - 1.0) * (kk - 1.0) / (a + (kk - 1.0)));
}

double p_seed_unbalanced(std::size_t k, double n, double m, double max_size) {
    check_sizes(k, n, m, max_size);
    const double kk = static_cast<double>(k);
    const double a = seeding_scale(k, n, m);
    return std::pow(a / (a + (kk - 1.0) * max_size), kk - 1.0);
}

double p_seed_unbalanced_approx(std::size_t k, double n, double m, double max_size) {
    check_sizes(k, n, m, max_size);
    const double kk = static_cast<double>(k);
    const double a = seeding_scale(k, n, m);
    return std::exp(-(kk - 1.0) * (kk - 1.0) * max_size / (a + (kk - 1.0) * max_size));
}

double p_seed_core(std::size_t k, double n, double m, double max_size, double p_frak) {
    check_p_frak(p_frak);
    check_sizes(k, n, m, max_size);
    const double kk = static_cast<double>(k);
    const double a = seeding_scale(k, n, m) * (1.0 + p_frak);
    return std::pow(a * (1.0 - p_frak) / (a + (kk - 1.0) * max_size), kk - 1.0);
}

double p_seed_core_approx(std::size_t k, double n, double m, double max_size, double p_frak) {
    check_p_frak(p_frak);
    check_sizes(k, n, m, max_size);
    const double kk = static_cast<double>(k);
    const double a = seeding_scale(k, n, m) * (1.0 + p_frak);
    return std::pow(1.0 - p_frak, kk - 1.0) *
           std::exp(-(kk - 1.0) * (kk - 1.0) * max_size / (a + (kk - 1.0) * max_size));
}

double p_seed_core_limit(std::size_t k, double p_frak) {
    check_k(k);
    check_p_frak(p_frak);
    return std::pow(1.0 - p_frak, static_cast<double>(k) - 1.0);
}

Repetitions required_repetitions(double p_single, double pr_succ, std::uint64_t max_runs) {
    if (!(pr_succ > 0.0 && pr_succ < 1.0)) {
        throw std::invalid_argument("target success probability must lie in (0, 1)");
    }
    if (!(p_single >= 0.0 && p_single <= 1.0)) {
        throw std::invalid_argument("p_single must lie in [0, 1]");
    }
    if (p_single == 0.0) {
        throw std::invalid_argument("p_single = 0: no number of repetitions reaches the target");
    }
    if (max_runs == 0) {
        throw std::invalid_argument("max_runs must be positive");
    }
    if (p_single == 1.0) return {1, true};

    const double miss = 1.0 - p_single;
    const double allowed = 1.0 - pr_succ;
    const double estimate = std::ceil(std::log(allowed) / std::log1p(-p_single));
    if (!(estimate <= static_cast<double>(max_runs))) return {max_runs, false};

    auto runs = static_cast<std::uint64_t>(std::max(1.0, estimate));
    while (std::pow(miss, static_cast<double>(runs)) >= allowed) {
        if (runs == max_runs) return {max_runs, false};
        ++runs;
    }
    while (runs > 1 && std::pow(miss, static_cast<double>(runs - 1)) < allowed) --runs;
    return {runs, true};
}

std::string to_string(SeedingRegime regime) {
    switch (regime) {
        case SeedingRegime::equal: return "equal";
        case SeedingRegime::unbalanced: return "unbalanced";
        case SeedingRegime::core: return "core";
    }
    return "unknown";
}

SeedingRegime parse_seeding_regime(const std::string& text) {
    if (text == "equal") return SeedingRegime::equal;
    if (text == "unbalanced") return SeedingRegime::unbalanced;
    if (text == "core") return SeedingRegime::core;
    throw std::invalid_argument("unknown regime '" + text + "'");
}

SeedingAnalysis analyze_seeding(SeedingRegime regime, std::size_t k, double n, double m,
                                double max_size, std::optional<double> p_frak, double pr_succ) {
    SeedingAnalysis a;
    a.regime = regime;
    a.k = k;
    a.n = n;
    a.pr_succ_target = pr_succ;
    switch (regime) {
        case SeedingRegime::equal:
            a.m = a.max_size = n / static_cast<double>(k);
            a.p_single = p_seed_equal(k);
            a.p_approx = p_seed_equal_approx(k);
            break;
        case SeedingRegime::unbalanced:
            a.m = m;
            a.max_size = max_size;
            a.p_single = p_seed_unbalanced(k, n, m, max_size);
            a.p_approx = p_seed_unbalanced_approx(k, n, m, max_size);
            break;
        case SeedingRegime::core:
            if (!p_frak) {
                throw std::invalid_argument("core regime needs p_frak");
            }
            a.m = m;
            a.max_size = max_size;
            a.p_frak = p_frak;
            a.p_single = p_seed_core(k, n, m, max_size, *p_frak);
            a.p_approx = p_seed_core_approx(k, n, m, max_size, *p_frak);
            break;
    }
    a.repetitions = required_repetitions(a.p_single, pr_succ);
    return a;
}

double worst_case_gap_over_radius(std::size_t k, double n, double m, double max_size,
                                  std::optional<double> p_frak) {
    check_sizes(k, n, m, max_size);
    const double kk = static_cast<double>(k);
    const double balanced = std::sqrt(kk * (max_size + n) / m);
    const double pair = kk * std::sqrt(n * (2.0 * m + n) / (m * m));
    double ratio = std::max(balanced, pair);
    if (p_frak) {
        check_p_frak(*p_frak);
        ratio *= std::sqrt((1.0 + *p_frak) / (1.0 - *p_frak));
    }
    return ratio;
}

std::vector<CurveRow> curve_equal(std::size_t k_min, std::size_t k_max, double pr_succ) {
    if (k_min < 2 || k_max < k_min) {
        throw std::invalid_argument("k range must satisfy 2 <= k_min <= k_max");
    }
    std::vector<CurveRow> rows;
    for (std::size_t k = k_min; k <= k_max; ++k) {
        const double kk = static_cast<double>(k);
        CurveRow row;
        row.x = kk;
        row.k = k;
        row.g_over_r = std::max(std::sqrt(kk * (kk + 1.0)), kk * std::sqrt(2.0 * kk + kk * kk));
        row.p_single = p_seed_equal(k);
        row.p_approx = p_seed_equal_approx(k);
        row.repetitions = required_repetitions(row.p_single, pr_succ);
        rows.push_back(row);
    }
    return rows;
}

std::vector<CurveRow> curve_unbalanced(std::size_t k, double n, const std::vector<double>& ratios,
                                       double pr_succ) {
    std::vector<CurveRow> rows;
    for (double ratio : ratios) {
        if (!(ratio >= 1.0)) {
            throw std::invalid_argument("M/m ratios must be >= 1");
        }
        const double base = n / static_cast<double>(k);
        const double big = base * std::sqrt(ratio);
        const double small = base / std::sqrt(ratio);
        CurveRow row;
        row.x = ratio;
        row.k = k;
        row.g_over_r = worst_case_gap_over_radius(k, n, small, big);
        row.p_single = p_seed_unbalanced(k, n, small, big);
        row.p_approx = p_seed_unbalanced_approx(k, n, small, big);
        row.repetitions = required_repetitions(row.p_single, pr_succ);
        rows.push_back(row);
    }
    return rows;
}

std::vector<CurveRow> curve_core(std::size_t k, double n, double ratio,
                                 const std::vector<double>& p_values, double pr_succ) {
    if (!(ratio >= 1.0)) {
        throw std::invalid_argument("M/m ratio must be >= 1");
    }
    const double base = n / static_cast<double>(k);
    const double big = base * std::sqrt(ratio);
    const double small = base / std::sqrt(ratio);
    std::vector<CurveRow> rows;
    for (double p : p_values) {
        CurveRow row;
        row.x = p;
        row.k = k;
        row.g_over_r = worst_case_gap_over_radius(k, n, small, big, p);
        row.p_single = p_seed_core(k, n, small, big, p);
        row.p_approx = p_seed_core_approx(k, n, small, big, p);
        row.p_limit = p_seed_core_limit(k, p);
        row.repetitions = required_repetitions(row.p_single, pr_succ);
        rows.push_back(row);
    }
    return rows;
}

std::string curve_to_csv(const std::vector<CurveRow>& rows, SeedingRegime regime) {
    using io::format_double;
    std::string out;
    switch (regime) {
        case SeedingRegime::equal: out = "k,g_over_r,p_single,p_approx,R,reachable\n"; break;
        case SeedingRegime::unbalanced:
            out = "ratio,k,g_over_r,p_single,p_approx,R,reachable\n";
            break;
        case SeedingRegime::core:
            out = "p_frak,k,g_over_r,p_single,p_approx,p_limit,R,reachable\n";
            break;
    }
    for (const auto& row : rows) {
        if (regime != SeedingRegime::equal) out += format_double(row.x) + ",";
        out += std::to_string(row.k) + "," + format_double(row.g_over_r) + "," +
               format_double(row.p_single) + "," + format_double(row.p_approx) + ",";
        if (regime == SeedingRegime::core) out += format_double(row.p_limit) + ",";
        out += std::to_string(row.repetitions.runs) + "," +
               (row.repetitions.reachable ? "true" : "false") + "\n";
    }
    return out;
}

}  // namespace clusterability
