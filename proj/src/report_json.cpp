#include "clusterability/report_json.hpp"

namespace clusterability::report {

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json labels_json(const Partition& p) {
    return json{{"k", p.k()}, {"labels", std::vector<std::size_t>(p.labels().begin(), p.labels().end())}};
}

}  // namespace

json to_json(const GapRequirement& req) {
    return json{{"g_balanced_bound", req.g_balanced_bound},
                {"g_pairwise_bound", req.g_pairwise_bound},
                {"g_required", req.g_required},
                {"k", req.k},
                {"n", req.n},
                {"cardinalities", req.cardinalities},
                {"radii", req.radii},
                {"M", req.max_cardinality},
                {"m", req.min_cardinality},
                {"p_frak", optional_number(req.p_frak)}};
}

json to_json(const ClusterStats& stats) {
    return json{{"centroid", stats.centroid},
                {"cardinality", stats.cardinality},
                {"enclosing_radius", stats.enclosing_radius},
                {"variance", stats.variance}};
}

json to_json(const CoreProfile& core) {
    return json{{"cluster", core.cluster},
                {"core_radius", core.core_radius},
                {"core_cardinality", core.core_cardinality},
                {"achieved_fraction", core.achieved_fraction},
                {"p_frak", core.p_frak},
                {"core_member_indices", core.core_member_indices}};
}

json to_json(const ClusterabilityVerdict& verdict) {
    json pairs = json::array();
    for (const auto& d : verdict.per_pair_detail) {
        pairs.push_back({{"p", d.p}, {"q", d.q}, {"measured_gap", d.measured_gap},
                         {"required_bound", d.required_bound}});
    }
    json clusters = json::array();
    for (const auto& s : verdict.clusters) clusters.push_back(to_json(s));
    json cores = json::array();
    for (const auto& c : verdict.cores) cores.push_back(to_json(c));
    return json{{"schema_version", schema_version},
                {"kind", "verdict"},
                {"mode", to_string(verdict.mode)},
                {"margin", verdict.margin},
                {"measured_min_gap", verdict.measured_min_gap},
                {"required", to_json(verdict.required)},
                {"well_clusterable", verdict.well_clusterable},
                {"per_pair_detail", pairs},
                {"clusters", clusters},
                {"cores", cores}};
}

json to_json(const PlantedDataset& planted) {
    return json{{"n", planted.dataset.size()},
                {"dim", planted.dataset.dim()},
                {"k", planted.planted_partition.k()},
                {"cardinalities", planted.planted_partition.cardinalities()},
                {"planted_centers", planted.planted_centers},
                {"per_cluster_radius", planted.per_cluster_radius},
                {"full_radius", planted.full_radius},
                {"realized_min_gap", planted.realized_min_gap},
                {"required_gap", planted.required_gap},
                {"margin", planted.margin},
                {"center_spacing", planted.center_spacing},
                {"rng_seed", planted.rng_seed},
                {"p_frak", optional_number(planted.p_frak)},
                {"realized_p_frak", optional_number(planted.realized_p_frak)},
                {"straggler_counts", planted.straggler_counts}};
}

json to_json(const CounterexampleReport& rep) {
    return json{{"schema_version", schema_version},
                {"kind", "counterexample"},
                {"r", rep.r},
                {"gap_multiple", rep.gap_multiple},
                {"surface_gap", rep.surface_gap},
                {"n_big", rep.n_big},
                {"n_small", rep.n_small},
                {"Q_gap", rep.q_gap},
                {"Q_alt", rep.q_alt},
                {"V_d", rep.v_d},
                {"x3_lower_bound", rep.x3_lower_bound},
                {"succeeded", rep.succeeded},
                {"rng_seed", rep.rng_seed}};
}

json to_json(const RunResult& run) {
    std::vector<std::vector<double>> centers;
    for (std::size_t c = 0; c < run.centers.size(); ++c) {
        const auto p = run.centers.point(c);
        centers.emplace_back(p.begin(), p.end());
    }
    std::vector<std::vector<double>> seeds;
    for (std::size_t c = 0; c < run.seed.centers.size(); ++c) {
        const auto p = run.seed.centers.point(c);
        seeds.emplace_back(p.begin(), p.end());
    }
    return json{{"schema_version", schema_version},
                {"kind", "run"},
                {"k", run.partition.k()},
                {"cost", run.cost},
                {"iterations", run.iterations},
                {"converged", run.converged},
                {"cost_trace", run.cost_trace},
                {"centers", centers},
                {"seed_indices", run.seed.source_indices},
                {"seed_centers", seeds},
                {"cardinalities", run.partition.cardinalities()}};
}

json to_json(const SeedingAnalysis& a) {
    return json{{"regime", to_string(a.regime)},
                {"k", a.k},
                {"n", a.n},
                {"m", a.m},
                {"M", a.max_size},
                {"p_frak", optional_number(a.p_frak)},
                {"p_single", a.p_single},
                {"p_approx", a.p_approx},
                {"pr_succ_target", a.pr_succ_target},
                {"R", a.repetitions.runs},
                {"reachable", a.repetitions.reachable}};
}

json to_json(const Histogram& histogram) {
    return json{{"bin_edges", histogram.bin_edges}, {"counts", histogram.counts}};
}

json to_json(const OracleResult& result) {
    return json{{"best_cost", result.best_cost},
                {"partitions_examined", result.partitions_examined},
                {"best_partition", labels_json(result.best_partition)}};
}

}  // namespace clusterability::report
