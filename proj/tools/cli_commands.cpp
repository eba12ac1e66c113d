#include "cli_commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <ostream>
#include <stdexcept>

#include "clusterability/analytics.hpp"
#include "clusterability/engine.hpp"
#include "clusterability/generators.hpp"
#include "clusterability/io.hpp"
#include "clusterability/report_json.hpp"
#include "clusterability/verifier.hpp"

namespace clusterability::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Options {
    std::string out;
    std::string exec = "parallel";
    std::uint64_t seed = 0;

    // generators
    std::size_t k = 0;
    std::vector<std::size_t> sizes;
    double radius = 1.0;
    std::vector<double> radii;
    std::size_t dim = 2;
    double margin = 1.0;
    double p_frak = 0.0;
    std::size_t n = 0;
    double thickness = 0.0;
    double r = 1.0;
    double gap_multiple = 9.0;
    std::size_t n_big = 1000;
    std::size_t n_small = 2;

    // cluster / verify / histogram
    std::string data;
    std::string partition;
    std::size_t reps = 1;
    bool auto_reps = false;
    double pr_succ = 0.95;
    double mm_ratio = 1.0;
    std::size_t max_reps = 1000;
    std::size_t max_iters = 100;
    double tol = 1e-10;
    std::string mode = "plain";
    std::size_t bins = 50;

    // analyze
    std::string regime = "equal";
    std::size_t k_min = 2;
    std::size_t k_max = 30;
    double n_real = 1000.0;
    double ratio = 1.0;
    std::vector<double> ratios{1, 2, 5, 10, 20, 50, 100};
    std::vector<double> p_values{0.0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5};

    // replay
    std::string manifest;
};

struct Run {
    std::string command;
    std::vector<std::string> argv;
    fs::path out_dir;
    json params = json::object();
    json inputs = json::array();
    json outputs = json::array();
    json result = json::object();
    std::ostream* out = nullptr;

    void write(const std::string& name, std::string_view content) {
        io::write_file_atomic(out_dir / name, content);
        outputs.push_back(name);
    }
    void write_json(const std::string& name, const json& doc) { write(name, doc.dump(2) + "\n"); }
};

Exec parse_exec(const std::string& text) {
    if (text == "serial") return Exec::serial;
    if (text == "parallel") return Exec::parallel;
    throw std::invalid_argument("--exec must be serial or parallel");
}

// Input paths are recorded absolute so a manifest replays from any directory.
std::vector<std::string> normalize_argv(const std::vector<std::string>& args) {
    static const std::vector<std::string> path_flags{"--data", "--partition"};
    std::vector<std::string> out = args;
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const auto& flag : path_flags) {
            if (out[i] == flag && i + 1 < out.size()) {
                out[i + 1] = fs::absolute(out[i + 1]).lexically_normal().string();
            } else if (out[i].rfind(flag + "=", 0) == 0) {
                out[i] = flag + "=" +
                         fs::absolute(out[i].substr(flag.size() + 1)).lexically_normal().string();
            }
        }
    }
    return out;
}

json collect_params(const CLI::App* app) {
    json params = json::object();
    for (const CLI::Option* opt : app->get_options()) {
        const std::string name = opt->get_single_name();
        if (name == "help" || name.empty()) continue;
        if (opt->count() > 0) {
            const auto& results = opt->results();
            if (opt->get_type_size_max() == 0) {
                params[name] = true;
            } else if (results.size() == 1) {
                params[name] = results.front();
            } else {
                params[name] = results;
            }
        } else if (!opt->get_default_str().empty()) {
            params[name] = opt->get_default_str();
        }
    }
    return params;
}

void write_manifest(Run& run, const Options& opt, double wall_seconds) {
    json manifest{{"schema_version", report::schema_version},
                  {"tool", "clusterability"},
                  {"version", tool_version},
                  {"command", run.command},
                  {"argv", run.argv},
                  {"params", run.params},
                  {"seed", opt.seed},
                  {"inputs", run.inputs},
                  {"out_dir", fs::absolute(run.out_dir).lexically_normal().string()},
                  {"outputs", run.outputs},
                  {"wall_time_seconds", wall_seconds},
                  {"result", run.result}};
    io::write_file_atomic(run.out_dir / "manifest.json", manifest.dump(2) + "\n");
}

std::vector<double> radii_for(const Options& opt, std::size_t k, const CLI::Option* radii_opt) {
    if (radii_opt->count() > 0) {
        if (opt.radii.size() != k) {
            throw std::invalid_argument("--radii needs one value per cluster");
        }
        return opt.radii;
    }
    return std::vector<double>(k, opt.radius);
}

std::size_t checked_k(const Options& opt, const CLI::Option* k_opt) {
    if (opt.sizes.empty()) {
        throw std::invalid_argument("--sizes is required");
    }
    if (k_opt->count() > 0 && opt.k != opt.sizes.size()) {
        throw std::invalid_argument("--k disagrees with the number of --sizes");
    }
    return opt.sizes.size();
}

Dataset load_dataset(Run& run, const std::string& path) {
    run.inputs.push_back(fs::absolute(path).lexically_normal().string());
    return io::read_dataset_csv(path);
}

Partition load_partition(Run& run, const std::string& path) {
    run.inputs.push_back(fs::absolute(path).lexically_normal().string());
    return io::read_partition_csv(path);
}

void write_planted(Run& run, const PlantedDataset& planted) {
    run.write("dataset.csv", io::dataset_to_csv(planted.dataset));
    run.write("partition.csv", io::partition_to_csv(planted.planted_partition));
    run.result = report::to_json(planted);
}

void counterexample_outputs(Run& run, const Options& opt) {
    const auto rep =
        gen_unbalanced_counterexample(opt.r, opt.gap_multiple, opt.n_big, opt.n_small, opt.seed);
    run.write("dataset.csv", io::dataset_to_csv(rep.dataset));
    run.write("partition.csv", io::partition_to_csv(rep.gap_partition));
    run.write("alternative_partition.csv", io::partition_to_csv(rep.alternative_partition));
    run.result = report::to_json(rep);
    run.write_json("report.json", run.result);
    *run.out << "Q_gap = " << io::format_double(rep.q_gap)
             << ", Q_alt = " << io::format_double(rep.q_alt)
             << (rep.succeeded ? " (gap partition is not optimal)\n"
                               : " (construction did not beat the gap partition)\n");
}

int cluster_command(Run& run, const Options& opt, const CLI::Option* mm_opt,
                    const CLI::Option* pf_opt) {
    const Dataset data = load_dataset(run, opt.data);
    if (opt.k == 0 || opt.k > data.size()) {
        throw std::invalid_argument("--k must lie in [1, n]");
    }
    std::size_t reps = opt.reps;
    json analysis = nullptr;
    if (opt.auto_reps) {
        if (opt.k < 2) {
            throw std::invalid_argument("--auto-reps needs k >= 2");
        }
        const double n = static_cast<double>(data.size());
        const double base = n / static_cast<double>(opt.k);
        const double sq = std::sqrt(opt.mm_ratio);
        SeedingRegime regime = SeedingRegime::equal;
        std::optional<double> p_frak;
        if (pf_opt->count() > 0) {
            regime = SeedingRegime::core;
            p_frak = opt.p_frak;
        } else if (mm_opt->count() > 0) {
            regime = SeedingRegime::unbalanced;
        }
        if (!(opt.mm_ratio >= 1.0)) {
            throw std::invalid_argument("--mm-ratio must be >= 1");
        }
        const auto a =
            analyze_seeding(regime, opt.k, n, base / sq, base * sq, p_frak, opt.pr_succ);
        analysis = report::to_json(a);
        reps = static_cast<std::size_t>(a.repetitions.runs);
        if (!a.repetitions.reachable || reps > opt.max_reps) {
            analysis["capped_at"] = opt.max_reps;
            reps = std::min<std::size_t>(reps, opt.max_reps);
        }
    }
    if (reps == 0) {
        throw std::invalid_argument("--reps must be at least 1");
    }
    LloydOptions lopts;
    lopts.max_iters = opt.max_iters;
    lopts.tol = opt.tol;
    lopts.exec = parse_exec(opt.exec);
    const auto best = multi_restart(data, opt.k, reps, opt.seed, lopts, lopts.exec);

    run.write("partition.csv", io::partition_to_csv(best.partition));
    json doc = report::to_json(best);
    doc["repetitions"] = reps;
    doc["rng_seed"] = opt.seed;
    doc["seeding_analysis"] = analysis;
    run.write_json("run.json", doc);
    run.result = json{{"cost", best.cost}, {"repetitions", reps}};
    *run.out << "cost = " << io::format_double(best.cost) << " after " << reps
             << " restart(s)\n";
    return exit_ok;
}

int verify_command(Run& run, const Options& opt, const CLI::Option* pf_opt) {
    const VerifyMode mode = parse_verify_mode(opt.mode);
    if (mode == VerifyMode::core && pf_opt->count() == 0) {
        throw std::invalid_argument("core mode requires --p-frak");
    }
    const Dataset data = load_dataset(run, opt.data);
    const Partition partition = load_partition(run, opt.partition);
    std::optional<double> p_frak;
    if (pf_opt->count() > 0) p_frak = opt.p_frak;
    const auto verdict = verify(data, partition, mode, p_frak, opt.margin);
    const json doc = report::to_json(verdict);
    run.write_json("verdict.json", doc);
    run.result = json{{"well_clusterable", verdict.well_clusterable},
                      {"measured_min_gap", verdict.measured_min_gap},
                      {"g_required", verdict.required.g_required}};
    *run.out << (verdict.well_clusterable ? "well-clusterable" : "NOT well-clusterable")
             << ": min gap " << io::format_double(verdict.measured_min_gap) << ", required "
             << io::format_double(opt.margin * verdict.required.g_required) << "\n";
    return verdict.well_clusterable ? exit_ok : exit_verify_fail;
}

int analyze_command(Run& run, const Options& opt) {
    const SeedingRegime regime = parse_seeding_regime(opt.regime);
    std::vector<CurveRow> rows;
    switch (regime) {
        case SeedingRegime::equal: rows = curve_equal(opt.k_min, opt.k_max, opt.pr_succ); break;
        case SeedingRegime::unbalanced:
            rows = curve_unbalanced(opt.k, opt.n_real, opt.ratios, opt.pr_succ);
            break;
        case SeedingRegime::core:
            rows = curve_core(opt.k, opt.n_real, opt.ratio, opt.p_values, opt.pr_succ);
            break;
    }
    run.write("curve.csv", curve_to_csv(rows, regime));
    run.result = json{{"rows", rows.size()}, {"regime", to_string(regime)}};
    return exit_ok;
}

int histogram_command(Run& run, const Options& opt) {
    const Dataset data = load_dataset(run, opt.data);
    const auto h = distance_histogram(data, opt.bins, parse_exec(opt.exec));
    std::string csv = "bin_lo,bin_hi,count\n";
    for (std::size_t b = 0; b < h.counts.size(); ++b) {
        csv += io::format_double(h.bin_edges[b]) + "," + io::format_double(h.bin_edges[b + 1]) +
               "," + std::to_string(h.counts[b]) + "\n";
    }
    run.write("histogram.csv", csv);
    const std::size_t maxima = count_local_maxima(h.counts);
    run.result = json{{"local_maxima", maxima},
                      {"pairs", data.size() * (data.size() - 1) / 2},
                      {"max_distance", h.bin_edges.back()}};
    *run.out << maxima << " local maxima over " << h.counts.size() << " bins\n";
    return exit_ok;
}

int replay_command(const Options& opt, const CLI::Option* out_opt, std::ostream& out,
                   std::ostream& err) {
    const json manifest = json::parse(io::read_file(opt.manifest));
    auto args = manifest.at("argv").get<std::vector<std::string>>();
    if (out_opt->count() > 0) {
        bool replaced = false;
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (args[i] == "--out" && i + 1 < args.size()) {
                args[i + 1] = opt.out;
                replaced = true;
            } else if (args[i].rfind("--out=", 0) == 0) {
                args[i] = "--out=" + opt.out;
                replaced = true;
            }
        }
        if (!replaced) {
            throw std::invalid_argument("manifest argv carries no --out to replace");
        }
    }
    return run_cli(args, out, err);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"k-means clusterability toolkit: generate, cluster, verify, analyze"};
    app.set_version_flag("--version", tool_version);
    app.require_subcommand(1);
    app.add_option("--exec", opt.exec, "Kernel execution: serial or parallel")
        ->capture_default_str();

    auto add_out = [&](CLI::App* sub) {
        return sub->add_option("--out", opt.out, "Output directory")->required();
    };
    auto add_seed = [&](CLI::App* sub) {
        sub->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
    };

    auto* generate = app.add_subcommand("generate", "Generate a synthetic dataset");
    generate->require_subcommand(1);

    auto* gen_plain = generate->add_subcommand("plain", "Planted well-clusterable dataset");
    auto* gen_core = generate->add_subcommand("core", "Planted core-clusterable dataset");
    std::vector<std::pair<CLI::Option*, CLI::Option*>> planted_opts;
    for (auto* sub : {gen_plain, gen_core}) {
        auto* k_opt = sub->add_option("--k", opt.k, "Number of clusters (must match --sizes)");
        sub->add_option("--sizes", opt.sizes, "Cluster (core) cardinalities, comma separated")
            ->delimiter(',')
            ->required();
        sub->add_option("--radius", opt.radius, "Common radius")->capture_default_str();
        auto* radii_opt =
            sub->add_option("--radii", opt.radii, "Per-cluster radii")->delimiter(',');
        sub->add_option("--dim", opt.dim, "Dimension")->capture_default_str();
        sub->add_option("--margin", opt.margin, "Gap margin >= 1")->capture_default_str();
        add_seed(sub);
        add_out(sub);
        planted_opts.emplace_back(k_opt, radii_opt);
    }
    gen_core->add_option("--p-frak", opt.p_frak, "Straggler cost share")->required();

    auto* gen_ring_cmd = generate->add_subcommand("ring", "Thin ring (histogram counterexample)");
    gen_ring_cmd->add_option("--n", opt.n, "Point count")->required();
    gen_ring_cmd->add_option("--radius", opt.radius, "Ring radius")->capture_default_str();
    gen_ring_cmd->add_option("--thickness", opt.thickness, "Ring thickness")
        ->capture_default_str();
    add_seed(gen_ring_cmd);
    add_out(gen_ring_cmd);

    std::vector<CLI::App*> counterexample_cmds{
        generate->add_subcommand("counterexample", "Unbalanced-cardinality counterexample"),
        app.add_subcommand("counterexample", "Unbalanced-cardinality counterexample")};
    for (auto* sub : counterexample_cmds) {
        sub->add_option("--r", opt.r, "Big-cluster radius")->capture_default_str();
        sub->add_option("--gap-multiple", opt.gap_multiple, "Surface gap in units of r (>= 4)")
            ->capture_default_str();
        sub->add_option("--n-big", opt.n_big, "Big-cluster size (even)")->capture_default_str();
        sub->add_option("--n-small", opt.n_small, "Small-cluster size")->capture_default_str();
        add_seed(sub);
        add_out(sub);
    }

    auto* cluster = app.add_subcommand("cluster", "Best of R k-means++ restarts");
    cluster->add_option("--data", opt.data, "Dataset CSV")->required();
    cluster->add_option("--k", opt.k, "Number of clusters")->required();
    cluster->add_option("--reps", opt.reps, "Restarts")->capture_default_str();
    cluster->add_flag("--auto-reps", opt.auto_reps, "Derive restarts from the seeding bound");
    cluster->add_option("--pr-succ", opt.pr_succ, "Target success probability")
        ->capture_default_str();
    auto* mm_opt = cluster->add_option("--mm-ratio", opt.mm_ratio, "Worst-case M/m ratio");
    auto* cluster_pf = cluster->add_option("--p-frak", opt.p_frak, "Core straggler share");
    cluster->add_option("--max-reps", opt.max_reps, "Cap on derived restarts")
        ->capture_default_str();
    cluster->add_option("--max-iters", opt.max_iters, "Lloyd iteration budget")
        ->capture_default_str();
    cluster->add_option("--tol", opt.tol, "Centroid shift tolerance")->capture_default_str();
    add_seed(cluster);
    add_out(cluster);

    auto* verify_cmd = app.add_subcommand("verify", "A posteriori clusterability check");
    verify_cmd->add_option("--data", opt.data, "Dataset CSV")->required();
    verify_cmd->add_option("--partition", opt.partition, "Partition CSV")->required();
    verify_cmd->add_option("--mode", opt.mode, "plain or core")->capture_default_str();
    auto* verify_pf = verify_cmd->add_option("--p-frak", opt.p_frak, "Core straggler share");
    verify_cmd->add_option("--margin", opt.margin, "Required-gap multiplier")
        ->capture_default_str();
    add_out(verify_cmd);

    auto* analyze = app.add_subcommand("analyze", "Seeding-probability and restart curves");
    analyze->add_option("--regime", opt.regime, "equal, unbalanced or core")
        ->capture_default_str();
    analyze->add_option("--k-min", opt.k_min, "Smallest k (equal)")->capture_default_str();
    analyze->add_option("--k-max", opt.k_max, "Largest k (equal)")->capture_default_str();
    analyze->add_option("--k", opt.k, "k (unbalanced, core)");
    analyze->add_option("--n", opt.n_real, "Point count (unbalanced, core)")
        ->capture_default_str();
    analyze->add_option("--ratios", opt.ratios, "M/m values (unbalanced)")
        ->delimiter(',')
        ->capture_default_str();
    analyze->add_option("--ratio", opt.ratio, "M/m value (core)")->capture_default_str();
    analyze->add_option("--p-values", opt.p_values, "p_frak values (core)")
        ->delimiter(',')
        ->capture_default_str();
    analyze->add_option("--pr-succ", opt.pr_succ, "Target success probability")
        ->capture_default_str();
    add_out(analyze);

    auto* histogram = app.add_subcommand("histogram", "Pairwise-distance histogram");
    histogram->add_option("--data", opt.data, "Dataset CSV")->required();
    histogram->add_option("--bins", opt.bins, "Bin count")->capture_default_str();
    add_out(histogram);

    auto* replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
    replay->add_option("manifest", opt.manifest, "manifest.json")->required();
    auto* replay_out = replay->add_option("--out", opt.out, "Override the output directory");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_error;
    }

    try {
        parse_exec(opt.exec);
        if (replay->parsed()) return replay_command(opt, replay_out, out, err);

        const auto start = std::chrono::steady_clock::now();
        Run run;
        run.argv = normalize_argv(args);
        run.out_dir = opt.out;
        run.out = &out;
        fs::create_directories(run.out_dir);

        const CLI::App* leaf = app.get_subcommands().front();
        run.command = leaf->get_name();
        if (leaf == generate) {
            leaf = generate->get_subcommands().front();
            run.command += " " + leaf->get_name();
        }
        run.params = collect_params(leaf);

        int code = exit_ok;
        if (gen_plain->parsed() || gen_core->parsed()) {
            const bool core = gen_core->parsed();
            const auto& [k_opt, radii_opt] = planted_opts[core ? 1 : 0];
            const std::size_t k = checked_k(opt, k_opt);
            const auto radii = radii_for(opt, k, radii_opt);
            write_planted(run, core ? gen_core_clusterable(k, opt.sizes, radii, opt.dim,
                                                           opt.p_frak, opt.margin, opt.seed)
                                    : gen_well_clusterable(k, opt.sizes, radii, opt.dim,
                                                           opt.margin, opt.seed));
        } else if (gen_ring_cmd->parsed()) {
            run.write("dataset.csv",
                      io::dataset_to_csv(gen_ring(opt.n, opt.radius, opt.thickness, opt.seed)));
        } else if (counterexample_cmds[0]->parsed() || counterexample_cmds[1]->parsed()) {
            counterexample_outputs(run, opt);
        } else if (cluster->parsed()) {
            code = cluster_command(run, opt, mm_opt, cluster_pf);
        } else if (verify_cmd->parsed()) {
            code = verify_command(run, opt, verify_pf);
        } else if (analyze->parsed()) {
            code = analyze_command(run, opt);
        } else if (histogram->parsed()) {
            code = histogram_command(run, opt);
        }

        const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;
        write_manifest(run, opt, wall.count());
        return code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
}

}  // namespace clusterability::cli
