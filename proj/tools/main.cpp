// graphsample CLI: load a SNAP-style edge list, draw samples, measure
// properties, run size sweeps, or replicate the full three-strategy
// comparison. Thin shell over the C API in graphsample.h; structured results
// go to files, the terminal gets a one-line summary.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "graphsample.h"

namespace {

using nlohmann::ordered_json;

struct GraphDeleter {
    void operator()(gs_graph* g) const { gs_graph_free(g); }
};
using GraphPtr = std::unique_ptr<gs_graph, GraphDeleter>;

struct StringDeleter {
    void operator()(char* s) const { gs_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

int report_failure(gs_status st) {
    std::cerr << "error: " << gs_last_error() << "\n";
    return static_cast<int>(st);
}

int default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

GraphPtr load_graph(const std::string& path, bool verbose, gs_status& st) {
    gs_graph* raw = nullptr;
    st = gs_graph_load(path.c_str(), &raw);
    GraphPtr g(raw);
    if (st == GS_OK) {
        StringPtr stats;
        char* stats_raw = nullptr;
        if (gs_graph_load_stats_json(g.get(), &stats_raw) == GS_OK) stats.reset(stats_raw);
        if (verbose && stats) std::cerr << "load-stats " << stats.get() << "\n";
    }
    return g;
}

bool write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) return false;
    out << content;
    return static_cast<bool>(out);
}

struct SampleArgs {
    std::string input, output, strategy;
    std::uint64_t target = 0, rw_iterations = 10000, rw_runs = 10, seed = 0;
    bool verbose = false;
};

int cmd_sample(const SampleArgs& args) {
    // Flag-level validation happens before the dataset is opened.
    if (args.target < 1) {
        std::cerr << "error: --target must be at least 1\n";
        return GS_ERR_SPEC;
    }
    if (args.strategy == "rw" && (args.rw_iterations < 1 || args.rw_runs < 1)) {
        std::cerr << "error: --rw-iterations and --rw-runs must be at least 1\n";
        return GS_ERR_SPEC;
    }

    gs_status st = GS_OK;
    GraphPtr g = load_graph(args.input, args.verbose, st);
    if (st != GS_OK) return report_failure(st);

    ordered_json spec{{"strategy", args.strategy},
                      {"target", args.target},
                      {"rw_iterations", args.rw_iterations},
                      {"rw_runs", args.rw_runs},
                      {"seed", args.seed}};
    gs_graph* sample_raw = nullptr;
    st = gs_sample(g.get(), spec.dump().c_str(), &sample_raw);
    GraphPtr sample(sample_raw);
    if (st != GS_OK) return report_failure(st);

    st = gs_graph_write(sample.get(), args.output.c_str());
    if (st != GS_OK) return report_failure(st);

    StringPtr stats;
    {
        char* raw = nullptr;
        if (gs_graph_load_stats_json(g.get(), &raw) == GS_OK) stats.reset(raw);
    }
    ordered_json meta{
        {"spec", spec},
        {"source",
         {{"path", args.input},
          {"nodes", gs_graph_nodes(g.get())},
          {"edges", gs_graph_edges(g.get())},
          {"load_stats", stats ? ordered_json::parse(stats.get()) : ordered_json(nullptr)}}},
        {"sample", {{"nodes", gs_graph_nodes(sample.get())}, {"edges", gs_graph_edges(sample.get())}}}};
    if (!write_text_file(args.output + ".meta.json", meta.dump(2) + "\n")) {
        std::cerr << "error: cannot write " << args.output << ".meta.json\n";
        return GS_ERR_IO;
    }

    std::cerr << "seed " << args.seed << "\n";
    std::cout << "sample: " << gs_graph_nodes(sample.get()) << " nodes, "
              << gs_graph_edges(sample.get()) << " edges -> " << args.output << "\n";
    return GS_OK;
}

struct MetricsArgs {
    std::string input, output, betweenness_path, communities_path;
    std::uint64_t seed = 0;
    int workers = 0;
    bool verbose = false;
};

int cmd_metrics(const MetricsArgs& args) {
    gs_status st = GS_OK;
    GraphPtr g = load_graph(args.input, args.verbose, st);
    if (st != GS_OK) return report_failure(st);

    char* report_raw = nullptr;
    st = gs_property_report_json(g.get(), args.seed, args.workers, &report_raw);
    StringPtr report(report_raw);
    if (st != GS_OK) return report_failure(st);

    std::cerr << "seed " << args.seed << "\n";
    if (args.output.empty()) {
        std::cout << report.get() << "\n";
    } else {
        if (!write_text_file(args.output, std::string(report.get()) + "\n")) {
            std::cerr << "error: cannot write " << args.output << "\n";
            return GS_ERR_IO;
        }
        std::cout << "report -> " << args.output << "\n";
    }

    if (!args.communities_path.empty()) {
        char* csv_raw = nullptr;
        st = gs_communities_csv(g.get(), args.seed, &csv_raw);
        StringPtr csv(csv_raw);
        if (st != GS_OK) return report_failure(st);
        if (!write_text_file(args.communities_path, csv.get())) {
            std::cerr << "error: cannot write " << args.communities_path << "\n";
            return GS_ERR_IO;
        }
    }

    if (!args.betweenness_path.empty()) {
        if (gs_graph_nodes(g.get()) > 2000)
            std::cerr << "warning: exact betweenness is O(N*E); this graph has "
                      << gs_graph_nodes(g.get()) << " nodes and may take a while\n";
        char* csv_raw = nullptr;
        st = gs_betweenness_csv(g.get(), args.workers, &csv_raw);
        StringPtr csv(csv_raw);
        if (st != GS_OK) return report_failure(st);
        if (!write_text_file(args.betweenness_path, csv.get())) {
            std::cerr << "error: cannot write " << args.betweenness_path << "\n";
            return GS_ERR_IO;
        }
    }
    return GS_OK;
}

struct ExperimentArgs {
    std::string input, out_dir, plan_path, strategy;
    std::vector<std::uint64_t> sizes;
    std::uint64_t repetitions = 0, rw_iterations = 0, rw_runs = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int workers = 0;
    bool verbose = false;
};

int cmd_experiment(const ExperimentArgs& args) {
    ordered_json plan;
    if (!args.plan_path.empty()) {
        std::ifstream in(args.plan_path);
        if (!in) {
            std::cerr << "error: cannot open plan file " << args.plan_path << "\n";
            return GS_ERR_IO;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            plan = ordered_json::parse(buf.str());
        } catch (const nlohmann::json::exception& e) {
            std::cerr << "error: invalid plan JSON: " << e.what() << "\n";
            return GS_ERR_PARSE;
        }
    } else {
        char* raw = nullptr;
        if (gs_status st = gs_default_plan_json(args.strategy.c_str(), &raw); st != GS_OK)
            return report_failure(st);
        StringPtr defaults(raw);
        plan = ordered_json::parse(defaults.get());
    }

    // Flags override plan-file values.
    if (!args.strategy.empty()) plan["strategy"] = args.strategy;
    if (!args.sizes.empty()) plan["sizes"] = args.sizes;
    if (args.repetitions) plan["repetitions"] = args.repetitions;
    if (args.rw_iterations) plan["rw_iterations"] = args.rw_iterations;
    if (args.rw_runs) plan["rw_runs"] = args.rw_runs;
    if (args.seed_set) plan["master_seed"] = args.seed;
    if (!args.input.empty()) plan["dataset_path"] = args.input;

    if (!plan.contains("dataset_path") || plan["dataset_path"].get<std::string>().empty()) {
        std::cerr << "error: no dataset: pass an input path or set dataset_path in the plan\n";
        return GS_ERR_SPEC;
    }

    std::cerr << "seed " << plan.value("master_seed", std::uint64_t{0}) << "\n";
    if (gs_status st = gs_run_experiment(plan.dump().c_str(), args.out_dir.c_str(), args.workers);
        st != GS_OK)
        return report_failure(st);
    std::cout << "sweep " << plan["strategy"].get<std::string>() << " ("
              << plan["sizes"].size() << " sizes) -> " << args.out_dir << "\n";
    return GS_OK;
}

struct ReplicateArgs {
    std::string input, out_dir;
    std::uint64_t seed = 0;
    int workers = 0;
    bool verbose = false;
};

int cmd_replicate(const ReplicateArgs& args) {
    std::cerr << "seed " << args.seed << "\n";
    if (gs_status st =
            gs_replicate(args.input.c_str(), args.out_dir.c_str(), args.seed, args.workers);
        st != GS_OK)
        return report_failure(st);
    std::cout << "replication -> " << args.out_dir
              << " (ers/ nrs/ rw/ baseline.json plots/ summary.md)\n";
    return GS_OK;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph sampling and property-estimation toolkit"};
    app.require_subcommand(1);
    const int hw_workers = default_workers();

    SampleArgs sample;
    CLI::App* cmd_s = app.add_subcommand("sample", "draw a sample and write it as an edge list");
    cmd_s->add_option("input", sample.input, "input edge list")->required();
    cmd_s->add_option("-o,--output", sample.output, "output edge list path")->required();
    cmd_s->add_option("--strategy", sample.strategy, "sampling strategy")
        ->required()
        ->check(CLI::IsMember({"ers", "nrs", "rw"}));
    cmd_s->add_option("--target", sample.target, "edges (ers) or nodes (nrs/rw) to keep")
        ->required();
    cmd_s->add_option("--rw-iterations", sample.rw_iterations, "walk positions per run");
    cmd_s->add_option("--rw-runs", sample.rw_runs, "number of walk runs");
    cmd_s->add_option("--seed", sample.seed, "random seed");
    cmd_s->add_flag("-v,--verbose", sample.verbose, "narrate progress on stderr");

    MetricsArgs metrics;
    metrics.workers = hw_workers;
    CLI::App* cmd_m = app.add_subcommand("metrics", "compute the property report of a graph");
    cmd_m->add_option("input", metrics.input, "input edge list")->required();
    cmd_m->add_option("-o,--output", metrics.output, "write the report here instead of stdout");
    cmd_m->add_option("--betweenness", metrics.betweenness_path,
                      "also write per-node betweenness CSV (slow on large graphs)");
    cmd_m->add_option("--communities", metrics.communities_path,
                      "also write the community partition CSV");
    cmd_m->add_option("--seed", metrics.seed, "random seed (community detection)");
    cmd_m->add_option("--workers", metrics.workers, "worker threads");
    cmd_m->add_flag("-v,--verbose", metrics.verbose, "narrate progress on stderr");

    ExperimentArgs experiment;
    experiment.workers = hw_workers;
    CLI::App* cmd_e = app.add_subcommand("experiment", "run a size sweep for one strategy");
    cmd_e->add_option("input", experiment.input, "input edge list (overrides plan dataset_path)");
    cmd_e->add_option("--out-dir", experiment.out_dir, "output directory")->required();
    cmd_e->add_option("--plan", experiment.plan_path, "plan JSON file");
    CLI::Option* strat_opt =
        cmd_e->add_option("--strategy", experiment.strategy, "sampling strategy")
            ->check(CLI::IsMember({"ers", "nrs", "rw"}));
    cmd_e->add_option("--sizes", experiment.sizes, "sweep sizes, ascending")->delimiter(',');
    cmd_e->add_option("--repetitions", experiment.repetitions, "samples per size");
    cmd_e->add_option("--rw-iterations", experiment.rw_iterations, "walk positions per run");
    cmd_e->add_option("--rw-runs", experiment.rw_runs, "number of walk runs");
    CLI::Option* seed_opt = cmd_e->add_option("--seed", experiment.seed, "master seed");
    cmd_e->add_option("--workers", experiment.workers, "worker threads");
    cmd_e->add_flag("-v,--verbose", experiment.verbose, "narrate progress on stderr");

    ReplicateArgs replicate;
    replicate.workers = hw_workers;
    CLI::App* cmd_r = app.add_subcommand(
        "replicate", "run all three strategy sweeps plus the baseline and comparison");
    cmd_r->add_option("input", replicate.input, "input edge list")->required();
    cmd_r->add_option("--out-dir", replicate.out_dir, "output directory")->required();
    cmd_r->add_option("--seed", replicate.seed, "master seed");
    cmd_r->add_option("--workers", replicate.workers, "worker threads");
    cmd_r->add_flag("-v,--verbose", replicate.verbose, "narrate progress on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return GS_ERR_SPEC;
    }

    if (app.got_subcommand(cmd_s)) return cmd_sample(sample);
    if (app.got_subcommand(cmd_m)) return cmd_metrics(metrics);
    if (app.got_subcommand(cmd_e)) {
        if (experiment.plan_path.empty() && strat_opt->count() == 0) {
            std::cerr << "error: pass --strategy or --plan\n";
            return GS_ERR_SPEC;
        }
        experiment.seed_set = seed_opt->count() > 0;
        return cmd_experiment(experiment);
    }
    if (app.got_subcommand(cmd_r)) return cmd_replicate(replicate);
    return GS_ERR_SPEC;
}
