#include "gs/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gs/errors.hpp"
#include "gs/format.hpp"
#include "gs/parallel.hpp"
#include "gs/rng.hpp"

namespace gs {

using ordered_json = nlohmann::ordered_json;

void ExperimentPlan::validate() const {
    if (sizes.empty()) throw SpecError("plan has no sizes");
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i)
        if (sizes[i] >= sizes[i + 1]) throw SpecError("plan sizes must be strictly increasing");
    if (sizes.front() < 1) throw SpecError("plan sizes must be at least 1");
    if (repetitions < 1) throw SpecError("repetitions must be at least 1");
    if (strategy == Strategy::RandomWalk && (rw_iterations < 1 || rw_runs < 1))
        throw SpecError("rw_iterations and rw_runs must be at least 1");
}

void ExperimentPlan::validate_against(const Graph& g) const {
    validate();
    for (std::uint64_t size : sizes) {
        SampleSpec spec{strategy, size, rw_iterations, rw_runs, 0};
        spec.validate(g);
    }
}

std::string ExperimentPlan::to_json() const {
    ordered_json j{{"strategy", strategy_name(strategy)},
                   {"sizes", sizes},
                   {"repetitions", repetitions},
                   {"rw_iterations", rw_iterations},
                   {"rw_runs", rw_runs},
                   {"master_seed", master_seed},
                   {"dataset_path", dataset_path}};
    return j.dump(2);
}

ExperimentPlan ExperimentPlan::from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid plan JSON: ") + e.what());
    }
    ExperimentPlan plan;
    try {
        plan.strategy = strategy_from_name(j.at("strategy").get<std::string>());
        plan.sizes = j.at("sizes").get<std::vector<std::uint64_t>>();
        plan.repetitions = j.value("repetitions", plan.repetitions);
        plan.rw_iterations = j.value("rw_iterations", plan.rw_iterations);
        plan.rw_runs = j.value("rw_runs", plan.rw_runs);
        plan.master_seed = j.value("master_seed", plan.master_seed);
        plan.dataset_path = j.value("dataset_path", plan.dataset_path);
    } catch (const nlohmann::json::exception& e) {
        throw SpecError(std::string("invalid plan: ") + e.what());
    }
    return plan;
}

ExperimentPlan default_paper_plan(Strategy strategy) {
    ExperimentPlan plan;
    plan.strategy = strategy;
    switch (strategy) {
        case Strategy::EdgeRandom:
            plan.sizes = {10000, 20000, 30000, 40000, 50000, 60000, 70000};
            break;
        case Strategy::NodeRandom:
            plan.sizes = {100, 500, 1000, 1500, 2000, 2500, 3000, 3500};
            break;
        case Strategy::RandomWalk:
            plan.sizes = {100, 500, 1000, 1500, 2000, 2500, 3000};
            break;
    }
    plan.repetitions = 10;
    plan.rw_iterations = 10000;
    plan.rw_runs = 10;
    return plan;
}

const std::array<PropertyField, 8>& property_fields() {
    static const std::array<PropertyField, 8> fields{{
        {"avg_degree", [](const PropertyReport& r) { return r.avg_degree; }},
        {"density", [](const PropertyReport& r) { return r.density; }},
        {"modularity", [](const PropertyReport& r) { return r.modularity; }},
        {"avg_clustering", [](const PropertyReport& r) { return r.avg_clustering; }},
        {"diameter", [](const PropertyReport& r) { return static_cast<double>(r.diameter); }},
        {"avg_path_length", [](const PropertyReport& r) { return r.avg_path_length; }},
        {"connected_components",
         [](const PropertyReport& r) { return static_cast<double>(r.connected_components); }},
        {"largest_component_fraction",
         [](const PropertyReport& r) { return r.largest_component_fraction; }},
    }};
    return fields;
}

CellResult run_cell(const Graph& g, const ExperimentPlan& plan, std::uint64_t size,
                    std::uint64_t repetition) {
    CellResult cell;
    cell.size = size;
    cell.repetition = repetition;
    cell.seed = derive_seed(plan.master_seed, size, repetition);

    SampleSpec spec{plan.strategy, size, plan.rw_iterations, plan.rw_runs, cell.seed};
    try {
        const Graph sample = draw_sample(g, spec);
        cell.sampled = true;
        cell.sample_nodes = sample.node_count();
        cell.sample_edges = sample.edge_count();
        cell.report = full_report(sample, derive_seed(cell.seed, 1), 1);
    } catch (const std::exception& e) {
        cell.error = e.what();
    }
    return cell;
}

namespace {

Stats stats_of(const std::vector<double>& values) {
    Stats s;
    if (values.empty()) return s;
    double sum = 0.0;
    s.min = s.max = values.front();
    for (double v : values) {
        sum += v;
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
    }
    s.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double sq = 0.0;
        for (double v : values) sq += (v - s.mean) * (v - s.mean);
        s.sd = std::sqrt(sq / static_cast<double>(values.size() - 1));
    }
    return s;
}

std::vector<SizeAggregate> aggregate_cells(const ExperimentPlan& plan,
                                           const std::vector<CellResult>& cells) {
    std::vector<SizeAggregate> aggregates;
    aggregates.reserve(plan.sizes.size());
    const std::size_t reps = plan.repetitions;
    for (std::size_t si = 0; si < plan.sizes.size(); ++si) {
        SizeAggregate agg;
        agg.size = plan.sizes[si];
        std::vector<double> nodes, edges;
        std::array<std::vector<double>, 8> props;
        for (std::size_t r = 0; r < reps; ++r) {
            const CellResult& cell = cells[si * reps + r];
            if (cell.sampled) {
                nodes.push_back(static_cast<double>(cell.sample_nodes));
                edges.push_back(static_cast<double>(cell.sample_edges));
            }
            if (cell.report)
                for (std::size_t p = 0; p < props.size(); ++p)
                    props[p].push_back(property_fields()[p].get(*cell.report));
        }
        agg.report_count = props[0].size();
        agg.sample_nodes = stats_of(nodes);
        agg.sample_edges = stats_of(edges);
        for (std::size_t p = 0; p < props.size(); ++p) agg.properties[p] = stats_of(props[p]);
        aggregates.push_back(agg);
    }
    return aggregates;
}

}  // namespace

SweepResult run_sweep(const Graph& g, const ExperimentPlan& plan, int workers) {
    plan.validate_against(g);

    SweepResult result;
    result.plan = plan;
    const std::size_t n_cells = plan.sizes.size() * plan.repetitions;
    result.cells.resize(n_cells);

    parallel_blocks(n_cells, 1, workers, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const std::uint64_t size = plan.sizes[i / plan.repetitions];
            const std::uint64_t rep = i % plan.repetitions;
            result.cells[i] = run_cell(g, plan, size, rep);
        }
    });

    result.aggregates = aggregate_cells(plan, result.cells);
    return result;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

constexpr const char* kCsvHeader =
    "strategy,size,repetition,seed,sample_nodes,sample_edges,avg_degree,density,modularity,"
    "avg_clustering,diameter,avg_path_length,connected_components,largest_component_fraction,"
    "error";

}  // namespace

void emit_csv(const SweepResult& result, std::ostream& out) {
    out << kCsvHeader << "\n";
    for (const CellResult& cell : result.cells) {
        out << strategy_name(result.plan.strategy) << "," << cell.size << "," << cell.repetition
            << "," << cell.seed << ",";
        if (cell.sampled) out << cell.sample_nodes;
        out << ",";
        if (cell.sampled) out << cell.sample_edges;
        for (std::size_t p = 0; p < property_fields().size(); ++p) {
            out << ",";
            if (!cell.report) continue;
            const PropertyReport& r = *cell.report;
            if (p == 4)
                out << r.diameter;
            else if (p == 6)
                out << r.connected_components;
            else
                out << format_double(property_fields()[p].get(r));
        }
        out << "," << csv_escape(cell.error) << "\n";
    }
    if (!out) throw IoError("results CSV write failed");
}

namespace {

ordered_json report_json(const PropertyReport& r) {
    return ordered_json{{"avg_degree", r.avg_degree},
                        {"density", r.density},
                        {"modularity", r.modularity},
                        {"avg_clustering", r.avg_clustering},
                        {"diameter", r.diameter},
                        {"avg_path_length", r.avg_path_length},
                        {"connected_components", r.connected_components},
                        {"largest_component_fraction", r.largest_component_fraction}};
}

PropertyReport report_from_json(const ordered_json& j) {
    PropertyReport r;
    r.avg_degree = j.at("avg_degree").get<double>();
    r.density = j.at("density").get<double>();
    r.modularity = j.at("modularity").get<double>();
    r.avg_clustering = j.at("avg_clustering").get<double>();
    r.diameter = j.at("diameter").get<std::uint32_t>();
    r.avg_path_length = j.at("avg_path_length").get<double>();
    r.connected_components = j.at("connected_components").get<std::uint64_t>();
    r.largest_component_fraction = j.at("largest_component_fraction").get<double>();
    return r;
}

ordered_json stats_json(const Stats& s) {
    return ordered_json{{"mean", s.mean}, {"sd", s.sd}, {"min", s.min}, {"max", s.max}};
}

Stats stats_from_json(const ordered_json& j) {
    Stats s;
    s.mean = j.at("mean").get<double>();
    s.sd = j.at("sd").get<double>();
    s.min = j.at("min").get<double>();
    s.max = j.at("max").get<double>();
    return s;
}

}  // namespace

void emit_json(const SweepResult& result, std::ostream& out) {
    ordered_json j;
    j["plan"] = ordered_json::parse(result.plan.to_json());
    j["notes"] = ordered_json::array({"per-size aggregates average over " +
                                      std::to_string(result.plan.repetitions) +
                                      " repetitions for every strategy"});

    ordered_json cells = ordered_json::array();
    for (const CellResult& cell : result.cells) {
        ordered_json c{{"size", cell.size},
                       {"repetition", cell.repetition},
                       {"seed", cell.seed},
                       {"sampled", cell.sampled},
                       {"sample_nodes", cell.sample_nodes},
                       {"sample_edges", cell.sample_edges}};
        c["report"] = cell.report ? report_json(*cell.report) : ordered_json(nullptr);
        c["error"] = cell.error;
        cells.push_back(std::move(c));
    }
    j["cells"] = std::move(cells);

    ordered_json aggs = ordered_json::array();
    for (const SizeAggregate& agg : result.aggregates) {
        ordered_json a{{"size", agg.size}, {"report_count", agg.report_count}};
        a["sample_nodes"] = stats_json(agg.sample_nodes);
        a["sample_edges"] = stats_json(agg.sample_edges);
        ordered_json metrics;
        for (std::size_t p = 0; p < property_fields().size(); ++p)
            metrics[property_fields()[p].name] = stats_json(agg.properties[p]);
        a["properties"] = std::move(metrics);
        aggs.push_back(std::move(a));
    }
    j["aggregates"] = std::move(aggs);

    out << j.dump(2) << "\n";
    if (!out) throw IoError("results JSON write failed");
}

SweepResult parse_sweep_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid results JSON: ") + e.what());
    }

    SweepResult result;
    result.plan = ExperimentPlan::from_json(j.at("plan").dump());
    for (const auto& c : j.at("cells")) {
        CellResult cell;
        cell.size = c.at("size").get<std::uint64_t>();
        cell.repetition = c.at("repetition").get<std::uint64_t>();
        cell.seed = c.at("seed").get<std::uint64_t>();
        cell.sampled = c.at("sampled").get<bool>();
        cell.sample_nodes = c.at("sample_nodes").get<std::uint64_t>();
        cell.sample_edges = c.at("sample_edges").get<std::uint64_t>();
        if (!c.at("report").is_null()) cell.report = report_from_json(c.at("report"));
        cell.error = c.at("error").get<std::string>();
        result.cells.push_back(std::move(cell));
    }
    for (const auto& a : j.at("aggregates")) {
        SizeAggregate agg;
        agg.size = a.at("size").get<std::uint64_t>();
        agg.report_count = a.at("report_count").get<std::uint64_t>();
        agg.sample_nodes = stats_from_json(a.at("sample_nodes"));
        agg.sample_edges = stats_from_json(a.at("sample_edges"));
        for (std::size_t p = 0; p < property_fields().size(); ++p)
            agg.properties[p] = stats_from_json(a.at("properties").at(property_fields()[p].name));
        result.aggregates.push_back(agg);
    }
    return result;
}

namespace {

// Distinct column prefix per result; duplicated strategies get a suffix.
std::vector<std::string> column_prefixes(std::span<const SweepResult> results) {
    std::vector<std::string> prefixes;
    std::map<std::string, int> seen;
    for (const SweepResult& r : results) {
        std::string name = strategy_name(r.plan.strategy);
        const int n = ++seen[name];
        if (n > 1) name += "_" + std::to_string(n);
        prefixes.push_back(name);
    }
    return prefixes;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << content;
    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

void emit_plot_series(std::span<const SweepResult> results, const std::string& directory) {
    namespace fs = std::filesystem;
    fs::create_directories(directory);
    const std::vector<std::string> prefixes = column_prefixes(results);

    std::vector<std::uint64_t> all_sizes;
    for (const SweepResult& r : results)
        for (const SizeAggregate& a : r.aggregates) all_sizes.push_back(a.size);
    std::sort(all_sizes.begin(), all_sizes.end());
    all_sizes.erase(std::unique(all_sizes.begin(), all_sizes.end()), all_sizes.end());

    auto find_aggregate = [](const SweepResult& r, std::uint64_t size) -> const SizeAggregate* {
        for (const SizeAggregate& a : r.aggregates)
            if (a.size == size) return &a;
        return nullptr;
    };

    {  // panel (a): sample dimensions
        std::ostringstream os;
        os << "size";
        for (const std::string& p : prefixes)
            os << "," << p << "_nodes_mean," << p << "_nodes_sd," << p << "_edges_mean," << p
               << "_edges_sd";
        os << "\n";
        for (std::uint64_t size : all_sizes) {
            os << size;
            for (std::size_t i = 0; i < results.size(); ++i) {
                const SizeAggregate* a = find_aggregate(results[i], size);
                if (a)
                    os << "," << format_double(a->sample_nodes.mean) << ","
                       << format_double(a->sample_nodes.sd) << ","
                       << format_double(a->sample_edges.mean) << ","
                       << format_double(a->sample_edges.sd);
                else
                    os << ",,,,";
            }
            os << "\n";
        }
        write_file(fs::path(directory) / "sample_size.csv", os.str());
    }

    // panels (b)-(h): the first seven report properties
    for (std::size_t p = 0; p < 7; ++p) {
        std::ostringstream os;
        os << "size";
        for (const std::string& pre : prefixes) os << "," << pre << "_mean," << pre << "_sd";
        os << "\n";
        for (std::uint64_t size : all_sizes) {
            os << size;
            for (std::size_t i = 0; i < results.size(); ++i) {
                const SizeAggregate* a = find_aggregate(results[i], size);
                if (a && a->report_count > 0)
                    os << "," << format_double(a->properties[p].mean) << ","
                       << format_double(a->properties[p].sd);
                else
                    os << ",,";
            }
            os << "\n";
        }
        write_file(fs::path(directory) / (std::string(property_fields()[p].name) + ".csv"),
                   os.str());
    }
}

ComparisonTable comparative_table(std::span<const SweepResult> results,
                                  const PropertyReport& baseline) {
    if (results.empty()) throw SpecError("comparative table requires at least one sweep result");
    for (const SweepResult& r : results)
        if (r.plan.dataset_path != results.front().plan.dataset_path)
            throw SpecError("sweep results come from different datasets: '" +
                            results.front().plan.dataset_path + "' vs '" + r.plan.dataset_path +
                            "'");

    ComparisonTable table;
    table.dataset_path = results.front().plan.dataset_path;
    table.baseline = baseline;
    for (std::size_t p = 0; p < property_fields().size(); ++p) {
        PropertyComparison cmp;
        cmp.property = property_fields()[p].name;
        cmp.baseline = property_fields()[p].get(baseline);
        for (const SweepResult& r : results) {
            const SizeAggregate& final_agg = r.aggregates.back();
            FinalGap gap;
            gap.strategy = r.plan.strategy;
            gap.size = final_agg.size;
            if (final_agg.report_count > 0) {
                gap.mean = final_agg.properties[p].mean;
                gap.sd = final_agg.properties[p].sd;
                gap.gap = std::abs(gap.mean - cmp.baseline);
            } else {
                gap.mean = gap.sd = gap.gap = std::numeric_limits<double>::quiet_NaN();
            }
            cmp.final_gaps.push_back(gap);
        }
        table.properties.push_back(std::move(cmp));
    }
    return table;
}

namespace {

std::string round4(double v) {
    if (std::isnan(v)) return "n/a";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

}  // namespace

void write_comparison_markdown(const ComparisonTable& table, std::ostream& out) {
    out << "# Sampling strategy comparison\n\n";
    out << "Dataset: `" << table.dataset_path << "`\n\n";

    out << "## Full-graph baseline\n\n";
    out << "| property | value |\n|---|---|\n";
    for (std::size_t p = 0; p < property_fields().size(); ++p)
        out << "| " << property_fields()[p].name << " | "
            << round4(property_fields()[p].get(table.baseline)) << " |\n";
    out << "\n";

    out << "## Final-size gap to baseline\n\n";
    out << "Each strategy column shows `mean (|mean - baseline|)` at the strategy's largest"
           " sweep size.\n\n";
    out << "| property | baseline |";
    if (!table.properties.empty())
        for (const FinalGap& g : table.properties.front().final_gaps)
            out << " " << strategy_name(g.strategy) << " @ " << g.size << " |";
    out << " closest |\n|---|---|";
    if (!table.properties.empty())
        for (std::size_t i = 0; i < table.properties.front().final_gaps.size(); ++i) out << "---|";
    out << "---|\n";

    for (const PropertyComparison& cmp : table.properties) {
        out << "| " << cmp.property << " | " << round4(cmp.baseline) << " |";
        const FinalGap* best = nullptr;
        for (const FinalGap& g : cmp.final_gaps) {
            out << " " << round4(g.mean) << " (" << round4(g.gap) << ") |";
            if (!std::isnan(g.gap) && (!best || g.gap < best->gap)) best = &g;
        }
        out << " " << (best ? strategy_name(best->strategy) : "n/a") << " |\n";
    }
    if (!out) throw IoError("comparison markdown write failed");
}

namespace {

void write_sweep_outputs(const SweepResult& result, const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    write_file(dir / "plan.json", result.plan.to_json() + "\n");
    {
        std::ofstream out(dir / "results.json");
        if (!out) throw IoError("cannot open results.json for writing");
        emit_json(result, out);
    }
    {
        std::ofstream out(dir / "results.csv");
        if (!out) throw IoError("cannot open results.csv for writing");
        emit_csv(result, out);
    }
    emit_plot_series({&result, 1}, (dir / "plots").string());
}

}  // namespace

void run_experiment_to_dir(const ExperimentPlan& plan, const std::string& out_dir, int workers) {
    if (plan.dataset_path.empty()) throw SpecError("plan has no dataset_path");
    const Graph g = load_edge_list(plan.dataset_path);
    const SweepResult result = run_sweep(g, plan, workers);
    write_sweep_outputs(result, out_dir);
}

void run_replicate_to_dir(const std::string& dataset_path, const std::string& out_dir,
                          std::uint64_t master_seed, int workers) {
    namespace fs = std::filesystem;
    const Graph g = load_edge_list(dataset_path);
    fs::create_directories(out_dir);

    const PropertyReport baseline = full_report(g, derive_seed(master_seed, 0xba5e), workers);
    {
        ordered_json j{{"dataset_path", dataset_path},
                       {"nodes", g.node_count()},
                       {"edges", g.edge_count()},
                       {"seed", master_seed}};
        j["report"] = ordered_json::parse(baseline.to_json());
        write_file(fs::path(out_dir) / "baseline.json", j.dump(2) + "\n");
    }

    const std::array<Strategy, 3> strategies{Strategy::EdgeRandom, Strategy::NodeRandom,
                                             Strategy::RandomWalk};
    std::vector<SweepResult> results;
    results.reserve(strategies.size());
    for (std::size_t i = 0; i < strategies.size(); ++i) {
        ExperimentPlan plan = default_paper_plan(strategies[i]);
        plan.dataset_path = dataset_path;
        plan.master_seed = derive_seed(master_seed, i);
        SweepResult result = run_sweep(g, plan, workers);
        write_sweep_outputs(result, fs::path(out_dir) / strategy_name(strategies[i]));
        results.push_back(std::move(result));
    }

    emit_plot_series(results, (fs::path(out_dir) / "plots").string());

    const ComparisonTable table = comparative_table(results, baseline);
    std::ofstream md(fs::path(out_dir) / "summary.md");
    if (!md) throw IoError("cannot open summary.md for writing");
    write_comparison_markdown(table, md);
    md << "\nMaster seed: " << master_seed << ". Per-size values are means over "
       << results.front().plan.repetitions << " repetitions for every strategy.\n";
}

}  // namespace gs
