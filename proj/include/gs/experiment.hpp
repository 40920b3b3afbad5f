#ifndef GS_EXPERIMENT_HPP
#define GS_EXPERIMENT_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gs/graph.hpp"
#include "gs/metrics.hpp"
#include "gs/sampling.hpp"

namespace gs {

// A size sweep for one strategy: draw `repetitions` samples per size, measure
// every property of every sample, aggregate per size.
struct ExperimentPlan {
    Strategy strategy = Strategy::EdgeRandom;
    std::vector<std::uint64_t> sizes;  // strictly increasing
    std::uint64_t repetitions = 10;
    std::uint64_t rw_iterations = 10000;
    std::uint64_t rw_runs = 10;
    std::uint64_t master_seed = 0;
    std::string dataset_path;

    void validate() const;
    void validate_against(const Graph& g) const;
    std::string to_json() const;
    static ExperimentPlan from_json(const std::string& text);
};

// The stock sweep schedules: ERS steps through 10000..70000 edges, NRS
// through 100..3500 nodes, RW through 100..3000 nodes, all with 10
// repetitions per size averaged into the reported curve.
ExperimentPlan default_paper_plan(Strategy strategy);

struct CellResult {
    std::uint64_t size = 0;
    std::uint64_t repetition = 0;
    std::uint64_t seed = 0;  // sub-seed this cell was drawn with
    bool sampled = false;
    std::uint64_t sample_nodes = 0;
    std::uint64_t sample_edges = 0;
    std::optional<PropertyReport> report;
    std::string error;  // empty on success; failures are data, not aborts
};

struct Stats {
    double mean = 0.0;
    double sd = 0.0;  // sample standard deviation, 0 when n < 2
    double min = 0.0;
    double max = 0.0;
};

// Aggregated metrics for one sweep size: the eight report properties plus the
// sample dimensions, each over the repetitions that produced them.
struct SizeAggregate {
    std::uint64_t size = 0;
    std::uint64_t report_count = 0;  // repetitions with a full report
    std::array<Stats, 8> properties;
    Stats sample_nodes;
    Stats sample_edges;
};

struct SweepResult {
    ExperimentPlan plan;
    std::vector<CellResult> cells;  // plan order: size-major, repetition-minor
    std::vector<SizeAggregate> aggregates;
};

// Names and accessors of the eight report properties, in report order.
struct PropertyField {
    const char* name;
    double (*get)(const PropertyReport&);
};
const std::array<PropertyField, 8>& property_fields();

// Cell (size, repetition) draws its sample with derive_seed(master, size,
// repetition), so any cell can be recomputed in isolation; cells may run
// concurrently and the assembled result is identical at any worker count.
SweepResult run_sweep(const Graph& g, const ExperimentPlan& plan, int workers = 1);
CellResult run_cell(const Graph& g, const ExperimentPlan& plan, std::uint64_t size,
                    std::uint64_t repetition);

// One row per cell with all properties and sample dimensions.
void emit_csv(const SweepResult& result, std::ostream& out);

// Full nested structure including the plan, every cell and the aggregates;
// parse_sweep_json reads it back.
void emit_json(const SweepResult& result, std::ostream& out);
SweepResult parse_sweep_json(const std::string& text);

// One CSV per chart panel (sample size plus the eight properties share
// sample_size.csv for dimensions): columns are size then mean/sd per
// strategy, ready for any plotting tool.
void emit_plot_series(std::span<const SweepResult> results, const std::string& directory);

struct FinalGap {
    Strategy strategy = Strategy::EdgeRandom;
    std::uint64_t size = 0;  // the strategy's largest sweep size
    double mean = 0.0;
    double sd = 0.0;
    double gap = 0.0;  // |mean - baseline|
};

struct PropertyComparison {
    std::string property;
    double baseline = 0.0;
    std::vector<FinalGap> final_gaps;  // one per strategy, results order
};

struct ComparisonTable {
    std::string dataset_path;
    PropertyReport baseline;
    std::vector<PropertyComparison> properties;  // the eight report properties
};

// Per property and strategy: the final-size mean and its absolute gap to the
// full-graph baseline. All results must come from the same dataset.
ComparisonTable comparative_table(std::span<const SweepResult> results,
                                  const PropertyReport& baseline);

void write_comparison_markdown(const ComparisonTable& table, std::ostream& out);

// Loads plan.dataset_path, runs the sweep and writes plan.json, results.json,
// results.csv and plots/ into out_dir.
void run_experiment_to_dir(const ExperimentPlan& plan, const std::string& out_dir, int workers);

// Runs all three stock sweeps plus the full-graph baseline; writes one
// subdirectory per strategy, baseline.json, combined plots/ and summary.md.
void run_replicate_to_dir(const std::string& dataset_path, const std::string& out_dir,
                          std::uint64_t master_seed, int workers);

}  // namespace gs

#endif
