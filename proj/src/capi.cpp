#include "graphsample.h"

#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "gs/errors.hpp"
#include "gs/experiment.hpp"
#include "gs/format.hpp"
#include "gs/graph.hpp"
#include "gs/metrics.hpp"
#include "gs/sampling.hpp"

struct gs_graph {
    gs::Graph graph;
    gs::LoadStats stats;
};

namespace {

thread_local std::string t_last_error;

gs_status fail(gs_status code, const std::string& message) {
    t_last_error = message;
    return code;
}

// Runs fn, translating the library's exception taxonomy to status codes.
template <typename Fn>
gs_status guarded(Fn&& fn) {
    try {
        fn();
        return GS_OK;
    } catch (const gs::ParseError& e) {
        return fail(GS_ERR_PARSE, e.what());
    } catch (const gs::SpecError& e) {
        return fail(GS_ERR_SPEC, e.what());
    } catch (const gs::IoError& e) {
        return fail(GS_ERR_IO, e.what());
    } catch (const std::bad_alloc&) {
        return fail(GS_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(GS_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(GS_ERR_INTERNAL, "unknown error");
    }
}

gs_status require(bool ok, const char* what) {
    return ok ? GS_OK : fail(GS_ERR_SPEC, std::string("null argument: ") + what);
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char* gs_version(void) { return "1.0.0"; }

const char* gs_last_error(void) { return t_last_error.c_str(); }

void gs_graph_free(gs_graph* g) { delete g; }

void gs_string_free(char* s) { delete[] s; }

gs_status gs_graph_load(const char* path, gs_graph** out) {
    if (auto st = require(path && out, "path/out")) return st;
    return guarded([&] {
        auto handle = std::make_unique<gs_graph>();
        handle->graph = gs::load_edge_list(path, &handle->stats);
        *out = handle.release();
    });
}

gs_status gs_graph_parse(const char* text, gs_graph** out) {
    if (auto st = require(text && out, "text/out")) return st;
    return guarded([&] {
        auto handle = std::make_unique<gs_graph>();
        std::istringstream in(text);
        handle->graph = gs::parse_edge_list(in, &handle->stats);
        *out = handle.release();
    });
}

gs_status gs_graph_write(const gs_graph* g, const char* path) {
    if (auto st = require(g && path, "graph/path")) return st;
    return guarded([&] { gs::save_edge_list(g->graph, path); });
}

uint64_t gs_graph_nodes(const gs_graph* g) { return g ? g->graph.node_count() : 0; }

uint64_t gs_graph_edges(const gs_graph* g) { return g ? g->graph.edge_count() : 0; }

gs_status gs_graph_load_stats_json(const gs_graph* g, char** out_json) {
    if (auto st = require(g && out_json, "graph/out")) return st;
    return guarded([&] { *out_json = copy_string(g->stats.to_json()); });
}

gs_status gs_sample(const gs_graph* g, const char* spec_json, gs_graph** out) {
    if (auto st = require(g && spec_json && out, "graph/spec/out")) return st;
    return guarded([&] {
        const gs::SampleSpec spec = gs::SampleSpec::from_json(spec_json);
        auto handle = std::make_unique<gs_graph>();
        handle->graph = gs::draw_sample(g->graph, spec);
        handle->stats.nodes = handle->graph.node_count();
        handle->stats.edges = handle->graph.edge_count();
        *out = handle.release();
    });
}

gs_status gs_property_report_json(const gs_graph* g, uint64_t seed, int workers, char** out_json) {
    if (auto st = require(g && out_json, "graph/out")) return st;
    return guarded(
        [&] { *out_json = copy_string(gs::full_report(g->graph, seed, workers).to_json()); });
}

gs_status gs_betweenness_csv(const gs_graph* g, int workers, char** out_csv) {
    if (auto st = require(g && out_csv, "graph/out")) return st;
    return guarded([&] {
        const std::vector<double> scores = gs::betweenness_centrality(g->graph, workers);
        std::ostringstream os;
        os << "node_label,betweenness\n";
        for (std::size_t v = 0; v < scores.size(); ++v)
            os << g->graph.label(static_cast<gs::NodeId>(v)) << ","
               << gs::format_double(scores[v]) << "\n";
        *out_csv = copy_string(os.str());
    });
}

gs_status gs_communities_csv(const gs_graph* g, uint64_t seed, char** out_csv) {
    if (auto st = require(g && out_csv, "graph/out")) return st;
    return guarded([&] {
        const gs::Partition p = gs::louvain_communities(g->graph, seed);
        *out_csv = copy_string(p.to_csv(g->graph));
    });
}

gs_status gs_default_plan_json(const char* strategy, char** out_json) {
    if (auto st = require(strategy && out_json, "strategy/out")) return st;
    return guarded([&] {
        const gs::ExperimentPlan plan = gs::default_paper_plan(gs::strategy_from_name(strategy));
        *out_json = copy_string(plan.to_json());
    });
}

gs_status gs_run_experiment(const char* plan_json, const char* out_dir, int workers) {
    if (auto st = require(plan_json && out_dir, "plan/out_dir")) return st;
    return guarded([&] {
        const gs::ExperimentPlan plan = gs::ExperimentPlan::from_json(plan_json);
        gs::run_experiment_to_dir(plan, out_dir, workers);
    });
}

gs_status gs_replicate(const char* dataset_path, const char* out_dir, uint64_t master_seed,
                       int workers) {
    if (auto st = require(dataset_path && out_dir, "dataset/out_dir")) return st;
    return guarded(
        [&] { gs::run_replicate_to_dir(dataset_path, out_dir, master_seed, workers); });
}

}  // extern "C"
