/*
 * graphsample — C API for the graph sampling and property-estimation toolkit.
 *
 * All functions return a gs_status; on failure gs_last_error() holds a
 * message for the calling thread. Graph handles are opaque and must be
 * released with gs_graph_free(); strings produced by the library must be
 * released with gs_string_free().
 *
 * Structured parameters and results travel as JSON text:
 *   sample spec   {"strategy":"ers|nrs|rw","target":N,
 *                  "rw_iterations":N,"rw_runs":N,"seed":N}
 *   sweep plan    {"strategy":...,"sizes":[...],"repetitions":N,
 *                  "rw_iterations":N,"rw_runs":N,"master_seed":N,
 *                  "dataset_path":"..."}
 *   report        {"avg_degree":..,"density":..,"modularity":..,
 *                  "avg_clustering":..,"diameter":..,"avg_path_length":..,
 *                  "connected_components":..,"largest_component_fraction":..}
 */

#ifndef GRAPHSAMPLE_H
#define GRAPHSAMPLE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gs_status {
    GS_OK = 0,
    GS_ERR_PARSE = 1,    /* malformed edge list or JSON */
    GS_ERR_SPEC = 2,     /* request inconsistent with the graph or itself */
    GS_ERR_IO = 3,       /* file system failure */
    GS_ERR_INTERNAL = 4, /* unexpected failure; see gs_last_error() */
} gs_status;

typedef struct gs_graph gs_graph;

const char* gs_version(void);

/* Message of the most recent failure on this thread; never NULL. */
const char* gs_last_error(void);

void gs_graph_free(gs_graph* g);
void gs_string_free(char* s);

/* Edge lists: '#' lines are comments, every other line "u v". Duplicate
 * edges and self-loops are dropped; "# node L" comments carry isolated
 * nodes through a write/load round trip. */
gs_status gs_graph_load(const char* path, gs_graph** out);
gs_status gs_graph_parse(const char* text, gs_graph** out);
gs_status gs_graph_write(const gs_graph* g, const char* path);

uint64_t gs_graph_nodes(const gs_graph* g);
uint64_t gs_graph_edges(const gs_graph* g);

/* {"nodes":..,"edges":..,"duplicate_edges_dropped":..,"self_loops_dropped":..} */
gs_status gs_graph_load_stats_json(const gs_graph* g, char** out_json);

/* Draws the sample described by spec_json (see header comment). */
gs_status gs_sample(const gs_graph* g, const char* spec_json, gs_graph** out);

/* Full property report as JSON; seed drives community detection. */
gs_status gs_property_report_json(const gs_graph* g, uint64_t seed, int workers, char** out_json);

/* Per-node betweenness as CSV "node_label,betweenness". */
gs_status gs_betweenness_csv(const gs_graph* g, int workers, char** out_csv);

/* Louvain partition as CSV "node_label,community_id". */
gs_status gs_communities_csv(const gs_graph* g, uint64_t seed, char** out_csv);

/* Stock sweep plan for a strategy ("ers", "nrs" or "rw") as JSON. */
gs_status gs_default_plan_json(const char* strategy, char** out_json);

/* Runs the sweep described by plan_json (dataset_path is loaded from disk)
 * and writes plan.json, results.json, results.csv and plots/ into out_dir. */
gs_status gs_run_experiment(const char* plan_json, const char* out_dir, int workers);

/* Runs all three stock sweeps plus the full-graph baseline and comparison:
 * one subdirectory per strategy, baseline.json, plots/ and summary.md. */
gs_status gs_replicate(const char* dataset_path, const char* out_dir, uint64_t master_seed,
                       int workers);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GRAPHSAMPLE_H */
