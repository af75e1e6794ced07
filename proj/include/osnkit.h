/* osnkit — social-graph measures, degree-curve break detection and a
 * degree-constrained evolution model, behind a flat C ABI.
 *
 * Conventions: every fallible call returns an int status (OSN_OK == 0) and
 * writes results through out-pointers. On failure osn_last_error() holds a
 * thread-local message until the next failing call on that thread. Handles
 * are opaque; each *_free accepts NULL.
 */
#ifndef OSNKIT_H
#define OSNKIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define OSN_OK 0
#define OSN_EINVAL 1  /* bad argument, domain violation */
#define OSN_EPARSE 2  /* malformed input file (message carries line number) */
#define OSN_EIO 3     /* open/read/write failure */
#define OSN_ENOMEM 4
#define OSN_EUNKNOWN 5

const char* osn_version(void);
const char* osn_last_error(void);

/* ---- graph ---------------------------------------------------------- */

typedef struct osn_graph osn_graph;

/* Edge list: two whitespace/comma-separated ids per line, '#'/'%' comments,
 * optional header. streaming != 0 trades a second file pass for not
 * buffering the edges in memory. */
int osn_graph_load(const char* path, int streaming, osn_graph** out);
/* endpoints = 2*edge_count ids, pair-flattened. */
int osn_graph_from_edges(uint32_t n, const uint32_t* endpoints, size_t edge_count,
                         osn_graph** out);
void osn_graph_free(osn_graph* g);

uint32_t osn_graph_nodes(const osn_graph* g);
uint64_t osn_graph_edges(const osn_graph* g);
int osn_graph_degree(const osn_graph* g, uint32_t node, uint32_t* out);
int osn_graph_neighbors(const osn_graph* g, uint32_t node, const uint32_t** out,
                        uint32_t* count);
int osn_graph_has_edge(const osn_graph* g, uint32_t i, uint32_t j, int* out);
int osn_graph_add_edge(osn_graph* g, uint32_t i, uint32_t j, int* changed);
int osn_graph_remove_edge(osn_graph* g, uint32_t i, uint32_t j, int* changed);
/* Dropped-input counters from loading (0 for constructed graphs). */
void osn_graph_dropped(const osn_graph* g, uint64_t* self_loops, uint64_t* duplicates);
/* NULL when the node has no external id (constructed graphs). */
const char* osn_graph_external_id(const osn_graph* g, uint32_t node);

int osn_graph_write_edges(const osn_graph* g, const char* path);
int osn_graph_write_remap(const osn_graph* g, const char* path);

typedef struct osn_summary {
  uint32_t nodes;
  uint64_t edges;
  double avg_degree;
  double avg_clustering;
  uint32_t k_max;
  uint32_t k_min;
} osn_summary;

int osn_graph_summary(const osn_graph* g, int threads, osn_summary* out);

/* ---- node measures ----------------------------------------------------- */

/* Single-node reads (tests, spot checks). Bulk work goes through
 * osn_metrics_compute below. */
int osn_clustering(const osn_graph* g, uint32_t node, double* out);
int osn_knn(const osn_graph* g, uint32_t node, double* out);
int osn_tie_strength(const osn_graph* g, uint32_t i, uint32_t j, double* out);
int osn_node_strength(const osn_graph* g, uint32_t node, double* out);

/* All per-node measures in one pass (the edge-intersection leg dominates and
 * is shared between clustering and strength). threads <= 0 means all cores;
 * results are independent of the thread count. */
typedef struct osn_metrics osn_metrics;

#define OSN_METRIC_CLUSTERING 0
#define OSN_METRIC_KNN 1
#define OSN_METRIC_KSHELL 2
#define OSN_METRIC_STRENGTH 3

int osn_metrics_compute(const osn_graph* g, int threads, osn_metrics** out);
void osn_metrics_free(osn_metrics* m);
int osn_metrics_node(const osn_metrics* m, int which, uint32_t node, double* out);

/* ---- degree curves --------------------------------------------------- */

typedef struct osn_curve osn_curve;

#define OSN_BINS_EXACT 0
#define OSN_BINS_LOG 1

/* ratio is the log-bin growth factor; ignored for OSN_BINS_EXACT. */
int osn_curve_ccdf(const osn_graph* g, osn_curve** out);
int osn_metrics_curve(const osn_graph* g, const osn_metrics* m, int which, int bins,
                      double ratio, osn_curve** out);
/* Per-bin mean divided by k_max (degree-curve normalization). */
int osn_curve_normalized(const osn_curve* c, uint32_t k_max, osn_curve** out);

size_t osn_curve_size(const osn_curve* c);
int osn_curve_is_binned(const osn_curve* c);
int osn_curve_point(const osn_curve* c, size_t idx, double* k_lo, double* k_hi,
                    double* mean, uint64_t* count);
int osn_curve_write_csv(const osn_curve* c, const char* path);
int osn_curve_read_csv(const char* path, osn_curve** out);
void osn_curve_free(osn_curve* c);

/* ---- profile attributes / homophily ---------------------------------- */

typedef struct osn_attrs osn_attrs;

/* CSV: node_id plus 7 nonnegative categorical codes, 0 = missing. */
int osn_attrs_load(const char* path, const osn_graph* g, osn_attrs** out);
void osn_attrs_free(osn_attrs* a);
uint64_t osn_attrs_unknown_rows(const osn_attrs* a);

/* sqrt(# attributes whose codes differ); skip_missing != 0 compares only
 * attributes present on both sides and rescales to the full 7. */
int osn_homophily_distance(const osn_attrs* a, uint32_t i, uint32_t j, int skip_missing,
                           double* out);
int osn_curve_homophily(const osn_graph* g, const osn_attrs* a, int bins, double ratio,
                        int skip_missing, int threads, osn_curve** out);

/* ---- interaction ledgers ---------------------------------------------- */

typedef struct osn_wall osn_wall;
typedef struct osn_exchange osn_exchange;

/* Wall trace: poster owner timestamp per line. */
int osn_wall_load(const char* path, const osn_graph* g, osn_wall** out);
void osn_wall_free(osn_wall* w);
uint64_t osn_wall_unresolved(const osn_wall* w);
uint64_t osn_wall_records(const osn_wall* w);

/* poster_side != 0 counts posts written instead of posts received;
 * include_self == 0 drops poster==owner records. */
int osn_curve_activity(const osn_graph* g, const osn_wall* w, int bins, double ratio,
                       int poster_side, int include_self, osn_curve** out);

/* Either per-node totals `node,sent,received` or a raw `sender,receiver`
 * event list (detected by column count). */
int osn_exchange_load(const char* path, const osn_graph* g, osn_exchange** out);
void osn_exchange_free(osn_exchange* e);
uint64_t osn_exchange_unresolved(const osn_exchange* e);

/* received/sent; nodes that sent nothing are undefined -> *defined = 0. */
int osn_reciprocation(const osn_exchange* e, uint32_t node, double* out, int* defined);
int osn_curve_reciprocation(const osn_graph* g, const osn_exchange* e, int bins,
                            double ratio, osn_curve** out);

/* ---- turning-point detection ------------------------------------------ */

#define OSN_TRANSFORM_LOGX 0
#define OSN_TRANSFORM_LOGLOG 1

typedef struct osn_break_report {
  double k_T;
  double improvement_ratio; /* single-segment SSE / best two-segment SSE */
  double left_slope;
  double right_slope;
  double left_intercept;
  double right_intercept;
  double sse_single;
  double sse_split;
  int significant;
  uint64_t points_used;
  uint64_t points_dropped;
} osn_break_report;

int osn_detect_break(const osn_curve* c, int transform, double k_lo, double k_hi,
                     double threshold, osn_break_report* out);
/* Median/range over the significant reports; *significant_count == 0 means
 * no consensus. */
int osn_break_consensus(const osn_break_report* reports, size_t n, double* median,
                        double* k_min, double* k_max, size_t* significant_count);

/* ---- evolution model --------------------------------------------------- */

typedef struct osn_model_params {
  uint32_t n;
  double k_avg_max;
  double c;    /* tie-adding speed */
  double d;    /* tie-removing speed */
  double r;    /* random-linkage speed */
  double beta; /* constraint sharpness */
  double k_T;  /* threshold degree */
  uint64_t seed;
  uint64_t max_units;
  int m;            /* seed-graph attachment count */
  int live_weights; /* update selection weights per trial, not per phase */
} osn_model_params;

/* Fills in the documented defaults: n=20000, k_avg_max=20, c=d=0.0005,
 * r=0.0001, beta=8, k_T=200, seed=1, max_units=1e6, m=2, live_weights=0. */
void osn_model_params_init(osn_model_params* p);

double osn_constraint_factor(double k, double beta, double k_T);

int osn_ba_generate(uint32_t n, int m, uint64_t seed, osn_graph** out);

typedef struct osn_evolution osn_evolution;
typedef void (*osn_progress_fn)(uint64_t unit, double avg_degree, void* user);

/* Runs the model to its average-degree target (or max_units). Either out
 * pointer may be NULL if only the other is wanted. */
int osn_evolve(const osn_model_params* p, osn_progress_fn progress, void* user,
               osn_graph** out_graph, osn_evolution** out_log);
void osn_evolution_free(osn_evolution* e);
uint64_t osn_evolution_units(const osn_evolution* e);
int osn_evolution_reached_target(const osn_evolution* e);
const char* osn_evolution_stop_reason(const osn_evolution* e);
/* CSV: unit,added1,removed2,added3,avg_degree */
int osn_evolution_write_csv(const osn_evolution* e, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* OSNKIT_H */
