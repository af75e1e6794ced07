// C ABI over the C++ core: exceptions become status codes, results live
// behind opaque handles, errors go to a thread-local message buffer.
#include "osnkit.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>

#include "attributes.hpp"
#include "bashift.hpp"
#include "curve.hpp"
#include "edgelist.hpp"
#include "graph.hpp"
#include "interactions.hpp"
#include "metrics.hpp"
#include "parallel.hpp"
#include "turnpoint.hpp"

struct osn_graph {
  osn::Graph g;
  std::vector<std::string> external_ids;
  std::unordered_map<std::string, osn::NodeId> id_index;
  osn::LoadReport report;
};

struct osn_curve {
  osn::DegreeCurve c;
};

struct osn_metrics {
  osn::NodeMetricVector m;
};

struct osn_attrs {
  osn::AttributeTable t;
  osn::AttributeLoadReport report;
};

struct osn_wall {
  osn::WallLedger w;
};

struct osn_exchange {
  osn::ExchangeLedger e;
};

struct osn_evolution {
  osn::EvolutionLog log;
};

namespace {

thread_local std::string t_err;

template <typename Fn>
int wrap(Fn&& fn) noexcept {
  try {
    fn();
    return OSN_OK;
  } catch (const osn::ParseError& e) {
    t_err = e.what();
    return OSN_EPARSE;
  } catch (const std::invalid_argument& e) {
    t_err = e.what();
    return OSN_EINVAL;
  } catch (const std::bad_alloc&) {
    t_err = "out of memory";
    return OSN_ENOMEM;
  } catch (const std::exception& e) {
    t_err = e.what();
    return OSN_EIO;
  } catch (...) {
    t_err = "unknown error";
    return OSN_EUNKNOWN;
  }
}

int fail_null(const char* what) {
  t_err = std::string("null argument: ") + what;
  return OSN_EINVAL;
}

osn::BinSpec bin_spec(int bins, double ratio) {
  if (bins != OSN_BINS_EXACT && bins != OSN_BINS_LOG)
    throw std::invalid_argument("bins must be OSN_BINS_EXACT or OSN_BINS_LOG");
  osn::BinSpec s;
  s.mode = bins == OSN_BINS_LOG ? osn::BinSpec::Mode::Log : osn::BinSpec::Mode::Exact;
  if (bins == OSN_BINS_LOG) {
    if (!(ratio > 1.0)) throw std::invalid_argument("log-bin ratio must be > 1");
    s.ratio = ratio;
  }
  return s;
}

}  // namespace

extern "C" {

const char* osn_version(void) { return "0.1.0"; }

const char* osn_last_error(void) { return t_err.c_str(); }

/* ---- graph ---------------------------------------------------------- */

int osn_graph_load(const char* path, int streaming, osn_graph** out) {
  if (!path || !out) return fail_null("osn_graph_load");
  return wrap([&] {
    auto loaded = osn::load_edge_list(path, streaming != 0);
    *out = new osn_graph{std::move(loaded.graph), std::move(loaded.external_ids),
                         std::move(loaded.id_index), loaded.report};
  });
}

int osn_graph_from_edges(uint32_t n, const uint32_t* endpoints, size_t edge_count,
                         osn_graph** out) {
  if (!out || (edge_count > 0 && !endpoints)) return fail_null("osn_graph_from_edges");
  return wrap([&] {
    std::vector<std::pair<osn::NodeId, osn::NodeId>> pairs(edge_count);
    for (size_t i = 0; i < edge_count; ++i)
      pairs[i] = {endpoints[2 * i], endpoints[2 * i + 1]};
    osn::DedupStats stats;
    auto g = osn::Graph::from_pairs(n, std::move(pairs), &stats);
    auto* h = new osn_graph{std::move(g), {}, {}, {}};
    h->report.self_loops = stats.self_loops;
    h->report.duplicates = stats.duplicates;
    *out = h;
  });
}

void osn_graph_free(osn_graph* g) { delete g; }

uint32_t osn_graph_nodes(const osn_graph* g) { return g ? g->g.node_count() : 0; }

uint64_t osn_graph_edges(const osn_graph* g) { return g ? g->g.edge_count() : 0; }

int osn_graph_degree(const osn_graph* g, uint32_t node, uint32_t* out) {
  if (!g || !out) return fail_null("osn_graph_degree");
  return wrap([&] {
    g->g.check_node(node);
    *out = g->g.degree(node);
  });
}

int osn_graph_neighbors(const osn_graph* g, uint32_t node, const uint32_t** out,
                        uint32_t* count) {
  if (!g || !out || !count) return fail_null("osn_graph_neighbors");
  return wrap([&] {
    g->g.check_node(node);
    auto span = g->g.neighbors(node);
    *out = span.data();
    *count = static_cast<uint32_t>(span.size());
  });
}

int osn_graph_has_edge(const osn_graph* g, uint32_t i, uint32_t j, int* out) {
  if (!g || !out) return fail_null("osn_graph_has_edge");
  return wrap([&] {
    g->g.check_node(i);
    g->g.check_node(j);
    *out = g->g.has_edge(i, j) ? 1 : 0;
  });
}

int osn_graph_add_edge(osn_graph* g, uint32_t i, uint32_t j, int* changed) {
  if (!g) return fail_null("osn_graph_add_edge");
  return wrap([&] {
    bool c = g->g.add_edge(i, j);
    if (changed) *changed = c ? 1 : 0;
  });
}

int osn_graph_remove_edge(osn_graph* g, uint32_t i, uint32_t j, int* changed) {
  if (!g) return fail_null("osn_graph_remove_edge");
  return wrap([&] {
    bool c = g->g.remove_edge(i, j);
    if (changed) *changed = c ? 1 : 0;
  });
}

void osn_graph_dropped(const osn_graph* g, uint64_t* self_loops, uint64_t* duplicates) {
  if (self_loops) *self_loops = g ? g->report.self_loops : 0;
  if (duplicates) *duplicates = g ? g->report.duplicates : 0;
}

const char* osn_graph_external_id(const osn_graph* g, uint32_t node) {
  if (!g || node >= g->external_ids.size()) return nullptr;
  return g->external_ids[node].c_str();
}

int osn_graph_write_edges(const osn_graph* g, const char* path) {
  if (!g || !path) return fail_null("osn_graph_write_edges");
  return wrap([&] { osn::write_edge_list(g->g, g->external_ids, path); });
}

int osn_graph_write_remap(const osn_graph* g, const char* path) {
  if (!g || !path) return fail_null("osn_graph_write_remap");
  return wrap([&] {
    if (g->external_ids.empty())
      throw std::invalid_argument("graph has no external id mapping");
    osn::write_remap(g->external_ids, path);
  });
}

int osn_graph_summary(const osn_graph* g, int threads, osn_summary* out) {
  if (!g || !out) return fail_null("osn_graph_summary");
  return wrap([&] {
    out->nodes = g->g.node_count();
    out->edges = g->g.edge_count();
    out->avg_degree = g->g.average_degree();
    out->avg_clustering = osn::average_clustering(g->g, threads);
    out->k_max = g->g.max_degree();
    out->k_min = g->g.min_degree();
  });
}

/* ---- node measures ----------------------------------------------------- */

int osn_clustering(const osn_graph* g, uint32_t node, double* out) {
  if (!g || !out) return fail_null("osn_clustering");
  return wrap([&] {
    g->g.check_node(node);
    *out = osn::clustering(g->g, node);
  });
}

int osn_knn(const osn_graph* g, uint32_t node, double* out) {
  if (!g || !out) return fail_null("osn_knn");
  return wrap([&] {
    g->g.check_node(node);
    *out = osn::knn(g->g, node);
  });
}

int osn_tie_strength(const osn_graph* g, uint32_t i, uint32_t j, double* out) {
  if (!g || !out) return fail_null("osn_tie_strength");
  return wrap([&] { *out = osn::tie_strength(g->g, i, j); });
}

int osn_node_strength(const osn_graph* g, uint32_t node, double* out) {
  if (!g || !out) return fail_null("osn_node_strength");
  return wrap([&] {
    g->g.check_node(node);
    *out = osn::node_strength(g->g, node);
  });
}

int osn_metrics_compute(const osn_graph* g, int threads, osn_metrics** out) {
  if (!g || !out) return fail_null("osn_metrics_compute");
  return wrap([&] { *out = new osn_metrics{osn::compute_node_metrics(g->g, threads)}; });
}

void osn_metrics_free(osn_metrics* m) { delete m; }

int osn_metrics_node(const osn_metrics* m, int which, uint32_t node, double* out) {
  if (!m || !out) return fail_null("osn_metrics_node");
  return wrap([&] {
    if (node >= m->m.clustering.size()) throw std::invalid_argument("node out of range");
    switch (which) {
      case OSN_METRIC_CLUSTERING: *out = m->m.clustering[node]; break;
      case OSN_METRIC_KNN: *out = m->m.knn[node]; break;
      case OSN_METRIC_KSHELL: *out = m->m.kshell[node]; break;
      case OSN_METRIC_STRENGTH: *out = m->m.strength[node]; break;
      default: throw std::invalid_argument("unknown metric selector");
    }
  });
}

/* ---- degree curves --------------------------------------------------- */

int osn_curve_ccdf(const osn_graph* g, osn_curve** out) {
  if (!g || !out) return fail_null("osn_curve_ccdf");
  return wrap([&] { *out = new osn_curve{osn::degree_ccdf(g->g)}; });
}

int osn_metrics_curve(const osn_graph* g, const osn_metrics* m, int which, int bins,
                      double ratio, osn_curve** out) {
  if (!g || !m || !out) return fail_null("osn_metrics_curve");
  return wrap([&] {
    if (m->m.clustering.size() != g->g.node_count())
      throw std::invalid_argument("metrics were computed for a different graph");
    auto spec = bin_spec(bins, ratio);
    const std::vector<double>* vals = nullptr;
    std::vector<double> shell;
    switch (which) {
      case OSN_METRIC_CLUSTERING: vals = &m->m.clustering; break;
      case OSN_METRIC_KNN: vals = &m->m.knn; break;
      case OSN_METRIC_KSHELL:
        shell.assign(m->m.kshell.begin(), m->m.kshell.end());
        vals = &shell;
        break;
      case OSN_METRIC_STRENGTH: vals = &m->m.strength; break;
      default: throw std::invalid_argument("unknown metric selector");
    }
    *out = new osn_curve{osn::per_degree_curve(g->g, *vals, spec)};
  });
}

int osn_curve_normalized(const osn_curve* c, uint32_t k_max, osn_curve** out) {
  if (!c || !out) return fail_null("osn_curve_normalized");
  return wrap([&] { *out = new osn_curve{osn::normalize_curve(c->c, k_max)}; });
}

size_t osn_curve_size(const osn_curve* c) { return c ? c->c.size() : 0; }

int osn_curve_is_binned(const osn_curve* c) { return (c && c->c.binned) ? 1 : 0; }

int osn_curve_point(const osn_curve* c, size_t idx, double* k_lo, double* k_hi,
                    double* mean, uint64_t* count) {
  if (!c) return fail_null("osn_curve_point");
  return wrap([&] {
    if (idx >= c->c.size()) throw std::invalid_argument("curve point index out of range");
    const auto& p = c->c.points[idx];
    if (k_lo) *k_lo = p.k_lo;
    if (k_hi) *k_hi = p.k_hi;
    if (mean) *mean = p.mean;
    if (count) *count = p.count;
  });
}

int osn_curve_write_csv(const osn_curve* c, const char* path) {
  if (!c || !path) return fail_null("osn_curve_write_csv");
  return wrap([&] { osn::write_curve_csv(c->c, path); });
}

int osn_curve_read_csv(const char* path, osn_curve** out) {
  if (!path || !out) return fail_null("osn_curve_read_csv");
  return wrap([&] { *out = new osn_curve{osn::read_curve_csv(path)}; });
}

void osn_curve_free(osn_curve* c) { delete c; }

/* ---- attributes -------------------------------------------------------- */

int osn_attrs_load(const char* path, const osn_graph* g, osn_attrs** out) {
  if (!path || !g || !out) return fail_null("osn_attrs_load");
  return wrap([&] {
    osn::AttributeLoadReport rep;
    auto t = osn::load_attributes(path, g->id_index, g->g.node_count(), &rep);
    *out = new osn_attrs{std::move(t), rep};
  });
}

void osn_attrs_free(osn_attrs* a) { delete a; }

uint64_t osn_attrs_unknown_rows(const osn_attrs* a) { return a ? a->report.unknown_ids : 0; }

int osn_homophily_distance(const osn_attrs* a, uint32_t i, uint32_t j, int skip_missing,
                           double* out) {
  if (!a || !out) return fail_null("osn_homophily_distance");
  return wrap([&] { *out = osn::homophily_distance(a->t, i, j, skip_missing != 0); });
}

int osn_curve_homophily(const osn_graph* g, const osn_attrs* a, int bins, double ratio,
                        int skip_missing, int threads, osn_curve** out) {
  if (!g || !a || !out) return fail_null("osn_curve_homophily");
  return wrap([&] {
    *out = new osn_curve{osn::homophily_curve(g->g, a->t, bin_spec(bins, ratio),
                                              skip_missing != 0, threads,
                                              &g->external_ids)};
  });
}

/* ---- interactions ------------------------------------------------------ */

int osn_wall_load(const char* path, const osn_graph* g, osn_wall** out) {
  if (!path || !g || !out) return fail_null("osn_wall_load");
  return wrap([&] { *out = new osn_wall{osn::load_wall(path, g->id_index)}; });
}

void osn_wall_free(osn_wall* w) { delete w; }

uint64_t osn_wall_unresolved(const osn_wall* w) { return w ? w->w.unresolved : 0; }

uint64_t osn_wall_records(const osn_wall* w) { return w ? w->w.records.size() : 0; }

int osn_curve_activity(const osn_graph* g, const osn_wall* w, int bins, double ratio,
                       int poster_side, int include_self, osn_curve** out) {
  if (!g || !w || !out) return fail_null("osn_curve_activity");
  return wrap([&] {
    osn::ActivityOptions opt;
    opt.poster_side = poster_side != 0;
    opt.include_self = include_self != 0;
    *out = new osn_curve{osn::activity_curve(g->g, w->w, bin_spec(bins, ratio), opt)};
  });
}

int osn_exchange_load(const char* path, const osn_graph* g, osn_exchange** out) {
  if (!path || !g || !out) return fail_null("osn_exchange_load");
  return wrap(
      [&] { *out = new osn_exchange{osn::load_exchange(path, g->id_index, g->g.node_count())}; });
}

void osn_exchange_free(osn_exchange* e) { delete e; }

uint64_t osn_exchange_unresolved(const osn_exchange* e) { return e ? e->e.unresolved : 0; }

int osn_reciprocation(const osn_exchange* e, uint32_t node, double* out, int* defined) {
  if (!e || !out || !defined) return fail_null("osn_reciprocation");
  return wrap([&] {
    auto r = osn::reciprocation(e->e, node);
    *defined = r.has_value() ? 1 : 0;
    *out = r.value_or(0.0);
  });
}

int osn_curve_reciprocation(const osn_graph* g, const osn_exchange* e, int bins,
                            double ratio, osn_curve** out) {
  if (!g || !e || !out) return fail_null("osn_curve_reciprocation");
  return wrap([&] {
    *out = new osn_curve{osn::reciprocation_curve(g->g, e->e, bin_spec(bins, ratio))};
  });
}

/* ---- turning-point detection ------------------------------------------ */

int osn_detect_break(const osn_curve* c, int transform, double k_lo, double k_hi,
                     double threshold, osn_break_report* out) {
  if (!c || !out) return fail_null("osn_detect_break");
  return wrap([&] {
    if (transform != OSN_TRANSFORM_LOGX && transform != OSN_TRANSFORM_LOGLOG)
      throw std::invalid_argument("unknown transform selector");
    osn::BreakOptions opt;
    opt.k_lo = k_lo;
    opt.k_hi = k_hi;
    opt.threshold = threshold;
    opt.transform = transform == OSN_TRANSFORM_LOGLOG ? osn::BreakTransform::LogLog
                                                      : osn::BreakTransform::LogX;
    auto rep = osn::detect_break(c->c, opt);
    out->k_T = rep.k_T;
    out->improvement_ratio = rep.improvement_ratio;
    out->left_slope = rep.left_slope;
    out->right_slope = rep.right_slope;
    out->left_intercept = rep.left_intercept;
    out->right_intercept = rep.right_intercept;
    out->sse_single = rep.sse_single;
    out->sse_split = rep.sse_split;
    out->significant = rep.significant ? 1 : 0;
    out->points_used = rep.points_used;
    out->points_dropped = rep.points_dropped;
  });
}

int osn_break_consensus(const osn_break_report* reports, size_t n, double* median,
                        double* k_min, double* k_max, size_t* significant_count) {
  if ((n > 0 && !reports) || !significant_count) return fail_null("osn_break_consensus");
  return wrap([&] {
    std::vector<osn::BreakReport> reps(n);
    for (size_t i = 0; i < n; ++i) {
      reps[i].k_T = reports[i].k_T;
      reps[i].significant = reports[i].significant != 0;
    }
    auto c = osn::break_consensus(reps);
    *significant_count = c ? c->significant_count : 0;
    if (c) {
      if (median) *median = c->k_T_median;
      if (k_min) *k_min = c->k_T_min;
      if (k_max) *k_max = c->k_T_max;
    }
  });
}

/* ---- evolution model ----------------------------------------------------- */

void osn_model_params_init(osn_model_params* p) {
  if (!p) return;
  osn::ModelParams d;
  p->n = d.n;
  p->k_avg_max = d.k_avg_max;
  p->c = d.c;
  p->d = d.d;
  p->r = d.r;
  p->beta = d.beta;
  p->k_T = d.k_T;
  p->seed = d.seed;
  p->max_units = d.max_units;
  p->m = d.m;
  p->live_weights = d.live_weights ? 1 : 0;
}

double osn_constraint_factor(double k, double beta, double k_T) {
  return osn::constraint_factor(k, beta, k_T);
}

int osn_ba_generate(uint32_t n, int m, uint64_t seed, osn_graph** out) {
  if (!out) return fail_null("osn_ba_generate");
  return wrap([&] { *out = new osn_graph{osn::generate_ba(n, m, seed), {}, {}, {}}; });
}

int osn_evolve(const osn_model_params* p, osn_progress_fn progress, void* user,
               osn_graph** out_graph, osn_evolution** out_log) {
  if (!p || (!out_graph && !out_log)) return fail_null("osn_evolve");
  return wrap([&] {
    osn::ModelParams mp;
    mp.n = p->n;
    mp.k_avg_max = p->k_avg_max;
    mp.c = p->c;
    mp.d = p->d;
    mp.r = p->r;
    mp.beta = p->beta;
    mp.k_T = p->k_T;
    mp.seed = p->seed;
    mp.max_units = p->max_units;
    mp.m = p->m;
    mp.live_weights = p->live_weights != 0;
    osn::ProgressFn cb;
    if (progress)
      cb = [progress, user](std::uint64_t unit, double avg) { progress(unit, avg, user); };
    auto [g, log] = osn::evolve(mp, cb);
    if (out_graph) *out_graph = new osn_graph{std::move(g), {}, {}, {}};
    if (out_log) *out_log = new osn_evolution{std::move(log)};
  });
}

void osn_evolution_free(osn_evolution* e) { delete e; }

uint64_t osn_evolution_units(const osn_evolution* e) { return e ? e->log.units.size() : 0; }

int osn_evolution_reached_target(const osn_evolution* e) {
  return (e && e->log.reached_target) ? 1 : 0;
}

const char* osn_evolution_stop_reason(const osn_evolution* e) {
  return e ? e->log.stop_reason.c_str() : "";
}

int osn_evolution_write_csv(const osn_evolution* e, const char* path) {
  if (!e || !path) return fail_null("osn_evolution_write_csv");
  return wrap([&] { osn::write_evolution_log_csv(path, e->log); });
}

}  // extern "C"
