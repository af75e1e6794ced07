#include "bashift.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "alias.hpp"
#include "curve.hpp"
#include "fenwick.hpp"

namespace osn {

void ModelParams::validate() const {
  if (n < 3) throw std::invalid_argument("model: n must be >= 3");
  if (!(k_avg_max < n - 1.0)) throw std::invalid_argument("model: k_avg_max must be < n-1");
  if (c < 0 || d < 0 || r < 0) throw std::invalid_argument("model: speeds must be >= 0");
  if (!(beta > 0)) throw std::invalid_argument("model: beta must be > 0");
  if (!(k_T >= 1)) throw std::invalid_argument("model: k_T must be >= 1");
  if (max_units < 1) throw std::invalid_argument("model: max_units must be >= 1");
  if (m < 1 || static_cast<NodeId>(m) >= n) throw std::invalid_argument("model: need n > m >= 1");
}

Graph generate_ba(NodeId n, int m, std::uint64_t seed) {
  Rng rng(seed);
  return generate_ba(n, m, rng);
}

Graph generate_ba(NodeId n, int m, Rng& rng) {
  if (m < 1 || static_cast<NodeId>(m) >= n)
    throw std::invalid_argument("generate_ba: need n > m >= 1");
  const NodeId m0 = static_cast<NodeId>(m) + 1;
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(static_cast<std::size_t>(m) * n);
  // One entry per degree unit: uniform draws give degree-proportional picks.
  std::vector<NodeId> stubs;
  stubs.reserve(2 * static_cast<std::size_t>(m) * n);
  for (NodeId i = 0; i < m0; ++i)
    for (NodeId j = i + 1; j < m0; ++j) {
      edges.emplace_back(i, j);
      stubs.push_back(i);
      stubs.push_back(j);
    }
  std::vector<NodeId> picked;
  picked.reserve(m);
  for (NodeId v = m0; v < n; ++v) {
    picked.clear();
    while (picked.size() < static_cast<std::size_t>(m)) {
      NodeId t = stubs[rng.below(stubs.size())];
      bool dup = false;
      for (NodeId q : picked) dup = dup || (q == t);
      if (!dup) picked.push_back(t);
    }
    for (NodeId t : picked) {
      edges.emplace_back(t, v);
      stubs.push_back(t);
      stubs.push_back(v);
    }
  }
  return Graph::from_pairs(n, std::move(edges));
}

double constraint_factor(double k, double beta, double k_T) {
  const double z = beta * (k - k_T);
  if (z > 700.0) return 0.0;
  if (z < -700.0) return 1.0;
  return 1.0 / (std::exp(z) + 1.0);
}

std::uint64_t stochastic_round(double x, Rng& rng) {
  if (x <= 0) return 0;
  const double fl = std::floor(x);
  std::uint64_t n = static_cast<std::uint64_t>(fl);
  if (rng.bernoulli(x - fl)) ++n;
  return n;
}

std::vector<double> action1_weights(const Graph& g, double beta, double k_T) {
  std::vector<double> w(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const double k = g.degree(i);
    w[i] = k * (k - 1.0) * constraint_factor(k, beta, k_T);
  }
  return w;
}

std::vector<double> action2_weights(const Graph& g) {
  std::vector<double> w(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) w[i] = g.degree(i) + 1.0;
  return w;
}

namespace {

double a1_weight(const Graph& g, const ModelParams& p, NodeId i) {
  const double k = g.degree(i);
  return k * (k - 1.0) * constraint_factor(k, p.beta, p.k_T);
}

// Shared trial body: pick two distinct neighbors of i, connect if absent.
bool try_close(Graph& g, NodeId i, Rng& rng, NodeId* u_out, NodeId* v_out) {
  const NodeId k = g.degree(i);
  if (k < 2) return false;
  std::uint64_t a = rng.below(k);
  std::uint64_t b = rng.below(k - 1);
  if (b >= a) ++b;
  const NodeId u = g.neighbors(i)[a];
  const NodeId v = g.neighbors(i)[b];
  if (!g.add_edge(u, v)) return false;
  *u_out = u;
  *v_out = v;
  return true;
}

}  // namespace

ActionResult action1_close_triads(Graph& g, const ModelParams& p, Rng& rng) {
  if (g.node_count() == 0) throw std::invalid_argument("action1: empty graph");
  double pair_sum = 0;  // sum of k(k-1), the trial-count base
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const double k = g.degree(i);
    pair_sum += k * (k - 1.0);
  }
  ActionResult res;
  res.trials = stochastic_round(0.5 * p.c * pair_sum, rng);
  if (res.trials == 0) return res;
  auto w = action1_weights(g, p.beta, p.k_T);
  bool any = false;
  for (double x : w) any = any || (x > 0);
  if (!any) {  // every node is either below k=2 or fully suppressed
    res.trials = 0;
    return res;
  }
  NodeId u, v;
  if (p.live_weights) {
    FenwickSampler table(w);
    for (std::uint64_t t = 0; t < res.trials; ++t) {
      if (!(table.total() > 0)) break;  // remaining trials cannot select
      const NodeId i = static_cast<NodeId>(table.sample(rng));
      if (try_close(g, i, rng, &u, &v)) {
        ++res.changed;
        table.set(u, a1_weight(g, p, u));
        table.set(v, a1_weight(g, p, v));
      }
    }
  } else {
    AliasTable table(w);
    for (std::uint64_t t = 0; t < res.trials; ++t) {
      const NodeId i = table.sample(rng);
      if (try_close(g, i, rng, &u, &v)) ++res.changed;
    }
  }
  return res;
}

ActionResult action2_decay_ties(Graph& g, const ModelParams& p, Rng& rng) {
  ActionResult res;
  if (g.node_count() == 0) return res;
  const double deg_sum = 2.0 * static_cast<double>(g.edge_count());
  res.trials = stochastic_round(0.5 * p.d * deg_sum, rng);
  if (res.trials == 0) return res;
  if (p.live_weights) {
    FenwickSampler table(action2_weights(g));
    for (std::uint64_t t = 0; t < res.trials; ++t) {
      const NodeId q = static_cast<NodeId>(table.sample(rng));
      const NodeId k = g.degree(q);
      if (k <= 1) continue;
      const NodeId nbr = g.neighbors(q)[rng.below(k)];
      g.remove_edge(q, nbr);
      ++res.changed;
      table.set(q, g.degree(q) + 1.0);
      table.set(nbr, g.degree(nbr) + 1.0);
    }
  } else {
    AliasTable table(action2_weights(g));
    for (std::uint64_t t = 0; t < res.trials; ++t) {
      const NodeId q = table.sample(rng);
      const NodeId k = g.degree(q);
      if (k <= 1) continue;
      const NodeId nbr = g.neighbors(q)[rng.below(k)];
      g.remove_edge(q, nbr);
      ++res.changed;
    }
  }
  return res;
}

ActionResult action3_random_link(Graph& g, const ModelParams& p, Rng& rng) {
  if (g.node_count() < 2) throw std::invalid_argument("action3: need at least two nodes");
  ActionResult res;
  res.trials = stochastic_round(static_cast<double>(g.node_count()) * p.r, rng);
  for (std::uint64_t t = 0; t < res.trials; ++t) {
    const NodeId i = static_cast<NodeId>(rng.below(g.node_count()));
    NodeId j = static_cast<NodeId>(rng.below(g.node_count() - 1));
    if (j >= i) ++j;
    if (g.add_edge(i, j)) ++res.changed;
  }
  return res;
}

std::pair<Graph, EvolutionLog> evolve(const ModelParams& p, const ProgressFn& progress) {
  p.validate();
  Rng rng(p.seed);
  Graph g = generate_ba(p.n, p.m, rng);
  EvolutionLog log;
  if (g.average_degree() >= p.k_avg_max) {
    log.reached_target = true;
    log.stop_reason = "target";
    return {std::move(g), std::move(log)};
  }
  const bool inert = p.c == 0 && p.d == 0 && p.r == 0;
  for (std::uint64_t unit = 1; unit <= p.max_units; ++unit) {
    UnitRecord rec;
    rec.unit = unit;
    auto a1 = action1_close_triads(g, p, rng);
    rec.trials1 = a1.trials;
    rec.added1 = a1.changed;
    auto a2 = action2_decay_ties(g, p, rng);
    rec.trials2 = a2.trials;
    rec.removed2 = a2.changed;
    auto a3 = action3_random_link(g, p, rng);
    rec.trials3 = a3.trials;
    rec.added3 = a3.changed;
    rec.avg_degree = g.average_degree();
    log.units.push_back(rec);
    if (progress && unit % 1000 == 0) progress(unit, rec.avg_degree);
    if (rec.avg_degree >= p.k_avg_max) {
      log.reached_target = true;
      log.stop_reason = "target";
      return {std::move(g), std::move(log)};
    }
    if (inert) {
      log.stop_reason = "no-op parameters";
      return {std::move(g), std::move(log)};
    }
  }
  log.stop_reason = "max_units";
  return {std::move(g), std::move(log)};
}

void write_evolution_log_csv(const std::string& path, const EvolutionLog& log) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "unit,added1,removed2,added3,avg_degree\n";
  for (const auto& u : log.units)
    out << u.unit << ',' << u.added1 << ',' << u.removed2 << ',' << u.added3 << ','
        << format_double(u.avg_degree) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace osn
