#include "metrics.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "parallel.hpp"

namespace osn {

namespace {

// Number of neighbors shared by i and each neighbor j, summed over j. Every
// edge among N(i) is seen from both ends, so E_i = sum / 2.
std::uint64_t neighbor_overlap_sum(const Graph& g, NodeId i) {
  std::uint64_t sum = 0;
  for (NodeId j : g.neighbors(i)) sum += g.common_neighbors(i, j);
  return sum;
}

}  // namespace

double clustering(const Graph& g, NodeId i) {
  g.check_node(i);
  std::uint64_t k = g.degree(i);
  if (k <= 1) return 0.0;
  std::uint64_t overlap = neighbor_overlap_sum(g, i);  // == 2 * |E_i|
  return static_cast<double>(overlap) / (static_cast<double>(k) * static_cast<double>(k - 1));
}

double knn(const Graph& g, NodeId i) {
  g.check_node(i);
  if (g.degree(i) == 0) return 0.0;
  std::uint64_t sum = 0;
  for (NodeId j : g.neighbors(i)) sum += g.degree(j);
  return static_cast<double>(sum) / g.degree(i);
}

double tie_strength(const Graph& g, NodeId i, NodeId j) {
  if (!g.has_edge(i, j)) throw std::invalid_argument("tie_strength: (i,j) is not an edge");
  std::uint64_t c = g.common_neighbors(i, j);
  std::uint64_t denom = g.degree(i) - 1 + g.degree(j) - 1 - c;
  if (denom == 0) return 0.0;  // isolated edge: both neighbor sets vacuous
  return static_cast<double>(c) / static_cast<double>(denom);
}

double node_strength(const Graph& g, NodeId i) {
  g.check_node(i);
  std::uint32_t k = g.degree(i);
  if (k == 0) return 0.0;
  double sum = 0.0;
  for (NodeId j : g.neighbors(i)) sum += tie_strength(g, i, j);
  return sum / k;
}

double average_clustering(const Graph& g, int threads) {
  if (g.node_count() == 0) throw std::invalid_argument("average clustering of an empty graph");
  std::vector<double> c(g.node_count());
  parallel_for(g.node_count(), threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) c[i] = clustering(g, static_cast<NodeId>(i));
  });
  double sum = 0.0;
  for (double v : c) sum += v;
  return sum / g.node_count();
}

std::vector<std::uint32_t> kshell_decompose(const Graph& g) {
  const NodeId n = g.node_count();
  std::vector<std::uint32_t> deg(n), core(n, 0);
  std::uint32_t max_deg = 0;
  for (NodeId i = 0; i < n; ++i) {
    deg[i] = g.degree(i);
    max_deg = std::max(max_deg, deg[i]);
  }
  if (n == 0) return core;

  // Batagelj-Zaversnik bucket pruning: process nodes in ascending current
  // degree, decrementing unprocessed neighbors.
  std::vector<NodeId> vert(n), pos(n);
  std::vector<std::uint32_t> bin(max_deg + 2, 0);
  for (NodeId i = 0; i < n; ++i) ++bin[deg[i]];
  std::uint32_t start = 0;
  for (std::uint32_t d = 0; d <= max_deg; ++d) {
    std::uint32_t num = bin[d];
    bin[d] = start;
    start += num;
  }
  for (NodeId i = 0; i < n; ++i) {
    pos[i] = bin[deg[i]];
    vert[pos[i]] = i;
    ++bin[deg[i]];
  }
  for (std::uint32_t d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (NodeId idx = 0; idx < n; ++idx) {
    NodeId v = vert[idx];
    core[v] = deg[v];
    for (NodeId u : g.neighbors(v)) {
      if (deg[u] <= deg[v]) continue;
      // Swap u with the first vertex of its degree bucket, then shrink it.
      std::uint32_t du = deg[u];
      NodeId pu = pos[u];
      NodeId pw = bin[du];
      NodeId w = vert[pw];
      if (u != w) {
        pos[u] = pw;
        vert[pu] = w;
        pos[w] = pu;
        vert[pw] = u;
      }
      ++bin[du];
      --deg[u];
    }
  }
  return core;
}

NodeMetricVector compute_node_metrics(const Graph& g, int threads) {
  const NodeId n = g.node_count();
  NodeMetricVector m;
  m.clustering.assign(n, 0.0);
  m.knn.assign(n, 0.0);
  m.strength.assign(n, 0.0);
  m.kshell = kshell_decompose(g);
  parallel_for(n, threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t idx = lo; idx < hi; ++idx) {
      NodeId i = static_cast<NodeId>(idx);
      std::uint64_t k = g.degree(i);
      if (k == 0) continue;
      std::uint64_t deg_sum = 0;
      double w_sum = 0.0;
      std::uint64_t overlap_sum = 0;
      for (NodeId j : g.neighbors(i)) {
        deg_sum += g.degree(j);
        std::uint64_t c = g.common_neighbors(i, j);
        overlap_sum += c;
        std::uint64_t denom = k - 1 + g.degree(j) - 1 - c;
        if (denom > 0) w_sum += static_cast<double>(c) / static_cast<double>(denom);
      }
      m.knn[i] = static_cast<double>(deg_sum) / static_cast<double>(k);
      m.strength[i] = w_sum / static_cast<double>(k);
      if (k > 1)
        m.clustering[i] =
            static_cast<double>(overlap_sum) / (static_cast<double>(k) * static_cast<double>(k - 1));
    }
  });
  return m;
}

DegreeCurve degree_ccdf(const Graph& g) {
  if (g.node_count() == 0) throw std::invalid_argument("ccdf of an empty graph");
  std::map<std::uint32_t, std::uint64_t> hist;
  for (NodeId i = 0; i < g.node_count(); ++i) ++hist[g.degree(i)];
  DegreeCurve curve;
  std::uint64_t remaining = g.node_count();
  for (auto [k, cnt] : hist) {
    CurvePoint p;
    p.k_lo = static_cast<double>(k);
    p.k_hi = p.k_lo + 1;
    p.mean = static_cast<double>(remaining) / static_cast<double>(g.node_count());
    p.count = cnt;
    curve.points.push_back(p);
    remaining -= cnt;
  }
  return curve;
}

DegreeCurve per_degree_curve(const Graph& g, std::span<const double> values, const BinSpec& bins,
                             const std::vector<std::uint8_t>* defined) {
  const NodeId n = g.node_count();
  if (values.size() != n) throw std::invalid_argument("per_degree_curve: values length != |V|");
  if (defined && defined->size() != n)
    throw std::invalid_argument("per_degree_curve: mask length != |V|");

  DegreeCurve curve;
  if (bins.mode == BinSpec::Mode::Exact) {
    std::map<std::uint32_t, std::pair<double, std::uint64_t>> acc;
    for (NodeId i = 0; i < n; ++i) {
      if (defined && !(*defined)[i]) continue;
      auto& slot = acc[g.degree(i)];
      slot.first += values[i];
      ++slot.second;
    }
    for (auto& [k, slot] : acc) {
      curve.points.push_back({static_cast<double>(k), static_cast<double>(k) + 1,
                              slot.first / static_cast<double>(slot.second), slot.second});
    }
    return curve;
  }

  curve.binned = true;
  auto edges = log_bin_edges(std::max<std::uint64_t>(g.max_degree(), 1), bins.ratio);
  std::vector<double> sums(edges.size(), 0.0);  // slot 0 holds the k=0 bin
  std::vector<std::uint64_t> counts(edges.size(), 0);
  for (NodeId i = 0; i < n; ++i) {
    if (defined && !(*defined)[i]) continue;
    std::uint32_t k = g.degree(i);
    std::size_t slot = 0;
    if (k >= 1) {
      slot = static_cast<std::size_t>(
          std::upper_bound(edges.begin(), edges.end(), static_cast<std::uint64_t>(k)) -
          edges.begin());  // edges[slot-1] <= k < edges[slot]
    }
    sums[slot] += values[i];
    ++counts[slot];
  }
  if (counts[0] > 0)
    curve.points.push_back({0.0, 1.0, sums[0] / static_cast<double>(counts[0]), counts[0]});
  for (std::size_t s = 1; s < edges.size(); ++s) {
    if (counts[s] == 0) continue;
    curve.points.push_back({static_cast<double>(edges[s - 1]), static_cast<double>(edges[s]),
                            sums[s] / static_cast<double>(counts[s]), counts[s]});
  }
  return curve;
}

DegreeCurve normalize_curve(const DegreeCurve& curve, std::uint32_t k_max) {
  if (k_max == 0) throw std::invalid_argument("normalize_curve: k_max must be >= 1");
  DegreeCurve out = curve;
  for (CurvePoint& p : out.points) p.mean /= static_cast<double>(k_max);
  return out;
}

}  // namespace osn
