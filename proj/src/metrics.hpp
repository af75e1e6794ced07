#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "curve.hpp"
#include "graph.hpp"

namespace osn {

// Per-node structural measures. Lengths all equal |V|; clustering and
// strength live in [0,1], kshell[i] <= degree(i).
struct NodeMetricVector {
  std::vector<double> clustering;
  std::vector<double> knn;
  std::vector<std::uint32_t> kshell;
  std::vector<double> strength;
};

// Single-node measures. Degenerate rules: clustering is 0 for degree <= 1,
// knn and strength are 0 for isolated nodes, tie strength is 0 when both
// endpoints have degree 1.
double clustering(const Graph& g, NodeId i);
double knn(const Graph& g, NodeId i);
double tie_strength(const Graph& g, NodeId i, NodeId j);  // (i,j) must be an edge
double node_strength(const Graph& g, NodeId i);

double average_clustering(const Graph& g, int threads = 1);  // throws on empty graph

// Iterative minimum-degree pruning; isolated nodes get shell 0.
std::vector<std::uint32_t> kshell_decompose(const Graph& g);

// One pass computing all four per-node arrays. The tie-strength/clustering
// leg intersects sorted adjacency lists for every incident edge of every
// node, O(sum over edges of (k_i + k_j)); this is the hot path at full scale
// and is partitioned by node so results are independent of the thread count.
NodeMetricVector compute_node_metrics(const Graph& g, int threads = 1);

// P(K >= k) at every observed degree; nonincreasing, 1.0 at k_min. Point
// counts hold the number of nodes with that exact degree.
DegreeCurve degree_ccdf(const Graph& g);

// Group per-node values by exact degree or by log bins; mean per group,
// empty groups omitted. `defined` (when given) masks nodes out of both the
// mean and the count. values.size() must equal |V|.
DegreeCurve per_degree_curve(const Graph& g, std::span<const double> values, const BinSpec& bins,
                             const std::vector<std::uint8_t>* defined = nullptr);

// Divide every bin mean by k_max (throws if k_max == 0); counts preserved.
DegreeCurve normalize_curve(const DegreeCurve& curve, std::uint32_t k_max);

}  // namespace osn
