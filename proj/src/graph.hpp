#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace osn {

using NodeId = std::uint32_t;

struct DedupStats {
  std::uint64_t self_loops = 0;
  std::uint64_t duplicates = 0;
};

// Undirected simple graph over dense ids 0..n-1. Neighbor lists are kept
// sorted ascending at all times so common-neighbor counting is a linear
// merge; the handshake identity sum(k_i) == 2|E| holds after every mutation.
class Graph {
 public:
  Graph() = default;
  explicit Graph(NodeId n) : adj_(n) {}

  // Bulk build. Pairs may arrive in any order with duplicates and self-loops;
  // those are dropped and counted.
  static Graph from_pairs(NodeId n, std::vector<std::pair<NodeId, NodeId>> pairs,
                          DedupStats* stats = nullptr);

  NodeId node_count() const { return static_cast<NodeId>(adj_.size()); }
  std::uint64_t edge_count() const { return edges_; }
  std::uint32_t degree(NodeId i) const { return static_cast<std::uint32_t>(adj_[i].size()); }
  std::span<const NodeId> neighbors(NodeId i) const { return adj_[i]; }

  bool has_edge(NodeId i, NodeId j) const;
  bool add_edge(NodeId i, NodeId j);     // false if already present
  bool remove_edge(NodeId i, NodeId j);  // false if absent
  std::uint64_t common_neighbors(NodeId i, NodeId j) const;

  double average_degree() const;  // 2|E|/|V|, throws on an empty graph
  std::uint32_t max_degree() const;
  std::uint32_t min_degree() const;

  // Consistency check used by tests and the simulator's fuzz assertions.
  bool validate() const;

  void check_node(NodeId i) const;

  // Reserve per-node capacity before a streaming fill.
  void reserve_neighbors(NodeId i, std::size_t cap) { adj_[i].reserve(cap); }
  void shrink() {
    for (auto& a : adj_) a.shrink_to_fit();
  }

 private:
  std::vector<std::vector<NodeId>> adj_;
  std::uint64_t edges_ = 0;
};

}  // namespace osn
