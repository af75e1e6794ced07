#include "graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace osn {

void Graph::check_node(NodeId i) const {
  if (i >= adj_.size())
    throw std::invalid_argument("node id " + std::to_string(i) + " out of range (|V|=" +
                                std::to_string(adj_.size()) + ")");
}

Graph Graph::from_pairs(NodeId n, std::vector<std::pair<NodeId, NodeId>> pairs,
                        DedupStats* stats) {
  Graph g(n);
  DedupStats local;
  auto keep = std::remove_if(pairs.begin(), pairs.end(), [&](std::pair<NodeId, NodeId>& e) {
    if (e.first >= n || e.second >= n) throw std::invalid_argument("edge endpoint out of range");
    if (e.first == e.second) {
      ++local.self_loops;
      return true;
    }
    if (e.first > e.second) std::swap(e.first, e.second);
    return false;
  });
  pairs.erase(keep, pairs.end());
  std::sort(pairs.begin(), pairs.end());
  auto last = std::unique(pairs.begin(), pairs.end());
  local.duplicates = static_cast<std::uint64_t>(pairs.end() - last);
  pairs.erase(last, pairs.end());

  std::vector<std::uint32_t> deg(n, 0);
  for (auto& [u, v] : pairs) {
    ++deg[u];
    ++deg[v];
  }
  for (NodeId i = 0; i < n; ++i) g.adj_[i].reserve(deg[i]);
  // Pairs are sorted by (u,v) with u < v, so both push orders stay ascending.
  for (auto& [u, v] : pairs) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  g.edges_ = pairs.size();
  if (stats) *stats = local;
  return g;
}

bool Graph::has_edge(NodeId i, NodeId j) const {
  check_node(i);
  check_node(j);
  const auto& a = adj_[i].size() <= adj_[j].size() ? adj_[i] : adj_[j];
  NodeId target = adj_[i].size() <= adj_[j].size() ? j : i;
  return std::binary_search(a.begin(), a.end(), target);
}

bool Graph::add_edge(NodeId i, NodeId j) {
  check_node(i);
  check_node(j);
  if (i == j) throw std::invalid_argument("self-loops are not allowed");
  auto pos = std::lower_bound(adj_[i].begin(), adj_[i].end(), j);
  if (pos != adj_[i].end() && *pos == j) return false;
  adj_[i].insert(pos, j);
  auto pos2 = std::lower_bound(adj_[j].begin(), adj_[j].end(), i);
  adj_[j].insert(pos2, i);
  ++edges_;
  return true;
}

bool Graph::remove_edge(NodeId i, NodeId j) {
  check_node(i);
  check_node(j);
  if (i == j) return false;
  auto pos = std::lower_bound(adj_[i].begin(), adj_[i].end(), j);
  if (pos == adj_[i].end() || *pos != j) return false;
  adj_[i].erase(pos);
  auto pos2 = std::lower_bound(adj_[j].begin(), adj_[j].end(), i);
  adj_[j].erase(pos2);
  --edges_;
  return true;
}

std::uint64_t Graph::common_neighbors(NodeId i, NodeId j) const {
  check_node(i);
  check_node(j);
  const auto& a = adj_[i];
  const auto& b = adj_[j];
  std::uint64_t count = 0;
  std::size_t x = 0, y = 0;
  while (x < a.size() && y < b.size()) {
    if (a[x] < b[y])
      ++x;
    else if (a[x] > b[y])
      ++y;
    else {
      ++count;
      ++x;
      ++y;
    }
  }
  return count;
}

double Graph::average_degree() const {
  if (adj_.empty()) throw std::invalid_argument("average degree of an empty graph");
  return 2.0 * static_cast<double>(edges_) / static_cast<double>(adj_.size());
}

std::uint32_t Graph::max_degree() const {
  std::uint32_t m = 0;
  for (const auto& a : adj_) m = std::max(m, static_cast<std::uint32_t>(a.size()));
  return m;
}

std::uint32_t Graph::min_degree() const {
  if (adj_.empty()) return 0;
  std::uint32_t m = ~0u;
  for (const auto& a : adj_) m = std::min(m, static_cast<std::uint32_t>(a.size()));
  return m;
}

bool Graph::validate() const {
  std::uint64_t half_edges = 0;
  for (NodeId i = 0; i < adj_.size(); ++i) {
    const auto& a = adj_[i];
    half_edges += a.size();
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (a[x] >= adj_.size()) return false;
      if (a[x] == i) return false;                 // self-loop
      if (x > 0 && a[x - 1] >= a[x]) return false;  // unsorted or duplicate
      const auto& back = adj_[a[x]];
      if (!std::binary_search(back.begin(), back.end(), i)) return false;  // asymmetric
    }
  }
  return half_edges == 2 * edges_;
}

}  // namespace osn
