#include "attributes.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "edgelist.hpp"
#include "metrics.hpp"
#include "parallel.hpp"

namespace osn {

AttributeTable load_attributes(const std::string& path,
                               const std::unordered_map<std::string, NodeId>& id_index, NodeId n,
                               AttributeLoadReport* report) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open attribute file: " + path);
  AttributeTable table(n);
  AttributeLoadReport local;
  std::string line;
  std::uint64_t lineno = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#' || line[0] == '%') continue;
    std::vector<std::string> cells;
    {
      std::istringstream ss(line);
      std::string cell;
      while (std::getline(ss, cell, ',')) cells.push_back(cell);
      if (!line.empty() && line.back() == ',') cells.push_back("");
    }
    if (first) {
      first = false;
      if (std::none_of(line.begin(), line.end(), [](unsigned char c) { return std::isdigit(c); })) {
        local.header_skipped = true;
        continue;
      }
    }
    if (cells.size() != 1 + kAttributeCount)
      throw ParseError("expected node id plus 7 attribute codes", lineno);
    auto it = id_index.find(cells[0]);
    if (it == id_index.end()) {
      ++local.unknown_ids;
      continue;
    }
    std::array<std::uint32_t, kAttributeCount> codes{};
    for (std::size_t a = 0; a < kAttributeCount; ++a) {
      const std::string& cell = cells[a + 1];
      if (cell.empty()) continue;  // missing
      try {
        codes[a] = static_cast<std::uint32_t>(std::stoul(cell));
      } catch (const std::exception&) {
        throw ParseError("attribute code is not a nonnegative integer: '" + cell + "'", lineno);
      }
    }
    table.set_row(it->second, codes);
    ++local.rows;
  }
  if (report) *report = local;
  return table;
}

double homophily_distance(const AttributeTable& t, NodeId i, NodeId j, bool skip_missing) {
  if (i >= t.size() || j >= t.size() || !t.has_row(i) || !t.has_row(j))
    throw std::invalid_argument("homophily_distance: missing attribute row");
  const auto& a = t.row(i);
  const auto& b = t.row(j);
  std::uint32_t diff = 0, compared = 0;
  for (std::size_t l = 0; l < kAttributeCount; ++l) {
    if (skip_missing && (a[l] == 0 || b[l] == 0)) continue;
    ++compared;
    if (a[l] != b[l]) ++diff;
  }
  if (compared == 0) return 0.0;
  double sq = static_cast<double>(diff);
  if (skip_missing) sq *= static_cast<double>(kAttributeCount) / compared;
  return std::sqrt(sq);
}

std::optional<double> node_homophily(const Graph& g, const AttributeTable& t, NodeId i,
                                     bool skip_missing) {
  g.check_node(i);
  std::uint32_t k = g.degree(i);
  if (k == 0) return std::nullopt;
  double sum = 0.0;
  for (NodeId j : g.neighbors(i)) sum += homophily_distance(t, i, j, skip_missing);
  return sum / k;
}

DegreeCurve homophily_curve(const Graph& g, const AttributeTable& t, const BinSpec& bins,
                            bool skip_missing, int threads,
                            const std::vector<std::string>* external_ids) {
  const NodeId n = g.node_count();
  std::vector<NodeId> missing;
  for (NodeId i = 0; i < n; ++i)
    if (g.degree(i) > 0 && !t.has_row(i)) missing.push_back(i);
  if (!missing.empty()) {
    std::string msg = "attribute table misses " + std::to_string(missing.size()) +
                      " non-isolated node(s):";
    for (std::size_t x = 0; x < missing.size() && x < 10; ++x)
      msg += ' ' + (external_ids ? (*external_ids)[missing[x]] : std::to_string(missing[x]));
    throw std::invalid_argument(msg);
  }

  std::vector<double> values(n, 0.0);
  std::vector<std::uint8_t> defined(n, 0);
  parallel_for(n, threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      auto d = node_homophily(g, t, static_cast<NodeId>(i), skip_missing);
      if (d) {
        values[i] = *d;
        defined[i] = 1;
      }
    }
  });
  return per_degree_curve(g, values, bins, &defined);
}

}  // namespace osn
