#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "curve.hpp"
#include "graph.hpp"

namespace osn {

inline constexpr std::size_t kAttributeCount = 7;

// Per-node categorical profile: student/faculty flag, gender, major, second
// major, dorm, enrollment year, high school. Code 0 means missing.
class AttributeTable {
 public:
  explicit AttributeTable(NodeId n) : rows_(n), present_(n, 0) {}

  void set_row(NodeId i, const std::array<std::uint32_t, kAttributeCount>& codes) {
    rows_[i] = codes;
    present_[i] = 1;
  }
  bool has_row(NodeId i) const { return present_[i] != 0; }
  const std::array<std::uint32_t, kAttributeCount>& row(NodeId i) const { return rows_[i]; }
  NodeId size() const { return static_cast<NodeId>(rows_.size()); }

 private:
  std::vector<std::array<std::uint32_t, kAttributeCount>> rows_;
  std::vector<std::uint8_t> present_;
};

struct AttributeLoadReport {
  std::uint64_t rows = 0;
  std::uint64_t unknown_ids = 0;  // rows whose node is not in the graph
  bool header_skipped = false;
};

// CSV "node_id,flag,gender,major,major2,dorm,year,highschool". Rows for ids
// absent from the graph are counted and ignored; empty cells read as 0.
AttributeTable load_attributes(const std::string& path,
                               const std::unordered_map<std::string, NodeId>& id_index, NodeId n,
                               AttributeLoadReport* report = nullptr);

// sqrt(number of disagreeing attributes), range [0, sqrt(7)]. Two missing
// codes compare equal. With skip_missing, slots where either side is 0 are
// excluded and the disagreement count is rescaled back to 7 slots.
double homophily_distance(const AttributeTable& t, NodeId i, NodeId j, bool skip_missing = false);

// Mean distance to neighbors; nullopt for isolated nodes (they are absent
// from the curve, not zero).
std::optional<double> node_homophily(const Graph& g, const AttributeTable& t, NodeId i,
                                     bool skip_missing = false);

// Throws if any non-isolated node lacks an attribute row; the message lists
// the first 10 missing ids.
DegreeCurve homophily_curve(const Graph& g, const AttributeTable& t, const BinSpec& bins,
                            bool skip_missing = false, int threads = 1,
                            const std::vector<std::string>* external_ids = nullptr);

}  // namespace osn
