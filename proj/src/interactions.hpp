#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "curve.hpp"
#include "graph.hpp"

namespace osn {

// Wall-post trace: one record per post left on a profile page.
struct WallLedger {
  struct Record {
    NodeId poster;
    NodeId owner;
    std::int64_t timestamp;
  };
  std::vector<Record> records;
  std::uint64_t unresolved = 0;  // lines whose ids are not in the graph (skipped)
};

// Per-node sent/received event counts; nodes absent from the input are
// treated as inactive (both zero).
struct ExchangeLedger {
  std::vector<std::uint64_t> sent;
  std::vector<std::uint64_t> received;
  std::uint64_t unresolved = 0;
};

struct ActivityOptions {
  bool poster_side = false;   // count posts written instead of posts received
  bool include_self = true;   // count poster == owner records
};

// "poster owner timestamp" per line, whitespace or comma separated.
WallLedger load_wall(const std::string& path,
                     const std::unordered_map<std::string, NodeId>& id_index);

// Either "node_id,sent,received" rows, or a two-column "sender,receiver"
// event list that is reduced by counting. Detected from the column count.
ExchangeLedger load_exchange(const std::string& path,
                             const std::unordered_map<std::string, NodeId>& id_index, NodeId n);

// L_i: wall-list length of node i (owner side by default).
std::vector<std::uint64_t> activity_counts(const WallLedger& w, NodeId n,
                                           const ActivityOptions& opt = {});

// L(k): per-degree mean of L_i over all nodes, zero-activity nodes included.
DegreeCurve activity_curve(const Graph& g, const WallLedger& w, const BinSpec& bins,
                           const ActivityOptions& opt = {});

// r_i = received/sent; undefined (not an error) when sent == 0.
std::optional<double> reciprocation(const ExchangeLedger& e, NodeId i);

// r(k): per-degree mean over nodes with defined r_i only; bin counts reflect
// just those nodes.
DegreeCurve reciprocation_curve(const Graph& g, const ExchangeLedger& e, const BinSpec& bins);

}  // namespace osn
