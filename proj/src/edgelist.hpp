#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <unordered_map>
#include <vector>

#include "graph.hpp"

namespace osn {

// Parse failure with 1-based line context.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::uint64_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::uint64_t line() const { return line_; }

 private:
  std::uint64_t line_;
};

struct LoadReport {
  std::uint64_t lines = 0;          // data lines parsed
  std::uint64_t self_loops = 0;     // dropped
  std::uint64_t duplicates = 0;     // dropped
  std::uint64_t comments = 0;       // '#'/'%' lines skipped
  bool header_skipped = false;
};

// Edge-list ingest result: the simple graph plus the external->internal id
// remap in first-appearance order.
struct LoadedGraph {
  Graph graph;
  std::vector<std::string> external_ids;                    // internal -> external
  std::unordered_map<std::string, NodeId> id_index;         // external -> internal
  LoadReport report;
};

// One edge per line, two whitespace- or comma-separated ids (arbitrary
// tokens). Lines starting with '#' or '%' are comments; a leading line with
// no digits at all is treated as a header. streaming re-reads the file
// instead of buffering the edge list (path-based overload only).
LoadedGraph load_edge_list(const std::string& path, bool streaming = false);
LoadedGraph load_edge_list(std::istream& in);

// Writers. external_ids may be empty, in which case internal indices are
// emitted; edges come out one per line as "u<TAB>v" in ascending (u,v) order,
// which load_edge_list ingests back unchanged.
void write_edge_list(const Graph& g, const std::vector<std::string>& external_ids,
                     const std::string& path);
// CSV contract: header "external_id,internal_id".
void write_remap(const std::vector<std::string>& external_ids, const std::string& path);

}  // namespace osn
