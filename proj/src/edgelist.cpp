#include "edgelist.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace osn {

namespace {

bool is_sep(char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; }

// Split a line into at most 3 tokens; returns token count (3 means "2+").
int split2(const std::string& line, std::string& a, std::string& b) {
  std::size_t i = 0, n = line.size();
  auto skip = [&] {
    while (i < n && is_sep(line[i])) ++i;
  };
  auto take = [&](std::string& out) {
    std::size_t start = i;
    while (i < n && !is_sep(line[i])) ++i;
    out.assign(line, start, i - start);
  };
  skip();
  if (i >= n) return 0;
  take(a);
  skip();
  if (i >= n) return 1;
  take(b);
  skip();
  return i >= n ? 2 : 3;
}

bool has_digit(const std::string& s) {
  return std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

bool is_comment(const std::string& line) {
  for (char c : line) {
    if (is_sep(c)) continue;
    return c == '#' || c == '%';
  }
  return true;  // blank
}

// Walk all data lines of an edge-list stream, invoking fn(a, b, lineno).
template <typename Fn>
void scan_edges(std::istream& in, LoadReport& report, bool count_lines, Fn&& fn) {
  std::string line, a, b;
  std::uint64_t lineno = 0;
  bool first_data = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_comment(line)) {
      if (count_lines) ++report.comments;
      continue;
    }
    int k = split2(line, a, b);
    if (first_data) {
      first_data = false;
      // "source,target"-style headers carry no digits; real ids do.
      if (!has_digit(a) && !has_digit(b)) {
        if (count_lines) report.header_skipped = true;
        continue;
      }
    }
    if (k != 2) throw ParseError("expected exactly two node ids per line", lineno);
    if (count_lines) ++report.lines;
    fn(a, b, lineno);
  }
}

NodeId intern(LoadedGraph& lg, const std::string& token) {
  auto [it, inserted] = lg.id_index.try_emplace(token, static_cast<NodeId>(lg.external_ids.size()));
  if (inserted) lg.external_ids.push_back(token);
  return it->second;
}

LoadedGraph load_buffered(std::istream& in) {
  LoadedGraph lg;
  std::vector<std::pair<NodeId, NodeId>> pairs;
  scan_edges(in, lg.report, true, [&](const std::string& a, const std::string& b, std::uint64_t) {
    NodeId u = intern(lg, a);  // sequence the interns: ids follow first appearance
    NodeId v = intern(lg, b);
    pairs.emplace_back(u, v);
  });
  if (lg.report.lines == 0) throw std::invalid_argument("edge list contains no edges");
  DedupStats stats;
  lg.graph = Graph::from_pairs(static_cast<NodeId>(lg.external_ids.size()), std::move(pairs), &stats);
  lg.report.self_loops = stats.self_loops;
  lg.report.duplicates = stats.duplicates;
  return lg;
}

// Two passes over the file: the first builds the remap and raw degree counts,
// the second inserts edges with sorted-position dedup. Nothing but the graph
// and per-node counters is ever held in memory.
LoadedGraph load_streaming(const std::string& path) {
  LoadedGraph lg;
  {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);
    std::vector<std::uint32_t> raw_degree;
    scan_edges(in, lg.report, true, [&](const std::string& a, const std::string& b, std::uint64_t) {
      NodeId u = intern(lg, a);
      NodeId v = intern(lg, b);
      raw_degree.resize(lg.external_ids.size(), 0);
      if (u == v) {
        ++lg.report.self_loops;
        return;
      }
      ++raw_degree[u];
      ++raw_degree[v];
    });
    if (lg.report.lines == 0) throw std::invalid_argument("edge list contains no edges");
    lg.graph = Graph(static_cast<NodeId>(lg.external_ids.size()));
    for (NodeId i = 0; i < raw_degree.size(); ++i) lg.graph.reserve_neighbors(i, raw_degree[i]);
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path);
  LoadReport ignore;
  scan_edges(in, ignore, false, [&](const std::string& a, const std::string& b, std::uint64_t) {
    NodeId u = lg.id_index.at(a);
    NodeId v = lg.id_index.at(b);
    if (u == v) return;
    if (!lg.graph.add_edge(u, v)) ++lg.report.duplicates;
  });
  lg.graph.shrink();
  return lg;
}

}  // namespace

LoadedGraph load_edge_list(const std::string& path, bool streaming) {
  if (streaming) return load_streaming(path);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path);
  return load_buffered(in);
}

LoadedGraph load_edge_list(std::istream& in) { return load_buffered(in); }

void write_edge_list(const Graph& g, const std::vector<std::string>& external_ids,
                     const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write edge list: " + path);
  auto name = [&](NodeId i) {
    return external_ids.empty() ? std::to_string(i) : external_ids[i];
  };
  for (NodeId u = 0; u < g.node_count(); ++u)
    for (NodeId v : g.neighbors(u))
      if (u < v) out << name(u) << '\t' << name(v) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_remap(const std::vector<std::string>& external_ids, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write remap: " + path);
  out << "external_id,internal_id\n";
  for (std::size_t i = 0; i < external_ids.size(); ++i) out << external_ids[i] << ',' << i << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace osn
