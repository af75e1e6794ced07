#include <doctest.h>

#include <sstream>

#include "edgelist.hpp"
#include "oracles.hpp"

using osn::load_edge_list;
using osn::ParseError;

TEST_CASE("basic ingest: comments, header, mixed separators, remap order") {
  std::istringstream in(
      "# social graph dump\n"
      "source,target\n"
      "alice bob\n"
      "bob,carol\n"
      "carol\talice\n"
      "% trailing comment\n"
      "dave alice\n");
  auto lg = load_edge_list(in);
  CHECK(lg.report.comments == 2);
  CHECK(lg.report.header_skipped);
  CHECK(lg.report.lines == 4);
  CHECK(lg.graph.node_count() == 4);
  CHECK(lg.graph.edge_count() == 4);
  // first-appearance interning
  REQUIRE(lg.external_ids.size() == 4);
  CHECK(lg.external_ids[0] == "alice");
  CHECK(lg.external_ids[1] == "bob");
  CHECK(lg.external_ids[2] == "carol");
  CHECK(lg.external_ids[3] == "dave");
  CHECK(lg.graph.has_edge(lg.id_index.at("dave"), lg.id_index.at("alice")));
}

TEST_CASE("numeric first line is data, not header") {
  std::istringstream in("1 2\n2 3\n");
  auto lg = load_edge_list(in);
  CHECK_FALSE(lg.report.header_skipped);
  CHECK(lg.graph.edge_count() == 2);
}

TEST_CASE("self loops and duplicates are dropped and counted") {
  std::istringstream in("1 1\n1 2\n2 1\n1 2\n");
  auto lg = load_edge_list(in);
  CHECK(lg.report.self_loops == 1);
  CHECK(lg.report.duplicates == 2);
  CHECK(lg.graph.edge_count() == 1);
}

TEST_CASE("wrong token count raises ParseError with the line number") {
  std::istringstream in("1 2\n3 4 5\n");
  try {
    load_edge_list(in);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream one("7\n");
  CHECK_THROWS_AS(load_edge_list(one), ParseError);
}

TEST_CASE("empty input is rejected") {
  std::istringstream in("# nothing here\n");
  CHECK_THROWS_AS(load_edge_list(in), std::invalid_argument);
}

TEST_CASE("streaming and buffered loads agree") {
  std::string body;
  auto edges = oracle::gnp_edges(25, 0.2, 3);
  for (auto [a, b] : edges)
    body += "n" + std::to_string(a) + "\tn" + std::to_string(b) + "\n";
  body += "n3\tn3\n";  // self loop
  body += "n" + std::to_string(edges[0].first) + " n" + std::to_string(edges[0].second) + "\n";
  std::string path = oracle::write_text("stream_vs_buffered.tsv", body);

  auto buffered = load_edge_list(path, false);
  auto streamed = load_edge_list(path, true);
  CHECK(buffered.graph.node_count() == streamed.graph.node_count());
  CHECK(buffered.graph.edge_count() == streamed.graph.edge_count());
  CHECK(buffered.report.self_loops == streamed.report.self_loops);
  CHECK(buffered.report.duplicates == streamed.report.duplicates);
  CHECK(buffered.external_ids == streamed.external_ids);
  for (osn::NodeId i = 0; i < buffered.graph.node_count(); ++i) {
    auto a = buffered.graph.neighbors(i);
    auto b = streamed.graph.neighbors(i);
    REQUIRE(a.size() == b.size());
    CHECK(std::equal(a.begin(), a.end(), b.begin()));
  }
}

TEST_CASE("write -> load round trip preserves the graph") {
  auto edges = oracle::gnp_edges(20, 0.25, 9);
  osn::Graph g = oracle::to_graph(20, edges);
  std::string path = oracle::scratch_file("roundtrip.tsv");
  osn::write_edge_list(g, {}, path);
  auto lg = load_edge_list(path);
  CHECK(lg.graph.edge_count() == g.edge_count());
  // node count can differ if isolates exist; every written edge must survive
  for (auto [a, b] : edges) {
    auto u = lg.id_index.at(std::to_string(a));
    auto v = lg.id_index.at(std::to_string(b));
    CHECK(lg.graph.has_edge(u, v));
  }
}

TEST_CASE("remap file format") {
  osn::write_remap({"x", "y"}, oracle::scratch_file("remap.csv"));
  CHECK(oracle::slurp(oracle::scratch_file("remap.csv")) ==
        "external_id,internal_id\nx,0\ny,1\n");
}

TEST_CASE("CRLF input parses cleanly") {
  std::istringstream in("1 2\r\n2 3\r\n");
  auto lg = load_edge_list(in);
  CHECK(lg.graph.edge_count() == 2);
  CHECK(lg.external_ids[2] == "3");
}
