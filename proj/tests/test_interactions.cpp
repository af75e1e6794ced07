#include <doctest.h>

#include <sstream>

#include "edgelist.hpp"
#include "interactions.hpp"
#include "oracles.hpp"

using osn::ActivityOptions;
using osn::Graph;

namespace {

osn::LoadedGraph small_graph() {
  std::istringstream in("src dst\na b\nb c\nc d\na c\n");
  return osn::load_edge_list(in);
}

}  // namespace

TEST_CASE("wall ledger parsing and unresolved counting") {
  auto lg = small_graph();
  std::string path = oracle::write_text(
      "wall.txt",
      "# poster owner ts\n"
      "poster owner timestamp\n"
      "a b 100\n"
      "b,a,101\n"
      "a a 102\n"
      "zz b 103\n"
      "a zz 104\n");
  auto w = osn::load_wall(path, lg.id_index);
  CHECK(w.records.size() == 3);
  CHECK(w.unresolved == 2);
  CHECK(w.records[0].poster == lg.id_index.at("a"));
  CHECK(w.records[0].owner == lg.id_index.at("b"));
  CHECK(w.records[0].timestamp == 100);

  std::string bad_ts = oracle::write_text("wall_badts.txt", "a b -5\n");
  CHECK_THROWS_AS(osn::load_wall(bad_ts, lg.id_index), osn::ParseError);
  std::string bad_cols = oracle::write_text("wall_badcols.txt", "a b 100\na b\n");
  CHECK_THROWS_AS(osn::load_wall(bad_cols, lg.id_index), osn::ParseError);
}

TEST_CASE("activity counts: owner side, poster side, self posts") {
  auto lg = small_graph();
  osn::WallLedger w;
  auto id = [&](const char* s) { return lg.id_index.at(s); };
  w.records = {
      {id("a"), id("b"), 1},
      {id("a"), id("b"), 2},
      {id("b"), id("a"), 3},
      {id("c"), id("c"), 4},
  };
  auto n = lg.graph.node_count();

  auto owner = osn::activity_counts(w, n, {});
  CHECK(owner[id("b")] == 2);
  CHECK(owner[id("a")] == 1);
  CHECK(owner[id("c")] == 1);  // self post counts by default
  CHECK(owner[id("d")] == 0);

  ActivityOptions poster;
  poster.poster_side = true;
  auto posted = osn::activity_counts(w, n, poster);
  CHECK(posted[id("a")] == 2);
  CHECK(posted[id("b")] == 1);
  CHECK(posted[id("c")] == 1);

  ActivityOptions noself;
  noself.include_self = false;
  auto trimmed = osn::activity_counts(w, n, noself);
  CHECK(trimmed[id("c")] == 0);
  CHECK(trimmed[id("b")] == 2);

  // curve means: degrees are a=2 b=2 c=3 d=1
  auto curve = osn::activity_curve(lg.graph, w, {});
  REQUIRE(curve.size() == 3);
  CHECK(curve.points[0].k_lo == 1.0);  // d
  CHECK(curve.points[0].mean == 0.0);
  CHECK(curve.points[1].k_lo == 2.0);  // a,b -> (1+2)/2
  CHECK(curve.points[1].mean == doctest::Approx(1.5));
  CHECK(curve.points[2].k_lo == 3.0);  // c
  CHECK(curve.points[2].mean == 1.0);
}

TEST_CASE("exchange ledger: per-node totals accumulate") {
  auto lg = small_graph();
  std::string path = oracle::write_text(
      "exch3.csv",
      "node,sent,received\n"
      "a,5,2\n"
      "b,0,7\n"
      "a,1,1\n"   // repeated rows add up
      "zz,9,9\n");
  auto e = osn::load_exchange(path, lg.id_index, lg.graph.node_count());
  CHECK(e.unresolved == 1);
  CHECK(e.sent[lg.id_index.at("a")] == 6);
  CHECK(e.received[lg.id_index.at("a")] == 3);
  CHECK(e.sent[lg.id_index.at("b")] == 0);
  CHECK(e.received[lg.id_index.at("b")] == 7);

  auto ra = osn::reciprocation(e, lg.id_index.at("a"));
  REQUIRE(ra.has_value());
  CHECK(*ra == doctest::Approx(0.5));
  CHECK_FALSE(osn::reciprocation(e, lg.id_index.at("b")).has_value());  // sent 0
  CHECK_THROWS_AS(osn::reciprocation(e, 100), std::invalid_argument);
}

TEST_CASE("exchange ledger: two-column event list is counted") {
  auto lg = small_graph();
  std::string path = oracle::write_text(
      "exch2.txt",
      "sender receiver\n"
      "a b\n"
      "a c\n"
      "b a\n"
      "a b\n");
  auto e = osn::load_exchange(path, lg.id_index, lg.graph.node_count());
  CHECK(e.sent[lg.id_index.at("a")] == 3);
  CHECK(e.received[lg.id_index.at("b")] == 2);
  CHECK(e.received[lg.id_index.at("a")] == 1);
  CHECK(e.sent[lg.id_index.at("c")] == 0);

  std::string mixed = oracle::write_text("exch_mixed.txt", "sender receiver\na b\na,b,c\n");
  CHECK_THROWS_AS(osn::load_exchange(mixed, lg.id_index, lg.graph.node_count()),
                  osn::ParseError);
  std::string wide = oracle::write_text("exch_wide.txt", "sender receiver\na b c d\n");
  CHECK_THROWS_AS(osn::load_exchange(wide, lg.id_index, lg.graph.node_count()),
                  osn::ParseError);
}

TEST_CASE("reciprocation curve only aggregates nodes that sent something") {
  auto lg = small_graph();
  osn::ExchangeLedger e;
  auto n = lg.graph.node_count();
  e.sent.assign(n, 0);
  e.received.assign(n, 0);
  auto id = [&](const char* s) { return lg.id_index.at(s); };
  // degrees: a=2 b=2 c=3 d=1
  e.sent[id("a")] = 4;
  e.received[id("a")] = 2;   // r=0.5, k=2
  e.sent[id("b")] = 0;
  e.received[id("b")] = 9;   // undefined, k=2
  e.sent[id("c")] = 2;
  e.received[id("c")] = 3;   // r=1.5, k=3
  auto curve = osn::reciprocation_curve(lg.graph, e, {});
  REQUIRE(curve.size() == 2);  // k=1 bin has no defined node, so it is absent
  CHECK(curve.points[0].k_lo == 2.0);
  CHECK(curve.points[0].count == 1);  // only a; b is excluded, not zero-filled
  CHECK(curve.points[0].mean == doctest::Approx(0.5));
  CHECK(curve.points[1].k_lo == 3.0);
  CHECK(curve.points[1].mean == doctest::Approx(1.5));
}
