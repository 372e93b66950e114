#include <catch2/catch_amalgamated.hpp>

#include "maw/graph.hpp"

using namespace maw;

TEST_CASE("edges are stored canonically") {
  PortLabeledGraph g;
  g.node_count = 2;
  g.add_edge(1, 1, 0, 1);
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].u == 0);
  CHECK(g.edges[0].pu == 1);
  CHECK(g.edges[0].v == 1);
  CHECK(g.edges[0].pv == 1);

  SECTION("normalize sorts the edge list") {
    PortLabeledGraph h;
    h.node_count = 3;
    h.add_edge(1, 1, 2, 2);
    h.add_edge(0, 1, 1, 2);
    h.normalize();
    CHECK(h.edges[0].u == 0);
    CHECK(h.edges[1].u == 1);
  }
}

TEST_CASE("validation enforces the port-labeling invariants") {
  PortLabeledGraph g;
  g.node_count = 3;
  g.add_edge(0, 1, 1, 2);
  g.add_edge(1, 1, 2, 1);
  CHECK(validate(g).ok);

  SECTION("ports must be exactly 1..deg") {
    PortLabeledGraph bad = g;
    bad.edges[0].pu = 2;  // node 0 has degree 1 but port 2
    CHECK_FALSE(validate(bad).ok);
  }
  SECTION("duplicate node pairs are rejected") {
    PortLabeledGraph bad = g;
    bad.add_edge(0, 2, 1, 3);
    CHECK_FALSE(validate(bad).ok);
  }
  SECTION("loops are rejected") {
    PortLabeledGraph bad;
    bad.node_count = 1;
    bad.add_edge(0, 1, 0, 2);
    CHECK_FALSE(validate(bad).ok);
  }
  SECTION("disconnected graphs are rejected") {
    PortLabeledGraph bad;
    bad.node_count = 4;
    bad.add_edge(0, 1, 1, 1);
    bad.add_edge(2, 1, 3, 1);
    CHECK_FALSE(validate(bad).ok);
  }
}

TEST_CASE("quotient graphs admit loops and parallel edges") {
  QuotientGraph q;
  q.node_count = 1;
  q.add_edge(0, 1, 0, 2);
  CHECK(validate(q).ok);

  QuotientGraph p;
  p.node_count = 2;
  p.add_edge(0, 1, 0, 2);
  p.add_edge(0, 3, 1, 1);
  CHECK(validate(p).ok);

  SECTION("a port may not lead to two different nodes") {
    QuotientGraph bad;
    bad.node_count = 3;
    bad.add_edge(0, 1, 1, 1);
    bad.add_edge(0, 1, 2, 1);
    CHECK_FALSE(validate(bad).ok);
  }
  SECTION("distinct ports must still be contiguous") {
    QuotientGraph bad;
    bad.node_count = 2;
    bad.add_edge(0, 1, 1, 1);
    bad.add_edge(0, 3, 1, 2);
    CHECK_FALSE(validate(bad).ok);
  }
}

TEST_CASE("serialize and parse are inverse") {
  PortLabeledGraph g;
  g.node_count = 3;
  g.add_edge(0, 1, 1, 2);
  g.add_edge(1, 1, 2, 1);
  g.normalize();

  std::string text = serialize_graph(g);
  auto parsed = parse_graph(text);
  REQUIRE(parsed.ok());
  CHECK(*parsed.value == g);

  SECTION("comments and blank lines are skipped") {
    auto r = parse_graph("# a triangle of sorts\n\ngraph 2\nedge 0 1 1 1\n");
    REQUIRE(r.ok());
    CHECK(r.value->node_count == 2);
  }
  SECTION("parse failures carry the line number") {
    auto r = parse_graph("graph 2\nedge 0 1 7 1\n");
    REQUIRE_FALSE(r.ok());
    CHECK(r.error.line == 2);
  }
  SECTION("the header is mandatory") {
    CHECK_FALSE(parse_graph("edge 0 1 1 1\n").ok());
    CHECK_FALSE(parse_graph("quotient 1\n").ok());
  }
  SECTION("a quotient round-trips through its own parser") {
    QuotientGraph q;
    q.node_count = 2;
    q.add_edge(0, 1, 0, 2);
    q.add_edge(0, 3, 1, 1);
    q.normalize();
    auto r = parse_quotient(serialize_graph(q));
    REQUIRE(r.ok());
    CHECK(*r.value == q);
  }
}

TEST_CASE("adjacency answers degree and neighbor queries") {
  PortLabeledGraph g;
  g.node_count = 3;
  g.add_edge(0, 1, 1, 2);
  g.add_edge(1, 1, 2, 1);
  Adjacency a(g);
  CHECK(a.node_count() == 3);
  CHECK(a.degree(0) == 1);
  CHECK(a.degree(1) == 2);
  CHECK(a.neighbor(1, 2).node == 0);
  CHECK(a.neighbor(1, 2).port == 1);
  CHECK(a.neighbor(1, 1).node == 2);
  CHECK(a.neighbor(2, 1).node == 1);
}
