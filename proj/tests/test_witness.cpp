#include <catch2/catch_amalgamated.hpp>

#include "maw/generate.hpp"
#include "maw/graph.hpp"
#include "maw/iso.hpp"
#include "maw/view.hpp"
#include "maw/witness.hpp"

using namespace maw;

TEST_CASE("double cycle covers are simple, regular, and collapse to one class") {
  auto g2 = double_cycle_cover(8, 2);
  auto g3 = double_cycle_cover(8, 3);
  for (const auto& g : {g2, g3}) {
    REQUIRE(validate(g).ok);
    Adjacency adj(g);
    for (int v = 0; v < g.node_count; ++v) CHECK(adj.degree(v) == 4);
    CHECK(quotient(g).node_count == 1);
  }
  CHECK(quotient_isomorphic(quotient(g2), quotient(g3)));
  // shift 2 splits the second layer into two short cycles, shift 3 keeps one
  CHECK_FALSE(isomorphic(g2, g3));
}

TEST_CASE("degenerate shifts collide with the base cycle or themselves") {
  CHECK_FALSE(validate(double_cycle_cover(8, 1)).ok);
  CHECK_FALSE(validate(double_cycle_cover(8, 4)).ok);
}

TEST_CASE("the search yields an equal-order non-isomorphic pair") {
  auto w = witness_same_quotient_nonisomorphic(8);
  REQUIRE(w.has_value());
  CHECK(validate(w->a).ok);
  CHECK(validate(w->b).ok);
  CHECK(w->a.node_count == w->b.node_count);
  QuotientGraph qa = quotient(w->a);
  QuotientGraph qb = quotient(w->b);
  CHECK(quotient_isomorphic(qa, qb));
  CHECK(qa.node_count < w->a.node_count);
  CHECK_FALSE(isomorphic(w->a, w->b));
}

TEST_CASE("the search is deterministic") {
  auto w1 = witness_same_quotient_nonisomorphic(8);
  auto w2 = witness_same_quotient_nonisomorphic(8);
  REQUIRE(w1.has_value());
  REQUIRE(w2.has_value());
  CHECK(w1->a == w2->a);
  CHECK(w1->b == w2->b);
}

TEST_CASE("no pair exists among at most two nodes") {
  CHECK_FALSE(witness_same_quotient_nonisomorphic(2).has_value());
}
