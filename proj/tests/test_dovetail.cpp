#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "maw/generate.hpp"
#include "maw/graph.hpp"
#include "maw/protocols/dovetail.hpp"
#include "maw/sim.hpp"

namespace {

using namespace maw;

int max_degree_of(const PortLabeledGraph& g) {
  Adjacency adj(g);
  int d = 0;
  for (int v = 0; v < g.node_count; ++v) d = std::max(d, adj.degree(v));
  return d;
}

bool is_tree(const PortLabeledGraph& g) {
  return static_cast<int>(g.edges.size()) == g.node_count - 1;
}

RunOutcome dove_run(const PortLabeledGraph& g, int start, const std::string& input,
                    std::int64_t budget) {
  auto cfg = make_config(g, {start}, {}, {input});
  RunOptions opts;
  opts.max_rounds = budget;
  opts.token_start = start;
  return run(cfg, DovetailProtocol{}, opts);
}

}  // namespace

TEST_CASE("dovetailing decides tree-on-x-nodes on every small instance") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& g : enumerate_connected(n)) {
      int md = max_degree_of(g);
      for (int v = 0; v < g.node_count; ++v) {
        for (int x = 1; x <= 2 * n; ++x) {
          bool want = is_tree(g) && x == n;
          std::int64_t budget = dovetail_budget(n, md, x);
          RunOutcome out = dove_run(g, v, std::to_string(x), budget);
          CAPTURE(n, v, x, serialize_graph(g));
          REQUIRE_FALSE(out.fault.has_value());
          REQUIRE(out.all_decided());
          CHECK(out.unanimous(want));
          // every attempt walks home before the next one, and the accepting
          // moves all end where they began
          CHECK(out.final_nodes[0] == v);
          CHECK(out.token_node == v);
        }
      }
    }
  }
}

TEST_CASE("the first attempt settles a correct size claim without certificates") {
  // the accepting walk closes after 2(n-1) moves and the decision lands on
  // the round right after the last move, from any start
  for (const auto& g : {path(2), path(3), path(4), star(4), star(5)}) {
    int n = g.node_count;
    for (int v = 0; v < n; ++v) {
      RunOutcome out =
          dove_run(g, v, std::to_string(n), dovetail_budget(n, max_degree_of(g), n));
      CAPTURE(n, v);
      REQUIRE(out.unanimous(true));
      CHECK(out.decision_round[0] == 2 * (n - 1));
    }
  }
}

TEST_CASE("a lone node accepts exactly the size-one claim") {
  RunOutcome yes = dove_run(path(1), 0, "1", dovetail_budget(1, 0, 1));
  CHECK(yes.unanimous(true));
  CHECK(yes.decision_round[0] == 0);
  RunOutcome no = dove_run(path(1), 0, "2", dovetail_budget(1, 0, 2));
  CHECK(no.unanimous(false));
}

TEST_CASE("strided four-node instances agree with the ground truth") {
  auto all = enumerate_connected(4);
  for (std::size_t i = 0; i < all.size(); i += 97) {
    const auto& g = all[i];
    int md = max_degree_of(g);
    for (int x = 3; x <= 5; ++x) {
      bool want = is_tree(g) && x == 4;
      RunOutcome out = dove_run(g, 0, std::to_string(x), dovetail_budget(4, md, x));
      CAPTURE(i, x, serialize_graph(g));
      REQUIRE_FALSE(out.fault.has_value());
      REQUIRE(out.all_decided());
      CHECK(out.unanimous(want));
      CHECK(out.token_node == 0);
    }
  }
}

TEST_CASE("malformed inputs never let either side accept") {
  // both verifiers reject every attempt when the size does not decode, so
  // the run keeps burning certificates until the budget ends it
  for (const char* bad : {"", "x", "-3", "3x"}) {
    RunOutcome out = dove_run(path(3), 0, bad, 200);
    CAPTURE(bad);
    REQUIRE_FALSE(out.fault.has_value());
    CHECK(out.budget_exhausted);
    CHECK_FALSE(out.all_decided());
  }
}

TEST_CASE("two rejecting verifiers burn one round per attempt and never decide") {
  auto make = +[]() -> std::unique_ptr<CertVerifier> {
    return std::make_unique<RejectAllVerifier>();
  };
  auto cfg = make_config(path(2), {0}, {}, {"2"});
  RunOptions opts;
  opts.max_rounds = 50;
  opts.token_start = 0;
  RunOutcome out = run(cfg, DovetailProtocol{make, make}, opts);
  REQUIRE_FALSE(out.fault.has_value());
  CHECK(out.budget_exhausted);
  CHECK_FALSE(out.all_decided());
  CHECK(out.final_nodes[0] == 0);
  CHECK(out.token_node == 0);
}

TEST_CASE("the deadline formula is ordered and saturates") {
  CHECK(dovetail_budget(2, 1, 2) < dovetail_budget(3, 2, 3));
  CHECK(dovetail_budget(3, 2, 3) < dovetail_budget(4, 3, 4));
  CHECK(dovetail_budget(3, 2, 3) < dovetail_budget(3, 2, 9));
  CHECK(dovetail_budget(20, 4, 5) >= kBudgetCap);
}
