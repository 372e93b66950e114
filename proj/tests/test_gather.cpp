#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "maw/generate.hpp"
#include "maw/protocols/gather.hpp"

using namespace maw;

TEST_CASE("the guess diagonal enumerates (n, b) by total, then n") {
  std::vector<std::pair<int, int>> want = {{1, 1}, {1, 2}, {2, 1}, {1, 3}, {2, 2},
                                           {3, 1}, {1, 4}, {2, 3}, {3, 2}, {4, 1}};
  for (int i = 0; i < static_cast<int>(want.size()); ++i) {
    CAPTURE(i);
    CHECK(diagonal_cell(i) == want[i]);
  }
}

TEST_CASE("gather budgets cover the first adequate cell") {
  CHECK(gather_budget(2, 2) == 140);
  CHECK(gather_budget(3, 3) == 560);
  CHECK(gather_budget(2, 2) < gather_budget(4, 2));
}

TEST_CASE("depth-first tours return home after visiting everything") {
  std::vector<PortLabeledGraph> pool = enumerate_connected(3);
  pool.push_back(consistent_cycle(4));
  pool.push_back(star(5));
  pool.push_back(random_graph(5, 0.4, 23));
  for (const auto& g : pool) {
    int n = g.node_count;
    Adjacency adj(g);
    for (int v = 0; v < n; ++v) {
      CAPTURE(n, v);
      DepthFirstPortWalk walk(n);
      int pos = v;
      int entry = 0;
      std::int64_t moves = 0;
      std::set<int> visited{v};
      while (auto port = walk.step(adj.degree(pos), entry)) {
        REQUIRE(*port >= 1);
        REQUIRE(*port <= adj.degree(pos));
        PortEnd far = adj.neighbor(pos, *port);
        pos = far.node;
        entry = far.port;
        visited.insert(pos);
        ++moves;
        REQUIRE(moves <= tour_length(n));
      }
      CHECK(walk.finished());
      CHECK(pos == v);
      CHECK(static_cast<int>(visited.size()) == n);
    }
  }
}

TEST_CASE("the walk on one edge is the fixed bounce sequence") {
  DepthFirstPortWalk walk(2);
  std::vector<int> ports;
  int entries[] = {0, 1, 1, 1, 1};
  for (int i = 0; i < 5; ++i) {
    auto p = walk.step(1, entries[i]);
    if (!p) break;
    ports.push_back(*p);
  }
  CHECK(ports == std::vector<int>{1, 1, 1, 1});
  CHECK(walk.finished());
}

TEST_CASE("two agents knowing k = 2 gather") {
  SECTION("across one edge") {
    auto cfg = make_config(path(2), {0, 1}, {1, 2}, {"2", "2"});
    RunOptions opts;
    opts.max_rounds = gather_budget(2, 2);
    RunOutcome out = run(cfg, GatherProtocol{}, opts);
    REQUIRE_FALSE(out.fault.has_value());
    CHECK(out.unanimous(true));
    CHECK(out.decision_round[0] == out.decision_round[1]);
    CHECK(out.final_nodes[0] == out.final_nodes[1]);
  }
  SECTION("co-located starts decide immediately") {
    auto cfg = make_config(path(3), {1, 1}, {4, 9}, {"2", "2"});
    RunOutcome out = run(cfg, GatherProtocol{});
    CHECK(out.unanimous(true));
    CHECK(out.decision_round == std::vector<std::int64_t>{0, 0});
  }
  SECTION("opposite corners of a consistent cycle") {
    auto cfg = make_config(consistent_cycle(4), {0, 2}, {1, 2}, {"2", "2"});
    RunOptions opts;
    opts.max_rounds = gather_budget(4, 2);
    RunOutcome out = run(cfg, GatherProtocol{}, opts);
    REQUIRE_FALSE(out.fault.has_value());
    CHECK(out.unanimous(true));
    CHECK(out.final_nodes[0] == out.final_nodes[1]);
  }
}

TEST_CASE("three agents gather on the triangle") {
  auto cfg = make_config(consistent_cycle(3), {0, 1, 2}, {1, 2, 3}, {"3", "3", "3"});
  RunOptions opts;
  opts.max_rounds = gather_budget(3, 3);
  RunOutcome out = run(cfg, GatherProtocol{}, opts);
  REQUIRE_FALSE(out.fault.has_value());
  CHECK(out.unanimous(true));
  CHECK(out.final_nodes[0] == out.final_nodes[1]);
  CHECK(out.final_nodes[1] == out.final_nodes[2]);
  CHECK(out.decision_round[0] == out.decision_round[1]);
  CHECK(out.decision_round[1] == out.decision_round[2]);
}

TEST_CASE("a team smaller than k never decides") {
  auto cfg = make_config(path(2), {0, 1}, {1, 2}, {"3", "3"});
  RunOptions opts;
  opts.max_rounds = 2000;
  RunOutcome out = run(cfg, GatherProtocol{}, opts);
  CHECK(out.budget_exhausted);
  CHECK_FALSE(out.all_decided());
}

TEST_CASE("malformed team sizes are rejected") {
  auto cfg = make_config(path(2), {0, 1}, {1, 2}, {"", "nope"});
  RunOutcome out = run(cfg, GatherProtocol{});
  CHECK(out.unanimous(false));
  CHECK(out.decision_round == std::vector<std::int64_t>{0, 0});
}
