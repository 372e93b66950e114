#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "maw/config.hpp"
#include "maw/generate.hpp"
#include "maw/graph.hpp"
#include "maw/problems.hpp"

namespace {

using namespace maw;

InitialConfiguration place(const PortLabeledGraph& g, std::vector<int> starts,
                           std::vector<std::string> inputs = {}) {
  return make_config(g, std::move(starts), {}, std::move(inputs));
}

bool truth(const std::string& name, const InitialConfiguration& cfg) {
  auto p = find_problem(name);
  REQUIRE(p.has_value());
  return p->ground_truth(cfg);
}

}  // namespace

TEST_CASE("registry lookup") {
  CHECK(problem_registry().size() == 17);
  for (const char* name :
       {"teamsize", "#nodes", "tree", "treesize", "leader", "odd", "path", "leaf",
        "degree_1", "degree_2", "degree_3", "degree_4", "cycle", "sun", "quotient",
        "map", "omega"})
    CHECK(find_problem(name).has_value());
  CHECK_FALSE(find_problem("nonsense").has_value());

  SECTION("complement lookup by prefix") {
    auto co = find_problem("co-tree");
    REQUIRE(co.has_value());
    CHECK(co->name == "co-tree");
    auto cfg = place(path(3), {0});
    CHECK(truth("tree", cfg) != co->ground_truth(cfg));
    CHECK(find_problem("co-co-tree")->ground_truth(cfg) == truth("tree", cfg));
    CHECK_FALSE(find_problem("co-nonsense").has_value());
  }

  SECTION("only leader is non-uniform") {
    for (const Problem& p : problem_registry())
      CHECK(p.uniform == (p.name != "leader"));
  }
}

TEST_CASE("team size threshold") {
  auto g = consistent_cycle(4);
  CHECK(truth("teamsize", place(g, {0, 1, 2}, {"2", "2", "2"})));
  CHECK_FALSE(truth("teamsize", place(g, {0, 1}, {"2", "2"})));
  CHECK_FALSE(truth("teamsize", place(g, {0, 1, 2}, {"3", "3", "3"})));
  CHECK(truth("teamsize", place(g, {0}, {"0"})));
  SECTION("mixed or undecodable inputs fall outside") {
    CHECK_FALSE(truth("teamsize", place(g, {0, 1, 2}, {"2", "1", "2"})));
    CHECK_FALSE(truth("teamsize", place(g, {0, 1, 2}, {"x", "x", "x"})));
    CHECK_FALSE(truth("teamsize", place(g, {0, 1, 2}, {"", "", ""})));
  }
}

TEST_CASE("node count claim") {
  CHECK(truth("#nodes", place(path(5), {0}, {"5"})));
  CHECK_FALSE(truth("#nodes", place(path(5), {0}, {"4"})));
  CHECK_FALSE(truth("#nodes", place(path(5), {0}, {""})));
}

TEST_CASE("tree and treesize") {
  CHECK(truth("tree", place(star(4), {0})));
  CHECK_FALSE(truth("tree", place(consistent_cycle(3), {0})));
  // any nonempty input puts a configuration outside the input-free set
  CHECK_FALSE(truth("tree", place(star(4), {0}, {"1"})));

  CHECK(truth("treesize", place(star(4), {0}, {"4"})));
  CHECK_FALSE(truth("treesize", place(star(4), {0}, {"5"})));
  CHECK_FALSE(truth("treesize", place(consistent_cycle(4), {0}, {"4"})));
  CHECK_FALSE(truth("treesize", place(star(4), {0}, {"0"})));
}

TEST_CASE("leader election instances need exactly one marked bit") {
  auto g = path(3);
  CHECK(truth("leader", place(g, {0, 2}, {"1", "0"})));
  CHECK(truth("leader", place(g, {0, 2}, {"01", ""})));
  CHECK_FALSE(truth("leader", place(g, {0, 2}, {"1", "1"})));
  CHECK_FALSE(truth("leader", place(g, {0, 2}, {"0", "0"})));
  CHECK_FALSE(truth("leader", place(g, {0, 2}, {"11", ""})));
  CHECK_FALSE(truth("leader", place(g, {0, 2}, {"1", "x"})));
}

TEST_CASE("odd start degrees") {
  CHECK(truth("odd", place(path(2), {0, 1})));
  CHECK(truth("odd", place(star(4), {0, 1})));
  CHECK_FALSE(truth("odd", place(path(3), {0, 1})));
  CHECK_FALSE(truth("odd", place(consistent_cycle(4), {2})));
}

TEST_CASE("shape predicates") {
  CHECK(truth("path", place(path(4), {0})));
  CHECK(truth("path", place(path(1), {0})));
  CHECK_FALSE(truth("path", place(star(4), {0})));
  CHECK_FALSE(truth("path", place(consistent_cycle(4), {0})));

  CHECK(truth("leaf", place(star(5), {0})));
  CHECK_FALSE(truth("leaf", place(consistent_cycle(5), {0})));

  CHECK(truth("degree_1", place(path(3), {0})));
  CHECK(truth("degree_2", place(path(3), {0})));
  CHECK_FALSE(truth("degree_3", place(path(3), {0})));
  CHECK(truth("degree_3", place(star(4), {0})));
  CHECK(truth("degree_4", place(star(5), {0})));
  CHECK_FALSE(truth("degree_4", place(star(4), {0})));
}

TEST_CASE("consistently labeled cycles and suns") {
  CHECK(truth("cycle", place(consistent_cycle(5), {0})));
  CHECK_FALSE(truth("cycle", place(path(3), {0})));
  CHECK_FALSE(truth("cycle", place(sun(3), {0})));
  SECTION("an inconsistent labeling of the same shape is out") {
    // swap the two ports at one node of a consistent triangle
    PortLabeledGraph g = consistent_cycle(3);
    for (Edge& e : g.edges) {
      if (e.u == 0) e.pu = 3 - e.pu;
      if (e.v == 0) e.pv = 3 - e.pv;
    }
    g.normalize();
    REQUIRE(validate(g).ok);
    CHECK_FALSE(truth("cycle", place(g, {0})));
  }

  CHECK(truth("sun", place(sun(3), {0})));
  CHECK(truth("sun", place(sun(4), {5})));
  CHECK_FALSE(truth("sun", place(consistent_cycle(6), {0})));
  CHECK_FALSE(truth("sun", place(path(6), {0})));
}

TEST_CASE("quotient mismatch and map match") {
  auto pack = [](const std::string& s) { return detail::pack_lines(s); };

  auto q_cycle = quotient(consistent_cycle(5));
  CHECK_FALSE(truth("quotient",
                    place(consistent_cycle(7), {0}, {pack(serialize_graph(q_cycle))})));
  CHECK(truth("quotient", place(path(3), {0}, {pack(serialize_graph(q_cycle))})));
  CHECK_FALSE(truth("quotient", place(path(3), {0}, {"garbage"})));

  CHECK(truth("map", place(path(3), {0}, {pack(serialize_graph(path(3)))})));
  // a three-node star is just a relabeled path, so use four nodes
  CHECK(truth("map", place(path(3), {0}, {pack(serialize_graph(star(3)))})));
  CHECK_FALSE(truth("map", place(path(4), {0}, {pack(serialize_graph(star(4)))})));
  CHECK_FALSE(truth("map", place(path(3), {0}, {""})));
}

TEST_CASE("products select a component by the leading digit") {
  Problem prod = product({problem_tree(), problem_leaf()}, "pair");
  CHECK(prod.uniform);
  CHECK(prod.ground_truth(place(path(3), {0}, {"1"})));
  CHECK(prod.ground_truth(place(consistent_cycle(3), {0}, {"2"})) == false);
  CHECK(prod.ground_truth(place(sun(3), {0}, {"2"})));
  SECTION("selector must be present, in range, and shared") {
    CHECK_FALSE(prod.ground_truth(place(path(3), {0}, {""})));
    CHECK_FALSE(prod.ground_truth(place(path(3), {0}, {"3"})));
    CHECK_FALSE(prod.ground_truth(place(path(3), {0}, {"0"})));
    CHECK_FALSE(prod.ground_truth(place(path(3), {0, 1}, {"1", "2"})));
  }
  SECTION("a non-uniform component poisons uniformity") {
    Problem mixed = product({problem_tree(), problem_leader()}, "mixed");
    CHECK_FALSE(mixed.uniform);
  }
}

TEST_CASE("the verification target joins team size with quotient difference") {
  auto omega = find_problem("omega");
  REQUIRE(omega.has_value());
  auto g = consistent_cycle(4);
  CHECK(omega->ground_truth(place(g, {0, 1, 2}, {"12", "12", "12"})));
  CHECK_FALSE(omega->ground_truth(place(g, {0, 1, 2}, {"13", "13", "13"})));
  std::string h = "2" + detail::pack_lines(serialize_graph(quotient(g)));
  CHECK_FALSE(omega->ground_truth(place(g, {0}, {h})));
  std::string wrong = "2" + detail::pack_lines(serialize_graph(quotient(path(3))));
  CHECK(omega->ground_truth(place(g, {0}, {wrong})));
}

TEST_CASE("membership is closed under relocation along automorphisms") {
  // spot-check the registry over graphs with rich automorphism groups
  std::vector<PortLabeledGraph> pool = {consistent_cycle(5), sun(3), star(4), path(4)};
  for (const Problem& p : problem_registry()) {
    if (p.name == "leader") continue;  // exercised separately below
    for (const auto& g : pool) {
      for (int v = 0; v < g.node_count; ++v) {
        auto cfg = place(g, {v}, {p.name == "teamsize" ? "0" : ""});
        auto violation = closure_check(p, cfg);
        CAPTURE(p.name, v);
        CHECK_FALSE(violation.has_value());
      }
    }
  }

  SECTION("leader instances are closed too") {
    auto cfg = place(consistent_cycle(5), {0, 2}, {"1", "0"});
    CHECK_FALSE(closure_check(*find_problem("leader"), cfg).has_value());
  }

  SECTION("a start-pinning predicate is caught") {
    Problem pinned{"pinned", true, {}, [](const InitialConfiguration& cfg) {
                     return cfg.agents[0].node == 0;
                   }};
    auto report = closure_check(pinned, place(consistent_cycle(4), {0}));
    REQUIRE(report.has_value());
    CHECK(report->find("pinned") != std::string::npos);
  }
}

TEST_CASE("oracle environments answer substituted queries") {
  auto cfg = place(path(4), {0, 2}, {"ignored", "ignored"});
  Oracle env = oracle_env(*find_problem("#nodes"), cfg);
  CHECK(env("4"));
  CHECK_FALSE(env("5"));
  CHECK_FALSE(env(""));

  Oracle omega_env = oracle_env(*find_problem("omega"), cfg);
  CHECK(omega_env("11"));
  CHECK_FALSE(omega_env("12"));

  CHECK_THROWS_AS(oracle_env(*find_problem("leader"), cfg), std::invalid_argument);
}
