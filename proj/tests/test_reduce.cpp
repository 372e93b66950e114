#include <catch2/catch_amalgamated.hpp>

#include "maw/acceptance.hpp"
#include "maw/generate.hpp"
#include "maw/protocols/reduce.hpp"

using namespace maw;

namespace {

int max_degree(const PortLabeledGraph& g) {
  Adjacency a(g);
  int d = 0;
  for (int v = 0; v < a.node_count(); ++v) d = std::max(d, a.degree(v));
  return d;
}

RunOutcome reduce_run(const Problem& problem, const PortLabeledGraph& g,
                      const std::vector<int>& starts, const std::string& input) {
  std::vector<std::string> inputs(starts.size(), input);
  auto cfg = make_config(g, starts, {}, inputs);
  RunOptions opts;
  opts.max_rounds = reduce_budget(g.node_count, static_cast<std::int64_t>(starts.size()),
                                  max_degree(g));
  opts.oracle = oracle_env(*find_problem("omega"), cfg);
  return run(cfg, ReduceProtocol{problem}, opts);
}

}  // namespace

TEST_CASE("the candidate stream covers all small validated graphs") {
  const auto& cands = solo_candidates();
  CHECK(cands.size() == 1 + 1 + 14 + 2568);
  for (const auto& c : {cands[0], cands[1], cands[2], cands.back()}) {
    CHECK(validate(c.graph).ok);
    CHECK(c.query.rfind("2quotient", 0) == 0);
    CHECK(c.query.find('\n') == std::string::npos);
  }
}

TEST_CASE("the table oracle matches the problem environment oracle") {
  auto omega = *find_problem("omega");
  std::vector<PortLabeledGraph> graphs = {path(2), path(3), consistent_cycle(3),
                                          consistent_cycle(4), star(4), sun(3)};
  std::vector<std::string> queries;
  const auto& cands = solo_candidates();
  for (std::size_t i = 0; i < cands.size(); i += 131) queries.push_back(cands[i].query);
  for (int j = 1; j <= 5; ++j) queries.push_back("1" + std::to_string(j));
  queries.push_back("2" + detail::pack_lines(serialize_graph(quotient(sun(5)))));
  queries.push_back("");
  queries.push_back("2junk");
  queries.push_back("1x");
  queries.push_back("3");

  for (const auto& g : graphs)
    for (int team : {1, 2, 3}) {
      detail::OmegaOracleTable table(g);
      Oracle fast = table.bind(team);
      std::vector<int> starts(team, 0);
      Oracle slow = oracle_env(omega, detail::place(g, starts, ""));
      for (const auto& q : queries) {
        CAPTURE(g.node_count, team, q.substr(0, 24));
        REQUIRE(fast(q) == slow(q));
      }
    }
}

TEST_CASE("probing stops at the first refused team size") {
  auto cfg = make_config(path(2), {0, 1}, {}, {"", ""});
  RunOptions opts;
  opts.max_rounds = reduce_budget(2, 2, 1);
  opts.oracle = oracle_env(*find_problem("omega"), cfg);
  RunOutcome out = run(cfg, ReduceProtocol{*find_problem("tree")}, opts);
  REQUIRE_FALSE(out.fault.has_value());
  REQUIRE(out.all_decided());
  CHECK(out.unanimous(true));  // one edge is a tree
  std::vector<std::pair<std::string, bool>> asked_by_1;
  for (const auto& e : out.oracle_log)
    if (e.id == 1) asked_by_1.push_back({e.input, e.answer});
  REQUIRE(asked_by_1.size() == 2);
  CHECK(asked_by_1[0] == std::pair<std::string, bool>{"11", true});   // 2 > 1
  CHECK(asked_by_1[1] == std::pair<std::string, bool>{"12", false});  // first no pins k = 2
}

TEST_CASE("a lone agent decides through the quotient scan") {
  auto tree = *find_problem("tree");
  SECTION("trees answer yes") {
    for (const auto& g : {path(2), path(3), star(4)})
      for (int v = 0; v < g.node_count; ++v) {
        CAPTURE(g.node_count, v);
        RunOutcome out = reduce_run(tree, g, {v}, "");
        REQUIRE_FALSE(out.fault.has_value());
        REQUIRE(out.unanimous(true));
      }
  }
  SECTION("cycles answer no") {
    for (const auto& g : {consistent_cycle(3), consistent_cycle(4)})
      for (int v = 0; v < g.node_count; ++v) {
        RunOutcome out = reduce_run(tree, g, {v}, "");
        REQUIRE(out.unanimous(false));
      }
  }
  SECTION("the solo leg respects non-tree problems too") {
    auto teamsize = *find_problem("teamsize");
    RunOutcome no = reduce_run(teamsize, path(3), {1}, "2");
    REQUIRE(no.unanimous(false));  // a team of 1 does not exceed 2
    RunOutcome yes = reduce_run(teamsize, path(3), {1}, "0");
    REQUIRE(yes.unanimous(true));
  }
}

TEST_CASE("solo runs resolve the start into the right fiber") {
  auto odd = *find_problem("odd");
  // start-dependent truth: the ends of a path are odd, the middle is even
  REQUIRE(reduce_run(odd, path(3), {0}, "").unanimous(true));
  REQUIRE(reduce_run(odd, path(3), {1}, "").unanimous(false));
  REQUIRE(reduce_run(odd, path(3), {2}, "").unanimous(true));
  // a collapsed quotient still answers by the fiber's degree
  REQUIRE(reduce_run(odd, consistent_cycle(4), {1}, "").unanimous(false));
  // all-odd degrees answer yes from any start
  REQUIRE(reduce_run(odd, star(4), {0}, "").unanimous(true));
  REQUIRE(reduce_run(odd, star(4), {3}, "").unanimous(true));
}

TEST_CASE("teams of two and three reduce correctly") {
  auto tree = *find_problem("tree");
  for (const auto& g : {path(3), consistent_cycle(3)}) {
    bool want = static_cast<int>(g.edges.size()) == g.node_count - 1;
    for (int k : {2, 3}) {
      std::vector<int> starts;
      for (int i = 0; i < k; ++i) starts.push_back(i % g.node_count);
      CAPTURE(g.node_count, k);
      RunOutcome out = reduce_run(tree, g, starts, "");
      REQUIRE_FALSE(out.fault.has_value());
      REQUIRE(out.all_decided());
      REQUIRE(out.unanimous(want));
    }
  }
}

TEST_CASE("a lone agent beyond the validated range stays undecided") {
  auto tree = *find_problem("tree");
  auto g = path(5);  // five nodes exceed the candidate cap
  auto cfg = make_config(g, {0}, {}, {""});
  RunOptions opts;
  opts.max_rounds = 20000;
  opts.oracle = oracle_env(*find_problem("omega"), cfg);
  RunOutcome out = run(cfg, ReduceProtocol{tree}, opts);
  CHECK(out.budget_exhausted);
  CHECK_FALSE(out.all_decided());
  CHECK_FALSE(out.fault.has_value());
}
