#include <catch2/catch_amalgamated.hpp>

#include "maw/generate.hpp"
#include "maw/problems.hpp"
#include "maw/protocols/omega.hpp"

using namespace maw;

namespace {

int max_degree(const PortLabeledGraph& g) {
  Adjacency a(g);
  int d = 0;
  for (int v = 0; v < a.node_count(); ++v) d = std::max(d, a.degree(v));
  return d;
}

std::string encode_h(const QuotientGraph& h) {
  return "2" + detail::pack_lines(serialize_graph(h));
}

RunOutcome omega_run(const PortLabeledGraph& g, const std::vector<int>& starts,
                     const std::string& input, int x, int h_nodes) {
  std::vector<std::string> inputs(starts.size(), input);
  auto cfg = make_config(g, starts, {}, inputs);
  RunOptions opts;
  opts.max_rounds = omega_budget(x, static_cast<std::int64_t>(starts.size()), max_degree(g), h_nodes);
  opts.certificates.assign(starts.size(), std::to_string(x));
  return run(cfg, OmegaVerifyProtocol{}, opts);
}

}  // namespace

TEST_CASE("team size claims verify with the true node count") {
  SECTION("two agents exceed one") {
    RunOutcome out = omega_run(path(2), {0, 1}, "11", 2, 0);
    REQUIRE_FALSE(out.fault.has_value());
    CHECK(out.unanimous(true));
    CHECK(out.decision_round == std::vector<std::int64_t>{tau(2, 2), tau(2, 2)});
  }
  SECTION("two agents do not exceed two") {
    RunOutcome out = omega_run(path(2), {0, 1}, "12", 2, 0);
    CHECK(out.unanimous(false));
  }
  SECTION("three around the triangle exceed two") {
    RunOutcome out = omega_run(consistent_cycle(3), {0, 1, 2}, "12", 3, 0);
    CHECK(out.unanimous(true));
  }
}

TEST_CASE("no certificate makes a short team look bigger") {
  // soundness: groups contain only real agents, whatever the certificate says
  for (int x = 1; x <= 4; ++x) {
    CAPTURE(x);
    RunOutcome out = omega_run(path(2), {0, 1}, "12", x, 0);
    REQUIRE_FALSE(out.fault.has_value());
    REQUIRE(out.all_decided());
    REQUIRE(out.unanimous(false));
  }
}

TEST_CASE("quotient difference claims") {
  QuotientGraph loop_o;
  loop_o.node_count = 1;
  loop_o.add_edge(0, 1, 0, 2);

  SECTION("an honest reference is recognized as equal") {
    auto g = consistent_cycle(4);
    RunOutcome out = omega_run(g, {0}, encode_h(quotient(g)), 4, 1);
    REQUIRE_FALSE(out.fault.has_value());
    CHECK(out.unanimous(false));
  }
  SECTION("a wrong reference is recognized as different") {
    RunOutcome out = omega_run(path(2), {0}, encode_h(loop_o), 2, 1);
    CHECK(out.unanimous(true));
  }
  SECTION("the one-edge graph is its own quotient witness") {
    auto g = path(2);
    RunOutcome out = omega_run(g, {1}, encode_h(quotient(g)), 2, 1);
    CHECK(out.unanimous(false));
  }
}

TEST_CASE("no certificate fools an equal quotient") {
  // with quotient(G) isomorphic to H the reconstruction depth is always
  // sufficient, so every claimed size yields the same refusal; the walk tree
  // grows exponentially in the claim, so the sweep stops at the true size
  auto g = sun(3);
  std::string input = encode_h(quotient(g));
  for (int x = 1; x <= g.node_count; ++x) {
    CAPTURE(x);
    RunOutcome out = omega_run(g, {0}, input, x, 2);
    REQUIRE_FALSE(out.fault.has_value());
    REQUIRE(out.all_decided());
    REQUIRE(out.unanimous(false));
  }
}

TEST_CASE("malformed inputs and certificates fail fast") {
  for (const char* bad : {"", "3", "1abc", "2nonsense", "2graph 2;edge 0 1 1 1"}) {
    auto cfg = make_config(path(2), {0}, {}, {bad});
    RunOptions opts;
    opts.max_rounds = 100;
    opts.certificates = {"2"};
    RunOutcome out = run(cfg, OmegaVerifyProtocol{}, opts);
    CAPTURE(bad);
    REQUIRE(out.unanimous(false));
    REQUIRE(out.decision_round == std::vector<std::int64_t>{0});
  }
  SECTION("bad certificates also fail") {
    for (const char* cert : {"", "0", "x"}) {
      auto cfg = make_config(path(2), {0}, {}, {"11"});
      RunOptions opts;
      opts.max_rounds = 100;
      opts.certificates = {cert};
      RunOutcome out = run(cfg, OmegaVerifyProtocol{}, opts);
      CAPTURE(cert);
      REQUIRE(out.unanimous(false));
      REQUIRE(out.decision_round == std::vector<std::int64_t>{0});
    }
  }
}

TEST_CASE("input disagreement poisons every meeting agent") {
  auto cfg = make_config(path(2), {0, 0}, {}, {"11", "12"});
  RunOptions opts;
  opts.max_rounds = omega_budget(2, 2, 1, 0);
  opts.certificates = {"2", "2"};
  RunOutcome out = run(cfg, OmegaVerifyProtocol{}, opts);
  REQUIRE_FALSE(out.fault.has_value());
  CHECK(out.unanimous(false));
}
