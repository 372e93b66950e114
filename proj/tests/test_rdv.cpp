#include <catch2/catch_amalgamated.hpp>

#include "maw/generate.hpp"
#include "maw/protocols/rdv.hpp"

using namespace maw;

namespace {

// Earliest round at which the two agents of a traced pair run share a node.
std::int64_t first_meeting(const RunOutcome& out, std::int64_t id_a, std::int64_t id_b,
                           std::int64_t horizon) {
  for (std::int64_t r = 0; r <= horizon; ++r) {
    auto a = position_at(out.trace, id_a, r);
    auto b = position_at(out.trace, id_b, r);
    if (a && b && *a == *b) return r;
  }
  return -1;
}

}  // namespace

TEST_CASE("budget arithmetic") {
  CHECK(tour_length(2) == 8);
  CHECK(tour_length(3) == 54);
  CHECK(tour_length(4) == 512);
  CHECK(tau(2, 1) == 16);
  CHECK(tau(2, 2) == 24);
  CHECK(tau(4, 2) == 1536);
  CHECK(tau_max(2, 3) == 64);
  CHECK(default_budget(2, 2) == 112);
  SECTION("budgets saturate instead of overflowing") {
    CHECK(tour_length(20) == kBudgetCap);
    CHECK(tau_max(5, 62) == kBudgetCap);
    // two capped budgets still add without wrapping
    CHECK(saturating_add(kBudgetCap, kBudgetCap) == 2 * kBudgetCap);
    constexpr auto lim = std::numeric_limits<std::int64_t>::max() / 2;
    CHECK(saturating_add(lim, lim) == lim);
    CHECK(saturating_add(lim, 1) == lim);
    CHECK(tau(3, 5) < tau(3, 6));
  }
}

TEST_CASE("two agents on one edge meet while the smaller id waits") {
  auto cfg = make_config(path(2), {0, 1}, {1, 2}, {"2", "2"});
  RendezvousProtocol p;
  RunOptions opts;
  opts.max_rounds = tau(2, 2) + 2;
  opts.record_trace = true;
  RunOutcome out = run(cfg, p, opts);
  REQUIRE_FALSE(out.fault.has_value());
  CHECK(out.unanimous(true));
  CHECK(out.decision_round == std::vector<std::int64_t>{tau(2, 1), tau(2, 2)});
  CHECK(out.final_nodes == cfg.starts());

  // Lockstep tours keep them swapping; the first meeting happens in the
  // smaller id's waiting phase, once the larger id tours again.
  std::int64_t met = first_meeting(out, 1, 2, tau(2, 2));
  REQUIRE(met >= 0);
  CHECK(met >= tour_length(2));
  CHECK(met < tau(2, 1));
}

TEST_CASE("opposite corners of a consistent cycle") {
  auto cfg = make_config(consistent_cycle(4), {0, 2}, {1, 2}, {"4", "4"});
  RendezvousProtocol p;
  RunOptions opts;
  opts.max_rounds = tau(4, 2) + 2;
  opts.record_trace = true;
  RunOutcome out = run(cfg, p, opts);
  REQUIRE_FALSE(out.fault.has_value());
  CHECK(out.unanimous(true));
  CHECK(out.decision_round == std::vector<std::int64_t>{tau(4, 1), tau(4, 2)});
  CHECK(out.final_nodes == cfg.starts());
  std::int64_t met = first_meeting(out, 1, 2, tau(4, 2));
  REQUIRE(met >= 0);
  CHECK(met >= tour_length(4));  // rotation symmetry blocks any earlier meeting
  CHECK(met < tau(4, 1));
}

TEST_CASE("co-located starts still decide only at the deadline") {
  auto cfg = make_config(path(3), {1, 1}, {1, 2}, {"3", "3"});
  RendezvousProtocol p;
  RunOptions opts;
  opts.max_rounds = tau(3, 2) + 2;
  RunOutcome out = run(cfg, p, opts);
  CHECK(out.unanimous(true));
  CHECK(out.decision_round == std::vector<std::int64_t>{tau(3, 1), tau(3, 2)});
}

TEST_CASE("a lone agent reports that it met nobody") {
  auto cfg = make_config(path(3), {2}, {1}, {"3"});
  RendezvousProtocol p;
  RunOptions opts;
  opts.max_rounds = tau(3, 1) + 2;
  RunOutcome out = run(cfg, p, opts);
  CHECK(out.unanimous(false));
  CHECK(out.decision_round == std::vector<std::int64_t>{tau(3, 1)});
  CHECK(out.final_nodes == cfg.starts());
}

TEST_CASE("malformed node counts are rejected immediately") {
  for (const char* bad : {"", "x", "0"}) {
    auto cfg = make_config(path(2), {0, 1}, {1, 2}, {bad, bad});
    RunOutcome out = run(cfg, RendezvousProtocol{});
    CHECK(out.unanimous(false));
    CHECK(out.decision_round == std::vector<std::int64_t>{0, 0});
  }
}
