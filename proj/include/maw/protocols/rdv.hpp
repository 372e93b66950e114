#pragma once

// Rendezvous for two agents that know the node count n. The agent with id i
// runs i padded depth-first tours (each exactly tour_length(n) rounds), then
// waits at its start and decides at round tau(n, i) whether it ever shared a
// node with the other agent. While the smaller id waits through its own
// phase, the larger id is still touring and must pass through the waiting
// node, so both record the meeting before either deadline.

#include "maw/protocols/walks.hpp"
#include "maw/sim.hpp"

namespace maw {

struct RdvMemory final : AgentMemory {
  std::int64_t id = 0;
  int n = 0;  // node count from the input; 0 after a malformed input
  bool met = false;
  std::int64_t tour_phase = -1;
  DepthFirstPortWalk walker{0};

  std::unique_ptr<AgentMemory> clone() const override {
    return std::make_unique<RdvMemory>(*this);
  }
};

class RendezvousProtocol final : public Protocol {
 public:
  std::unique_ptr<AgentMemory> make_memory(const AgentSetup& setup) const override {
    auto m = std::make_unique<RdvMemory>();
    m->id = setup.id;
    if (auto n = decode_small_uint(setup.input); n && *n >= 1) m->n = static_cast<int>(*n);
    return m;
  }

  Action step(AgentMemory& memory, const Observation& obs) const override {
    auto& m = static_cast<RdvMemory&>(memory);
    if (m.n == 0) return Action::decide(false);
    if (!obs.peers.empty()) m.met = true;
    std::int64_t length = tour_length(m.n);
    std::int64_t deadline = tau(m.n, m.id);
    if (obs.round >= deadline) return Action::decide(m.met);
    std::int64_t phase = obs.round / length;
    if (phase >= m.id) return Action::stay_until(deadline);
    if (phase != m.tour_phase) {
      m.tour_phase = phase;
      m.walker = DepthFirstPortWalk(m.n);
    }
    if (auto port = m.walker.step(obs.degree, obs.entry_port)) return Action::move(*port);
    return Action::stay_until((phase + 1) * length);
  }
};

}  // namespace maw
