#pragma once

// Certificate verification for the product target: component 1 asks whether
// the team has more than k agents, component 2 whether the configuration's
// quotient differs from a given multigraph H. The certificate is the node
// count n in decimal; soundness holds for every certificate, completeness
// for the true one.
//
// Component 1 runs merged staggered tours at believed size x. Groups only
// ever contain agents that were really observed, so answering yes on
// |group| > k is sound for any x; with x = n the largest id absorbs the whole
// team before its deadline, so the true count is reached.
//
// Component 2 walks the port-sequence tree to depth d = 2 * max(x, |V(H)|)
// and rebuilds a quotient from the resulting view. If the configuration is
// not in the component (its quotient is isomorphic to H), then d is at least
// twice the real quotient size, the reconstruction is exact, and the agent
// answers no whatever x was. With x = n the reconstruction is exact in the
// remaining case as well.
//
// Agents also compare inputs with everyone they meet and answer no on any
// mismatch; instances are required to carry one shared input.

#include "maw/problems.hpp"
#include "maw/protocols/gather.hpp"
#include "maw/protocols/walks.hpp"
#include "maw/sim.hpp"

namespace maw {

struct OmegaMemory final : AgentMemory, MergedRdvAccess {
  std::int64_t id = 0;
  std::string input;  // raw input, compared against met agents
  int branch = 0;     // 1 or 2; 0 after a malformed input or certificate
  bool poisoned = false;

  std::int64_t k = 0;  // component 1 threshold
  int x = 0;           // certificate
  MergedRdvState rdv;

  QuotientGraph h;  // component 2 reference
  int depth = 0;
  ViewDag dag;
  ViewWalk walk{nullptr, 0};

  const MergedRdvState& rdv_state() const override { return rdv; }
  std::unique_ptr<AgentMemory> clone() const override {
    auto c = std::make_unique<OmegaMemory>(*this);
    c->walk.rebind(&c->dag);
    return c;
  }
};

class OmegaVerifyProtocol final : public Protocol {
 public:
  std::unique_ptr<AgentMemory> make_memory(const AgentSetup& setup) const override {
    auto m = std::make_unique<OmegaMemory>();
    m->id = setup.id;
    m->input = setup.input;
    m->rdv.group.insert(setup.id);
    m->rdv.leader = setup.id;
    auto x = decode_small_uint(setup.certificate);
    if (!x || *x < 1 || setup.input.empty()) return m;
    m->x = *x;
    if (setup.input[0] == '1') {
      if (auto k = decode_small_uint(setup.input.substr(1))) {
        m->branch = 1;
        m->k = *k;
      }
    } else if (setup.input[0] == '2') {
      if (auto h = detail::decode_quotient(setup.input.substr(1))) {
        m->branch = 2;
        m->h = *h;
        m->depth = 2 * std::max(m->x, m->h.node_count);
        m->walk = ViewWalk(&m->dag, m->depth);
      }
    }
    return m;
  }

  Action step(AgentMemory& memory, const Observation& obs) const override {
    auto& m = static_cast<OmegaMemory&>(memory);
    if (m.branch == 0) return Action::decide(false);
    for (const PeerView& p : obs.peers)
      if (auto* om = dynamic_cast<const OmegaMemory*>(p.memory.get()))
        if (om->input != m.input) m.poisoned = true;
    if (m.branch == 1) {
      merge_groups(m.rdv, obs);
      std::int64_t deadline = tau(m.x, m.rdv.leader);
      if (obs.round >= deadline)
        return Action::decide(!m.poisoned &&
                              static_cast<std::int64_t>(m.rdv.group.size()) > m.k);
      return merged_tour_action(m.rdv, obs, m.id, m.x, 0, deadline);
    }
    if (auto p = m.walk.step(obs.degree, obs.entry_port)) return Action::move(*p);
    ViewQuotient q = quotient_of_view(m.dag, m.walk.view(), m.depth);
    return Action::decide(!m.poisoned && !quotient_isomorphic(q.graph, m.h));
  }
};

// Round budget sufficient for every agent to decide: component 1 deadlines
// are tau(x, max id); component 2 walks the port-sequence tree of depth
// 2 * max(x, |V(H)|) over degrees at most max_degree.
inline std::int64_t omega_budget(int x, std::int64_t max_id, int max_degree, int h_nodes) {
  int depth = 2 * std::max(x, h_nodes);
  std::int64_t walk = saturating_mul(4, saturating_pow(std::max(max_degree, 1), depth + 1));
  return saturating_add(std::max(tau(x, max_id), walk), 64);
}

}  // namespace maw
