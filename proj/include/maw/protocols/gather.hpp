#pragma once

// Gathering: k agents that know only k end up co-located. The schedule is a
// diagonal over guesses (n, b) for the node count and the id bit length; each
// cell runs staggered depth-first tours at size n for tau_max(n, b) rounds.
// Whenever agents share a node they merge into one group that afterwards
// moves with its largest id. In the first cell whose guesses cover the real
// configuration, every group leader parks in time for the largest id to tour
// over it, so all agents end up in a single group.
//
// The merged-tours core (state, merge rule, movement) is shared with the
// verification protocol, which runs it as a single cell sized by the
// certificate.

#include <set>

#include "maw/protocols/walks.hpp"
#include "maw/sim.hpp"

namespace maw {

struct MergedRdvState {
  std::set<std::int64_t> group;  // ids known to be merged, including self
  std::int64_t leader = 0;       // max of group
  std::int64_t tour_phase = -1;  // phase start round owning the walker
  DepthFirstPortWalk walker{0};
};

// Implemented by memories that expose merged-tours state to co-located
// agents.
struct MergedRdvAccess {
  virtual ~MergedRdvAccess() = default;
  virtual const MergedRdvState& rdv_state() const = 0;
};

// Union own group with every co-located group. All agents at a node compute
// the same union, so merged groups stay consistent. Peers without exposed
// state still contribute their id; group contents are always real agents.
inline void merge_groups(MergedRdvState& s, const Observation& obs) {
  for (const PeerView& p : obs.peers) {
    s.group.insert(p.id);
    if (auto* a = dynamic_cast<const MergedRdvAccess*>(p.memory.get()))
      for (std::int64_t g : a->rdv_state().group) s.group.insert(g);
  }
  s.leader = *s.group.rbegin();
}

// One round of staggered touring inside the cell [cell_start, cell_end) at
// believed size n. The leader of a group runs its own schedule: one
// depth-first tour per phase of tour_length(n) rounds until it has done as
// many tours as its id, then it parks. Members mirror the leader while it
// tours and sleep through its padding and parking, which they can read off
// the leader's snapshot and the shared arithmetic.
inline Action merged_tour_action(MergedRdvState& s, const Observation& obs,
                                 std::int64_t self, int n, std::int64_t cell_start,
                                 std::int64_t cell_end) {
  std::int64_t length = tour_length(n);
  std::int64_t phase = (obs.round - cell_start) / length;
  std::int64_t phase_start = cell_start + phase * length;
  std::int64_t phase_end = std::min(phase_start + length, cell_end);
  if (s.leader == self) {
    if (phase >= self) return Action::stay_until(cell_end);
    if (s.tour_phase != phase_start) {
      s.tour_phase = phase_start;
      s.walker = DepthFirstPortWalk(n);
    }
    if (auto p = s.walker.step(obs.degree, obs.entry_port)) return Action::move(*p);
    return Action::stay_until(phase_end);
  }
  if (phase >= s.leader) return Action::stay_until(cell_end);
  const AgentMemory* lm = obs.peer_memory(s.leader);
  if (!lm) return Action::stay_until(cell_end);  // leader detached (hostile certificates)
  if (auto* la = dynamic_cast<const MergedRdvAccess*>(lm)) {
    const MergedRdvState& ls = la->rdv_state();
    if (ls.tour_phase == phase_start && ls.walker.finished())
      return Action::stay_until(phase_end);
  }
  return Action::follow(s.leader);
}

// Cell index -> (n, b), enumerated by n + b ascending, then n ascending.
inline std::pair<int, int> diagonal_cell(int index) {
  int s = 2;
  while (index >= s - 1) {
    index -= s - 1;
    ++s;
  }
  return {index + 1, s - (index + 1)};
}

struct GatherMemory final : AgentMemory, MergedRdvAccess {
  std::int64_t id = 0;
  int k = 0;  // target team size from the input; 0 after a malformed input
  int cell = 0;
  std::int64_t cell_start = 0;
  std::int64_t cell_len = 0;
  MergedRdvState rdv;

  const MergedRdvState& rdv_state() const override { return rdv; }
  std::unique_ptr<AgentMemory> clone() const override {
    return std::make_unique<GatherMemory>(*this);
  }
};

class GatherProtocol final : public Protocol {
 public:
  std::unique_ptr<AgentMemory> make_memory(const AgentSetup& setup) const override {
    auto m = std::make_unique<GatherMemory>();
    m->id = setup.id;
    if (auto k = decode_small_uint(setup.input); k && *k >= 1) m->k = *k;
    auto [n, b] = diagonal_cell(0);
    m->cell_len = tau_max(n, b);
    m->rdv.group.insert(setup.id);
    m->rdv.leader = setup.id;
    return m;
  }

  Action step(AgentMemory& memory, const Observation& obs) const override {
    auto& m = static_cast<GatherMemory&>(memory);
    if (m.k == 0) return Action::decide(false);
    merge_groups(m.rdv, obs);
    if (static_cast<int>(m.rdv.group.size()) >= m.k) return Action::decide(true);
    while (obs.round >= saturating_add(m.cell_start, m.cell_len)) {
      m.cell_start += m.cell_len;
      ++m.cell;
      auto [n, b] = diagonal_cell(m.cell);
      m.cell_len = tau_max(n, b);
    }
    auto [n, b] = diagonal_cell(m.cell);
    return merged_tour_action(m.rdv, obs, m.id, n, m.cell_start,
                              saturating_add(m.cell_start, m.cell_len));
  }
};

// Rounds by which gathering must have terminated on a configuration with
// real node count n and largest id max_id: the end of the first cell whose
// guesses cover both.
inline std::int64_t gather_budget(int n, std::int64_t max_id) {
  int b = 1;
  while (b < 62 && (std::int64_t{1} << b) < max_id + 1) ++b;
  std::int64_t total = 0;
  for (int c = 0;; ++c) {
    auto [cn, cb] = diagonal_cell(c);
    total = saturating_add(total, tau_max(cn, cb));
    if (cn >= n && cb >= b) return saturating_add(total, 64);
  }
}

}  // namespace maw
