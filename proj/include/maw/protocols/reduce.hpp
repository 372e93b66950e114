#pragma once

// Decides a registered problem through an oracle answering the combined
// teamsize/quotient queries. Agents first probe the oracle for the team size
// k: queries (1, j) for j = 1, 2, ... until the first no, which lands at
// j = |S|. A team of k >= 2 gathers, maps the graph around a virtual token
// and evaluates the problem's ground truth on the reconstructed
// configuration. A lone agent asks the oracle about the quotient of each
// validated graph in enumeration order; the first no pins down both the live
// graph's quotient and a concrete graph realizing it. It then walks its view
// deep enough to reconstruct the quotient together with its own class, picks
// a start in the realizing graph from the matching class and evaluates the
// ground truth there.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maw/generate.hpp"
#include "maw/graph.hpp"
#include "maw/iso.hpp"
#include "maw/problems.hpp"
#include "maw/protocols/collab_map.hpp"
#include "maw/protocols/gather.hpp"
#include "maw/protocols/walks.hpp"
#include "maw/sim.hpp"
#include "maw/view.hpp"

namespace maw {

// Solo-branch candidate: a validated graph, its quotient and the oracle
// query asking whether the live quotient differs from it.
struct SoloCandidate {
  PortLabeledGraph graph;
  QuotientResult quotient;
  std::string query;
};

// The exhaustive enumeration is desk-scale only up to four nodes; a lone
// agent on a larger graph exhausts the stream and stays undecided.
inline constexpr int kSoloNodeCap = 4;

inline const std::vector<SoloCandidate>& solo_candidates() {
  static const std::vector<SoloCandidate> list = [] {
    std::vector<SoloCandidate> out;
    for (int n = 1; n <= kSoloNodeCap; ++n)
      for (const PortLabeledGraph& g : enumerate_connected(n)) {
        SoloCandidate c;
        c.graph = g;
        c.quotient = quotient_result(g);
        std::string ser = serialize_graph(c.quotient.graph);
        for (char& ch : ser)
          if (ch == '\n') ch = ';';
        c.query = "2" + ser;
        out.push_back(std::move(c));
      }
    return out;
  }();
  return list;
}

struct ReduceMemory final : AgentMemory, MergedRdvAccess, CollabAccess {
  std::int64_t id = 0;
  std::string input;
  int phase = 0;  // 0 probe, 1 gather, 2 collab, 3 solo
  std::int64_t probe_j = 0;
  std::int64_t k = 0;

  // team leg
  int cell = 0;
  std::int64_t cell_start = 0;
  std::int64_t cell_len = 0;
  MergedRdvState rdv;
  CollabState collab;

  // solo leg
  std::size_t cand = 0;  // candidates queried so far
  int found = -1;        // candidate index realizing the quotient
  int depth = 0;
  ViewDag dag;
  ViewWalk walk{nullptr, 0};

  const MergedRdvState& rdv_state() const override { return rdv; }
  const CollabState& collab_state() const override { return collab; }
  std::int64_t agent_id() const override { return id; }
  const std::string& agent_input() const override { return input; }
  std::unique_ptr<AgentMemory> clone() const override {
    auto m = std::make_unique<ReduceMemory>(*this);
    m->walk.rebind(&m->dag);
    return m;
  }
};

class ReduceProtocol final : public Protocol {
 public:
  explicit ReduceProtocol(Problem problem) : problem_(std::move(problem)) {}

  std::unique_ptr<AgentMemory> make_memory(const AgentSetup& setup) const override {
    auto m = std::make_unique<ReduceMemory>();
    m->id = setup.id;
    m->input = setup.input;
    m->rdv.group.insert(setup.id);
    m->rdv.leader = setup.id;
    return m;
  }

  Action step(AgentMemory& memory, const Observation& obs) const override {
    auto& m = static_cast<ReduceMemory&>(memory);
    // collab_step records its own history; every other phase records here so
    // the start can be folded back through the completed map at the end
    if (m.phase != 2) m.collab.entry_history.push_back(obs.entry_port);
    switch (m.phase) {
      case 0:
        return probe_step(m, obs);
      case 1:
        return gather_step(m, obs);
      case 2:
        return collab_step(m.collab, m.id, m.input, obs,
                           [this](const InitialConfiguration& cfg) {
                             return problem_.ground_truth(cfg);
                           });
      default:
        return solo_step(m, obs);
    }
  }

 private:
  Action probe_step(ReduceMemory& m, const Observation& obs) const {
    if (m.probe_j > 0 && obs.oracle_reply && !*obs.oracle_reply) {
      m.k = m.probe_j;
      if (m.k == 1) {
        m.phase = 3;
        return solo_step(m, obs);
      }
      m.phase = 1;
      auto [n, b] = diagonal_cell(0);
      m.cell_len = tau_max(n, b);
      return gather_step(m, obs);
    }
    ++m.probe_j;
    return Action::oracle_call("1" + std::to_string(m.probe_j));
  }

  Action gather_step(ReduceMemory& m, const Observation& obs) const {
    merge_groups(m.rdv, obs);
    if (static_cast<std::int64_t>(m.rdv.group.size()) >= m.k) {
      // whole team on one node; all members switch together this round
      m.phase = 2;
      m.collab.active = true;
      m.collab.group.assign(m.rdv.group.begin(), m.rdv.group.end());
      m.collab.explorer = *m.rdv.group.rbegin();
      return Action::stay();
    }
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

  Action solo_step(ReduceMemory& m, const Observation& obs) const {
    const std::vector<SoloCandidate>& cands = solo_candidates();
    if (m.found < 0) {
      if (m.cand > 0 && obs.oracle_reply && !*obs.oracle_reply) {
        m.found = static_cast<int>(m.cand) - 1;
        m.depth = 2 * cands[m.found].quotient.graph.node_count;
        m.walk = ViewWalk(&m.dag, m.depth);
      } else if (m.cand < cands.size()) {
        return Action::oracle_call(cands[m.cand++].query);
      } else {
        return Action::stay_until(kBudgetCap);  // beyond the validated range
      }
    }
    if (auto p = m.walk.step(obs.degree, obs.entry_port)) return Action::move(*p);
    const SoloCandidate& c = cands[m.found];
    ViewQuotient vq = quotient_of_view(m.dag, m.walk.view(), m.depth);
    auto iso = quotient_isomorphism(vq.graph, c.quotient.graph);
    if (!iso) return Action::decide(false);  // unreachable for a sound oracle
    int want = (*iso)[vq.root_class];
    for (int t = 0; t < c.graph.node_count; ++t)
      if (c.quotient.class_of[t] == want) {
        InitialConfiguration cfg;
        cfg.graph = c.graph;
        cfg.agents.push_back({t, m.id, m.input});
        return Action::decide(problem_.ground_truth(cfg));
      }
    return Action::decide(false);  // unreachable: every class is inhabited
  }

  Problem problem_;
};

// Rounds by which the reduction must have decided, whichever leg it takes:
// probing plus either the covering gather cell and the collaborative map, or
// the candidate scan and the deep view walk.
inline std::int64_t reduce_budget(int n, std::int64_t max_id, int max_degree) {
  std::int64_t cube = std::int64_t{n} * n * n;
  std::int64_t team = saturating_add(max_id + 8, gather_budget(n, max_id));
  team = saturating_add(team, saturating_add(32 * cube, 256));
  std::int64_t walk =
      saturating_mul(4, saturating_pow(std::max(2, max_degree), 2 * n + 1));
  std::int64_t solo = saturating_add(
      static_cast<std::int64_t>(solo_candidates().size()) + 8, walk);
  return saturating_add(std::max(team, solo), 64);
}

}  // namespace maw
