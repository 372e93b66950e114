#pragma once

// Map construction for a single explorer and one movable token, starting
// with the token at the explorer's start node.
//
// The explorer grows a labeled copy of the graph (its map) one node per
// iteration. To resolve the first unresolved port (u0, p0) it carries the
// token to u0, steps through p0 to the far node X, leaves the token there
// and steps back. It then sweeps every mapped node: if the token shows up at
// a mapped node m, then X = m and the edge is recorded; otherwise X is new,
// gets the next map number, and the explorer probes every other port that
// was unresolved at the start of the iteration, stepping out and checking
// for the token to learn which of them also lead to X. Unresolved ports
// therefore always lead to unmapped nodes at iteration starts, token checks
// make the map injective, and an empty pend list makes it a bijective local
// isomorphism, so the finished map is a labeled copy of the graph.
//
// The token is abstracted behind here/pick/place so that a parked group of
// co-located agents can play the token role for collaborative mapping.

#include "maw/protocols/walks.hpp"
#include "maw/sim.hpp"

namespace maw {

struct MapExplorerCore {
  AgentMap map;
  int pos = -1;  // current map node; -1 off the map
  int token_at = -1;
  bool holding = false;
  bool done = false;

  enum class Mode { init, plan, go_token, go_anchor, back_from_probe, sweep, probes };
  Mode mode = Mode::init;

  std::vector<int> route;
  std::size_t route_i = 0;
  int anchor_u = -1, anchor_p = 0;  // pend being resolved this iteration
  int arrive_q = 0, arrive_deg = 0;  // entry port and degree observed at X
  std::vector<std::pair<int, int>> batch;  // other pends frozen at iteration start
  std::size_t batch_i = 0;
  int sweep_i = 0;
  int probe_u = -1, probe_p = 0;
  int new_node = -1;

  std::vector<std::pair<int, int>> pends() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < static_cast<int>(map.nodes.size()); ++u)
      for (int p = 1; p <= map.nodes[u].degree; ++p)
        if (!map.resolved(u, p)) out.emplace_back(u, p);
    return out;
  }

  // One round. Returns the action to take, or nullopt once the map is
  // complete (the caller finishes the round).
  template <class Token>
  std::optional<Action> advance(const Observation& obs, const Token& tok) {
    if (mode == Mode::init) {
      map.add_node(obs.degree);
      pos = 0;
      token_at = 0;
      mode = Mode::plan;
    }
    for (;;) {
      switch (mode) {
        case Mode::init:  // handled before the loop
          return Action::stay();
        case Mode::plan: {
          auto open = pends();
          if (open.empty()) {
            done = true;
            return std::nullopt;
          }
          anchor_u = open[0].first;
          anchor_p = open[0].second;
          batch.assign(open.begin() + 1, open.end());
          batch_i = 0;
          route = map.path(pos, token_at);
          route_i = 0;
          mode = Mode::go_token;
          continue;
        }
        case Mode::go_token: {
          if (route_i < route.size()) {
            int p = route[route_i++];
            pos = map.at(pos, p).node;
            return Action::move(p);
          }
          holding = true;
          token_at = -1;
          route = map.path(pos, anchor_u);
          route.push_back(anchor_p);
          route_i = 0;
          mode = Mode::go_anchor;
          return tok.pick();
        }
        case Mode::go_anchor: {
          if (route_i < route.size()) {
            int p = route[route_i++];
            pos = map.at(pos, p).node;  // the final hop leaves the map: pos -1
            return Action::move(p);
          }
          arrive_q = obs.entry_port;
          arrive_deg = obs.degree;
          holding = false;
          mode = Mode::back_from_probe;
          return tok.place();
        }
        case Mode::back_from_probe: {
          pos = anchor_u;
          sweep_i = 0;
          route.clear();
          route_i = 0;
          mode = Mode::sweep;
          return Action::move(arrive_q);
        }
        case Mode::sweep: {
          if (pos >= 0 && tok.here(obs)) {
            // the anchor port leads to a node mapped earlier
            map.link(anchor_u, anchor_p, pos, arrive_q);
            token_at = pos;
            mode = Mode::plan;
            continue;
          }
          if (route_i < route.size()) {
            int p = route[route_i++];
            pos = map.at(pos, p).node;
            return Action::move(p);
          }
          while (sweep_i < static_cast<int>(map.nodes.size()) && sweep_i == pos) ++sweep_i;
          if (sweep_i >= static_cast<int>(map.nodes.size())) {
            new_node = map.add_node(arrive_deg);
            map.link(anchor_u, anchor_p, new_node, arrive_q);
            token_at = new_node;
            mode = Mode::probes;
            continue;
          }
          route = map.path(pos, sweep_i);
          route_i = 0;
          continue;
        }
        case Mode::probes: {
          if (pos < 0) {
            // standing at the far end of (probe_u, probe_p)
            if (tok.here(obs)) map.link(probe_u, probe_p, new_node, obs.entry_port);
            pos = probe_u;
            return Action::move(obs.entry_port);
          }
          if (route_i < route.size()) {
            int p = route[route_i++];
            pos = map.at(pos, p).node;
            return Action::move(p);
          }
          while (batch_i < batch.size() &&
                 map.resolved(batch[batch_i].first, batch[batch_i].second))
            ++batch_i;
          if (batch_i >= batch.size()) {
            mode = Mode::plan;
            continue;
          }
          probe_u = batch[batch_i].first;
          probe_p = batch[batch_i].second;
          ++batch_i;
          route = map.path(pos, probe_u);
          route.push_back(probe_p);
          route_i = 0;
          continue;
        }
      }
    }
  }
};

struct RealToken {
  bool here(const Observation& o) const { return o.token_here; }
  Action pick() const { return Action::pick_token(); }
  Action place() const { return Action::place_token(); }
};

struct TokenMapMemory final : AgentMemory {
  MapExplorerCore core;
  std::unique_ptr<AgentMemory> clone() const override {
    return std::make_unique<TokenMapMemory>(*this);
  }
};

// Single agent, token initially at its start node; decides yes once the map
// is a complete copy of the graph. The map stays in the final memory.
class TokenMapProtocol final : public Protocol {
 public:
  std::unique_ptr<AgentMemory> make_memory(const AgentSetup&) const override {
    return std::make_unique<TokenMapMemory>();
  }

  Action step(AgentMemory& memory, const Observation& obs) const override {
    auto& m = static_cast<TokenMapMemory&>(memory);
    if (auto a = m.core.advance(obs, RealToken{})) return *a;
    return Action::decide(true);
  }
};

}  // namespace maw
