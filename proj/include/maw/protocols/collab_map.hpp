#pragma once

// Collaborative map construction for a co-located group without a token: the
// parked non-explorer agents collectively play the token. The largest id
// explores with the token-map core; "pick" sets its holding flag, which
// members read from its snapshot one round later and mirror its moves, and
// "place" clears the flag, which parks them. "token here" becomes "some
// member is co-located".
//
// Every agent records its entry ports from round zero. When the map is done
// the explorer walks back to the members, raises a done flag and publishes
// the map; each agent then folds its own reversed entry history through the
// map to find its start node, and one round later everyone can read every
// start, id and input off the co-located snapshots, reconstruct the full
// initial configuration, and decide a configuration predicate unanimously.

#include <functional>

#include "maw/config.hpp"
#include "maw/protocols/token_map.hpp"
#include "maw/sim.hpp"

namespace maw {

struct CollabState {
  bool active = false;
  std::vector<std::int64_t> group;  // ascending, includes self
  std::int64_t explorer = 0;
  MapExplorerCore core;  // used by the explorer only
  std::vector<int> route_home;
  std::size_t route_home_i = 0;
  bool done_broadcast = false;
  std::vector<int> entry_history;  // entry port per round, 0 when not moved
  bool start_known = false;
  int start_node = -1;
};

// Implemented by memories that expose collaborative-map state to co-located
// agents.
struct CollabAccess {
  virtual ~CollabAccess() = default;
  virtual const CollabState& collab_state() const = 0;
  virtual std::int64_t agent_id() const = 0;
  virtual const std::string& agent_input() const = 0;
};

struct VirtualToken {
  const std::vector<std::int64_t>* group;
  std::int64_t explorer;

  bool here(const Observation& o) const {
    for (const PeerView& p : o.peers)
      if (p.id != explorer &&
          std::find(group->begin(), group->end(), p.id) != group->end())
        return true;
    return false;
  }
  Action pick() const { return Action::stay(); }
  Action place() const { return Action::stay(); }
};

// Position at round zero, given the position now and the entry port of every
// round so far: undo the moves back to front on the completed map.
inline int fold_start(const AgentMap& map, int pos, const std::vector<int>& entries) {
  int at = pos;
  for (std::size_t i = entries.size(); i-- > 1;)
    if (entries[i] != 0) at = map.at(at, entries[i]).node;
  return at;
}

using ConfigPredicate = std::function<bool(const InitialConfiguration&)>;

namespace detail {

// Reconstructed configuration once every group member published its start.
// Returns nullopt while someone is still missing.
inline std::optional<InitialConfiguration> assemble_config(
    const CollabState& s, std::int64_t self, const std::string& input,
    const AgentMap& map, const Observation& obs) {
  InitialConfiguration cfg;
  cfg.graph = map.to_graph();
  for (std::int64_t id : s.group) {
    if (id == self) {
      if (!s.start_known) return std::nullopt;
      cfg.agents.push_back({s.start_node, id, input});
      continue;
    }
    const AgentMemory* pm = obs.peer_memory(id);
    auto* ca = dynamic_cast<const CollabAccess*>(pm);
    if (!ca || !ca->collab_state().start_known) return std::nullopt;
    cfg.agents.push_back({ca->collab_state().start_node, id, ca->agent_input()});
  }
  return cfg;
}

}  // namespace detail

// One collaborative round; call every round from the collab start on. The
// group must be set before the first call and the entry history must already
// cover earlier rounds.
inline Action collab_step(CollabState& s, std::int64_t self, const std::string& input,
                          const Observation& obs, const ConfigPredicate& verdict) {
  s.entry_history.push_back(obs.entry_port);
  if (self == s.explorer) {
    if (!s.core.done) {
      VirtualToken tok{&s.group, s.explorer};
      if (auto a = s.core.advance(obs, tok)) return *a;
      s.route_home = s.core.map.path(s.core.pos, s.core.token_at);
      s.route_home_i = 0;
    }
    if (s.route_home_i < s.route_home.size()) {
      int p = s.route_home[s.route_home_i++];
      s.core.pos = s.core.map.at(s.core.pos, p).node;
      return Action::move(p);
    }
    if (!s.done_broadcast) {
      s.done_broadcast = true;
      s.start_node = fold_start(s.core.map, s.core.pos, s.entry_history);
      s.start_known = true;
      return Action::stay();
    }
    if (auto cfg = detail::assemble_config(s, self, input, s.core.map, obs))
      return Action::decide(verdict(*cfg));
    return Action::stay();
  }
  const AgentMemory* em = obs.peer_memory(s.explorer);
  auto* ea = dynamic_cast<const CollabAccess*>(em);
  if (!ea) return Action::stay();  // explorer is away probing
  const CollabState& es = ea->collab_state();
  if (es.done_broadcast) {
    if (!s.start_known) {
      s.start_node = fold_start(es.core.map, es.core.pos, s.entry_history);
      s.start_known = true;
      return Action::stay();
    }
    if (auto cfg = detail::assemble_config(s, self, input, es.core.map, obs))
      return Action::decide(verdict(*cfg));
    return Action::stay();
  }
  if (es.core.holding) return Action::follow(s.explorer);
  return Action::stay();
}

struct CollabMapMemory final : AgentMemory, CollabAccess {
  std::int64_t id = 0;
  std::string input;
  CollabState collab;

  const CollabState& collab_state() const override { return collab; }
  std::int64_t agent_id() const override { return id; }
  const std::string& agent_input() const override { return input; }
  std::unique_ptr<AgentMemory> clone() const override {
    return std::make_unique<CollabMapMemory>(*this);
  }
};

// Standalone collaborative mapping; requires at least two agents starting on
// one node. Decides the given predicate of the reconstructed configuration,
// or yes by default; a lone agent decides no.
class CollabMapProtocol final : public Protocol {
 public:
  CollabMapProtocol() : verdict_([](const InitialConfiguration&) { return true; }) {}
  explicit CollabMapProtocol(ConfigPredicate verdict) : verdict_(std::move(verdict)) {}

  std::unique_ptr<AgentMemory> make_memory(const AgentSetup& setup) const override {
    auto m = std::make_unique<CollabMapMemory>();
    m->id = setup.id;
    m->input = setup.input;
    return m;
  }

  Action step(AgentMemory& memory, const Observation& obs) const override {
    auto& m = static_cast<CollabMapMemory&>(memory);
    if (!m.collab.active) {
      m.collab.active = true;
      m.collab.group.push_back(m.id);
      for (const PeerView& p : obs.peers) m.collab.group.push_back(p.id);
      std::sort(m.collab.group.begin(), m.collab.group.end());
      m.collab.explorer = m.collab.group.back();
      if (m.collab.group.size() < 2) return Action::decide(false);
    }
    return collab_step(m.collab, m.id, m.input, obs, verdict_);
  }

 private:
  ConfigPredicate verdict_;
};

}  // namespace maw
