#pragma once

// Synchronous lock-step simulation of deterministic mobile agents.
//
// Each round every undecided agent receives an observation (degree of its
// node, the port it entered by, co-located agents with their exposed
// memories, a token flag) and returns one action. Observations never include
// node identity. Moves apply simultaneously; agents meet only when co-located
// at the end of a round, so two agents crossing the same edge in opposite
// directions do not meet.

#include <functional>
#include <memory>

#include "maw/config.hpp"

namespace maw {

struct AgentMemory {
  virtual ~AgentMemory() = default;
  virtual std::unique_ptr<AgentMemory> clone() const = 0;
};

// Exposed memory is the peer's entire state, including its certificate; the
// snapshot is taken at the start of the round, so information always crosses
// between agents with one round of latency.
struct PeerView {
  std::int64_t id = 0;
  std::unique_ptr<AgentMemory> memory;
};

struct Observation {
  std::int64_t round = 0;
  int degree = 0;
  int entry_port = 0;  // 0 in round zero and after staying
  bool token_here = false;
  std::optional<bool> oracle_reply;  // answer to last round's oracle call
  std::vector<PeerView> peers;       // ascending id

  const AgentMemory* peer_memory(std::int64_t id) const {
    for (const PeerView& p : peers)
      if (p.id == id) return p.memory.get();
    return nullptr;
  }
};

struct Action {
  enum class Kind { move, stay, place_token, pick_token, decide, oracle_call, follow };

  Kind kind = Kind::stay;
  int port = 0;                  // move
  bool yes = false;              // decide
  std::int64_t target = 0;       // follow: leader id
  std::string oracle_input;      // oracle_call
  std::int64_t wake_round = -1;  // stay: no state change promised before this round

  static Action move(int port) { return {Kind::move, port}; }
  static Action stay() { return {Kind::stay}; }
  // A stay with a promise: the agent's next steps stay idempotent until
  // `round` unless its observation changes. When every active agent promises,
  // the scheduler may skip ahead; protocols must base waiting on
  // Observation::round, not on counting their own steps.
  static Action stay_until(std::int64_t round) {
    Action a{Kind::stay};
    a.wake_round = round;
    return a;
  }
  static Action place_token() { return {Kind::place_token}; }
  static Action pick_token() { return {Kind::pick_token}; }
  static Action decide(bool yes) {
    Action a{Kind::decide};
    a.yes = yes;
    return a;
  }
  static Action oracle_call(std::string input) {
    Action a{Kind::oracle_call};
    a.oracle_input = std::move(input);
    return a;
  }
  // Mirror the movement of a co-located agent this round (merged groups).
  static Action follow(std::int64_t leader_id) {
    Action a{Kind::follow};
    a.target = leader_id;
    return a;
  }
};

struct AgentSetup {
  std::int64_t id = 0;
  std::string input;
  std::string certificate;
};

// A protocol is a deterministic function (id, input, certificate, memory,
// observation) -> (memory', action); identity, input and certificate enter
// through make_memory and stay inside the memory.
class Protocol {
 public:
  virtual ~Protocol() = default;
  virtual std::unique_ptr<AgentMemory> make_memory(const AgentSetup& setup) const = 0;
  virtual Action step(AgentMemory& memory, const Observation& obs) const = 0;
};

using Oracle = std::function<bool(const std::string&)>;

enum class Decision { undecided, yes, no };

struct TraceEntry {
  std::int64_t round = 0;
  std::int64_t id = 0;
  int node = 0;  // position at the start of the round
  std::string action;
};

struct OracleCallRecord {
  std::int64_t round = 0;
  std::int64_t id = 0;
  std::string input;
  bool answer = false;
};

struct SimulationFault {
  std::int64_t round = 0;
  std::int64_t id = 0;
  std::string message;
};

struct RunOutcome {
  std::vector<Decision> decisions;           // aligned with config agents
  std::vector<std::int64_t> decision_round;  // -1 while undecided
  std::int64_t rounds_used = 0;
  bool budget_exhausted = false;
  std::vector<int> final_nodes;
  int token_node = -1;  // -1: held or absent
  std::optional<SimulationFault> fault;
  std::vector<TraceEntry> trace;
  std::vector<std::pair<std::int64_t, int>> token_trace;  // (round, token node or -1)
  std::vector<OracleCallRecord> oracle_log;
  std::vector<std::unique_ptr<AgentMemory>> final_memories;

  bool all_decided() const {
    for (Decision d : decisions)
      if (d == Decision::undecided) return false;
    return true;
  }
  bool unanimous(bool yes) const {
    for (Decision d : decisions)
      if (d != (yes ? Decision::yes : Decision::no)) return false;
    return !decisions.empty();
  }
};

struct RunOptions {
  std::int64_t max_rounds = 1000000;
  bool record_trace = false;
  std::optional<int> token_start;          // node initially holding the token
  Oracle oracle;                           // empty: oracle calls are faults
  std::vector<std::string> certificates;   // per agent; missing entries = empty
};

namespace detail {

inline std::string action_to_string(const Action& a) {
  switch (a.kind) {
    case Action::Kind::move: return "move " + std::to_string(a.port);
    case Action::Kind::stay: return "stay";
    case Action::Kind::place_token: return "place";
    case Action::Kind::pick_token: return "pick";
    case Action::Kind::decide: return a.yes ? "decide yes" : "decide no";
    case Action::Kind::oracle_call: return "oracle";
    case Action::Kind::follow: return "follow " + std::to_string(a.target);
  }
  return "?";
}

}  // namespace detail

inline RunOutcome run(const InitialConfiguration& cfg, const Protocol& protocol,
                      const RunOptions& opts = {}) {
  int k = static_cast<int>(cfg.agents.size());
  Adjacency adj(cfg.graph);
  RunOutcome out;
  out.decisions.assign(k, Decision::undecided);
  out.decision_round.assign(k, -1);

  std::vector<int> pos(k), entry(k, 0);
  std::vector<std::unique_ptr<AgentMemory>> memory(k);
  std::vector<std::optional<bool>> pending_reply(k);
  for (int i = 0; i < k; ++i) {
    pos[i] = cfg.agents[i].node;
    AgentSetup setup;
    setup.id = cfg.agents[i].id;
    setup.input = cfg.agents[i].input;
    if (i < static_cast<int>(opts.certificates.size())) setup.certificate = opts.certificates[i];
    memory[i] = protocol.make_memory(setup);
  }
  int token_at = opts.token_start.value_or(-1);
  int token_held_by = -1;

  auto fault = [&](std::int64_t round, int agent, std::string msg) {
    out.fault = SimulationFault{round, agent >= 0 ? cfg.agents[agent].id : 0, std::move(msg)};
  };

  std::int64_t r = 0;
  std::int64_t last_round_run = -1;
  for (; r < opts.max_rounds; ++r) {
    bool any_active = false;
    for (int i = 0; i < k; ++i)
      if (out.decisions[i] == Decision::undecided) any_active = true;
    if (!any_active) break;
    last_round_run = r;

    // observations (memory snapshots are taken before anyone steps)
    std::vector<Observation> obs(k);
    for (int i = 0; i < k; ++i) {
      if (out.decisions[i] != Decision::undecided) continue;
      Observation& o = obs[i];
      o.round = r;
      o.degree = adj.degree(pos[i]);
      o.entry_port = entry[i];
      o.token_here = (token_at == pos[i]);
      o.oracle_reply = pending_reply[i];
      pending_reply[i].reset();
      for (int j = 0; j < k; ++j)
        if (j != i && pos[j] == pos[i]) o.peers.push_back({cfg.agents[j].id, memory[j]->clone()});
      std::sort(o.peers.begin(), o.peers.end(),
                [](const PeerView& a, const PeerView& b) { return a.id < b.id; });
    }

    std::vector<Action> act(k);
    for (int i = 0; i < k; ++i)
      if (out.decisions[i] == Decision::undecided) act[i] = protocol.step(*memory[i], obs[i]);

    // oracle calls resolve within the round; the agent stays while asking
    for (int i = 0; i < k; ++i) {
      if (out.decisions[i] != Decision::undecided) continue;
      if (act[i].kind != Action::Kind::oracle_call) continue;
      if (!opts.oracle) {
        fault(r, i, "oracle call without an oracle");
        break;
      }
      bool answer = opts.oracle(act[i].oracle_input);
      out.oracle_log.push_back({r, cfg.agents[i].id, act[i].oracle_input, answer});
      pending_reply[i] = answer;
      act[i] = Action::stay();
    }
    if (out.fault) break;

    // resolve follow chains to the leader's movement
    std::vector<Action> effective = act;
    for (int i = 0; i < k && !out.fault; ++i) {
      if (out.decisions[i] != Decision::undecided) continue;
      if (act[i].kind != Action::Kind::follow) continue;
      std::set<std::int64_t> chain;
      int cur = i;
      while (effective[cur].kind == Action::Kind::follow) {
        if (!chain.insert(cfg.agents[cur].id).second) {
          fault(r, i, "cyclic follow chain");
          break;
        }
        std::int64_t target = effective[cur].target;
        int next = -1;
        for (int j = 0; j < k; ++j)
          if (cfg.agents[j].id == target) next = j;
        if (next < 0 || pos[next] != pos[cur]) {
          fault(r, cur, "follow target is not co-located");
          break;
        }
        cur = next;
      }
      if (out.fault) break;
      // only movement is mirrored
      if (effective[cur].kind == Action::Kind::move) effective[i] = effective[cur];
      else effective[i] = Action::stay();
    }
    if (out.fault) break;

    if (opts.record_trace) {
      out.token_trace.emplace_back(r, token_at);
      for (int i = 0; i < k; ++i)
        if (out.decisions[i] == Decision::undecided)
          out.trace.push_back({r, cfg.agents[i].id, pos[i], detail::action_to_string(act[i])});
    }

    // validate and apply
    int picks = 0;
    for (int i = 0; i < k && !out.fault; ++i) {
      if (out.decisions[i] != Decision::undecided) continue;
      Action& a = effective[i];
      switch (a.kind) {
        case Action::Kind::move:
          if (a.port < 1 || a.port > adj.degree(pos[i]))
            fault(r, i, "illegal port " + std::to_string(a.port) + " at a node of degree " +
                            std::to_string(adj.degree(pos[i])));
          break;
        case Action::Kind::place_token:
          if (token_held_by != i) fault(r, i, "placing a token the agent does not hold");
          break;
        case Action::Kind::pick_token:
          if (token_at != pos[i]) fault(r, i, "picking a token that is not here");
          if (++picks > 1) fault(r, i, "two agents picking the token in one round");
          break;
        default: break;
      }
    }
    if (out.fault) break;

    std::vector<int> new_pos = pos;
    std::vector<int> new_entry(k, 0);
    for (int i = 0; i < k; ++i) {
      if (out.decisions[i] != Decision::undecided) continue;
      const Action& a = effective[i];
      switch (a.kind) {
        case Action::Kind::move: {
          PortEnd far = adj.neighbor(pos[i], a.port);
          new_pos[i] = far.node;
          new_entry[i] = far.port;
          break;
        }
        case Action::Kind::place_token:
          token_held_by = -1;
          token_at = pos[i];
          break;
        case Action::Kind::pick_token:
          token_held_by = i;
          token_at = -1;
          break;
        case Action::Kind::decide:
          out.decisions[i] = a.yes ? Decision::yes : Decision::no;
          out.decision_round[i] = r;
          break;
        default: break;
      }
    }
    pos = std::move(new_pos);
    entry = std::move(new_entry);

    // fast-forward: when every active agent promises an idempotent wait, no
    // observation can change until the earliest wake round
    if (!opts.record_trace) {
      std::int64_t wake = -1;
      bool all_sleeping = true;
      for (int i = 0; i < k; ++i) {
        if (out.decisions[i] != Decision::undecided) continue;
        if (effective[i].kind != Action::Kind::stay || act[i].wake_round <= r + 1) {
          all_sleeping = false;
          break;
        }
        wake = wake < 0 ? act[i].wake_round : std::min(wake, act[i].wake_round);
      }
      if (all_sleeping && wake > r + 1) r = std::min(wake, opts.max_rounds) - 1;
    }
  }

  out.rounds_used = 0;
  bool all = true;
  for (int i = 0; i < k; ++i) {
    if (out.decisions[i] == Decision::undecided) all = false;
    else out.rounds_used = std::max(out.rounds_used, out.decision_round[i]);
  }
  if (!all && !out.fault) {
    out.budget_exhausted = true;
    out.rounds_used = opts.max_rounds;
  }
  if (out.fault) out.rounds_used = last_round_run;
  out.final_nodes = pos;
  out.token_node = token_at;
  out.final_memories = std::move(memory);
  return out;
}

// Position of an agent at the start of a given round, reconstructed from a
// trace that may omit fast-forwarded (all-sleeping) rounds.
inline std::optional<int> position_at(const std::vector<TraceEntry>& trace, std::int64_t id,
                                      std::int64_t round) {
  std::optional<int> best;
  std::int64_t best_round = -1;
  for (const TraceEntry& t : trace)
    if (t.id == id && t.round <= round && t.round > best_round) {
      best = t.node;
      best_round = t.round;
    }
  return best;
}

}  // namespace maw
