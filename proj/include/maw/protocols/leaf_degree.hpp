#pragma once

// Existence of a node with a given degree, verified by a port path: the
// certificate is a dot-separated port sequence ("2.1.3", empty for the start
// node itself) leading from the agent's start to a witness node. The agent
// follows it and checks the degree at the end. Any malformed certificate or
// impossible port means no; a yes always reports a really observed node.

#include "maw/protocols/walks.hpp"
#include "maw/sim.hpp"

namespace maw {

namespace detail {

inline std::optional<std::vector<int>> decode_port_path(const std::string& s) {
  std::vector<int> ports;
  if (s.empty()) return ports;
  std::size_t at = 0;
  while (at <= s.size()) {
    std::size_t dot = s.find('.', at);
    if (dot == std::string::npos) dot = s.size();
    auto p = decode_small_uint(s.substr(at, dot - at));
    if (!p || *p < 1) return std::nullopt;
    ports.push_back(*p);
    at = dot + 1;
  }
  return ports;
}

}  // namespace detail

struct PortPathMemory final : AgentMemory {
  bool bad = false;
  std::vector<int> path;
  std::size_t at = 0;
  std::unique_ptr<AgentMemory> clone() const override {
    return std::make_unique<PortPathMemory>(*this);
  }
};

class DegreeWitnessProtocol final : public Protocol {
 public:
  explicit DegreeWitnessProtocol(int target_degree) : target_(target_degree) {}

  std::unique_ptr<AgentMemory> make_memory(const AgentSetup& setup) const override {
    auto m = std::make_unique<PortPathMemory>();
    if (!setup.input.empty()) {
      m->bad = true;  // instances carry empty inputs
      return m;
    }
    if (auto p = detail::decode_port_path(setup.certificate)) m->path = *p;
    else m->bad = true;
    return m;
  }

  Action step(AgentMemory& memory, const Observation& obs) const override {
    auto& m = static_cast<PortPathMemory&>(memory);
    if (m.bad) return Action::decide(false);
    if (m.at < m.path.size()) {
      int p = m.path[m.at++];
      if (p > obs.degree) return Action::decide(false);
      return Action::move(p);
    }
    return Action::decide(obs.degree == target_);
  }

 private:
  int target_;
};

}  // namespace maw
