#pragma once

// Name-keyed registry of every runnable protocol, with the bindings a run
// needs: which problem oracle to attach and whether the token starts on the
// first agent's node.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "maw/problems.hpp"
#include "maw/protocols/collab_map.hpp"
#include "maw/protocols/cycle_cosun.hpp"
#include "maw/protocols/dovetail.hpp"
#include "maw/protocols/gather.hpp"
#include "maw/protocols/leaf_degree.hpp"
#include "maw/protocols/mapping.hpp"
#include "maw/protocols/omega.hpp"
#include "maw/protocols/rdv.hpp"
#include "maw/protocols/reduce.hpp"
#include "maw/protocols/token_map.hpp"
#include "maw/sim.hpp"

namespace maw {

// Decides whether the agent's own start has odd degree; defined for a lone
// agent with no input.
class OddDegreeProtocol final : public Protocol {
 public:
  std::unique_ptr<AgentMemory> make_memory(const AgentSetup& setup) const override {
    auto m = std::make_unique<PlainMemory>();
    m->ok = setup.input.empty();
    return m;
  }

  Action step(AgentMemory& memory, const Observation& obs) const override {
    auto& m = static_cast<PlainMemory&>(memory);
    return Action::decide(m.ok && obs.degree % 2 == 1);
  }

 private:
  struct PlainMemory final : AgentMemory {
    bool ok = false;
    std::unique_ptr<AgentMemory> clone() const override {
      return std::make_unique<PlainMemory>(*this);
    }
  };
};

struct ProtocolSpec {
  std::string name;
  std::string summary;
  std::function<std::unique_ptr<Protocol>()> make;
  std::string oracle;        // problem to bind as the oracle; empty: none
  bool wants_token = false;  // seed the token at the first agent's start
};

inline const std::vector<ProtocolSpec>& protocol_registry() {
  static const std::vector<ProtocolSpec> list = [] {
    std::vector<ProtocolSpec> out;
    auto add = [&out](std::string name, std::string summary,
                      std::function<std::unique_ptr<Protocol>()> make,
                      std::string oracle = "", bool token = false) {
      out.push_back({std::move(name), std::move(summary), std::move(make),
                     std::move(oracle), token});
    };
    add("rdv", "two agents meet and return home by staggered tours",
        [] { return std::make_unique<RendezvousProtocol>(); });
    add("gather", "k agents gather; input is k",
        [] { return std::make_unique<GatherProtocol>(); });
    add("omega-verify",
        "verifier for the teamsize/quotient product; certificate is the node count",
        [] { return std::make_unique<OmegaVerifyProtocol>(); });
    add("token-map", "lone agent maps the graph with the token",
        [] { return std::make_unique<TokenMapProtocol>(); }, "", true);
    add("collab-map", "co-located team maps the graph around a virtual token",
        [] { return std::make_unique<CollabMapProtocol>(); });
    add("treesize-decide", "decides tree on exactly x nodes; input is x",
        [] { return std::make_unique<TreesizeDecideProtocol>(); });
    add("tree-verify", "verifies tree; certificate claims the node count",
        [] { return std::make_unique<TreeVerifyProtocol>(false); });
    add("path-verify", "verifies path; certificate claims the node count",
        [] { return std::make_unique<TreeVerifyProtocol>(true); });
    add("leaf-verify", "verifies a leaf exists; certificate is a port path",
        [] { return std::make_unique<DegreeWitnessProtocol>(1); });
    for (int k = 2; k <= 4; ++k)
      add("degree-" + std::to_string(k) + "-verify",
          "verifies a degree-" + std::to_string(k) +
              " node exists; certificate is a port path",
          [k] { return std::make_unique<DegreeWitnessProtocol>(k); });
    add("odd-decide", "lone agent decides whether its start has odd degree",
        [] { return std::make_unique<OddDegreeProtocol>(); });
    for (const char* name : {"tree", "path", "teamsize", "treesize"})
      add(std::string("reduce-") + name,
          std::string("decides ") + name + " through the combined oracle",
          [name] { return std::make_unique<ReduceProtocol>(*find_problem(name)); },
          "omega");
    add("cycle-decide", "decides cycle through the quotient oracle",
        [] { return std::make_unique<CycleCosunProtocol>(CycleCosunProtocol::Mode::cycle); },
        "quotient");
    add("cosun-decide", "decides co-sun through the quotient oracle",
        [] { return std::make_unique<CycleCosunProtocol>(CycleCosunProtocol::Mode::cosun); },
        "quotient");
    add("cycle-cosun",
        "decides the cycle/co-sun product through the quotient oracle; the "
        "input digit picks the component",
        [] { return std::make_unique<CycleCosunProtocol>(CycleCosunProtocol::Mode::product); },
        "quotient");
    add("dovetail-treesize",
        "lone agent decides tree-on-x-nodes by dovetailing verifier pairs; "
        "input is x",
        [] { return std::make_unique<DovetailProtocol>(); }, "", true);
    return out;
  }();
  return list;
}

inline const ProtocolSpec* find_protocol(const std::string& name) {
  for (const ProtocolSpec& p : protocol_registry())
    if (p.name == name) return &p;
  return nullptr;
}

}  // namespace maw
