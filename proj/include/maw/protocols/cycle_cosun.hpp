#pragma once

// Single-agent decision of "is the graph a consistently labeled cycle" and
// "is it not a sun", given an oracle answering whether the live graph's
// quotient differs from a queried candidate. The agent queries the candidate
// stream in weight order until the first no, which identifies the quotient
// exactly; cycles are the graphs whose quotient is the one-node loop O, suns
// the ones whose quotient is the two-node graph P.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "maw/graph.hpp"
#include "maw/iso.hpp"
#include "maw/quotient_enum.hpp"
#include "maw/sim.hpp"

namespace maw {

// Quotient of every consistently labeled cycle: one class, one loop pairing
// ports 1 and 2.
inline const QuotientGraph& quotient_O() {
  static const QuotientGraph q = [] {
    QuotientGraph out;
    out.node_count = 1;
    out.add_edge(0, 1, 0, 2);
    out.normalize();
    return out;
  }();
  return q;
}

// Quotient of every sun: the cycle class with its own loop, tied by port 3
// to the pendant class.
inline const QuotientGraph& quotient_P() {
  static const QuotientGraph q = [] {
    QuotientGraph out;
    out.node_count = 2;
    out.add_edge(0, 1, 0, 2);
    out.add_edge(0, 3, 1, 1);
    out.normalize();
    return out;
  }();
  return q;
}

// Candidate stream shared across runs; the workbench drives runs one at a
// time, so the lazy extension needs no locking.
inline QuotientCandidateStream& shared_candidate_stream() {
  static QuotientCandidateStream s;
  return s;
}

struct CycleCosunMemory final : AgentMemory {
  std::string input;
  std::int64_t asked = 0;  // candidates queried so far

  std::unique_ptr<AgentMemory> clone() const override {
    return std::make_unique<CycleCosunMemory>(*this);
  }
};

class CycleCosunProtocol final : public Protocol {
 public:
  enum class Mode { cycle, cosun, product };

  explicit CycleCosunProtocol(Mode mode) : mode_(mode) {}

  std::unique_ptr<AgentMemory> make_memory(const AgentSetup& setup) const override {
    auto m = std::make_unique<CycleCosunMemory>();
    m->input = setup.input;
    return m;
  }

  Action step(AgentMemory& memory, const Observation& obs) const override {
    auto& m = static_cast<CycleCosunMemory&>(memory);
    if (m.asked > 0 && obs.oracle_reply && !*obs.oracle_reply) {
      const QuotientGraph& found =
          shared_candidate_stream().at(static_cast<std::size_t>(m.asked - 1));
      bool cycle_yes = quotient_isomorphic(found, quotient_O());
      bool cosun_yes = !quotient_isomorphic(found, quotient_P());
      switch (mode_) {
        case Mode::cycle:
          return Action::decide(cycle_yes);
        case Mode::cosun:
          return Action::decide(cosun_yes);
        case Mode::product: {
          if (m.input.empty()) return Action::decide(false);
          if (m.input[0] == '1') return Action::decide(cycle_yes);
          if (m.input[0] == '2') return Action::decide(cosun_yes);
          return Action::decide(false);
        }
      }
    }
    const QuotientGraph& next =
        shared_candidate_stream().at(static_cast<std::size_t>(m.asked++));
    std::string ser = serialize_graph(next);
    for (char& c : ser)
      if (c == '\n') c = ';';
    return Action::oracle_call(ser);
  }

 private:
  Mode mode_;
};

}  // namespace maw
