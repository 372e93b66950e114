#pragma once

// Tree recognition by walking: depth-first traversal that never re-enters
// the port it arrived by unfolds the universal cover of the graph. The walk
// returns to its start with every port tried after exactly 2(s-1) moves when
// the graph is a tree with s nodes, and never when the graph has a cycle,
// because the cover is then infinite. Completion is independent of the start
// node, so independent walkers decide in the same round.

#include "maw/protocols/walks.hpp"
#include "maw/sim.hpp"

namespace maw {

// Drive with one call per round; step returns the port to move through, or
// nullopt once the traversal has returned to the start (then moves() is
// final and the walk visited every node).
class TreeWalk {
 public:
  bool finished() const { return finished_; }
  std::int64_t moves() const { return moves_; }
  int max_degree() const { return max_degree_; }

  std::optional<int> step(int degree, int entry_port) {
    if (finished_) return std::nullopt;
    max_degree_ = std::max(max_degree_, degree);
    if (frames_.empty())
      frames_.push_back({0, 1});
    else if (descending_)
      frames_.push_back({entry_port, 1});
    Frame& f = frames_.back();
    if (f.next_port == f.entry_port) ++f.next_port;
    if (f.next_port <= degree) {
      descending_ = true;
      ++moves_;
      return f.next_port++;
    }
    int back = f.entry_port;
    frames_.pop_back();
    descending_ = false;
    if (frames_.empty()) {
      finished_ = true;
      return std::nullopt;
    }
    ++moves_;
    return back;
  }

 private:
  struct Frame {
    int entry_port;  // port back to the parent; 0 at the start node
    int next_port;
  };
  std::vector<Frame> frames_;
  bool descending_ = false;
  bool finished_ = false;
  std::int64_t moves_ = 0;
  int max_degree_ = 0;
};

struct TreeWalkMemory final : AgentMemory {
  int x = 0;  // claimed node count; 0 after a malformed input or certificate
  TreeWalk walk;
  std::unique_ptr<AgentMemory> clone() const override {
    return std::make_unique<TreeWalkMemory>(*this);
  }
};

// Decides whether the graph is a tree with exactly x nodes, x taken from the
// shared input: complete at exactly 2(x-1) moves.
class TreesizeDecideProtocol final : public Protocol {
 public:
  std::unique_ptr<AgentMemory> make_memory(const AgentSetup& setup) const override {
    auto m = std::make_unique<TreeWalkMemory>();
    if (auto x = decode_small_uint(setup.input); x && *x >= 1) m->x = *x;
    return m;
  }

  Action step(AgentMemory& memory, const Observation& obs) const override {
    auto& m = static_cast<TreeWalkMemory&>(memory);
    if (m.x == 0) return Action::decide(false);
    std::int64_t budget = 2 * (static_cast<std::int64_t>(m.x) - 1);
    auto port = m.walk.step(obs.degree, obs.entry_port);
    if (!port) return Action::decide(m.walk.moves() == budget);
    if (m.walk.moves() > budget) return Action::decide(false);
    return Action::move(*port);
  }
};

// Verifies tree membership (and with require_path, that the tree is a path):
// the certificate claims the node count, bounding the walk. Completion at
// any length proves a tree; honest certificates make the budget suffice.
class TreeVerifyProtocol final : public Protocol {
 public:
  explicit TreeVerifyProtocol(bool require_path) : require_path_(require_path) {}

  std::unique_ptr<AgentMemory> make_memory(const AgentSetup& setup) const override {
    auto m = std::make_unique<TreeWalkMemory>();
    if (!setup.input.empty()) return m;  // instances carry empty inputs
    if (auto x = decode_small_uint(setup.certificate); x && *x >= 1) m->x = *x;
    return m;
  }

  Action step(AgentMemory& memory, const Observation& obs) const override {
    auto& m = static_cast<TreeWalkMemory&>(memory);
    if (m.x == 0) return Action::decide(false);
    std::int64_t budget = 2 * (static_cast<std::int64_t>(m.x) - 1);
    auto port = m.walk.step(obs.degree, obs.entry_port);
    if (!port) return Action::decide(!require_path_ || m.walk.max_degree() <= 2);
    if (m.walk.moves() > budget) return Action::decide(false);
    return Action::move(*port);
  }

 private:
  bool require_path_;
};

}  // namespace maw
