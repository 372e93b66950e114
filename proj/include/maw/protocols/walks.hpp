#pragma once

// Shared building blocks for agent protocols: round budgets, depth-bounded
// walks over the tree of port sequences, and the partial map an agent draws
// while exploring.

#include <limits>

#include "maw/sim.hpp"
#include "maw/view.hpp"

namespace maw {

// Budgets grow like n^n; at large claimed sizes they only need to stay
// ordered, not exact, so all budget arithmetic saturates at kBudgetCap.
inline constexpr std::int64_t kBudgetCap = std::numeric_limits<std::int64_t>::max() / 4;

inline std::int64_t saturating_pow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > kBudgetCap / (base > 0 ? base : 1)) return kBudgetCap;
    r *= base;
  }
  return r;
}

inline std::int64_t saturating_mul(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kBudgetCap / b) return kBudgetCap;
  return a * b;
}

// Saturates above kBudgetCap but below INT64_MAX / 2, so sums of round
// numbers and budgets never wrap.
inline std::int64_t saturating_add(std::int64_t a, std::int64_t b) {
  constexpr std::int64_t lim = std::numeric_limits<std::int64_t>::max() / 2;
  if (a > lim - b) return lim;
  return a + b;
}

// One padded depth-first tour takes 2 n^n rounds.
inline std::int64_t tour_length(int n) { return saturating_mul(2, saturating_pow(n, n)); }

// An agent with id i is back at its start for good after tau(n, i) rounds.
inline std::int64_t tau(int n, std::int64_t id) {
  return saturating_mul(id + 1, tour_length(n));
}

// Upper bound of tau over all ids on at most b bits.
inline std::int64_t tau_max(int n, int b) {
  if (b >= 62) return kBudgetCap;
  return saturating_mul(std::int64_t{1} << b, tour_length(n));
}

inline std::int64_t default_budget(int n, std::int64_t max_id) {
  return saturating_mul(2 * (max_id + 1), tour_length(n)) + 64;
}

// Decimal decode for inputs and certificates; anything but 1..9 digits is
// rejected, so results always fit an int.
inline std::optional<int> decode_small_uint(const std::string& s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + (c - '0');
  }
  return v;
}

// Depth-first traversal of the tree of all port sequences of length <= depth:
// every port of every node is descended, including the port of entry, and
// each descent is undone by moving back through the arrival port. Visits
// every node within distance `depth` of the start and ends back at the start.
//
// Drive it one move per round: pass the current node's degree and, right
// after a descending move, the arrival port.
class DepthFirstPortWalk {
 public:
  explicit DepthFirstPortWalk(int depth) : depth_(depth) {}

  bool finished() const { return finished_; }

  std::optional<int> step(int degree, int entry_port) {
    if (finished_) return std::nullopt;
    if (frames_.empty())
      frames_.push_back({0, 1});
    else if (descending_)
      frames_.push_back({entry_port, 1});
    Frame& f = frames_.back();
    bool below_limit = static_cast<int>(frames_.size()) - 1 < depth_;
    if (below_limit && f.next_port <= degree) {
      descending_ = true;
      return f.next_port++;
    }
    if (frames_.size() == 1) {
      finished_ = true;
      return std::nullopt;
    }
    int back = f.back_port;
    frames_.pop_back();
    descending_ = false;
    return back;
  }

 private:
  struct Frame {
    int back_port;  // port leading back to the parent tree node
    int next_port;  // next child port to try
  };
  int depth_;
  std::vector<Frame> frames_;
  bool descending_ = false;
  bool finished_ = false;
};

// Walks the port-sequence tree to a fixed depth while assembling the start
// node's truncated view bottom-up in a ViewDag. After the final step (the one
// returning nullopt) the agent is back at its start and view() is the handle
// of its depth-`depth` view.
class ViewWalk {
 public:
  ViewWalk(ViewDag* dag, int depth) : dag_(dag), depth_(depth) {}

  bool finished() const { return finished_; }
  ViewDag::Handle view() const { return view_; }

  // Memories holding a walk and its dag by value must repoint the walk at
  // the copied dag when cloned.
  void rebind(ViewDag* dag) { dag_ = dag; }

  std::optional<int> step(int degree, int entry_port) {
    if (finished_) return std::nullopt;
    if (frames_.empty() && !started_) {
      started_ = true;
      if (depth_ == 0) {
        view_ = dag_->make(degree, {});
        finished_ = true;
        return std::nullopt;
      }
      frames_.push_back({degree, 0, 1, {}});
    } else if (descending_) {
      if (static_cast<int>(frames_.size()) == depth_) {
        // leaf of the view: record its degree and bounce back
        frames_.back().children.emplace_back(entry_port, dag_->make(degree, {}));
        descending_ = false;
        return entry_port;
      }
      frames_.push_back({degree, entry_port, 1, {}});
    }
    Frame& f = frames_.back();
    if (f.next_port <= f.degree) {
      descending_ = true;
      return f.next_port++;
    }
    ViewDag::Handle h = dag_->make(f.degree, f.children);
    int back = f.back_port;
    frames_.pop_back();
    if (frames_.empty()) {
      view_ = h;
      finished_ = true;
      return std::nullopt;
    }
    frames_.back().children.emplace_back(back, h);
    descending_ = false;
    return back;
  }

 private:
  struct Frame {
    int degree;
    int back_port;
    int next_port;
    std::vector<std::pair<int, ViewDag::Handle>> children;  // (far port, subview)
  };
  ViewDag* dag_;
  int depth_;
  std::vector<Frame> frames_;
  bool started_ = false;
  bool descending_ = false;
  bool finished_ = false;
  ViewDag::Handle view_ = -1;
};

// Partial map drawn by an exploring agent. Nodes are numbered in discovery
// order; port slots hold the far end once the corresponding edge is resolved.
struct AgentMap {
  struct Node {
    int degree = 0;
    std::vector<PortEnd> ports;  // ports[p-1]; node -1 while unresolved
  };
  std::vector<Node> nodes;

  int add_node(int degree) {
    Node n;
    n.degree = degree;
    n.ports.assign(degree, PortEnd{});
    nodes.push_back(std::move(n));
    return static_cast<int>(nodes.size()) - 1;
  }

  bool resolved(int u, int p) const { return nodes[u].ports[p - 1].node >= 0; }

  void link(int u, int p, int v, int q) {
    nodes[u].ports[p - 1] = {v, q};
    nodes[v].ports[q - 1] = {u, p};
  }

  PortEnd at(int u, int p) const { return nodes[u].ports[p - 1]; }

  bool complete() const {
    for (const Node& n : nodes)
      for (const PortEnd& e : n.ports)
        if (e.node < 0) return false;
    return true;
  }

  // Ports of the lexicographically least shortest resolved path, or empty if
  // from == to.
  std::vector<int> path(int from, int to) const {
    int n = static_cast<int>(nodes.size());
    std::vector<int> prev_node(n, -1), prev_port(n, 0);
    std::vector<bool> seen(n, false);
    std::vector<int> queue{from};
    seen[from] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int p = 1; p <= nodes[u].degree; ++p) {
        PortEnd e = nodes[u].ports[p - 1];
        if (e.node < 0 || seen[e.node]) continue;
        seen[e.node] = true;
        prev_node[e.node] = u;
        prev_port[e.node] = p;
        queue.push_back(e.node);
      }
    }
    std::vector<int> ports;
    for (int v = to; v != from; v = prev_node[v]) ports.push_back(prev_port[v]);
    std::reverse(ports.begin(), ports.end());
    return ports;
  }

  PortLabeledGraph to_graph() const {
    PortLabeledGraph g;
    g.node_count = static_cast<int>(nodes.size());
    std::set<Edge> edges;
    for (int u = 0; u < g.node_count; ++u)
      for (int p = 1; p <= nodes[u].degree; ++p) {
        PortEnd e = nodes[u].ports[p - 1];
        if (e.node >= 0) edges.insert(canonical_edge(u, p, e.node, e.port));
      }
    g.edges.assign(edges.begin(), edges.end());
    return g;
  }
};

}  // namespace maw
