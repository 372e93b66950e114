#pragma once

// Systematic enumeration of quotient-graph candidates.
//
// Candidates are exactly the port-pairing structures: a node u exposes ports
// 1..pd(u), and every port slot belongs to one edge end. An edge may pair two
// slots of different nodes, two slots of the same node (a loop), or a single
// slot with itself (a degenerate loop carrying the same port twice). Every
// quotient of an actual graph has this shape, so a protocol querying
// candidates in this order is guaranteed to reach the live graph's quotient.
//
// Order: by weight W = node count + edge count ascending, then node count,
// then port-degree vector, then pairing. Plain node-count order would never
// terminate: there are infinitely many one-node candidates.

#include "maw/graph.hpp"

namespace maw {

namespace detail {

struct Slot {
  int node;
  int port;
};

inline void emit_candidates_for_pairing(int node_count, const std::vector<Slot>& slots,
                                        const std::vector<int>& mate,
                                        std::vector<QuotientGraph>& out) {
  QuotientGraph q;
  q.node_count = node_count;
  std::vector<int> root(node_count);
  for (int i = 0; i < node_count; ++i) root[i] = i;
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (int i = 0; i < static_cast<int>(slots.size()); ++i) {
    if (mate[i] < i) continue;
    const Slot& a = slots[i];
    const Slot& b = slots[mate[i]];
    q.add_edge(a.node, a.port, b.node, b.port);
    if (a.node != b.node) root[find(a.node)] = find(b.node);
  }
  for (int v = 1; v < node_count; ++v)
    if (find(v) != find(0)) return;
  q.normalize();
  out.push_back(std::move(q));
}

// All pairings of the slot list with exactly `edges` orbits (a self-paired
// slot is one orbit, as is a matched pair), in deterministic order.
inline void enumerate_pairings(int node_count, const std::vector<Slot>& slots, int edges,
                               std::vector<int>& mate, int used_orbits,
                               std::vector<QuotientGraph>& out) {
  int n = static_cast<int>(slots.size());
  int first = 0;
  while (first < n && mate[first] >= 0) ++first;
  int remaining = 0;
  for (int i = first; i < n; ++i)
    if (mate[i] < 0) ++remaining;
  if (first == n) {
    if (used_orbits == edges) emit_candidates_for_pairing(node_count, slots, mate, out);
    return;
  }
  int need = edges - used_orbits;
  if (need < (remaining + 1) / 2 || need > remaining) return;
  // self-pairing first, then later partners in slot order
  mate[first] = first;
  enumerate_pairings(node_count, slots, edges, mate, used_orbits + 1, out);
  mate[first] = -1;
  for (int j = first + 1; j < n; ++j) {
    if (mate[j] >= 0) continue;
    mate[first] = j;
    mate[j] = first;
    enumerate_pairings(node_count, slots, edges, mate, used_orbits + 1, out);
    mate[first] = -1;
    mate[j] = -1;
  }
}

inline void enumerate_port_degrees(int node_count, int edges, int index, int remaining,
                                   std::vector<int>& pd, std::vector<QuotientGraph>& out) {
  if (index == node_count) {
    if (remaining != 0) return;
    std::vector<Slot> slots;
    for (int v = 0; v < node_count; ++v)
      for (int p = 1; p <= pd[v]; ++p) slots.push_back({v, p});
    std::vector<int> mate(slots.size(), -1);
    enumerate_pairings(node_count, slots, edges, mate, 0, out);
    return;
  }
  int lo = node_count >= 2 ? 1 : 0;
  for (int d = lo; d <= remaining; ++d) {
    pd[index] = d;
    enumerate_port_degrees(node_count, edges, index + 1, remaining - d, pd, out);
  }
}

}  // namespace detail

// All candidates of exactly the given weight, in canonical order.
inline std::vector<QuotientGraph> quotient_candidates_of_weight(int weight) {
  std::vector<QuotientGraph> out;
  for (int m = 1; m <= weight; ++m) {
    int e = weight - m;
    if (e < m - 1) continue;  // not enough edges to connect m nodes
    // total port slots: each edge covers one or two slots
    for (int s = e; s <= 2 * e; ++s) {
      if (m >= 2 && s < m) continue;
      std::vector<int> pd(m, 0);
      std::vector<QuotientGraph> bucket;
      detail::enumerate_port_degrees(m, e, 0, s, pd, bucket);
      for (auto& q : bucket) out.push_back(std::move(q));
    }
  }
  return out;
}

inline std::vector<QuotientGraph> quotient_candidates_up_to_weight(int max_weight) {
  std::vector<QuotientGraph> out;
  for (int w = 1; w <= max_weight; ++w)
    for (auto& q : quotient_candidates_of_weight(w)) out.push_back(std::move(q));
  return out;
}

// Lazy stream over the same order, for protocols that extend on demand.
class QuotientCandidateStream {
 public:
  const QuotientGraph& at(std::size_t index) {
    while (index >= list_.size()) extend();
    return list_[index];
  }

 private:
  void extend() {
    for (auto& q : quotient_candidates_of_weight(next_weight_++)) list_.push_back(std::move(q));
  }
  std::vector<QuotientGraph> list_;
  int next_weight_ = 1;
};

}  // namespace maw
