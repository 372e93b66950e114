#pragma once

// Port-preserving isomorphism for simple graphs and quotient multigraphs.
//
// Ports make isomorphism cheap: once an anchor pair is fixed, the rest of the
// bijection is forced by following equal ports on both sides.

#include <optional>
#include <queue>

#include "maw/graph.hpp"

namespace maw {

namespace detail {

// Propagate the forced mapping from g node 0 to h node `anchor`. Returns the
// node bijection, or nullopt on any mismatch.
inline std::optional<std::vector<int>> propagate(const Adjacency& ga, const Adjacency& ha,
                                                 int anchor) {
  int n = ga.node_count();
  if (ha.node_count() != n) return std::nullopt;
  std::vector<int> f(n, -1);
  std::vector<char> hit(n, 0);
  f[0] = anchor;
  if (hit[anchor]) return std::nullopt;
  hit[anchor] = 1;
  std::queue<int> bfs;
  bfs.push(0);
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop();
    int w = f[u];
    if (ga.degree(u) != ha.degree(w)) return std::nullopt;
    for (int p = 1; p <= ga.degree(u); ++p) {
      PortEnd a = ga.neighbor(u, p);
      PortEnd b = ha.neighbor(w, p);
      if (a.port != b.port) return std::nullopt;
      if (f[a.node] == -1) {
        if (hit[b.node]) return std::nullopt;
        f[a.node] = b.node;
        hit[b.node] = 1;
        bfs.push(a.node);
      } else if (f[a.node] != b.node) {
        return std::nullopt;
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (f[v] == -1) return std::nullopt;
  return f;
}

}  // namespace detail

// Lexicographically least port-preserving bijection g -> h, or nullopt.
// Tries each h node as the image of g node 0; with ports fixed, each anchor
// forces at most one bijection, so the first success is the least one.
inline std::optional<std::vector<int>> isomorphism(const PortLabeledGraph& g,
                                                   const PortLabeledGraph& h) {
  if (g.node_count != h.node_count || g.edges.size() != h.edges.size()) return std::nullopt;
  Adjacency ga(g), ha(h);
  for (int anchor = 0; anchor < h.node_count; ++anchor)
    if (auto f = detail::propagate(ga, ha, anchor)) return f;
  return std::nullopt;
}

inline bool isomorphic(const PortLabeledGraph& g, const PortLabeledGraph& h) {
  return isomorphism(g, h).has_value();
}

// All port-preserving automorphisms; at most one per anchor, so at most n.
inline std::vector<std::vector<int>> automorphisms(const PortLabeledGraph& g) {
  std::vector<std::vector<int>> out;
  Adjacency ga(g);
  for (int anchor = 0; anchor < g.node_count; ++anchor)
    if (auto f = detail::propagate(ga, ga, anchor)) out.push_back(std::move(*f));
  return out;
}

namespace detail {

struct QuotientPorts {
  std::vector<int> port_degree;
  // per node: port -> far end (unique in genuine quotients; multigraph values
  // that violate far-port uniqueness fall back to multiset comparison only)
  std::vector<std::map<int, PortEnd>> nav;
  bool functional = true;
};

inline QuotientPorts quotient_ports(const QuotientGraph& q) {
  QuotientPorts out;
  out.port_degree.assign(q.node_count, 0);
  out.nav.resize(q.node_count);
  auto add = [&](int v, int p, int far_node, int far_port) {
    auto [it, fresh] = out.nav[v].insert({p, PortEnd{far_node, far_port}});
    if (!fresh && (it->second.node != far_node || it->second.port != far_port))
      out.functional = false;
  };
  for (const Edge& e : q.edges) {
    add(e.u, e.pu, e.v, e.pv);
    add(e.v, e.pv, e.u, e.pu);
  }
  for (int v = 0; v < q.node_count; ++v)
    out.port_degree[v] = static_cast<int>(out.nav[v].size());
  return out;
}

inline std::vector<Edge> mapped_edges(const QuotientGraph& q, const std::vector<int>& f) {
  std::vector<Edge> out;
  out.reserve(q.edges.size());
  for (const Edge& e : q.edges) out.push_back(canonical_edge(f[e.u], e.pu, f[e.v], e.pv));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// Node bijection a -> b inducing a bijection of edge quadruple multisets, or
// nullopt. Propagation per port is deterministic thanks to functional ports;
// the full edge multiset is then verified under the candidate bijection.
inline std::optional<std::vector<int>> quotient_isomorphism(const QuotientGraph& a,
                                                            const QuotientGraph& b) {
  if (a.node_count != b.node_count || a.edges.size() != b.edges.size()) return std::nullopt;
  detail::QuotientPorts pa = detail::quotient_ports(a);
  detail::QuotientPorts pb = detail::quotient_ports(b);
  std::vector<Edge> b_sorted = b.edges;
  std::sort(b_sorted.begin(), b_sorted.end());
  int n = a.node_count;
  for (int anchor = 0; anchor < n; ++anchor) {
    std::vector<int> f(n, -1);
    std::vector<char> hit(n, 0);
    f[0] = anchor;
    hit[anchor] = 1;
    std::queue<int> bfs;
    bfs.push(0);
    bool ok = true;
    while (ok && !bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      int w = f[u];
      if (pa.port_degree[u] != pb.port_degree[w]) {
        ok = false;
        break;
      }
      for (auto& [p, far_a] : pa.nav[u]) {
        auto it = pb.nav[w].find(p);
        if (it == pb.nav[w].end()) {
          ok = false;
          break;
        }
        int target_b = it->second.node;
        if (f[far_a.node] == -1) {
          if (hit[target_b]) {
            ok = false;
            break;
          }
          f[far_a.node] = target_b;
          hit[target_b] = 1;
          bfs.push(far_a.node);
        } else if (f[far_a.node] != target_b) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    bool total = true;
    for (int v = 0; v < n; ++v)
      if (f[v] == -1) total = false;
    if (!total) continue;
    if (detail::mapped_edges(a, f) == b_sorted) return f;
  }
  return std::nullopt;
}

inline bool quotient_isomorphic(const QuotientGraph& a, const QuotientGraph& b) {
  return quotient_isomorphism(a, b).has_value();
}

}  // namespace maw
