#pragma once

// Graph generators and enumeration of small port-labeled graphs.

#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>

#include "maw/graph.hpp"

namespace maw {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

// Deterministic bounded sampling on top of std::mt19937_64; the standard
// distributions are implementation-defined, which would break golden tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // uniform integer in [0, bound)
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

 private:
  std::mt19937_64 engine_;
};

// Cycle on n >= 3 nodes with edges labeled 1 clockwise and 2 counterclockwise.
inline PortLabeledGraph consistent_cycle(int n) {
  if (n < 3) throw std::invalid_argument("consistent_cycle requires n >= 3");
  PortLabeledGraph g;
  g.node_count = n;
  for (int i = 0; i < n; ++i) g.add_edge(i, 1, (i + 1) % n, 2);
  g.normalize();
  return g;
}

// Consistent cycle on m nodes with one pendant leaf per cycle node. The
// pendant edge is forced to port 3 at the cycle node (ports 1 and 2 are the
// cycle) and port 1 at the leaf. Nodes 0..m-1 form the cycle, node m+i is the
// leaf attached to cycle node i.
inline PortLabeledGraph sun(int m) {
  if (m < 3) throw std::invalid_argument("sun requires m >= 3");
  PortLabeledGraph g;
  g.node_count = 2 * m;
  for (int i = 0; i < m; ++i) {
    g.add_edge(i, 1, (i + 1) % m, 2);
    g.add_edge(i, 3, m + i, 1);
  }
  g.normalize();
  return g;
}

// Path on n >= 1 nodes, interior edges labeled 1 rightward and 2 leftward.
// End nodes have degree 1 and therefore must use port 1 on their only edge.
inline PortLabeledGraph path(int n) {
  if (n < 1) throw std::invalid_argument("path requires n >= 1");
  PortLabeledGraph g;
  g.node_count = n;
  for (int i = 0; i + 1 < n; ++i) {
    int right_port = (i + 1 == n - 1) ? 1 : 2;
    g.add_edge(i, 1, i + 1, right_port);
  }
  g.normalize();
  return g;
}

// Star on n >= 2 nodes: center 0 with leaves 1..n-1; the edge to leaf i uses
// port i at the center and port 1 at the leaf.
inline PortLabeledGraph star(int n) {
  if (n < 2) throw std::invalid_argument("star requires n >= 2");
  PortLabeledGraph g;
  g.node_count = n;
  for (int i = 1; i < n; ++i) g.add_edge(0, i, i, 1);
  g.normalize();
  return g;
}

namespace detail {

// All assignments of ports to each node's incident edges, given a fixed edge
// set. Incident edges are permuted per node; each permutation yields one
// port-labeled graph.
inline void assign_ports(const std::vector<std::pair<int, int>>& edge_pairs, int n,
                         std::vector<PortLabeledGraph>& out) {
  std::vector<std::vector<int>> incident(n);  // node -> indices into edge_pairs
  for (int i = 0; i < static_cast<int>(edge_pairs.size()); ++i) {
    incident[edge_pairs[i].first].push_back(i);
    incident[edge_pairs[i].second].push_back(i);
  }
  std::vector<std::vector<int>> perms(n);  // perms[v][k] = port of incident[v][k]
  for (int v = 0; v < n; ++v) {
    perms[v].resize(incident[v].size());
    std::iota(perms[v].begin(), perms[v].end(), 1);
  }
  auto emit = [&] {
    PortLabeledGraph g;
    g.node_count = n;
    std::vector<std::pair<int, int>> ports(edge_pairs.size(), {0, 0});  // (pu, pv)
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < static_cast<int>(incident[v].size()); ++k) {
        int e = incident[v][k];
        if (edge_pairs[e].first == v) ports[e].first = perms[v][k];
        else ports[e].second = perms[v][k];
      }
    for (int e = 0; e < static_cast<int>(edge_pairs.size()); ++e)
      g.add_edge(edge_pairs[e].first, ports[e].first, edge_pairs[e].second, ports[e].second);
    g.normalize();
    out.push_back(std::move(g));
  };
  // odometer over per-node permutations in lexicographic order
  while (true) {
    emit();
    int v = n - 1;
    while (v >= 0 && !std::next_permutation(perms[v].begin(), perms[v].end())) --v;
    if (v < 0) break;
  }
}

inline bool edge_set_connected(const std::vector<std::pair<int, int>>& edge_pairs, int n) {
  if (n == 1) return true;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (auto& [u, v] : edge_pairs) {
    int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace detail

// Every valid port-labeled graph on nodes 0..n-1, exactly once up to identity
// of node indexing, in deterministic order: edge sets in lexicographic order,
// then port assignments in lexicographic order. Exhaustive for n <= 4.
inline std::vector<PortLabeledGraph> enumerate_connected(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("enumerate_connected is exhaustive only for 1 <= n <= 4");
  std::vector<PortLabeledGraph> out;
  if (n == 1) {
    out.push_back(PortLabeledGraph{1, {}});
    return out;
  }
  std::vector<std::pair<int, int>> all_pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all_pairs.push_back({u, v});
  int m = static_cast<int>(all_pairs.size());
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<std::pair<int, int>> edge_pairs;
    for (int i = 0; i < m; ++i)
      if (mask & (1 << i)) edge_pairs.push_back(all_pairs[i]);
    if (static_cast<int>(edge_pairs.size()) < n - 1) continue;
    if (!detail::edge_set_connected(edge_pairs, n)) continue;
    detail::assign_ports(edge_pairs, n, out);
  }
  return out;
}

// Seeded sample of valid port-labeled graphs at n in {5, 6}; a deterministic
// stand-in for the exhaustive enumeration, which is impractical there.
inline std::vector<PortLabeledGraph> sample_connected(int n, int count,
                                                      std::uint64_t seed = kDefaultSeed);

// Random connected port-labeled graph: a random spanning tree plus each
// remaining node pair independently with probability `density`, then a random
// port assignment. Fully determined by (n, density, seed).
inline PortLabeledGraph random_graph(int n, double density, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_graph requires n >= 1");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edge_pairs;
  std::set<std::pair<int, int>> have;
  for (int v = 1; v < n; ++v) {
    int u = static_cast<int>(rng.below(v));
    edge_pairs.push_back({u, v});
    have.insert({u, v});
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!have.count({u, v}) && rng.chance(density)) {
        edge_pairs.push_back({u, v});
        have.insert({u, v});
      }
  // random port assignment: shuffle each node's incident list
  std::vector<std::vector<int>> incident(n);
  for (int i = 0; i < static_cast<int>(edge_pairs.size()); ++i) {
    incident[edge_pairs[i].first].push_back(i);
    incident[edge_pairs[i].second].push_back(i);
  }
  PortLabeledGraph g;
  g.node_count = n;
  std::vector<std::pair<int, int>> ports(edge_pairs.size(), {0, 0});
  for (int v = 0; v < n; ++v) {
    std::vector<int>& inc = incident[v];
    for (int k = static_cast<int>(inc.size()) - 1; k > 0; --k)
      std::swap(inc[k], inc[static_cast<int>(rng.below(k + 1))]);
    for (int k = 0; k < static_cast<int>(inc.size()); ++k) {
      int e = inc[k];
      if (edge_pairs[e].first == v) ports[e].first = k + 1;
      else ports[e].second = k + 1;
    }
  }
  for (int e = 0; e < static_cast<int>(edge_pairs.size()); ++e)
    g.add_edge(edge_pairs[e].first, ports[e].first, edge_pairs[e].second, ports[e].second);
  g.normalize();
  return g;
}

inline std::vector<PortLabeledGraph> sample_connected(int n, int count, std::uint64_t seed) {
  std::vector<PortLabeledGraph> out;
  Rng rng(seed);
  std::set<std::vector<Edge>> seen;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count && attempts < count * 64) {
    ++attempts;
    double density = 0.15 + 0.1 * static_cast<double>(rng.below(7));
    PortLabeledGraph g = random_graph(n, density, rng.next());
    if (seen.insert(g.edges).second) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace maw
