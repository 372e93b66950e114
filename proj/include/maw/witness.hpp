#pragma once

// Search for two non-isomorphic graphs on the same node count whose view
// quotients coincide. Small graphs are scanned exhaustively; larger even
// sizes add double-cycle covers of the one-node two-loop quotient, where
// the secondary shift controls the port-3 cycle structure.

#include <optional>
#include <utility>
#include <vector>

#include "maw/corpus.hpp"
#include "maw/graph.hpp"
#include "maw/iso.hpp"
#include "maw/view.hpp"

namespace maw {

// Consistent n-cycle on ports (1,2) plus a second consistent cycle layer on
// ports (3,4) jumping by s. Simple whenever 2 <= s <= n-2 and 2s != n.
inline PortLabeledGraph double_cycle_cover(int n, int s) {
  PortLabeledGraph g;
  g.node_count = n;
  for (int i = 0; i < n; ++i) g.add_edge(i, 1, (i + 1) % n, 2);
  for (int i = 0; i < n; ++i) g.add_edge(i, 3, (i + s) % n, 4);
  g.normalize();
  return g;
}

struct WitnessPair {
  PortLabeledGraph a;
  PortLabeledGraph b;
};

// First (by node count, then pool order) pair of equal-order non-isomorphic
// graphs with isomorphic quotients. Only graphs with a non-trivial view
// partition can participate: with singleton classes the quotient is the
// graph itself and isomorphic quotients would force isomorphic graphs.
inline std::optional<WitnessPair> witness_same_quotient_nonisomorphic(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    std::vector<PortLabeledGraph> pool;
    if (n <= 4) {
      for (const CorpusEntry& e : exhaustive_upto(4))
        if (e.graph.node_count == n) pool.push_back(e.graph);
    } else if (n % 2 == 0) {
      for (int s = 2; s + 2 <= n; ++s)
        if (2 * s != n) pool.push_back(double_cycle_cover(n, s));
    }
    std::vector<QuotientGraph> quots;
    std::vector<int> keep;
    for (int i = 0; i < static_cast<int>(pool.size()); ++i) {
      QuotientGraph q = quotient(pool[i]);
      if (q.node_count == n) continue;
      keep.push_back(i);
      quots.push_back(std::move(q));
    }
    for (std::size_t x = 0; x < keep.size(); ++x)
      for (std::size_t y = x + 1; y < keep.size(); ++y) {
        if (!quotient_isomorphic(quots[x], quots[y])) continue;
        if (isomorphic(pool[keep[x]], pool[keep[y]])) continue;
        return WitnessPair{pool[keep[x]], pool[keep[y]]};
      }
  }
  return std::nullopt;
}

}  // namespace maw
