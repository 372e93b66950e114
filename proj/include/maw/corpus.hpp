#pragma once

// Pinned graph corpora behind the acceptance suites. Every corpus is fully
// deterministic: exhaustive enumerations, named generators and seeded
// samples only, so suite runs reproduce bit for bit.

#include <string>
#include <vector>

#include "maw/generate.hpp"
#include "maw/graph.hpp"

namespace maw {

struct CorpusEntry {
  std::string name;
  PortLabeledGraph graph;
};

// All validated graphs on 1..max_nodes nodes (max_nodes <= 4), cached.
inline const std::vector<CorpusEntry>& exhaustive_upto(int max_nodes) {
  static const std::vector<std::vector<CorpusEntry>> by_cap = [] {
    std::vector<std::vector<CorpusEntry>> caps(5);
    for (int cap = 1; cap <= 4; ++cap)
      for (int n = 1; n <= cap; ++n) {
        const auto graphs = enumerate_connected(n);
        for (std::size_t i = 0; i < graphs.size(); ++i)
          caps[cap].push_back(
              {"x" + std::to_string(n) + "-" + std::to_string(i), graphs[i]});
      }
    return caps;
  }();
  if (max_nodes < 1) max_nodes = 1;
  if (max_nodes > 4) max_nodes = 4;
  return by_cap[max_nodes];
}

// View-partition corpus: exhaustive to four nodes plus seeded samples at
// five and six.
inline const std::vector<CorpusEntry>& norris_corpus() {
  static const std::vector<CorpusEntry> list = [] {
    std::vector<CorpusEntry> out = exhaustive_upto(4);
    for (int n : {5, 6}) {
      const auto sample = sample_connected(n, 32);
      for (std::size_t i = 0; i < sample.size(); ++i)
        out.push_back(
            {"s" + std::to_string(n) + "-" + std::to_string(i), sample[i]});
    }
    return out;
  }();
  return list;
}

// General-purpose corpus: exhaustive to four nodes, the named generator
// families at five to eight, and 64 seeded random graphs spread over the
// same sizes.
inline const std::vector<CorpusEntry>& standard_corpus() {
  static const std::vector<CorpusEntry> list = [] {
    std::vector<CorpusEntry> out = exhaustive_upto(4);
    for (int n = 5; n <= 8; ++n) {
      out.push_back({"cycle-" + std::to_string(n), consistent_cycle(n)});
      out.push_back({"path-" + std::to_string(n), path(n)});
      out.push_back({"star-" + std::to_string(n), star(n)});
    }
    out.push_back({"sun-3", sun(3)});
    out.push_back({"sun-4", sun(4)});
    for (int n = 5; n <= 8; ++n)
      for (int i = 0; i < 16; ++i)
        out.push_back({"rand-" + std::to_string(n) + "-" + std::to_string(i),
                       random_graph(n, 0.3, kDefaultSeed + 97 * n + i)});
    return out;
  }();
  return list;
}

// Entries with at most max_nodes nodes.
inline std::vector<CorpusEntry> corpus_upto(const std::vector<CorpusEntry>& corpus,
                                            int max_nodes) {
  std::vector<CorpusEntry> out;
  for (const CorpusEntry& e : corpus)
    if (e.graph.node_count <= max_nodes) out.push_back(e);
  return out;
}

// All strictly ascending k-tuples of nodes, the deterministic start
// placements for team runs.
inline std::vector<std::vector<int>> ascending_tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(k);
  auto rec = [&](auto&& self, int from, int depth) -> void {
    if (depth == k) {
      out.push_back(pick);
      return;
    }
    for (int v = from; v < n; ++v) {
      pick[depth] = v;
      self(self, v + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace maw
