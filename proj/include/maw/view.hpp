#pragma once

// Views and quotient graphs.
//
// The view of a node is the infinite rooted tree of all walks leaving it,
// labeled with degrees and port pairs. Truncated views V^t cut that tree at
// depth t; each tree node carries the degree of the graph node it stands for,
// so V^0 already separates nodes of different degree.
//
// Three representations cooperate here:
//   ViewTree      - the literal tree, exponential in depth; cross-check only.
//   ViewDag       - hash-consed truncated views; subtrees are interned, so
//                   size stays polynomial (distinct subtrees per level <= n).
//   partitions    - equivalence classes of V^t computed by refinement without
//                   materializing anything.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "maw/graph.hpp"

namespace maw {

// ---- materialized view trees ----

struct ViewTree {
  int degree = 0;
  std::vector<std::pair<int, ViewTree>> children;  // (far port, subtree); index = local port - 1

  friend bool operator==(const ViewTree&, const ViewTree&) = default;
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

inline std::uint64_t view_tree_hash(const ViewTree& t) {
  std::uint64_t h = mix64(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(t.degree));
  for (auto& [far_port, child] : t.children)
    h = mix64(h ^ (static_cast<std::uint64_t>(far_port) << 32) ^ view_tree_hash(child));
  return h;
}

inline std::uint64_t truncated_view_size(const Adjacency& a, int v, int depth) {
  // number of tree nodes; used only to guard against runaway materialization
  std::vector<std::uint64_t> cnt(a.node_count(), 1);
  std::uint64_t total = 1;
  for (int t = 1; t <= depth; ++t) {
    std::vector<std::uint64_t> next(a.node_count(), 1);
    for (int u = 0; u < a.node_count(); ++u)
      for (int p = 1; p <= a.degree(u); ++p) {
        next[u] += cnt[a.neighbor(u, p).node];
        if (next[u] > (1ULL << 40)) return 1ULL << 40;
      }
    cnt = std::move(next);
    total = cnt[v];
  }
  return total;
}

inline ViewTree build_view_tree(const Adjacency& a, int v, int depth) {
  ViewTree t;
  t.degree = a.degree(v);
  if (depth == 0) return t;
  t.children.reserve(t.degree);
  for (int p = 1; p <= t.degree; ++p) {
    PortEnd far = a.neighbor(v, p);
    t.children.push_back({far.port, build_view_tree(a, far.node, depth - 1)});
  }
  return t;
}

}  // namespace detail

inline constexpr std::uint64_t kViewTreeNodeLimit = 64ULL << 20;

// Literal truncated view; throws std::length_error beyond the node limit.
inline ViewTree truncated_view(const PortLabeledGraph& g, int v, int depth) {
  Adjacency a(g);
  if (detail::truncated_view_size(a, v, depth) > kViewTreeNodeLimit)
    throw std::length_error("truncated view too large to materialize");
  return detail::build_view_tree(a, v, depth);
}

inline bool view_trees_equal(const ViewTree& a, const ViewTree& b) {
  if (detail::view_tree_hash(a) != detail::view_tree_hash(b)) return false;
  return a == b;  // hashes can collide; equality is decided structurally
}

// Debug serialization: (<deg> <p>:<q><subtree> ...). Format is not stable.
inline std::string view_tree_to_string(const ViewTree& t) {
  std::string out = "(" + std::to_string(t.degree);
  for (int p = 1; p <= static_cast<int>(t.children.size()); ++p) {
    out += " " + std::to_string(p) + ":" + std::to_string(t.children[p - 1].first);
    out += view_tree_to_string(t.children[p - 1].second);
  }
  out += ")";
  return out;
}

// ---- hash-consed views ----

class ViewDag {
 public:
  using Handle = int;

  struct Node {
    int degree = 0;
    int height = 0;
    std::vector<std::pair<int, Handle>> children;  // (far port, child)
  };

  Handle make(int degree, std::vector<std::pair<int, Handle>> children) {
    Node node;
    node.degree = degree;
    node.children = std::move(children);
    node.height = 0;
    for (auto& [p, ch] : node.children)
      node.height = std::max(node.height, nodes_[ch].height + 1);
    std::uint64_t h = hash_node(node);
    auto range = intern_.equal_range(h);
    for (auto it = range.first; it != range.second; ++it)
      if (same(nodes_[it->second], node)) return it->second;
    Handle handle = static_cast<Handle>(nodes_.size());
    nodes_.push_back(std::move(node));
    intern_.insert({h, handle});
    return handle;
  }

  Handle leaf(int degree) { return make(degree, {}); }

  const Node& at(Handle h) const { return nodes_[h]; }
  int size() const { return static_cast<int>(nodes_.size()); }

  // The depth-t truncation of the view rooted at h; requires height(h) >= t.
  Handle truncate(Handle h, int t) {
    if (t == 0) return leaf(nodes_[h].degree);
    if (nodes_[h].degree == 0) return h;  // isolated node, identical at every depth
    if (nodes_[h].height < t) throw std::invalid_argument("truncate beyond available view depth");
    auto key = std::pair<Handle, int>{h, t};
    if (auto it = trunc_memo_.find(key); it != trunc_memo_.end()) return it->second;
    std::vector<std::pair<int, Handle>> children;
    children.reserve(nodes_[h].children.size());
    for (auto& [p, ch] : nodes_[h].children) children.push_back({p, truncate(ch, t - 1)});
    Handle out = make(nodes_[h].degree, std::move(children));
    trunc_memo_.insert({key, out});
    return out;
  }

 private:
  static std::uint64_t hash_node(const Node& n) {
    std::uint64_t h = detail::mix64(0xabcdef0123456789ULL ^ static_cast<std::uint64_t>(n.degree));
    for (auto& [p, ch] : n.children)
      h = detail::mix64(h ^ (static_cast<std::uint64_t>(p) << 32) ^ static_cast<std::uint64_t>(ch));
    return h;
  }
  static bool same(const Node& a, const Node& b) {
    return a.degree == b.degree && a.children == b.children;
  }

  std::vector<Node> nodes_;
  std::unordered_multimap<std::uint64_t, Handle> intern_;
  std::map<std::pair<Handle, int>, Handle> trunc_memo_;
};

namespace detail {

inline ViewDag::Handle view_dag_of(ViewDag& dag, const Adjacency& a, int v, int depth,
                                   std::map<std::pair<int, int>, ViewDag::Handle>& memo) {
  auto key = std::pair<int, int>{v, depth};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  ViewDag::Handle out;
  if (depth == 0) {
    out = dag.leaf(a.degree(v));
  } else {
    std::vector<std::pair<int, ViewDag::Handle>> children;
    children.reserve(a.degree(v));
    for (int p = 1; p <= a.degree(v); ++p) {
      PortEnd far = a.neighbor(v, p);
      children.push_back({far.port, view_dag_of(dag, a, far.node, depth - 1, memo)});
    }
    out = dag.make(a.degree(v), std::move(children));
  }
  memo.insert({key, out});
  return out;
}

}  // namespace detail

inline ViewDag::Handle view_dag_of(ViewDag& dag, const PortLabeledGraph& g, int v, int depth) {
  Adjacency a(g);
  std::map<std::pair<int, int>, ViewDag::Handle> memo;
  return detail::view_dag_of(dag, a, v, depth, memo);
}

// View of a quotient multigraph, navigated through its functional ports.
// Requires every (node, port) to determine a unique far end, which holds for
// every quotient computed from a graph.
inline ViewDag::Handle view_dag_of(ViewDag& dag, const QuotientGraph& q, int v, int depth) {
  std::vector<std::map<int, PortEnd>> nav(q.node_count);
  for (const Edge& e : q.edges) {
    auto add = [&](int a, int p, int b, int fp) {
      auto [it, fresh] = nav[a].insert({p, PortEnd{b, fp}});
      if (!fresh && (it->second.node != b || it->second.port != fp))
        throw std::invalid_argument("quotient ports do not determine far ends");
    };
    add(e.u, e.pu, e.v, e.pv);
    add(e.v, e.pv, e.u, e.pu);
  }
  std::map<std::pair<int, int>, ViewDag::Handle> memo;
  auto rec = [&](auto&& self, int node, int d) -> ViewDag::Handle {
    auto key = std::pair<int, int>{node, d};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    ViewDag::Handle out;
    int deg = static_cast<int>(nav[node].size());
    if (d == 0) {
      out = dag.leaf(deg);
    } else {
      std::vector<std::pair<int, ViewDag::Handle>> children;
      for (auto& [p, far] : nav[node]) children.push_back({far.port, self(self, far.node, d - 1)});
      out = dag.make(deg, std::move(children));
    }
    memo.insert({key, out});
    return out;
  };
  return rec(rec, v, depth);
}

inline ViewDag::Handle view_dag_of(ViewDag& dag, const ViewTree& t) {
  std::vector<std::pair<int, ViewDag::Handle>> children;
  children.reserve(t.children.size());
  for (auto& [p, child] : t.children) children.push_back({p, view_dag_of(dag, child)});
  return dag.make(t.degree, std::move(children));
}

// Equality of truncated views at a common depth, across graphs.
inline bool views_equal(const PortLabeledGraph& ga, int u, const PortLabeledGraph& gb, int v,
                        int depth) {
  ViewDag dag;
  return view_dag_of(dag, ga, u, depth) == view_dag_of(dag, gb, v, depth);
}

inline bool views_equal(const PortLabeledGraph& g, int u, int v, int depth) {
  return views_equal(g, u, g, v, depth);
}

// ---- view partitions by refinement ----

struct ViewPartition {
  std::vector<std::vector<int>> blocks;  // ordered by least member, members ascending
  std::vector<int> class_of;
  int stabilization_depth = 0;  // least t with partition(t) == partition(t+1)
};

namespace detail {

// classes of V^0: by degree, numbered by least member
inline std::vector<int> degree_classes(const Adjacency& a) {
  int n = a.node_count();
  std::vector<int> class_of(n, -1);
  std::map<int, int> seen;
  for (int v = 0; v < n; ++v) {
    auto [it, fresh] = seen.insert({a.degree(v), static_cast<int>(seen.size())});
    class_of[v] = it->second;
  }
  return class_of;
}

// one refinement round; classes of V^{t+1} from classes of V^t
inline std::vector<int> refine_classes(const Adjacency& a, const std::vector<int>& cls) {
  int n = a.node_count();
  std::map<std::vector<int>, int> seen;
  std::vector<int> next(n, -1);
  for (int v = 0; v < n; ++v) {
    std::vector<int> sig{cls[v]};
    for (int p = 1; p <= a.degree(v); ++p) {
      PortEnd far = a.neighbor(v, p);
      sig.push_back(far.port);
      sig.push_back(cls[far.node]);
    }
    auto [it, fresh] = seen.insert({std::move(sig), static_cast<int>(seen.size())});
    next[v] = it->second;
  }
  return next;
}

inline std::vector<std::vector<int>> blocks_of(const std::vector<int>& class_of) {
  int k = 0;
  for (int c : class_of) k = std::max(k, c + 1);
  std::vector<std::vector<int>> blocks(k);
  for (int v = 0; v < static_cast<int>(class_of.size()); ++v) blocks[class_of[v]].push_back(v);
  return blocks;
}

}  // namespace detail

// Classes of V^depth, numbered by least member. Refinement stops early once
// stable, which happens within n-1 rounds.
inline std::vector<int> view_classes_at_depth(const PortLabeledGraph& g, int depth) {
  Adjacency a(g);
  std::vector<int> cls = detail::degree_classes(a);
  for (int t = 0; t < depth; ++t) {
    std::vector<int> next = detail::refine_classes(a, cls);
    if (next == cls) break;
    cls = std::move(next);
  }
  return cls;
}

inline ViewPartition view_partition(const PortLabeledGraph& g) {
  Adjacency a(g);
  ViewPartition out;
  std::vector<int> cls = detail::degree_classes(a);
  int t = 0;
  while (true) {
    std::vector<int> next = detail::refine_classes(a, cls);
    if (next == cls) break;
    cls = std::move(next);
    ++t;
  }
  out.class_of = std::move(cls);
  out.blocks = detail::blocks_of(out.class_of);
  out.stabilization_depth = t;
  return out;
}

// ---- quotient graphs ----

struct QuotientResult {
  QuotientGraph graph;
  std::vector<int> class_of;  // graph node -> quotient node
};

// Quotient by view equivalence. Quotient node order follows block order (least
// contained graph node); edges are the projections of any representative's
// incident edges, deduplicated as a set of canonical quadruples.
inline QuotientResult quotient_result(const PortLabeledGraph& g) {
  ViewPartition part = view_partition(g);
  Adjacency a(g);
  QuotientResult out;
  out.class_of = part.class_of;
  out.graph.node_count = static_cast<int>(part.blocks.size());
  std::set<Edge> edges;
  for (int b = 0; b < static_cast<int>(part.blocks.size()); ++b) {
    int rep = part.blocks[b][0];
    for (int p = 1; p <= a.degree(rep); ++p) {
      PortEnd far = a.neighbor(rep, p);
      edges.insert(canonical_edge(b, p, part.class_of[far.node], far.port));
    }
  }
  out.graph.edges.assign(edges.begin(), edges.end());
  out.graph.normalize();
  return out;
}

inline QuotientGraph quotient(const PortLabeledGraph& g) { return quotient_result(g).graph; }

// ---- quotient reconstruction from a truncated view ----

struct ViewQuotient {
  QuotientGraph graph;
  int root_class = 0;
};

// Reconstruction an agent can perform on its own truncated view of depth d:
// consider all tree nodes at depth <= d/2, key each by its depth-(d/2)
// subtree, merge equal keys, and read edges off a representative per class.
// Representatives are the first tree node of the class in shortest-walk order
// restricted to depth <= d/2 - 1 (deeper nodes lack classified children).
// With d >= 2 * (quotient size) this reproduces the quotient exactly; below
// that the result is a well-defined but possibly wrong graph.
inline ViewQuotient quotient_of_view(ViewDag& dag, ViewDag::Handle root, int d) {
  int half = d / 2;
  // BFS over distinct subtree handles down to depth `half`. Walk-built views
  // are full trees, so every occurrence of a handle sits at one depth and
  // first-touch order is least-walk order.
  std::vector<ViewDag::Handle> order;
  std::map<ViewDag::Handle, int> depth_of;
  std::vector<ViewDag::Handle> frontier{root};
  depth_of[root] = 0;
  int depth = 0;
  while (!frontier.empty()) {
    for (ViewDag::Handle h : frontier) order.push_back(h);
    if (depth == half) break;
    std::vector<ViewDag::Handle> next;
    for (ViewDag::Handle h : frontier)
      for (auto& [p, ch] : dag.at(h).children)
        if (depth_of.insert({ch, depth + 1}).second) next.push_back(ch);
    frontier = std::move(next);
    ++depth;
  }

  std::map<ViewDag::Handle, int> class_of_key;
  std::vector<ViewDag::Handle> rep;
  auto key_of = [&](ViewDag::Handle h) { return dag.truncate(h, half); };

  ViewQuotient out;
  for (ViewDag::Handle h : order) {
    ViewDag::Handle key = key_of(h);
    auto [it, fresh] = class_of_key.insert({key, static_cast<int>(class_of_key.size())});
    if (fresh) rep.push_back(-1);
    int c = it->second;
    if (rep[c] == -1 && depth_of[h] <= half - 1) rep[c] = h;
  }
  out.graph.node_count = static_cast<int>(class_of_key.size());
  out.root_class = class_of_key.at(key_of(root));
  std::set<Edge> edges;
  for (int c = 0; c < static_cast<int>(rep.size()); ++c) {
    if (rep[c] == -1) continue;  // class seen only at the horizon; edges unknown
    const ViewDag::Node& node = dag.at(rep[c]);
    for (int p = 1; p <= static_cast<int>(node.children.size()); ++p) {
      auto& [far_port, ch] = node.children[p - 1];
      edges.insert(canonical_edge(c, p, class_of_key.at(key_of(ch)), far_port));
    }
  }
  out.graph.edges.assign(edges.begin(), edges.end());
  out.graph.normalize();
  return out;
}

inline ViewQuotient quotient_from_view(const PortLabeledGraph& g, int v, int d) {
  ViewDag dag;
  ViewDag::Handle root = view_dag_of(dag, g, v, d);
  return quotient_of_view(dag, root, d);
}

inline ViewQuotient quotient_from_view(const ViewTree& t) {
  ViewDag dag;
  ViewDag::Handle root = view_dag_of(dag, t);
  return quotient_of_view(dag, root, dag.at(root).height);
}

}  // namespace maw
