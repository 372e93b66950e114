#pragma once

// Port-labeled graphs and quotient multigraphs.
//
// A port-labeled graph is a simple connected undirected graph whose nodes are
// anonymous; each node numbers its incident edges with local ports 1..deg(v).
// A quotient graph is the multigraph obtained by merging nodes with equal
// views; it may contain loops and parallel edges, and its ports are
// functional: a fixed (node, port) pair always leads to the same target.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace maw {

// One undirected edge with its two port labels. Canonical form for simple
// graphs has u < v; loops in quotient graphs have u == v and pu <= pv.
struct Edge {
  int u = 0;
  int pu = 0;
  int v = 0;
  int pv = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge canonical_edge(int u, int pu, int v, int pv) {
  if (u > v || (u == v && pu > pv)) return Edge{v, pv, u, pu};
  return Edge{u, pu, v, pv};
}

struct PortLabeledGraph {
  int node_count = 0;
  std::vector<Edge> edges;  // canonical, sorted

  void add_edge(int u, int pu, int v, int pv) {
    edges.push_back(canonical_edge(u, pu, v, pv));
  }
  void normalize() { std::sort(edges.begin(), edges.end()); }

  friend bool operator==(const PortLabeledGraph&, const PortLabeledGraph&) = default;
};

struct QuotientGraph {
  int node_count = 0;
  std::vector<Edge> edges;  // canonical, sorted; multiset, loops allowed

  void add_edge(int u, int pu, int v, int pv) {
    edges.push_back(canonical_edge(u, pu, v, pv));
  }
  void normalize() { std::sort(edges.begin(), edges.end()); }

  friend bool operator==(const QuotientGraph&, const QuotientGraph&) = default;
};

struct ValidationReport {
  bool ok = true;
  std::string violation;  // names the first violated invariant
};

// ---- adjacency ----

// Far end of one port: the neighbor node and the port by which it is entered.
struct PortEnd {
  int node = -1;
  int port = 0;
};

// Port-indexed adjacency built from a validated graph: table[v][p-1] is the
// far end of port p at node v.
class Adjacency {
 public:
  Adjacency() = default;
  explicit Adjacency(const PortLabeledGraph& g) : table_(g.node_count) {
    for (const Edge& e : g.edges) {
      grow(e.u, e.pu).node = e.v;
      table_[e.u][e.pu - 1].port = e.pv;
      grow(e.v, e.pv).node = e.u;
      table_[e.v][e.pv - 1].port = e.pu;
    }
  }

  int node_count() const { return static_cast<int>(table_.size()); }
  int degree(int v) const { return static_cast<int>(table_[v].size()); }
  PortEnd neighbor(int v, int port) const { return table_[v][port - 1]; }

 private:
  PortEnd& grow(int v, int port) {
    if (static_cast<int>(table_[v].size()) < port) table_[v].resize(port);
    return table_[v][port - 1];
  }
  std::vector<std::vector<PortEnd>> table_;
};

// ---- validation ----

namespace detail {

inline bool ports_contiguous(const std::vector<int>& ports) {
  std::vector<int> sorted = ports;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
    if (sorted[i] != i + 1) return false;
  return true;
}

}  // namespace detail

inline ValidationReport validate(const PortLabeledGraph& g) {
  auto fail = [](std::string msg) { return ValidationReport{false, std::move(msg)}; };
  if (g.node_count < 1) return fail("node count must be at least 1");
  std::set<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> ports(g.node_count);
  for (const Edge& e : g.edges) {
    if (e.u < 0 || e.u >= g.node_count || e.v < 0 || e.v >= g.node_count)
      return fail("edge endpoint out of range");
    if (e.u == e.v) return fail("loop not allowed in a simple graph");
    if (e.pu < 1 || e.pv < 1) return fail("port numbers must be positive");
    auto key = std::minmax(e.u, e.v);
    if (!pairs.insert({key.first, key.second}).second)
      return fail("duplicate edge between a node pair");
    ports[e.u].push_back(e.pu);
    ports[e.v].push_back(e.pv);
  }
  for (int v = 0; v < g.node_count; ++v)
    if (!detail::ports_contiguous(ports[v]))
      return fail("ports at a node must be exactly 1..deg");
  // connectivity
  if (g.node_count > 1) {
    std::vector<char> seen(g.node_count, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Edge& e : g.edges) {
        int w = -1;
        if (e.u == v) w = e.v;
        else if (e.v == v) w = e.u;
        if (w >= 0 && !seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != g.node_count) return fail("graph is not connected");
  }
  return {};
}

inline ValidationReport validate(const QuotientGraph& q) {
  auto fail = [](std::string msg) { return ValidationReport{false, std::move(msg)}; };
  if (q.node_count < 1) return fail("node count must be at least 1");
  // collect edge ends per node
  std::vector<std::vector<std::pair<int, PortEnd>>> ends(q.node_count);
  for (const Edge& e : q.edges) {
    if (e.u < 0 || e.u >= q.node_count || e.v < 0 || e.v >= q.node_count)
      return fail("edge endpoint out of range");
    if (e.pu < 1 || e.pv < 1) return fail("port numbers must be positive");
    ends[e.u].push_back({e.pu, {e.v, e.pv}});
    ends[e.v].push_back({e.pv, {e.u, e.pu}});
  }
  for (int v = 0; v < q.node_count; ++v) {
    std::vector<int> ports;
    std::map<int, int> target_of;
    for (auto& [p, far] : ends[v]) {
      ports.push_back(p);
      auto [it, fresh] = target_of.insert({p, far.node});
      if (!fresh && it->second != far.node)
        return fail("port is not functional: one (node, port) leads to two targets");
    }
    std::sort(ports.begin(), ports.end());
    ports.erase(std::unique(ports.begin(), ports.end()), ports.end());
    if (!detail::ports_contiguous(ports))
      return fail("distinct ports at a node must be exactly 1..port_degree");
  }
  // connectivity over the multigraph
  if (q.node_count > 1) {
    std::vector<char> seen(q.node_count, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto& [p, far] : ends[v])
        if (!seen[far.node]) {
          seen[far.node] = 1;
          ++reached;
          stack.push_back(far.node);
        }
    }
    if (reached != q.node_count) return fail("quotient graph is not connected");
  }
  return {};
}

inline int port_degree(const QuotientGraph& q, int v) {
  std::set<int> ports;
  for (const Edge& e : q.edges) {
    if (e.u == v) ports.insert(e.pu);
    if (e.v == v) ports.insert(e.pv);
  }
  return static_cast<int>(ports.size());
}

// Unique far end of (v, port) in a quotient whose ports determine far ports
// (true of every quotient computed from a graph). Returns nullopt if the port
// is absent or ambiguous.
inline std::optional<PortEnd> quotient_neighbor(const QuotientGraph& q, int v, int port) {
  std::optional<PortEnd> found;
  auto consider = [&](int node, int far_port) {
    if (found && (found->node != node || found->port != far_port)) found = PortEnd{-2, 0};
    else if (!found) found = PortEnd{node, far_port};
  };
  for (const Edge& e : q.edges) {
    if (e.u == v && e.pu == port) consider(e.v, e.pv);
    if (e.v == v && e.pv == port) consider(e.u, e.pu);
  }
  if (found && found->node == -2) return std::nullopt;
  return found;
}

// ---- text formats ----
//
//   graph <n>                 quotient <n>
//   edge <u> <pu> <v> <pv>    edge <u> <pu> <v> <pv>   (repeated line = parallel edge)
//
// Nodes are 0-based, ports 1-based. Lines starting with '#' are comments.

struct ParseError {
  int line = 0;
  std::string message;
};

template <typename G>
struct ParseResult {
  std::optional<G> value;
  ParseError error;
  bool ok() const { return value.has_value(); }
};

namespace detail {

template <typename G>
ParseResult<G> parse_graph_text(const std::string& text, const char* header, bool allow_loops) {
  ParseResult<G> out;
  G g;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  std::set<std::pair<int, int>> pairs;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word) || word[0] == '#') continue;
    if (!have_header) {
      int n;
      if (word != header || !(ls >> n) || n < 1) {
        out.error = {lineno, std::string("expected '") + header + " <n>' header"};
        return out;
      }
      g.node_count = n;
      have_header = true;
      continue;
    }
    if (word != "edge") {
      out.error = {lineno, "expected 'edge <u> <pu> <v> <pv>'"};
      return out;
    }
    int u, pu, v, pv;
    if (!(ls >> u >> pu >> v >> pv)) {
      out.error = {lineno, "malformed edge line"};
      return out;
    }
    if (u < 0 || u >= g.node_count || v < 0 || v >= g.node_count) {
      out.error = {lineno, "edge endpoint out of range"};
      return out;
    }
    if (!allow_loops) {
      if (u == v) {
        out.error = {lineno, "loop not allowed in a simple graph"};
        return out;
      }
      auto key = std::minmax(u, v);
      if (!pairs.insert({key.first, key.second}).second) {
        out.error = {lineno, "duplicate edge between a node pair"};
        return out;
      }
    }
    g.add_edge(u, pu, v, pv);
  }
  if (!have_header) {
    out.error = {lineno, std::string("missing '") + header + "' header"};
    return out;
  }
  g.normalize();
  ValidationReport report = validate(g);
  if (!report.ok) {
    out.error = {lineno, report.violation};
    return out;
  }
  out.value = std::move(g);
  return out;
}

}  // namespace detail

inline ParseResult<PortLabeledGraph> parse_graph(const std::string& text) {
  return detail::parse_graph_text<PortLabeledGraph>(text, "graph", false);
}

inline ParseResult<QuotientGraph> parse_quotient(const std::string& text) {
  return detail::parse_graph_text<QuotientGraph>(text, "quotient", true);
}

inline std::string serialize_graph(const PortLabeledGraph& g) {
  PortLabeledGraph copy = g;
  copy.normalize();
  std::ostringstream out;
  out << "graph " << copy.node_count << "\n";
  for (const Edge& e : copy.edges)
    out << "edge " << e.u << " " << e.pu << " " << e.v << " " << e.pv << "\n";
  return out.str();
}

inline std::string serialize_graph(const QuotientGraph& q) {
  QuotientGraph copy = q;
  copy.normalize();
  std::ostringstream out;
  out << "quotient " << copy.node_count << "\n";
  for (const Edge& e : copy.edges)
    out << "edge " << e.u << " " << e.pu << " " << e.v << " " << e.pv << "\n";
  return out.str();
}

}  // namespace maw
