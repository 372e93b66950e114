#pragma once

// Decision problems with classical ground-truth evaluators. These run with
// full access to the configuration and are the trusted layer protocols are
// tested against. A problem is a set of configurations (G, S, Id, w); inputs
// that fail to decode simply put the configuration outside the set.

#include <functional>
#include <memory>

#include "maw/config.hpp"
#include "maw/generate.hpp"
#include "maw/iso.hpp"
#include "maw/sim.hpp"
#include "maw/view.hpp"

namespace maw {

struct Problem {
  std::string name;
  // Instances carry identical inputs across agents; required for oracle use.
  bool uniform = false;
  std::vector<std::string> tags;  // claimed classes, reporting only
  std::function<bool(const InitialConfiguration&)> ground_truth;
};

namespace detail {

inline std::optional<std::int64_t> decode_uint(const std::string& s) {
  if (s.empty() || s.size() > 18) return std::nullopt;
  std::int64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + (c - '0');
  }
  return v;
}

// Serialized graphs travel inside single-token inputs with ';' for newlines.
inline std::string pack_lines(const std::string& s) {
  std::string t = s;
  for (char& c : t)
    if (c == '\n') c = ';';
  return t;
}

inline std::string unpack_lines(const std::string& s) {
  std::string t = s;
  for (char& c : t)
    if (c == ';') c = '\n';
  return t;
}

inline std::optional<QuotientGraph> decode_quotient(const std::string& s) {
  auto parsed = parse_quotient(unpack_lines(s));
  if (!parsed.ok()) return std::nullopt;
  return parsed.value;
}

inline std::optional<PortLabeledGraph> decode_graph(const std::string& s) {
  auto parsed = parse_graph(unpack_lines(s));
  if (!parsed.ok()) return std::nullopt;
  return parsed.value;
}

inline bool inputs_all_equal(const InitialConfiguration& cfg) {
  for (const AgentStart& a : cfg.agents)
    if (a.input != cfg.agents[0].input) return false;
  return true;
}

inline bool inputs_all_empty(const InitialConfiguration& cfg) {
  for (const AgentStart& a : cfg.agents)
    if (!a.input.empty()) return false;
  return true;
}

inline bool graph_is_tree(const PortLabeledGraph& g) {
  return static_cast<int>(g.edges.size()) == g.node_count - 1;
}

inline int max_degree(const PortLabeledGraph& g) {
  Adjacency a(g);
  int best = 0;
  for (int v = 0; v < g.node_count; ++v) best = std::max(best, a.degree(v));
  return best;
}

inline bool has_degree(const PortLabeledGraph& g, int k) {
  Adjacency a(g);
  for (int v = 0; v < g.node_count; ++v)
    if (a.degree(v) == k) return true;
  return false;
}

}  // namespace detail

inline Problem problem_teamsize() {
  return {"teamsize", true, {"MAV"}, [](const InitialConfiguration& cfg) {
            if (!detail::inputs_all_equal(cfg)) return false;
            auto k = detail::decode_uint(cfg.agents[0].input);
            return k && static_cast<std::int64_t>(cfg.agents.size()) > *k;
          }};
}

inline Problem problem_nodes() {
  return {"#nodes", true, {"MAV"}, [](const InitialConfiguration& cfg) {
            if (!detail::inputs_all_equal(cfg)) return false;
            auto n = detail::decode_uint(cfg.agents[0].input);
            return n && cfg.graph.node_count == *n;
          }};
}

inline Problem problem_tree() {
  return {"tree", true, {"MAV"}, [](const InitialConfiguration& cfg) {
            return detail::inputs_all_empty(cfg) && detail::graph_is_tree(cfg.graph);
          }};
}

inline Problem problem_treesize() {
  return {"treesize", true, {"MAD"}, [](const InitialConfiguration& cfg) {
            if (!detail::inputs_all_equal(cfg)) return false;
            auto n = detail::decode_uint(cfg.agents[0].input);
            return n && *n >= 1 && detail::graph_is_tree(cfg.graph) &&
                   cfg.graph.node_count == *n;
          }};
}

inline Problem problem_leader() {
  return {"leader", false, {"MAD"}, [](const InitialConfiguration& cfg) {
            int ones = 0;
            for (const AgentStart& a : cfg.agents)
              for (char c : a.input) {
                if (c != '0' && c != '1') return false;
                if (c == '1') ++ones;
              }
            return ones == 1;
          }};
}

inline Problem problem_odd() {
  return {"odd", true, {"MAD"}, [](const InitialConfiguration& cfg) {
            if (!detail::inputs_all_empty(cfg)) return false;
            Adjacency a(cfg.graph);
            for (const AgentStart& s : cfg.agents)
              if (a.degree(s.node) % 2 == 0) return false;
            return true;
          }};
}

inline Problem problem_path() {
  return {"path", true, {"MAV", "co-MAV"}, [](const InitialConfiguration& cfg) {
            return detail::inputs_all_empty(cfg) && detail::graph_is_tree(cfg.graph) &&
                   detail::max_degree(cfg.graph) <= 2;
          }};
}

inline Problem problem_leaf() {
  return {"leaf", true, {"MAV"}, [](const InitialConfiguration& cfg) {
            return detail::inputs_all_empty(cfg) && detail::has_degree(cfg.graph, 1);
          }};
}

inline Problem problem_degree(int k) {
  return {"degree_" + std::to_string(k), true, {"MAV"},
          [k](const InitialConfiguration& cfg) {
            return detail::inputs_all_empty(cfg) && detail::has_degree(cfg.graph, k);
          }};
}

// A cycle here is a consistently labeled one: port 1 one way around, port 2
// the other. Exactly these graphs have the one-node two-port loop quotient.
inline Problem problem_cycle() {
  return {"cycle", true, {"MAD-quotient"}, [](const InitialConfiguration& cfg) {
            if (!detail::inputs_all_empty(cfg)) return false;
            if (cfg.graph.node_count < 3) return false;
            return isomorphic(cfg.graph, consistent_cycle(cfg.graph.node_count));
          }};
}

// A sun is a consistent cycle with one pendant leaf per cycle node; exactly
// these graphs have the two-node quotient with a loop on the cycle class.
inline Problem problem_sun() {
  return {"sun", true, {"co-MAD-quotient"}, [](const InitialConfiguration& cfg) {
            if (!detail::inputs_all_empty(cfg)) return false;
            int n = cfg.graph.node_count;
            if (n < 6 || n % 2 != 0) return false;
            return isomorphic(cfg.graph, sun(n / 2));
          }};
}

inline Problem problem_quotient() {
  return {"quotient", true, {"MAV", "oracle"}, [](const InitialConfiguration& cfg) {
            if (!detail::inputs_all_equal(cfg)) return false;
            auto h = detail::decode_quotient(cfg.agents[0].input);
            if (!h) return false;
            return !quotient_isomorphic(quotient(cfg.graph), *h);
          }};
}

inline Problem problem_map() {
  return {"map", true, {"oracle"}, [](const InitialConfiguration& cfg) {
            if (!detail::inputs_all_equal(cfg)) return false;
            auto h = detail::decode_graph(cfg.agents[0].input);
            if (!h) return false;
            return isomorphic(cfg.graph, *h);
          }};
}

// Input (i, w): one decimal digit selecting the component, then w. All agents
// must carry the same component index.
inline Problem product(std::vector<Problem> components, std::string name) {
  bool uniform = true;
  for (const Problem& p : components) uniform = uniform && p.uniform;
  auto comps = std::make_shared<std::vector<Problem>>(std::move(components));
  return {std::move(name), uniform, {"product"},
          [comps](const InitialConfiguration& cfg) {
            if (cfg.agents.empty() || cfg.agents[0].input.empty()) return false;
            char c = cfg.agents[0].input[0];
            if (c < '1' || c > '9') return false;
            int i = c - '0';
            if (i > static_cast<int>(comps->size())) return false;
            InitialConfiguration inner = cfg;
            for (AgentStart& a : inner.agents) {
              if (a.input.empty() || a.input[0] != c) return false;
              a.input = a.input.substr(1);
            }
            return (*comps)[i - 1].ground_truth(inner);
          }};
}

inline Problem complement(const Problem& p) {
  auto truth = p.ground_truth;
  return {"co-" + p.name, p.uniform, {"complement"},
          [truth](const InitialConfiguration& cfg) { return !truth(cfg); }};
}

// The complete verification target: component 1 asks whether more than k
// agents exist, component 2 whether the live quotient differs from H.
inline Problem problem_omega() {
  return product({problem_teamsize(), problem_quotient()}, "omega");
}

inline const std::vector<Problem>& problem_registry() {
  static const std::vector<Problem> registry = [] {
    std::vector<Problem> r;
    r.push_back(problem_teamsize());
    r.push_back(problem_nodes());
    r.push_back(problem_tree());
    r.push_back(problem_treesize());
    r.push_back(problem_leader());
    r.push_back(problem_odd());
    r.push_back(problem_path());
    r.push_back(problem_leaf());
    for (int k = 1; k <= 4; ++k) r.push_back(problem_degree(k));
    r.push_back(problem_cycle());
    r.push_back(problem_sun());
    r.push_back(problem_quotient());
    r.push_back(problem_map());
    r.push_back(problem_omega());
    return r;
  }();
  return registry;
}

// Lookup by name; "co-" prefixes resolve to complements of registered names.
inline std::optional<Problem> find_problem(const std::string& name) {
  for (const Problem& p : problem_registry())
    if (p.name == name) return p;
  if (name.rfind("co-", 0) == 0) {
    auto inner = find_problem(name.substr(3));
    if (inner) return complement(*inner);
  }
  return std::nullopt;
}

// Membership must be invariant under relocating the agents along any
// port-preserving automorphism. Returns a description of the first violation.
inline std::optional<std::string> closure_check(const Problem& p,
                                                const InitialConfiguration& cfg) {
  bool base = p.ground_truth(cfg);
  for (const std::vector<int>& alpha : automorphisms(cfg.graph)) {
    InitialConfiguration moved = cfg;
    for (AgentStart& a : moved.agents) a.node = alpha[a.node];
    if (p.ground_truth(moved) != base) {
      std::string desc = "problem " + p.name + " not closed under automorphism [";
      for (std::size_t i = 0; i < alpha.size(); ++i)
        desc += (i ? " " : "") + std::to_string(alpha[i]);
      return desc + "]";
    }
  }
  return std::nullopt;
}

// Black box answering membership queries for a uniform problem against the
// live configuration, with the queried input substituted for every agent.
inline Oracle oracle_env(const Problem& p, const InitialConfiguration& cfg) {
  if (!p.uniform) throw std::invalid_argument("oracle for non-uniform problem " + p.name);
  auto truth = p.ground_truth;
  InitialConfiguration base = cfg;
  return [truth, base](const std::string& w) {
    InitialConfiguration q = base;
    for (AgentStart& a : q.agents) a.input = w;
    return truth(q);
  };
}

}  // namespace maw
