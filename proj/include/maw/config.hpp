#pragma once

// Initial configurations: a graph, agent start nodes (a multiset), distinct
// positive agent identities, and per-agent input strings.

#include <functional>

#include "maw/graph.hpp"

namespace maw {

struct AgentStart {
  int node = 0;
  std::int64_t id = 0;
  std::string input;  // empty string = no input
};

struct InitialConfiguration {
  PortLabeledGraph graph;
  std::vector<AgentStart> agents;

  std::vector<int> starts() const {
    std::vector<int> out;
    for (const AgentStart& a : agents) out.push_back(a.node);
    return out;
  }
};

inline InitialConfiguration make_config(PortLabeledGraph g, std::vector<int> starts,
                                        std::vector<std::int64_t> ids = {},
                                        std::vector<std::string> inputs = {}) {
  InitialConfiguration cfg;
  cfg.graph = std::move(g);
  for (std::size_t i = 0; i < starts.size(); ++i) {
    AgentStart a;
    a.node = starts[i];
    a.id = i < ids.size() ? ids[i] : static_cast<std::int64_t>(i + 1);
    a.input = i < inputs.size() ? inputs[i] : std::string{};
    cfg.agents.push_back(std::move(a));
  }
  return cfg;
}

inline ValidationReport validate(const InitialConfiguration& cfg) {
  auto fail = [](std::string msg) { return ValidationReport{false, std::move(msg)}; };
  ValidationReport graph_report = validate(cfg.graph);
  if (!graph_report.ok) return graph_report;
  if (cfg.agents.empty()) return fail("configuration needs at least one agent");
  std::set<std::int64_t> ids;
  for (const AgentStart& a : cfg.agents) {
    if (a.node < 0 || a.node >= cfg.graph.node_count) return fail("agent start node out of range");
    if (a.id <= 0) return fail("agent identities must be positive");
    if (!ids.insert(a.id).second) return fail("agent identities must be distinct");
  }
  return {};
}

// Text format:
//
//   config
//   use <graph-file>          (or an inline 'graph <n>' block)
//   agent <node> <id> <input>    ('-' stands for the empty input)
//
// The loader resolves 'use' paths to file contents; pass nullptr to forbid.
using GraphLoader = std::function<std::optional<std::string>(const std::string&)>;

struct ConfigParseResult {
  std::optional<InitialConfiguration> value;
  ParseError error;
  bool ok() const { return value.has_value(); }
};

inline ConfigParseResult parse_config(const std::string& text, const GraphLoader& loader = {}) {
  ConfigParseResult out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_config = false;
  bool have_graph = false;
  std::string graph_text;
  InitialConfiguration cfg;
  auto fail = [&](std::string msg) {
    out.error = {lineno, std::move(msg)};
    return out;
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word) || word[0] == '#') continue;
    if (!have_config) {
      if (word != "config") return fail("expected 'config' header");
      have_config = true;
      continue;
    }
    if (word == "use") {
      std::string path;
      if (!(ls >> path)) return fail("expected 'use <graph-file>'");
      if (!loader) return fail("'use' is not available here");
      std::optional<std::string> text_loaded = loader(path);
      if (!text_loaded) return fail("cannot load graph file '" + path + "'");
      graph_text = *text_loaded;
      have_graph = true;
    } else if (word == "graph") {
      graph_text = line + "\n";
      have_graph = true;
    } else if (word == "edge") {
      if (!have_graph || graph_text.rfind("graph", 0) != 0)
        return fail("'edge' line outside an inline graph block");
      graph_text += line + "\n";
    } else if (word == "agent") {
      int node;
      std::int64_t id;
      std::string input;
      if (!(ls >> node >> id >> input)) return fail("expected 'agent <node> <id> <input>'");
      if (input == "-") input.clear();
      cfg.agents.push_back({node, id, input});
    } else {
      return fail("unknown directive '" + word + "'");
    }
  }
  if (!have_config) return fail("missing 'config' header");
  if (!have_graph) return fail("configuration has no graph");
  ParseResult<PortLabeledGraph> g = parse_graph(graph_text);
  if (!g.ok()) {
    out.error = g.error;
    return out;
  }
  cfg.graph = std::move(*g.value);
  ValidationReport report = validate(cfg);
  if (!report.ok) return fail(report.violation);
  out.value = std::move(cfg);
  return out;
}

inline std::string serialize_config(const InitialConfiguration& cfg) {
  std::ostringstream out;
  out << "config\n" << serialize_graph(cfg.graph);
  for (const AgentStart& a : cfg.agents)
    out << "agent " << a.node << " " << a.id << " " << (a.input.empty() ? "-" : a.input) << "\n";
  return out.str();
}

}  // namespace maw
