// Command-line workbench: quotients, views, isomorphism, protocol runs,
// acceptance suites, corpus enumeration and the witness-pair search.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "maw/config.hpp"
#include "maw/corpus.hpp"
#include "maw/generate.hpp"
#include "maw/graph.hpp"
#include "maw/iso.hpp"
#include "maw/problems.hpp"
#include "maw/protocols/registry.hpp"
#include "maw/protocols/walks.hpp"
#include "maw/sim.hpp"
#include "maw/suites.hpp"
#include "maw/view.hpp"
#include "maw/witness.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitUsage = 1;
constexpr int kExitFault = 2;

struct GraphSource {
  std::string file;
  std::string gen;
  std::uint64_t seed = maw::kDefaultSeed;
};

std::optional<maw::PortLabeledGraph> load_graph(const GraphSource& src, std::string& err) {
  if (src.file.empty() == src.gen.empty()) {
    err = "provide exactly one of --graph and --gen";
    return std::nullopt;
  }
  if (!src.file.empty()) {
    std::ifstream in(src.file);
    if (!in) {
      err = "cannot open " + src.file;
      return std::nullopt;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    auto parsed = maw::parse_graph(buf.str());
    if (!parsed.ok()) {
      err = src.file + " line " + std::to_string(parsed.error.line) + ": " +
            parsed.error.message;
      return std::nullopt;
    }
    return parsed.value;
  }
  std::string name = src.gen;
  std::string args;
  if (auto colon = name.find(':'); colon != std::string::npos) {
    args = name.substr(colon + 1);
    name = name.substr(0, colon);
  }
  std::vector<std::string> parts;
  std::stringstream as(args);
  for (std::string p; std::getline(as, p, ',');) parts.push_back(p);
  try {
    auto num = [&](std::size_t i) { return std::stoi(parts.at(i)); };
    if (name == "cycle") return maw::consistent_cycle(num(0));
    if (name == "path") return maw::path(num(0));
    if (name == "star") return maw::star(num(0));
    if (name == "sun") return maw::sun(num(0));
    if (name == "cover") return maw::double_cycle_cover(num(0), num(1));
    if (name == "random") return maw::random_graph(num(0), std::stod(parts.at(1)), src.seed);
  } catch (const std::exception& e) {
    err = "generator " + src.gen + ": " + e.what();
    return std::nullopt;
  }
  err = "unknown generator " + name + " (cycle, path, star, sun, cover, random)";
  return std::nullopt;
}

// "node:id[:input],node:id[:input],..."; inputs may hold ';'-packed graphs.
std::optional<std::vector<maw::AgentStart>> parse_agents(const std::string& spec,
                                                         std::string& err) {
  std::vector<maw::AgentStart> out;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');) {
    maw::AgentStart a;
    std::size_t p1 = item.find(':');
    std::size_t p2 = p1 == std::string::npos ? p1 : item.find(':', p1 + 1);
    try {
      a.node = std::stoi(item.substr(0, p1));
      if (p1 == std::string::npos) throw std::invalid_argument("missing id");
      a.id = std::stoll(item.substr(p1 + 1, p2 == std::string::npos ? p2 : p2 - p1 - 1));
      if (p2 != std::string::npos) a.input = item.substr(p2 + 1);
    } catch (const std::exception&) {
      err = "bad agent '" + item + "', expected node:id[:input]";
      return std::nullopt;
    }
    out.push_back(a);
  }
  if (out.empty()) {
    err = "empty agent list";
    return std::nullopt;
  }
  return out;
}

void emit(bool json, const ordered_json& doc, const std::string& table) {
  if (json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << table;
}

ordered_json graph_json(const maw::PortLabeledGraph& g) {
  ordered_json edges = ordered_json::array();
  for (const auto& e : g.edges) edges.push_back({e.u, e.pu, e.v, e.pv});
  return {{"nodes", g.node_count}, {"edges", edges}};
}

ordered_json quotient_json(const maw::QuotientGraph& q) {
  ordered_json edges = ordered_json::array();
  for (const auto& e : q.edges) edges.push_back({e.u, e.pu, e.v, e.pv});
  return {{"nodes", q.node_count}, {"edges", edges}};
}

const char* decision_name(maw::Decision d) {
  switch (d) {
    case maw::Decision::yes: return "yes";
    case maw::Decision::no: return "no";
    default: return "undecided";
  }
}

int cmd_quotient(const GraphSource& src, bool json) {
  std::string err;
  auto g = load_graph(src, err);
  if (!g) {
    std::cerr << "error: " << err << "\n";
    return kExitUsage;
  }
  maw::QuotientResult qr = maw::quotient_result(*g);
  std::string text = maw::serialize_graph(qr.graph);
  ordered_json doc = {{"command", "quotient"},
                      {"graph", graph_json(*g)},
                      {"quotient", quotient_json(qr.graph)},
                      {"class_of", qr.class_of},
                      {"text", text}};
  std::ostringstream table;
  table << text;
  table << "classes:";
  for (int c : qr.class_of) table << " " << c;
  table << "\n";
  emit(json, doc, table.str());
  return 0;
}

int cmd_view(const GraphSource& src, int node, int depth, bool json) {
  std::string err;
  auto g = load_graph(src, err);
  if (!g) {
    std::cerr << "error: " << err << "\n";
    return kExitUsage;
  }
  if (node < 0 || node >= g->node_count || depth < 0) {
    std::cerr << "error: node or depth out of range\n";
    return kExitUsage;
  }
  maw::ViewTree t = maw::truncated_view(*g, node, depth);
  std::string text = maw::view_tree_to_string(t);
  ordered_json doc = {{"command", "view"},
                      {"node", node},
                      {"depth", depth},
                      {"size", maw::detail::truncated_view_size(maw::Adjacency(*g), node, depth)},
                      {"view", text}};
  emit(json, doc, text + "\n");
  return 0;
}

int cmd_iso(const GraphSource& a_src, const GraphSource& b_src, bool json) {
  std::string err;
  auto a = load_graph(a_src, err);
  if (!a) {
    std::cerr << "error: " << err << "\n";
    return kExitUsage;
  }
  auto b = load_graph(b_src, err);
  if (!b) {
    std::cerr << "error: " << err << "\n";
    return kExitUsage;
  }
  auto m = maw::isomorphism(*a, *b);
  ordered_json doc = {{"command", "iso"},
                      {"isomorphic", m.has_value()},
                      {"mapping", m ? ordered_json(*m) : ordered_json(nullptr)}};
  std::ostringstream table;
  table << (m ? "isomorphic" : "not isomorphic");
  if (m) {
    table << ":";
    for (int v : *m) table << " " << v;
  }
  table << "\n";
  emit(json, doc, table.str());
  return 0;
}

int cmd_run(const std::string& proto_name, const GraphSource& src, const std::string& agents_spec,
            const std::string& input, const std::string& cert, std::int64_t budget, bool trace,
            bool json) {
  std::string err;
  auto g = load_graph(src, err);
  if (!g) {
    std::cerr << "error: " << err << "\n";
    return kExitUsage;
  }
  auto spec = maw::find_protocol(proto_name);
  if (!spec) {
    std::cerr << "error: unknown protocol " << proto_name << "\n";
    return kExitUsage;
  }
  maw::InitialConfiguration cfg;
  cfg.graph = *g;
  if (agents_spec.empty()) {
    cfg.agents = {{0, 1, input}};
  } else {
    auto agents = parse_agents(agents_spec, err);
    if (!agents) {
      std::cerr << "error: " << err << "\n";
      return kExitUsage;
    }
    cfg.agents = *agents;
    if (!input.empty())
      for (maw::AgentStart& a : cfg.agents) a.input = input;
  }
  for (const maw::AgentStart& a : cfg.agents)
    if (a.node < 0 || a.node >= cfg.graph.node_count) {
      std::cerr << "error: start node " << a.node << " out of range\n";
      return kExitUsage;
    }
  std::int64_t max_id = 0;
  for (const maw::AgentStart& a : cfg.agents) max_id = std::max(max_id, a.id);

  maw::RunOptions opts;
  opts.max_rounds = budget > 0 ? budget : maw::default_budget(cfg.graph.node_count, max_id);
  opts.record_trace = trace;
  opts.certificates.assign(cfg.agents.size(), cert);
  if (spec->wants_token) opts.token_start = cfg.agents[0].node;
  if (!spec->oracle.empty()) {
    auto prob = maw::find_problem(spec->oracle);
    if (!prob) {
      std::cerr << "error: oracle problem " << spec->oracle << " missing\n";
      return kExitUsage;
    }
    opts.oracle = maw::oracle_env(*prob, cfg);
  }

  auto protocol = spec->make();
  maw::RunOutcome out = maw::run(cfg, *protocol, opts);

  std::string status = out.fault ? "fault" : (out.all_decided() ? "decided" : "undecided");
  ordered_json decisions = ordered_json::array();
  for (maw::Decision d : out.decisions) decisions.push_back(decision_name(d));
  ordered_json doc = {{"command", "run"},
                      {"protocol", spec->name},
                      {"status", status},
                      {"decisions", decisions},
                      {"decision_rounds", out.decision_round},
                      {"rounds", out.rounds_used},
                      {"budget", opts.max_rounds},
                      {"final_nodes", out.final_nodes},
                      {"token_node", out.token_node},
                      {"oracle_calls", out.oracle_log.size()},
                      {"fault", nullptr}};
  if (out.fault)
    doc["fault"] = {{"round", out.fault->round},
                    {"id", out.fault->id},
                    {"message", out.fault->message}};

  std::ostringstream table;
  table << spec->name << ": " << status << "\n";
  for (std::size_t i = 0; i < cfg.agents.size(); ++i)
    table << "  agent " << cfg.agents[i].id << ": " << decision_name(out.decisions[i])
          << " (round " << out.decision_round[i] << ", node " << out.final_nodes[i] << ")\n";
  table << "  rounds " << out.rounds_used << " of " << opts.max_rounds << ", oracle calls "
        << out.oracle_log.size() << "\n";
  if (out.fault)
    table << "  fault at round " << out.fault->round << " agent " << out.fault->id << ": "
          << out.fault->message << "\n";
  emit(json, doc, table.str());

  if (trace) {
    std::map<std::int64_t, int> token_at(out.token_trace.begin(), out.token_trace.end());
    std::map<std::int64_t, ordered_json> rounds;
    for (const maw::TraceEntry& t : out.trace)
      rounds[t.round].push_back({{"id", t.id}, {"node", t.node}, {"action", t.action}});
    for (const auto& [r, agents] : rounds) {
      ordered_json line = {{"round", r}, {"agents", agents}, {"token_node", -1}};
      if (auto it = token_at.find(r); it != token_at.end()) line["token_node"] = it->second;
      std::cout << line.dump() << "\n";
    }
  }
  return out.fault ? kExitFault : 0;
}

int cmd_suite(const std::string& name, bool json) {
  std::vector<int> ids;
  if (name == "all") {
    for (const maw::SuiteSpec& s : maw::suite_registry())
      ids.insert(ids.end(), s.criteria.begin(), s.criteria.end());
    std::sort(ids.begin(), ids.end());
  } else if (auto s = maw::find_suite(name)) {
    ids = s->criteria;
  } else {
    std::cerr << "error: unknown suite " << name << " (";
    for (const maw::SuiteSpec& s : maw::suite_registry()) std::cerr << s.name << " ";
    std::cerr << "all)\n";
    return kExitUsage;
  }
  bool all_pass = true;
  ordered_json rows = ordered_json::array();
  std::ostringstream table;
  for (int id : ids) {
    maw::CriterionResult r = maw::run_criterion(id);
    all_pass = all_pass && r.passed;
    rows.push_back({{"id", r.id},
                    {"title", r.title},
                    {"passed", r.passed},
                    {"cases", r.cases},
                    {"detail", r.detail}});
    table << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << " ["
          << r.cases << " cases] " << r.detail << "\n";
  }
  ordered_json doc = {{"command", "suite"}, {"suite", name}, {"passed", all_pass},
                      {"criteria", rows}};
  emit(json, doc, table.str());
  return all_pass ? 0 : 1;
}

int cmd_problems_list(bool json) {
  ordered_json rows = ordered_json::array();
  std::ostringstream table;
  for (const maw::Problem& p : maw::problem_registry()) {
    rows.push_back({{"name", p.name}, {"uniform", p.uniform}, {"tags", p.tags}});
    table << p.name << (p.uniform ? " (uniform)" : " (non-uniform)") << " tags:";
    for (const std::string& t : p.tags) table << " " << t;
    table << "\n";
  }
  ordered_json doc = {{"command", "problems"}, {"problems", rows}};
  emit(json, doc, table.str());
  return 0;
}

int cmd_problems_eval(const std::string& name, const GraphSource& src,
                      const std::string& agents_spec, const std::string& input, bool json) {
  auto p = maw::find_problem(name);
  if (!p) {
    std::cerr << "error: unknown problem " << name << "\n";
    return kExitUsage;
  }
  std::string err;
  auto g = load_graph(src, err);
  if (!g) {
    std::cerr << "error: " << err << "\n";
    return kExitUsage;
  }
  maw::InitialConfiguration cfg;
  cfg.graph = *g;
  if (agents_spec.empty()) {
    cfg.agents = {{0, 1, input}};
  } else {
    auto agents = parse_agents(agents_spec, err);
    if (!agents) {
      std::cerr << "error: " << err << "\n";
      return kExitUsage;
    }
    cfg.agents = *agents;
    if (!input.empty())
      for (maw::AgentStart& a : cfg.agents) a.input = input;
  }
  for (const maw::AgentStart& a : cfg.agents)
    if (a.node < 0 || a.node >= cfg.graph.node_count) {
      std::cerr << "error: start node " << a.node << " out of range\n";
      return kExitUsage;
    }
  bool value = p->ground_truth(cfg);
  ordered_json doc = {{"command", "problems"}, {"problem", p->name}, {"value", value}};
  emit(json, doc, p->name + ": " + (value ? "yes" : "no") + "\n");
  return 0;
}

int cmd_enumerate(int n, int sample, std::uint64_t seed, bool json) {
  std::vector<maw::PortLabeledGraph> graphs;
  if (n >= 1 && n <= 4 && sample == 0) {
    graphs = maw::enumerate_connected(n);
  } else if (n >= 1 && sample > 0) {
    graphs = maw::sample_connected(n, sample, seed);
  } else {
    std::cerr << "error: exhaustive enumeration covers n in 1..4; pass --sample above that\n";
    return kExitUsage;
  }
  ordered_json rows = ordered_json::array();
  std::ostringstream table;
  for (const maw::PortLabeledGraph& g : graphs) {
    std::string line = maw::detail::pack_lines(maw::serialize_graph(g));
    rows.push_back(line);
    table << line << "\n";
  }
  ordered_json doc = {{"command", "enumerate"},
                      {"n", n},
                      {"sampled", sample > 0},
                      {"count", graphs.size()},
                      {"graphs", rows}};
  std::ostringstream head;
  head << "count " << graphs.size() << "\n" << table.str();
  emit(json, doc, head.str());
  return 0;
}

int cmd_witness_search(int max_n, bool json) {
  auto w = maw::witness_same_quotient_nonisomorphic(max_n);
  ordered_json doc = {{"command", "witness-search"}, {"max_n", max_n},
                      {"found", w.has_value()}};
  std::ostringstream table;
  if (w) {
    doc["a"] = maw::detail::pack_lines(maw::serialize_graph(w->a));
    doc["b"] = maw::detail::pack_lines(maw::serialize_graph(w->b));
    table << maw::serialize_graph(w->a) << "---\n" << maw::serialize_graph(w->b);
  } else {
    doc["a"] = nullptr;
    doc["b"] = nullptr;
    table << "no pair up to n = " << max_n << "\n";
  }
  emit(json, doc, table.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for anonymous port-labeled graph agents"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  GraphSource src;
  auto add_graph_flags = [&src](CLI::App* cmd) {
    cmd->add_option("--graph", src.file, "graph file");
    cmd->add_option("--gen", src.gen, "generator, e.g. cycle:6 sun:3 random:5,0.3 cover:8,3");
    cmd->add_option("--seed", src.seed, "seed for random generation");
  };

  auto* q = app.add_subcommand("quotient", "print the view quotient of a graph");
  add_graph_flags(q);

  auto* vw = app.add_subcommand("view", "print a truncated view");
  add_graph_flags(vw);
  int view_node = 0, view_depth = 0;
  vw->add_option("--node", view_node, "root node")->required();
  vw->add_option("--depth", view_depth, "view depth")->required();

  auto* is = app.add_subcommand("iso", "test two graphs for isomorphism");
  add_graph_flags(is);
  GraphSource src2;
  is->add_option("--graph2", src2.file, "second graph file");
  is->add_option("--gen2", src2.gen, "second generator spec");
  is->add_option("--seed2", src2.seed, "seed for the second generator");

  auto* rn = app.add_subcommand("run", "run a protocol on a configuration");
  add_graph_flags(rn);
  std::string proto, agents_spec, input, cert;
  std::int64_t budget = 0;
  bool trace = false;
  rn->add_option("protocol", proto, "registered protocol name")->required();
  rn->add_option("--agents", agents_spec, "agents as node:id[:input],...");
  rn->add_option("--input", input, "uniform input for every agent");
  rn->add_option("--cert", cert, "uniform certificate for every agent");
  rn->add_option("--budget", budget, "round budget (default 4*(max id+1)*n^n + slack)");
  rn->add_flag("--trace", trace, "emit per-round JSON lines");

  auto* st = app.add_subcommand("suite", "run a named acceptance suite");
  std::string suite_name;
  st->add_option("name", suite_name, "norris rdv gather token omega reduction separations closure all")
      ->required();

  auto* pr = app.add_subcommand("problems", "inspect the problem registry");
  pr->require_subcommand(1);
  auto* pl = pr->add_subcommand("list", "list registered problems");
  (void)pl;
  auto* pe = pr->add_subcommand("eval", "evaluate ground truth on a configuration");
  add_graph_flags(pe);
  std::string prob_name, prob_agents, prob_input;
  pe->add_option("name", prob_name, "problem name")->required();
  pe->add_option("--agents", prob_agents, "agents as node:id[:input],...");
  pe->add_option("--input", prob_input, "uniform input for every agent");

  auto* en = app.add_subcommand("enumerate", "list validated graphs at a given order");
  int enum_n = 3, enum_sample = 0;
  std::uint64_t enum_seed = maw::kDefaultSeed;
  en->add_option("--n", enum_n, "node count")->required();
  en->add_option("--sample", enum_sample, "sample size for n outside 1..4");
  en->add_option("--seed", enum_seed, "sampling seed");

  auto* ws = app.add_subcommand("witness-search", "find same-quotient non-isomorphic graphs");
  int max_n = 8;
  ws->add_option("--max-n", max_n, "largest order to try");

  CLI11_PARSE(app, argc, argv);

  try {
    if (q->parsed()) return cmd_quotient(src, json);
    if (vw->parsed()) return cmd_view(src, view_node, view_depth, json);
    if (is->parsed()) return cmd_iso(src, src2, json);
    if (rn->parsed()) return cmd_run(proto, src, agents_spec, input, cert, budget, trace, json);
    if (st->parsed()) return cmd_suite(suite_name, json);
    if (pr->parsed())
      return pr->got_subcommand("list") ? cmd_problems_list(json)
                                        : cmd_problems_eval(prob_name, src, prob_agents,
                                                            prob_input, json);
    if (en->parsed()) return cmd_enumerate(enum_n, enum_sample, enum_seed, json);
    if (ws->parsed()) return cmd_witness_search(max_n, json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
