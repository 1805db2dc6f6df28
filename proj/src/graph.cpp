#include "amrize/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace amrize {

NodeId AmrGraph::add_node(std::string label) {
  NodeId id = static_cast<NodeId>(nodes.size());
  nodes.push_back(Node{id, std::move(label)});
  return id;
}

void AmrGraph::add_edge(NodeId source, std::string relation, NodeId target) {
  edges.push_back(Edge{source, std::move(relation), target});
}

bool is_variable_token(std::string_view token) {
  if (token.size() < 4) return false;
  if (token.front() != '<' || token.back() != '>') return false;
  if (token[1] != 'R') return false;
  for (std::size_t i = 2; i + 1 < token.size(); ++i)
    if (token[i] < '0' || token[i] > '9') return false;
  return true;
}

static bool has_ws_or_paren(std::string_view text) {
  for (char c : text)
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '(' || c == ')')
      return true;
  return false;
}

bool is_valid_concept(std::string_view text) {
  return !text.empty() && !has_ws_or_paren(text) && !is_variable_token(text);
}

bool is_valid_relation(std::string_view text) {
  return text.size() >= 2 && text.front() == ':' && !has_ws_or_paren(text);
}

std::string concept_from_form(std::string_view form) {
  std::string out;
  out.reserve(form.size());
  for (char c : form) {
    switch (c) {
      case '(': out += "-LRB-"; break;
      case ')': out += "-RRB-"; break;
      case ' ':
      case '\t':
      case '\n':
      case '\r': out += '_'; break;
      default: out += c;
    }
  }
  if (out.empty()) out = "_";
  // a surface form that happens to look like a variable token gets defused
  if (is_variable_token(out)) {
    out = "-LAB-" + out.substr(1, out.size() - 2) + "-RAB-";
  }
  return out;
}

std::vector<std::vector<std::size_t>> adjacency(const AmrGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.nodes.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (g.edges[i].source < g.nodes.size()) adj[g.edges[i].source].push_back(i);
  }
  return adj;
}

std::vector<std::size_t> indegrees(const AmrGraph& g) {
  std::vector<std::size_t> deg(g.nodes.size(), 0);
  for (const Edge& e : g.edges)
    if (e.target < g.nodes.size()) ++deg[e.target];
  return deg;
}

std::vector<NodeId> dfs_order(const AmrGraph& g) {
  std::vector<NodeId> order;
  if (g.nodes.empty() || g.root >= g.nodes.size()) return order;
  auto adj = adjacency(g);
  std::vector<bool> seen(g.nodes.size(), false);
  // (node, cursor into its outgoing edge list)
  std::vector<std::pair<NodeId, std::size_t>> stack;
  seen[g.root] = true;
  order.push_back(g.root);
  stack.emplace_back(g.root, 0);
  while (!stack.empty()) {
    auto& [n, cursor] = stack.back();
    if (cursor >= adj[n].size()) {
      stack.pop_back();
      continue;
    }
    const Edge& e = g.edges[adj[n][cursor++]];
    if (e.target < g.nodes.size() && !seen[e.target]) {
      seen[e.target] = true;
      order.push_back(e.target);
      stack.emplace_back(e.target, 0);
    }
  }
  return order;
}

std::vector<std::string> assign_variables(const AmrGraph& g) {
  std::vector<NodeId> order = dfs_order(g);
  if (order.size() != g.nodes.size()) {
    std::vector<bool> seen(g.nodes.size(), false);
    for (NodeId n : order) seen[n] = true;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
      if (!seen[i])
        throw std::runtime_error("assign_variables: node " + std::to_string(i) +
                                 " is unreachable from the root");
  }
  std::vector<std::string> vars(g.nodes.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    vars[order[k]] = "<R" + std::to_string(k) + ">";
  return vars;
}

std::size_t reentrancy_count(const AmrGraph& g) {
  std::size_t total = 0;
  for (std::size_t d : indegrees(g))
    if (d > 1) total += d - 1;
  return total;
}

namespace {

// Iterative three-color DFS over the whole edge set; on the first back edge
// the current stack slice forms the witness cycle.
std::optional<std::vector<Edge>> find_cycle(const AmrGraph& g,
                                            const std::vector<std::vector<std::size_t>>& adj) {
  enum class Color { white, grey, black };
  std::vector<Color> color(g.nodes.size(), Color::white);
  for (NodeId start = 0; start < g.nodes.size(); ++start) {
    if (color[start] != Color::white) continue;
    // (node, cursor, edge index used to enter the node)
    std::vector<std::tuple<NodeId, std::size_t, std::size_t>> stack;
    color[start] = Color::grey;
    stack.emplace_back(start, 0, static_cast<std::size_t>(-1));
    while (!stack.empty()) {
      auto& [n, cursor, in_edge] = stack.back();
      if (cursor >= adj[n].size()) {
        color[n] = Color::black;
        stack.pop_back();
        continue;
      }
      std::size_t ei = adj[n][cursor++];
      const Edge& e = g.edges[ei];
      if (e.target >= g.nodes.size()) continue;
      if (color[e.target] == Color::white) {
        color[e.target] = Color::grey;
        stack.emplace_back(e.target, 0, ei);
      } else if (color[e.target] == Color::grey) {
        std::vector<Edge> cycle;
        cycle.push_back(e);
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
          if (std::get<0>(*it) == e.target) break;
          std::size_t entry = std::get<2>(*it);
          if (entry == static_cast<std::size_t>(-1)) break;
          cycle.push_back(g.edges[entry]);
        }
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ValidationReport validate(const AmrGraph& g) {
  ValidationReport report;

  bool ok = !g.nodes.empty() && g.root < g.nodes.size();
  for (std::size_t i = 0; i < g.nodes.size() && ok; ++i) {
    if (g.nodes[i].id != i) ok = false;
    if (!is_valid_concept(g.nodes[i].concept_name)) ok = false;
  }
  for (const Edge& e : g.edges) {
    if (e.source >= g.nodes.size() || e.target >= g.nodes.size()) ok = false;
    else if (e.source == e.target) ok = false;
    if (!is_valid_relation(e.relation)) ok = false;
  }
  report.well_formed = ok;

  std::vector<bool> seen(g.nodes.size(), false);
  for (NodeId n : dfs_order(g)) seen[n] = true;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    if (!seen[i]) report.unreachable_nodes.push_back(static_cast<NodeId>(i));
  report.connected = report.unreachable_nodes.empty();

  auto adj = adjacency(g);
  report.cycle_witness = find_cycle(g, adj);
  report.acyclic = !report.cycle_witness.has_value();

  return report;
}

}  // namespace amrize
