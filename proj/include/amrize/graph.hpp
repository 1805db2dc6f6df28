#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace amrize {

using NodeId = std::uint32_t;

// Concept node. Node ids are dense: node k lives at nodes[k].
struct Node {
  NodeId id{};
  std::string concept_name;

  bool operator==(const Node&) const = default;
};

// Directed labeled edge. Relations carry their leading ':' (":ARG0", ":snt1").
struct Edge {
  NodeId source{};
  std::string relation;
  NodeId target{};

  bool operator==(const Edge&) const = default;
};

// Rooted directed labeled multigraph. The edge list order is significant:
// it fixes DFS traversal order and therefore variable numbering and
// linearization output. Cycles are representable; they are reported by
// validate(), never silently broken.
struct AmrGraph {
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  NodeId root{0};

  NodeId add_node(std::string label);
  void add_edge(NodeId source, std::string relation, NodeId target);

  std::size_t node_count() const { return nodes.size(); }
  std::size_t edge_count() const { return edges.size(); }

  bool operator==(const AmrGraph&) const = default;
};

struct ValidationReport {
  bool well_formed{false};
  bool connected{false};
  bool acyclic{false};
  std::vector<NodeId> unreachable_nodes;             // empty iff connected
  std::optional<std::vector<Edge>> cycle_witness;    // present iff not acyclic
};

// "<R12>"-style variable tokens.
bool is_variable_token(std::string_view token);

// Concepts: non-empty, no whitespace, no parentheses, not a variable token.
bool is_valid_concept(std::string_view text);

// Relations: ':' followed by one or more non-whitespace, non-paren chars.
bool is_valid_relation(std::string_view text);

// Escapes an arbitrary surface form into a valid concept token
// (PTB-style -LRB-/-RRB- for parens, '_' for whitespace).
std::string concept_from_form(std::string_view form);

// Structural diagnosis. Reports problems, never throws, never mutates.
ValidationReport validate(const AmrGraph& graph);

// Pre-order DFS from the root, children in edge-list order. Nodes not
// reachable from the root are absent from the result.
std::vector<NodeId> dfs_order(const AmrGraph& graph);

// Variable token per node: the k-th node first visited in DFS order gets
// "<Rk>". Result is indexed by NodeId. Throws if any node is unreachable
// (the offending node is named).
std::vector<std::string> assign_variables(const AmrGraph& graph);

// Number of reentrant references: sum over nodes of max(0, indegree - 1).
std::size_t reentrancy_count(const AmrGraph& graph);

std::vector<std::size_t> indegrees(const AmrGraph& graph);

// Outgoing edge indices per node, in edge-list order.
std::vector<std::vector<std::size_t>> adjacency(const AmrGraph& graph);

}  // namespace amrize
