#include "amrize/penman.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace amrize {

std::string to_penman(const AmrGraph& g) {
  if (g.nodes.empty()) throw std::runtime_error("to_penman: empty graph");
  std::vector<NodeId> order = dfs_order(g);
  if (order.size() != g.nodes.size())
    throw std::runtime_error("to_penman: graph is not connected");

  std::vector<std::string> var(g.nodes.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    var[order[k]] = "R" + std::to_string(k);

  auto adj = adjacency(g);
  std::string out;
  std::vector<bool> emitted(g.nodes.size(), false);
  // (node, edge cursor); mirrors dfs_order so variable numbering lines up
  std::vector<std::pair<NodeId, std::size_t>> stack;
  auto open_node = [&](NodeId n) {
    emitted[n] = true;
    out += "(" + var[n] + " / " + g.nodes[n].concept_name;
    stack.emplace_back(n, 0);
  };
  open_node(g.root);
  while (!stack.empty()) {
    auto& [n, cursor] = stack.back();
    if (cursor >= adj[n].size()) {
      out += ")";
      stack.pop_back();
      continue;
    }
    const Edge& e = g.edges[adj[n][cursor++]];
    out += " " + e.relation + " ";
    if (emitted[e.target]) {
      out += var[e.target];
    } else {
      open_node(e.target);
    }
  }
  return out;
}

namespace {

std::vector<std::string> tokenize_penman(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      tokens.push_back(cur);
      cur.clear();
    }
  };
  bool line_start = true;
  bool in_comment = false;
  for (char c : text) {
    if (c == '\n') {
      flush();
      line_start = true;
      in_comment = false;
      continue;
    }
    if (in_comment) continue;
    if (line_start && c == '#') {
      in_comment = true;
      continue;
    }
    if (c != ' ' && c != '\t' && c != '\r') line_start = false;
    switch (c) {
      case ' ':
      case '\t':
      case '\r': flush(); break;
      case '(':
      case ')':
        flush();
        tokens.push_back(std::string(1, c));
        break;
      default: cur += c;
    }
  }
  flush();
  return tokens;
}

}  // namespace

AmrGraph from_penman(const std::string& text) {
  std::vector<std::string> tokens = tokenize_penman(text);
  if (tokens.empty()) throw std::runtime_error("from_penman: empty block");

  AmrGraph g;
  std::unordered_map<std::string, NodeId> declared;
  struct Pending {  // forward reference: edge index waiting for a variable
    std::size_t edge;
    std::string var;
  };
  std::vector<Pending> pending;
  std::vector<NodeId> stack;

  std::size_t i = 0;
  auto next = [&]() -> const std::string& {
    if (i >= tokens.size()) throw std::runtime_error("from_penman: unbalanced parentheses");
    return tokens[i++];
  };

  // parse one "(var / concept" header; returns the new node
  auto parse_header = [&]() -> NodeId {
    std::string var;
    std::string concept_tok;
    std::string t = next();
    if (t == "(" || t == ")") throw std::runtime_error("from_penman: expected variable after '('");
    auto slash = t.find('/');
    if (slash != std::string::npos) {
      var = t.substr(0, slash);
      concept_tok = t.substr(slash + 1);
      if (var.empty()) throw std::runtime_error("from_penman: missing variable before '/'");
    } else {
      var = t;
      std::string sep = next();
      if (sep == "/") {
        concept_tok = next();
        if (concept_tok == "(" || concept_tok == ")")
          throw std::runtime_error("from_penman: missing concept for variable '" + var + "'");
      } else if (sep.size() > 1 && sep.front() == '/') {
        concept_tok = sep.substr(1);
      } else {
        throw std::runtime_error("from_penman: expected '/' after variable '" + var + "'");
      }
    }
    if (concept_tok.empty())
      throw std::runtime_error("from_penman: missing concept for variable '" + var + "'");
    if (declared.count(var))
      throw std::runtime_error("from_penman: duplicate declaration of variable '" + var + "'");
    NodeId id = g.add_node(concept_tok);
    declared.emplace(var, id);
    return id;
  };

  if (next() != "(") throw std::runtime_error("from_penman: expected '(' at start");
  stack.push_back(parse_header());

  while (!stack.empty()) {
    if (i >= tokens.size()) throw std::runtime_error("from_penman: unbalanced parentheses");
    std::string t = next();
    if (t == ")") {
      stack.pop_back();
      continue;
    }
    if (t.front() == ':') {
      if (!is_valid_relation(t))
        throw std::runtime_error("from_penman: malformed relation '" + t + "'");
      std::string target = next();
      if (target == "(") {
        std::size_t edge_at = g.edges.size();
        g.add_edge(stack.back(), t, 0);  // patched right after the header
        NodeId child = parse_header();
        g.edges[edge_at].target = child;
        stack.push_back(child);
      } else if (target == ")") {
        throw std::runtime_error("from_penman: relation '" + t + "' has no target");
      } else {
        auto it = declared.find(target);
        if (it != declared.end()) {
          g.add_edge(stack.back(), t, it->second);
        } else {
          pending.push_back(Pending{g.edges.size(), target});
          g.add_edge(stack.back(), t, 0);
        }
      }
    } else {
      throw std::runtime_error("from_penman: expected relation or ')', got '" + t + "'");
    }
  }
  if (i < tokens.size())
    throw std::runtime_error("from_penman: trailing content after graph");
  for (const Pending& p : pending) {
    auto it = declared.find(p.var);
    if (it == declared.end())
      throw std::runtime_error("from_penman: reference to undeclared variable '" + p.var + "'");
    g.edges[p.edge].target = it->second;
  }
  g.root = 0;
  return g;
}

std::vector<RawPenmanBlock> split_penman_blocks(const std::string& text) {
  std::vector<RawPenmanBlock> blocks;
  RawPenmanBlock cur;
  bool has_content = false;
  std::size_t line_no = 0;

  std::istringstream in(text);
  std::string line;
  auto flush = [&] {
    if (has_content || !cur.comments.empty()) blocks.push_back(std::move(cur));
    cur = RawPenmanBlock{};
    has_content = false;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) {  // blank: block boundary
      flush();
      continue;
    }
    if (!has_content && cur.comments.empty()) cur.first_line = line_no;
    if (line[first] == '#') {
      cur.comments.push_back(line);
    } else {
      cur.body += line;
      cur.body += '\n';
      has_content = true;
    }
  }
  flush();
  return blocks;
}

std::vector<PenmanBlock> read_penman_corpus(const std::string& text) {
  std::vector<PenmanBlock> out;
  for (const RawPenmanBlock& raw : split_penman_blocks(text)) {
    if (raw.body.empty() && !raw.comments.empty()) {
      // comment-only block: nothing to parse
      throw std::runtime_error("penman corpus: block at line " +
                               std::to_string(raw.first_line) + " has no graph");
    }
    try {
      out.push_back(PenmanBlock{raw.comments, from_penman(raw.body)});
    } catch (const std::exception& e) {
      throw std::runtime_error("penman corpus: block at line " +
                               std::to_string(raw.first_line) + ": " + e.what());
    }
  }
  return out;
}

std::string write_penman_corpus(const std::vector<PenmanBlock>& blocks) {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += "\n";
    for (const std::string& c : blocks[i].comments) {
      out += c;
      out += '\n';
    }
    out += to_penman(blocks[i].graph);
    out += '\n';
  }
  return out;
}

}  // namespace amrize
