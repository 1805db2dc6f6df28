#include "amrize/linearize.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace amrize {

LinearSeq linearize(const AmrGraph& g) {
  if (g.nodes.empty()) throw std::runtime_error("linearize: empty graph");
  std::vector<NodeId> order = dfs_order(g);
  if (order.size() != g.nodes.size())
    throw std::runtime_error("linearize: graph is not connected");

  std::vector<std::string> var(g.nodes.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    var[order[k]] = "<R" + std::to_string(k) + ">";

  auto adj = adjacency(g);
  LinearSeq seq;
  std::vector<bool> emitted(g.nodes.size(), false);
  std::vector<std::pair<NodeId, std::size_t>> stack;
  auto open_node = [&](NodeId n) {
    emitted[n] = true;
    seq.tokens.push_back("(");
    seq.tokens.push_back(var[n]);
    seq.tokens.push_back(g.nodes[n].concept_name);
    stack.emplace_back(n, 0);
  };
  open_node(g.root);
  while (!stack.empty()) {
    auto& [n, cursor] = stack.back();
    if (cursor >= adj[n].size()) {
      seq.tokens.push_back(")");
      stack.pop_back();
      continue;
    }
    const Edge& e = g.edges[adj[n][cursor++]];
    seq.tokens.push_back(e.relation);
    if (emitted[e.target]) {
      seq.tokens.push_back(var[e.target]);
    } else {
      open_node(e.target);
    }
  }
  return seq;
}

namespace {

struct Parser {
  ParseMode mode;
  AmrGraph g;
  int repairs = 0;
  std::vector<std::string> notes;

  std::unordered_map<std::string, NodeId> declared;
  std::vector<bool> placeholder;  // node was conjured from a bare reference
  std::vector<NodeId> stack;
  std::string pending_rel;  // relation waiting for its target

  enum class State { expect_open, expect_var, expect_concept, body, expect_target };
  State state = State::expect_open;

  [[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("delinearize: " + msg);
  }
  void repair(const std::string& note) {
    ++repairs;
    notes.push_back(note);
  }
  bool lenient() const { return mode == ParseMode::lenient; }

  NodeId make_node(const std::string& label) {
    NodeId id = g.add_node(label);
    placeholder.push_back(false);
    return id;
  }

  void attach(NodeId child) {
    if (!stack.empty() && !pending_rel.empty())
      g.add_edge(stack.back(), pending_rel, child);
    pending_rel.clear();
  }

  void declare(const std::string& var_tok) {
    auto it = declared.find(var_tok);
    if (it != declared.end()) {
      NodeId prior = it->second;
      if (placeholder[prior]) {
        // earlier bare reference turned out to be a forward reference:
        // the real declaration fills in the concept
        placeholder[prior] = false;
        attach(prior);
        stack.push_back(prior);
        state = State::expect_concept;
        return;
      }
      if (!lenient()) fail("duplicate declaration of '" + var_tok + "'");
      repair("duplicate declaration of " + var_tok + " folded into the first");
      attach(prior);
      stack.push_back(prior);
      state = State::expect_concept;  // concept token is consumed and discarded
      return;
    }
    NodeId id = make_node(var_tok);  // concept patched by the next token
    declared.emplace(var_tok, id);
    attach(id);
    stack.push_back(id);
    state = State::expect_concept;
  }

  void set_concept(const std::string& tok) {
    NodeId n = stack.back();
    // a folded duplicate keeps its first concept
    if (g.nodes[n].concept_name == "" || is_variable_token(g.nodes[n].concept_name))
      g.nodes[n].concept_name = tok;
    state = State::body;
  }

  void close_node() {
    stack.pop_back();
    state = State::body;
  }

  void feed(const std::string& tok) {
    bool is_rel = tok.size() >= 2 && tok[0] == ':' && is_valid_relation(tok);
    switch (state) {
      case State::expect_open:
        if (tok == "(") {
          state = State::expect_var;
        } else if (!lenient()) {
          fail(stack.empty() && g.nodes.empty() ? "expected '(' at start"
                                                : "trailing content after graph");
        } else {
          repair("dropped stray token '" + tok + "'");
        }
        return;
      case State::expect_var:
        if (is_variable_token(tok)) {
          declare(tok);
        } else if (!lenient()) {
          fail("expected variable after '(', got '" + tok + "'");
        } else if (tok == ")") {
          repair("dropped empty '( )' pair");
          state = stack.empty() ? State::expect_open : State::body;
        } else {
          // missing variable: synthesize one, then treat tok as the concept
          std::string fresh;
          for (std::size_t k = declared.size();; ++k) {
            fresh = "<R" + std::to_string(k) + ">";
            if (!declared.count(fresh)) break;
          }
          repair("missing variable, synthesized " + fresh);
          declare(fresh);
          feed(tok);
        }
        return;
      case State::expect_concept:
        if (tok == "(" || tok == ")" || is_rel || is_variable_token(tok)) {
          if (!lenient()) fail("missing concept after variable");
          NodeId n = stack.back();
          std::string var_tok;
          for (const auto& [v, id] : declared)
            if (id == n) var_tok = v;
          repair("missing concept, reused variable token " + var_tok);
          set_concept(var_tok);
          feed(tok);
        } else {
          set_concept(tok);
        }
        return;
      case State::body:
        if (tok == ")") {
          close_node();
          if (stack.empty()) state = State::expect_open;
        } else if (is_rel) {
          pending_rel = tok;
          state = State::expect_target;
        } else if (!lenient()) {
          fail("expected relation or ')', got '" + tok + "'");
        } else {
          repair("dropped stray token '" + tok + "'");
        }
        return;
      case State::expect_target:
        if (tok == "(") {
          state = State::expect_var;  // attach() runs when the child declares
        } else if (is_variable_token(tok)) {
          auto it = declared.find(tok);
          if (it != declared.end()) {
            attach(it->second);
          } else if (!lenient()) {
            fail("reference to undeclared variable '" + tok + "'");
          } else {
            repair("undeclared reference " + tok + " became a fresh node");
            NodeId id = make_node(tok);
            placeholder[id] = true;
            declared.emplace(tok, id);
            attach(id);
          }
          state = State::body;
        } else if (is_rel) {
          if (!lenient()) fail("relation '" + pending_rel + "' has no target");
          repair("dropped dangling relation " + pending_rel);
          pending_rel = tok;
        } else if (tok == ")") {
          if (!lenient()) fail("relation '" + pending_rel + "' has no target");
          repair("dropped dangling relation " + pending_rel);
          pending_rel.clear();
          state = State::body;
          feed(tok);
        } else {
          // bare constant-like target
          if (!lenient()) fail("reference to undeclared variable '" + tok + "'");
          repair("bare target '" + tok + "' became a fresh node");
          NodeId id = make_node(tok);
          attach(id);
          state = State::body;
        }
        return;
    }
  }

  void finish() {
    if (state == State::expect_target) {
      if (!lenient()) fail("relation '" + pending_rel + "' has no target");
      repair("dropped dangling relation " + pending_rel);
      pending_rel.clear();
      state = State::body;
    }
    if (state == State::expect_var || state == State::expect_concept) {
      if (!lenient()) fail("unbalanced parentheses");
      if (state == State::expect_var) {
        repair("dropped unfinished '('");
      } else {
        NodeId n = stack.back();
        std::string var_tok;
        for (const auto& [v, id] : declared)
          if (id == n) var_tok = v;
        repair("missing concept, reused variable token " + var_tok);
        set_concept(var_tok);
      }
    }
    while (!stack.empty()) {
      if (!lenient()) fail("unbalanced parentheses");
      repair("auto-closed open subtree");
      stack.pop_back();
    }
    // placeholder nodes that never got a declaration keep the variable
    // token itself as their concept
    if (g.nodes.empty()) fail("sequence contains no graph");
    g.root = 0;
  }
};

}  // namespace

DelinearizeResult delinearize(const LinearSeq& seq, ParseMode mode) {
  if (seq.tokens.empty()) throw std::runtime_error("delinearize: empty sequence");
  Parser p;
  p.mode = mode;
  for (const std::string& tok : seq.tokens) {
    if (tok.empty()) continue;
    p.feed(tok);
  }
  p.finish();
  return DelinearizeResult{std::move(p.g), p.repairs, std::move(p.notes)};
}

LinearSeq tag_sequence(LinearSeq seq, const std::string& tag) {
  if (tag.empty()) throw std::invalid_argument("tag_sequence: empty tag");
  for (char c : tag)
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '<' || c == '>')
      throw std::invalid_argument("tag_sequence: tag must have no whitespace or angle brackets");
  seq.task_tag = tag;  // replaces: tagging twice never stacks
  return seq;
}

std::string to_line(const LinearSeq& seq) {
  std::string out;
  if (seq.task_tag) out += "<" + *seq.task_tag + "> ";
  for (std::size_t i = 0; i < seq.tokens.size(); ++i) {
    if (i) out += ' ';
    out += seq.tokens[i];
  }
  return out;
}

LinearSeq from_line(const std::string& line) {
  LinearSeq seq;
  std::istringstream in(line);
  std::string tok;
  bool first = true;
  while (in >> tok) {
    if (first && tok.size() >= 3 && tok.front() == '<' && tok.back() == '>' &&
        !is_variable_token(tok)) {
      seq.task_tag = tok.substr(1, tok.size() - 2);
    } else {
      seq.tokens.push_back(tok);
    }
    first = false;
  }
  return seq;
}

}  // namespace amrize
