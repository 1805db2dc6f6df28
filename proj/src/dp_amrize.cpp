#include "amrize/dp_amrize.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_set>

#include "amrize/lemmatizer.hpp"

namespace amrize {

namespace {

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

// child positions per parent position, ordered by token position
std::vector<std::vector<int>> child_lists(const DepTree& dep) {
  std::vector<std::vector<int>> children(dep.size());
  for (int pos = 0; pos < dep.size(); ++pos) {
    int head = dep.heads[pos];
    if (head == 0) continue;
    int parent = dep.position_of(head);
    if (parent >= 0) children[parent].push_back(pos);
  }
  return children;
}

}  // namespace

DepTree redundant_relation_removal(const DepTree& dep,
                                   const std::vector<std::string>& blocklist) {
  std::unordered_set<std::string> blocked;
  for (const std::string& label : blocklist) blocked.insert(upper(label));

  auto children = child_lists(dep);
  std::vector<bool> removed(dep.size(), false);
  std::vector<bool> clear_label(dep.size(), false);

  for (int pos = 0; pos < dep.size(); ++pos) {
    if (!blocked.count(dep.relations[pos])) continue;
    if (dep.heads[pos] == 0) {
      // ROOT: drop the label, never the token
      clear_label[pos] = true;
      continue;
    }
    std::vector<int> frontier = {pos};
    while (!frontier.empty()) {
      int p = frontier.back();
      frontier.pop_back();
      if (removed[p]) continue;
      removed[p] = true;
      frontier.insert(frontier.end(), children[p].begin(), children[p].end());
    }
  }

  DepTree out;
  for (int pos = 0; pos < dep.size(); ++pos) {
    if (removed[pos]) continue;
    out.tokens.push_back(dep.tokens[pos]);
    out.heads.push_back(dep.heads[pos]);
    out.relations.push_back(clear_label[pos] ? "" : dep.relations[pos]);
  }
  if (out.tokens.empty())
    throw std::runtime_error("redundant_relation_removal: empty tree after removal");
  return out;
}

AmrGraph amrize_dp(const DepTree& dep, const DpAmrizeConfig& cfg) {
  DepTree pruned = redundant_relation_removal(dep, cfg.relation_blocklist);

  std::vector<std::string> concepts(pruned.size());
  for (int pos = 0; pos < pruned.size(); ++pos) {
    const std::string& form = pruned.tokens[pos].form;
    concepts[pos] = concept_from_form(cfg.lemmatize ? lemmatize_token(form) : form);
  }

  auto children = child_lists(pruned);
  int root_pos = pruned.root_position();
  if (root_pos < 0)
    throw std::runtime_error("amrize_dp: tree has no root token");

  AmrGraph g;
  // pre-order creation so node ids coincide with DFS order
  std::vector<std::pair<int, NodeId>> stack;  // (position, graph node)
  NodeId root_id = g.add_node(concepts[root_pos]);
  g.root = root_id;
  stack.emplace_back(root_pos, root_id);
  std::vector<std::size_t> cursor(pruned.size(), 0);
  while (!stack.empty()) {
    auto [pos, id] = stack.back();
    if (cursor[pos] == children[pos].size()) {
      stack.pop_back();
      continue;
    }
    int child = children[pos][cursor[pos]++];
    NodeId child_id = g.add_node(concepts[child]);
    g.add_edge(id, ":" + pruned.relations[child], child_id);
    stack.emplace_back(child, child_id);
  }
  return g;
}

}  // namespace amrize
