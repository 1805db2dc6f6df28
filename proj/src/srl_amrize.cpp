#include "amrize/srl_amrize.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace amrize {

namespace {

// 1-based index of the unique span token whose head lies outside the span;
// ambiguous (or, defensively, absent) roots fall back to the leftmost
// candidate or the span start. `unique` reports whether no fallback fired.
int span_root_token(const DepTree& dep, int start, int end, bool& unique) {
  std::vector<int> candidates;
  for (int tok = start; tok <= end; ++tok) {
    int pos = dep.position_of(tok);
    if (pos < 0) throw std::runtime_error("span token missing from dependency tree");
    int head = dep.heads[pos];
    if (head < start || head > end) candidates.push_back(tok);
  }
  unique = candidates.size() == 1;
  if (candidates.empty()) return start;
  return candidates.front();
}

std::string span_surface(const SrlFrameSet& frames, int start, int end) {
  std::string joined;
  for (int tok = start; tok <= end; ++tok) {
    if (tok != start) joined += '_';
    joined += frames.sentence[tok - 1].form;
  }
  return joined;
}

void check_sentence_matches(const SrlFrameSet& frames, const DepTree& dep,
                            const char* op) {
  if (static_cast<int>(frames.sentence.size()) != dep.size())
    throw std::runtime_error(std::string(op) +
                             ": dependency tree does not cover the sentence");
}

}  // namespace

std::string sense_to_concept(const std::string& sense) {
  auto dot = sense.rfind('.');
  if (dot != std::string::npos && dot + 1 < sense.size()) {
    bool digits = true;
    for (std::size_t i = dot + 1; i < sense.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(sense[i]))) digits = false;
    if (digits) {
      std::string converted = sense;
      converted[dot] = '-';
      return concept_from_form(converted);
    }
  }
  return concept_from_form(sense);
}

ReductionResult argument_reduction(const SrlFrameSet& frames, const DepTree& dep) {
  check_sentence_matches(frames, dep, "argument_reduction");
  ReductionResult out;
  out.frames = frames;
  for (std::size_t i = 0; i < out.frames.frames.size(); ++i) {
    SrlFrame& frame = out.frames.frames[i];
    for (SrlArgument& arg : frame.arguments) {
      if (arg.start == arg.end) continue;
      bool unique = false;
      int root_tok = span_root_token(dep, arg.start, arg.end, unique);
      if (!unique)
        out.warnings.push_back("frame " + std::to_string(i + 1) + " role " +
                               arg.role + " span " + std::to_string(arg.start) +
                               "-" + std::to_string(arg.end) +
                               ": no unique span root, using token " +
                               std::to_string(root_tok));
      arg.start = arg.end = root_tok;
    }
  }
  return out;
}

AmrGraph connectivity_formation(const SrlFrameSet& frames,
                                const SrlAmrizeConfig& cfg) {
  if (frames.frames.empty())
    throw std::runtime_error("connectivity_formation: no predicate frames");
  const int n = static_cast<int>(frames.sentence.size());
  AmrGraph g;
  NodeId root = g.add_node(concept_from_form(cfg.virtual_root_concept));
  g.root = root;
  for (std::size_t i = 0; i < frames.frames.size(); ++i) {
    const SrlFrame& frame = frames.frames[i];
    NodeId pred = g.add_node(sense_to_concept(frame.sense));
    g.add_edge(root, cfg.virtual_edge_prefix + std::to_string(i + 1), pred);
    for (const SrlArgument& arg : frame.arguments) {
      if (arg.start < 1 || arg.end > n || arg.start > arg.end)
        throw std::runtime_error("connectivity_formation: span out of range");
      NodeId node = g.add_node(concept_from_form(span_surface(frames, arg.start, arg.end)));
      g.add_edge(pred, ":" + arg.role, node);
    }
  }
  return g;
}

AmrGraph reentrancy_restoration(const AmrGraph& graph) {
  AmrGraph g = graph;
  std::vector<bool> removed(g.nodes.size(), false);
  std::unordered_map<std::string, NodeId> first_seen;
  first_seen.emplace(g.nodes[g.root].concept_name, g.root);

  // depth-2 walk in edge-list order: predicate, then its arguments
  for (const Edge& root_edge : graph.edges) {
    if (root_edge.source != g.root) continue;
    NodeId pred = root_edge.target;
    first_seen.emplace(g.nodes[pred].concept_name, pred);  // never merged
    for (Edge& e : g.edges) {
      if (e.source != pred) continue;
      NodeId arg = e.target;
      if (removed[arg] || arg == pred) continue;
      auto [it, inserted] = first_seen.emplace(g.nodes[arg].concept_name, arg);
      if (inserted || it->second == arg) continue;
      if (it->second == pred) continue;  // never manufacture a self-loop
      e.target = it->second;
      removed[arg] = true;
    }
  }

  AmrGraph out;
  std::vector<NodeId> remap(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (removed[i]) continue;
    remap[i] = out.add_node(g.nodes[i].concept_name);
  }
  for (const Edge& e : g.edges)
    out.add_edge(remap[e.source], e.relation, remap[e.target]);
  out.root = remap[g.root];
  return out;
}

namespace {

struct MergeClasses {
  std::vector<NodeId> parent;
  std::vector<std::string> concept_label;
  std::vector<int> pred_frame;  // -1 when the class holds no predicate

  NodeId find(NodeId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // min-id root so that the surviving node is always the earliest created
  void unite(NodeId a, NodeId b) {
    NodeId ra = find(a), rb = find(b);
    if (ra == rb) return;
    NodeId s = std::min(ra, rb), l = std::max(ra, rb);
    // a predicate concept beats an argument concept; between two
    // predicates, the earlier frame wins
    int pf;
    std::string label;
    if (pred_frame[ra] >= 0 && pred_frame[rb] >= 0) {
      NodeId w = pred_frame[ra] <= pred_frame[rb] ? ra : rb;
      pf = pred_frame[w];
      label = concept_label[w];
    } else if (pred_frame[ra] >= 0 || pred_frame[rb] >= 0) {
      NodeId w = pred_frame[ra] >= 0 ? ra : rb;
      pf = pred_frame[w];
      label = concept_label[w];
    } else {
      pf = -1;
      label = concept_label[s];
    }
    parent[l] = s;
    pred_frame[s] = pf;
    concept_label[s] = std::move(label);
  }
};

}  // namespace

AmrGraph dependency_guided_restoration(const AmrGraph& graph,
                                       const SrlFrameSet& frames,
                                       const DepTree& dep) {
  check_sentence_matches(frames, dep, "dependency_guided_restoration");

  // reconstruct the connectivity_formation layout: root, then per frame a
  // predicate node followed by its argument nodes
  const std::size_t m = frames.frames.size();
  std::vector<NodeId> pred_id(m);
  std::vector<std::vector<NodeId>> arg_id(m);
  NodeId next = 1;
  for (std::size_t i = 0; i < m; ++i) {
    pred_id[i] = next++;
    arg_id[i].resize(frames.frames[i].arguments.size());
    for (NodeId& a : arg_id[i]) a = next++;
  }
  if (graph.nodes.size() != next || graph.root != 0)
    throw std::runtime_error(
        "dependency_guided_restoration: graph does not match the frame set");

  MergeClasses mc;
  mc.parent.resize(next);
  std::iota(mc.parent.begin(), mc.parent.end(), 0);
  mc.concept_label.resize(next);
  mc.pred_frame.assign(next, -1);
  for (std::size_t i = 0; i < next; ++i)
    mc.concept_label[i] = graph.nodes[i].concept_name;
  for (std::size_t i = 0; i < m; ++i) mc.pred_frame[pred_id[i]] = static_cast<int>(i);

  // step 1: rename each leaf to its span root's surface form and merge
  // leaves that share the span-root token
  std::unordered_map<int, NodeId> leaf_for_token;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < arg_id[i].size(); ++j) {
      const SrlArgument& arg = frames.frames[i].arguments[j];
      bool unique = false;
      int tok = span_root_token(dep, arg.start, arg.end, unique);
      mc.concept_label[arg_id[i][j]] =
          concept_from_form(frames.sentence[tok - 1].form);
      auto [it, inserted] = leaf_for_token.emplace(tok, arg_id[i][j]);
      if (!inserted) mc.unite(it->second, arg_id[i][j]);
    }
  }

  // step 2: predicate p folds into the argument node of q that contains its
  // token, provided p's token depends directly on q's predicate token
  for (std::size_t p = 0; p < m; ++p) {
    int p_tok = frames.frames[p].predicate_index;
    int p_pos = dep.position_of(p_tok);
    if (p_pos < 0)
      throw std::runtime_error("predicate token missing from dependency tree");
    int p_head = dep.heads[p_pos];
    for (std::size_t q = 0; q < m; ++q) {
      if (p == q) continue;
      if (p_head != frames.frames[q].predicate_index) continue;
      int best = -1;
      for (std::size_t j = 0; j < arg_id[q].size(); ++j) {
        const SrlArgument& arg = frames.frames[q].arguments[j];
        if (p_tok < arg.start || p_tok > arg.end) continue;
        if (best < 0 || arg.start < frames.frames[q].arguments[best].start)
          best = static_cast<int>(j);
      }
      if (best >= 0) mc.unite(pred_id[p], arg_id[q][best]);
    }
  }

  // materialize the merged graph (class roots survive, in id order)
  std::vector<NodeId> remap(next);
  AmrGraph merged;
  for (NodeId i = 0; i < next; ++i)
    if (mc.find(i) == i) remap[i] = merged.add_node(mc.concept_label[i]);
  for (const Edge& e : graph.edges) {
    NodeId s = remap[mc.find(e.source)], t = remap[mc.find(e.target)];
    if (s == t) continue;  // merged endpoints: drop rather than self-loop
    merged.add_edge(s, e.relation, t);
  }
  merged.root = remap[mc.find(graph.root)];

  // step 3: drop the virtual root when exactly one indegree-0 node remains
  // and every surviving node is reachable from it
  const NodeId vroot = merged.root;
  std::vector<int> indeg(merged.nodes.size(), 0);
  for (const Edge& e : merged.edges)
    if (e.source != vroot) ++indeg[e.target];
  std::vector<NodeId> zero;
  for (NodeId i = 0; i < merged.nodes.size(); ++i)
    if (i != vroot && indeg[i] == 0) zero.push_back(i);
  if (zero.size() != 1) return merged;

  NodeId new_root = zero.front();
  std::vector<bool> seen(merged.nodes.size(), false);
  std::vector<NodeId> frontier = {new_root};
  seen[new_root] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    NodeId v = frontier.back();
    frontier.pop_back();
    for (const Edge& e : merged.edges)
      if (e.source == v && !seen[e.target]) {
        seen[e.target] = true;
        ++reached;
        frontier.push_back(e.target);
      }
  }
  if (reached != merged.nodes.size() - 1) return merged;

  AmrGraph out;
  std::vector<NodeId> densify(merged.nodes.size());
  for (NodeId i = 0; i < merged.nodes.size(); ++i) {
    if (i == vroot) continue;
    densify[i] = out.add_node(merged.nodes[i].concept_name);
  }
  for (const Edge& e : merged.edges) {
    if (e.source == vroot) continue;
    out.add_edge(densify[e.source], e.relation, densify[e.target]);
  }
  out.root = densify[new_root];
  return out;
}

SrlAmrizeResult amrize_srl(const SrlFrameSet& frames, const DepTree* dep,
                           const SrlAmrizeConfig& cfg) {
  SrlAmrizeResult result;
  const SrlFrameSet* effective = &frames;
  SrlFrameSet reduced;
  if (cfg.argument_reduction) {
    if (!dep)
      throw std::runtime_error("amrize_srl: argument reduction requires a dependency tree");
    ReductionResult r = argument_reduction(frames, *dep);
    result.warnings = std::move(r.warnings);
    reduced = std::move(r.frames);
    effective = &reduced;
  }
  AmrGraph g = connectivity_formation(*effective, cfg);
  switch (cfg.restoration) {
    case Restoration::none:
      break;
    case Restoration::dfs:
      g = reentrancy_restoration(g);
      break;
    case Restoration::dependency_guided:
      if (!dep)
        throw std::runtime_error(
            "amrize_srl: dependency-guided restoration requires a dependency tree");
      // membership tests run over the original, pre-reduction spans
      g = dependency_guided_restoration(g, frames, *dep);
      break;
  }
  result.graph = std::move(g);
  return result;
}

}  // namespace amrize
