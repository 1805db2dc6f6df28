#pragma once

#include <string>
#include <vector>

#include "amrize/conllu.hpp"
#include "amrize/graph.hpp"
#include "amrize/srl.hpp"

namespace amrize {

enum class Restoration { none, dfs, dependency_guided };

struct SrlAmrizeConfig {
  bool argument_reduction = false;
  Restoration restoration = Restoration::none;
  std::string virtual_root_concept = "multi-sentence";
  std::string virtual_edge_prefix = ":snt";
};

struct ReductionResult {
  SrlFrameSet frames;
  std::vector<std::string> warnings;
};

struct SrlAmrizeResult {
  AmrGraph graph;
  std::vector<std::string> warnings;
};

// "want.01" -> "want-01"; senses without a trailing .NN pass through.
std::string sense_to_concept(const std::string& sense);

// Replaces every multi-token argument span by the single-token span of its
// span root: the unique token whose head lies outside the span. Zero or
// several candidates fall back to the leftmost one, with a warning.
ReductionResult argument_reduction(const SrlFrameSet& frames, const DepTree& dep);

// Virtual root "multi-sentence" with one :snt{i} edge per frame (1-based,
// input order) to a predicate node, which points to one freshly copied
// argument node per span (surface text joined with underscores).
AmrGraph connectivity_formation(const SrlFrameSet& frames,
                                const SrlAmrizeConfig& cfg);

// Variable-dictionary restoration: walk predicates under the root in edge
// order, then their argument children; an argument whose concept was seen
// before is merged into the first occurrence. Predicates are never merged.
AmrGraph reentrancy_restoration(const AmrGraph& graph);

// Dependency-guided restoration over a connectivity_formation graph.
// `frames` must carry the original (pre-reduction) spans.
// Step 1: each leaf is renamed to its span root's surface form and leaves
//         sharing the same span-root token are merged.
// Step 2: if predicate p's token lies inside an argument span of frame q
//         and depends directly on q's predicate token, p's predicate node
//         merges into that argument node, keeping the sense concept.
// Step 3: the virtual root is removed when exactly one indegree-0 node
//         remains and it reaches every other node.
AmrGraph dependency_guided_restoration(const AmrGraph& graph,
                                       const SrlFrameSet& frames,
                                       const DepTree& dep);

// Full pipeline. `dep` may be null unless argument reduction or
// dependency-guided restoration is configured.
SrlAmrizeResult amrize_srl(const SrlFrameSet& frames, const DepTree* dep,
                           const SrlAmrizeConfig& cfg);

}  // namespace amrize
