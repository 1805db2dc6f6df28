#pragma once

#include <string>
#include <vector>

#include "amrize/conllu.hpp"
#include "amrize/graph.hpp"

namespace amrize {

struct DpAmrizeConfig {
  // Incoming relations whose dependents (with their whole subtree) are
  // dropped. ROOT is special: it never removes the root token, only the
  // incoming label. Labels are matched upper-cased.
  std::vector<std::string> relation_blocklist = {"PUNCT", "DET", "MARK", "ROOT"};
  bool lemmatize = false;
};

// Deletes every token whose incoming relation is blocklisted, together with
// its entire subtree. Surviving tokens keep their original indices, so head
// references stay valid. Throws if nothing survives.
DepTree redundant_relation_removal(const DepTree& dep,
                                   const std::vector<std::string>& blocklist);

// DepTree -> PseudoAMR: relation removal, optional lemmatization, then one
// node per surviving token and one ":"+RELATION edge per surviving arc,
// children ordered by token position. The result is always a tree.
AmrGraph amrize_dp(const DepTree& dep, const DpAmrizeConfig& cfg);

}  // namespace amrize
