#pragma once

#include <string>
#include <vector>

#include "amrize/graph.hpp"

namespace amrize {

// Penman serialization. Variables are "R<k>" following DFS first-visit
// order; reentrant and cyclic references appear as bare variables.
// Requires a connected graph.
std::string to_penman(const AmrGraph& graph);

// Parses a single Penman block. Leading '#' comment lines are ignored.
// Variable names are arbitrary identifiers; nodes are numbered in
// declaration order and the first declared node becomes the root.
// Forward references within the block are allowed. Errors: unbalanced
// parentheses, reference to a variable never declared in the block,
// duplicate variable declarations, malformed structure.
AmrGraph from_penman(const std::string& text);

// One graph per blank-line-separated block; '#'-leading lines are kept as
// opaque metadata attached to their block.
struct PenmanBlock {
  std::vector<std::string> comments;
  AmrGraph graph;
};

// Raw block splitting (no parsing); lets callers handle per-block errors.
struct RawPenmanBlock {
  std::vector<std::string> comments;
  std::string body;
  std::size_t first_line{0};  // 1-based line number of the block start
};
std::vector<RawPenmanBlock> split_penman_blocks(const std::string& text);

std::vector<PenmanBlock> read_penman_corpus(const std::string& text);
std::string write_penman_corpus(const std::vector<PenmanBlock>& blocks);

}  // namespace amrize
