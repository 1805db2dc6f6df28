#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amrize/graph.hpp"

namespace amrize {

// Token sequence for seq2seq training. Example:
//   ( <R0> want-01 :ARG0 ( <R1> boy ) :ARG1 ( <R2> leave-01 :ARG0 <R1> ) )
struct LinearSeq {
  std::vector<std::string> tokens;
  std::optional<std::string> task_tag;  // serialized as a leading "<TAG>"

  bool operator==(const LinearSeq&) const = default;
};

// DFS linearization: "(" <Rk> concept on first visit, relation label per
// edge, bare <Rk> for references to already-visited nodes, ")" on exit.
// Requires a connected graph.
LinearSeq linearize(const AmrGraph& graph);

enum class ParseMode { strict, lenient };

struct DelinearizeResult {
  AmrGraph graph;
  int repairs{0};                  // lenient-mode fix count (0 in strict)
  std::vector<std::string> notes;  // one human-readable note per repair
};

// Inverse of linearize. strict: the sequence must match the grammar
// exactly (unbalanced parens, references to undeclared variables, missing
// concepts and empty input are errors). lenient: model output is repaired
// (unclosed subtrees auto-closed, dangling relation labels dropped,
// undeclared references become fresh nodes named by the variable token,
// duplicate declarations fold into the first); only an empty sequence is
// an error.
DelinearizeResult delinearize(const LinearSeq& seq, ParseMode mode);

// Sets the task tag (replaces any existing tag; never stacks).
LinearSeq tag_sequence(LinearSeq seq, const std::string& tag);

// One sequence per line, tokens space-separated, optional leading tag.
std::string to_line(const LinearSeq& seq);
LinearSeq from_line(const std::string& line);

}  // namespace amrize
