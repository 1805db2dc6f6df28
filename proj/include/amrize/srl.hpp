#pragma once

#include <string>
#include <vector>

#include "amrize/conllu.hpp"

namespace amrize {

// Argument span: 1-based inclusive token indices.
struct SrlArgument {
  std::string role;  // "ARG0", "ARGM-TMP", ...
  int start{};
  int end{};

  bool operator==(const SrlArgument&) const = default;
};

struct SrlFrame {
  int predicate_index{};  // 1-based token position of the predicate
  std::string sense;      // "want.01"
  std::vector<SrlArgument> arguments;

  bool operator==(const SrlFrame&) const = default;
};

struct SrlFrameSet {
  std::vector<Token> sentence;
  std::vector<SrlFrame> frames;

  bool operator==(const SrlFrameSet&) const = default;
};

// One JSON record per line:
//   {"tokens": [...], "frames": [{"predicate": 3, "sense": "want.01",
//     "args": [{"role": "ARG0", "start": 1, "end": 2}]}]}
// Errors (all name the offending line): malformed records, spans out of
// bounds, span end < start, a predicate inside one of its own spans.
std::vector<SrlFrameSet> read_srl_jsonl(const std::string& text);

std::string write_srl_jsonl(const std::vector<SrlFrameSet>& records);

}  // namespace amrize
