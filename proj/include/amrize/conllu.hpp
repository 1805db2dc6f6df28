#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amrize/graph.hpp"

namespace amrize {

struct Token {
  int index{};  // 1-based position within the sentence
  std::string form;
  std::optional<std::string> lemma;

  bool operator==(const Token&) const = default;
};

// Dependency tree as parallel arrays over tokens. heads[i] is the token
// index of tokens[i]'s head, 0 for the root. relations are upper-cased
// with any ':'-subtype stripped. Token indices may be sparse after
// relation removal; heads always reference surviving indices.
struct DepTree {
  std::vector<Token> tokens;
  std::vector<int> heads;
  std::vector<std::string> relations;

  int size() const { return static_cast<int>(tokens.size()); }
  // position of a token index within the arrays, -1 when absent
  int position_of(int token_index) const;
  int root_position() const;  // position with head 0, -1 when absent

  bool operator==(const DepTree&) const = default;
};

// Parses CoNLL-U text: 10 tab-separated columns, '#' comments, blank-line
// sentence breaks. Multiword-token ranges (1-2) and empty nodes (1.1) are
// skipped. DEPREL is upper-cased and its subtype (after ':') dropped.
// Errors (all name the offending line): non-integer or out-of-range HEAD,
// cyclic heads, zero or multiple roots, malformed token lines.
std::vector<DepTree> read_conllu(const std::string& text);

// Emits ID, FORM, LEMMA, HEAD, DEPREL; the remaining columns are '_'.
// read_conllu(write_conllu(ts)) == ts on the retained columns.
std::string write_conllu(const std::vector<DepTree>& trees);

}  // namespace amrize
