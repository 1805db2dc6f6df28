#pragma once

// Shared fixtures and random-input generators for the test suites.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "amrize/conllu.hpp"
#include "amrize/graph.hpp"
#include "amrize/srl.hpp"

namespace testsup {

using namespace amrize;

// ---- the running "The boy wants to leave ." sample ----

inline AmrGraph boy_wants_gold() {
  AmrGraph g;
  NodeId want = g.add_node("want-01");
  NodeId boy = g.add_node("boy");
  NodeId leave = g.add_node("leave-01");
  g.add_edge(want, ":ARG0", boy);
  g.add_edge(want, ":ARG1", leave);
  g.add_edge(leave, ":ARG0", boy);
  g.root = want;
  return g;
}

inline DepTree boy_wants_dep(bool with_period = true) {
  const char* forms[] = {"The", "boy", "wants", "to", "leave", "."};
  const int heads[] = {2, 3, 0, 5, 3, 3};
  const char* rels[] = {"DET", "NSUBJ", "ROOT", "MARK", "XCOMP", "PUNCT"};
  DepTree t;
  int n = with_period ? 6 : 5;
  for (int i = 0; i < n; ++i) {
    Token tok;
    tok.index = i + 1;
    tok.form = forms[i];
    t.tokens.push_back(tok);
    t.heads.push_back(heads[i]);
    t.relations.push_back(rels[i]);
  }
  return t;
}

inline SrlFrameSet boy_wants_srl(bool with_period = true) {
  SrlFrameSet fs;
  const char* forms[] = {"The", "boy", "wants", "to", "leave", "."};
  int n = with_period ? 6 : 5;
  for (int i = 0; i < n; ++i) {
    Token tok;
    tok.index = i + 1;
    tok.form = forms[i];
    fs.sentence.push_back(tok);
  }
  SrlFrame want;
  want.predicate_index = 3;
  want.sense = "want.01";
  want.arguments.push_back({"ARG0", 1, 2});
  want.arguments.push_back({"ARG1", 4, 5});
  SrlFrame leave;
  leave.predicate_index = 5;
  leave.sense = "leave.01";
  leave.arguments.push_back({"ARG0", 1, 2});
  fs.frames.push_back(want);
  fs.frames.push_back(leave);
  return fs;
}

// ---- random generators (all take the engine by reference: reproducible) ----

inline const std::vector<std::string>& concept_vocab() {
  static const std::vector<std::string> v = {
      "want-01", "boy",    "girl",  "leave-01", "go-02",  "city",
      "name",    "country", "say-01", "thing",   "person", "know-01",
      "good",    "run-02",  "house", "dog"};
  return v;
}

inline const std::vector<std::string>& relation_vocab() {
  static const std::vector<std::string> v = {
      ":ARG0", ":ARG1", ":ARG2", ":mod",      ":time",
      ":op1",  ":name", ":location", ":polarity", ":ARG1-of"};
  return v;
}

// Connected rooted graph: spanning tree over n nodes (parent < child) plus
// extra edges into non-root nodes, so every extra edge adds a reentrancy.
inline AmrGraph random_graph(std::mt19937_64& eng, int max_nodes = 20,
                             double max_reentrancy = 0.3) {
  const auto& cv = concept_vocab();
  const auto& rv = relation_vocab();
  int n = 1 + static_cast<int>(eng() % static_cast<std::uint64_t>(max_nodes));
  AmrGraph g;
  for (int i = 0; i < n; ++i) g.add_node(cv[eng() % cv.size()]);
  for (int i = 1; i < n; ++i) {
    NodeId parent = static_cast<NodeId>(eng() % static_cast<std::uint64_t>(i));
    g.add_edge(parent, rv[eng() % rv.size()], static_cast<NodeId>(i));
  }
  if (n > 1) {
    double density =
        static_cast<double>(eng() % 1000) / 1000.0 * max_reentrancy;
    int extra = static_cast<int>(density * n);
    for (int k = 0; k < extra; ++k) {
      auto s = static_cast<NodeId>(eng() % static_cast<std::uint64_t>(n));
      auto t = static_cast<NodeId>(
          1 + eng() % static_cast<std::uint64_t>(n - 1));
      if (s == t) continue;
      g.add_edge(s, rv[eng() % rv.size()], t);
    }
  }
  g.root = 0;
  return g;
}

inline const std::vector<std::string>& word_vocab() {
  static const std::vector<std::string> v = {
      "the",  "boy",  "wants", "to",    "leave", "dog", "runs", "a",
      "house", "in",   "sees",  "girl",  "cat",   "and", "that", "walks",
      "big",  "town", "very",  "quickly"};
  return v;
}

inline const std::vector<std::string>& deprel_vocab() {
  static const std::vector<std::string> v = {
      "NSUBJ", "OBJ", "DET",  "MARK", "XCOMP", "ADVMOD",
      "AMOD",  "CASE", "OBL", "PUNCT"};
  return v;
}

// Random-attachment tree: shuffle positions, attach each to an earlier one.
inline DepTree random_dep(std::mt19937_64& eng, int max_tokens = 12) {
  const auto& wv = word_vocab();
  const auto& dv = deprel_vocab();
  int n = 1 + static_cast<int>(eng() % static_cast<std::uint64_t>(max_tokens));
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(eng() % static_cast<std::uint64_t>(i + 1));
    std::swap(order[i], order[j]);
  }
  DepTree t;
  t.heads.assign(n, 0);
  t.relations.assign(n, "");
  for (int i = 0; i < n; ++i) {
    Token tok;
    tok.index = i + 1;
    tok.form = wv[eng() % wv.size()];
    t.tokens.push_back(tok);
  }
  t.relations[order[0]] = "ROOT";
  for (int k = 1; k < n; ++k) {
    int pos = order[k];
    int head_pos = order[eng() % static_cast<std::uint64_t>(k)];
    t.heads[pos] = head_pos + 1;
    t.relations[pos] = dv[eng() % dv.size()];
  }
  return t;
}

inline std::string random_sense(std::mt19937_64& eng) {
  static const std::vector<std::string> senses = {
      "want.01", "leave.01", "say.01", "see.02", "run.02", "know.01"};
  return senses[eng() % senses.size()];
}

inline const std::vector<std::string>& role_vocab() {
  static const std::vector<std::string> v = {"ARG0", "ARG1", "ARG2",
                                             "ARGM-TMP", "ARGM-LOC"};
  return v;
}

// Random frames over a given sentence; spans never contain their predicate.
inline SrlFrameSet random_srl_frames(std::mt19937_64& eng,
                                     const std::vector<Token>& sentence,
                                     int max_frames = 3) {
  const auto& roles = role_vocab();
  int n = static_cast<int>(sentence.size());
  SrlFrameSet fs;
  fs.sentence = sentence;
  int nf = 1 + static_cast<int>(eng() % static_cast<std::uint64_t>(max_frames));
  for (int f = 0; f < nf; ++f) {
    SrlFrame frame;
    frame.predicate_index =
        1 + static_cast<int>(eng() % static_cast<std::uint64_t>(n));
    frame.sense = random_sense(eng);
    int na = static_cast<int>(eng() % 3);
    for (int a = 0; a < na; ++a) {
      for (int attempt = 0; attempt < 8; ++attempt) {
        int s = 1 + static_cast<int>(eng() % static_cast<std::uint64_t>(n));
        int e = s + static_cast<int>(eng() % 3);
        if (e > n) e = n;
        if (frame.predicate_index >= s && frame.predicate_index <= e) continue;
        frame.arguments.push_back({roles[eng() % roles.size()], s, e});
        break;
      }
    }
    fs.frames.push_back(frame);
  }
  return fs;
}

// Frames plus a dependency tree over the same sentence.
inline std::pair<SrlFrameSet, DepTree> random_srl_with_dep(
    std::mt19937_64& eng, int max_tokens = 10, int max_frames = 3) {
  DepTree dep = random_dep(eng, max_tokens);
  SrlFrameSet fs = random_srl_frames(eng, dep.tokens, max_frames);
  return {fs, dep};
}

// "the N V that N" pattern: a multi-token span whose head is shared when the
// two nouns coincide.
inline std::pair<SrlFrameSet, DepTree> pattern_sentence(
    const std::string& noun1, const std::string& verb,
    const std::string& noun2) {
  const std::string forms[] = {"the", noun1, verb, "that", noun2};
  const int heads[] = {2, 3, 0, 5, 3};
  const char* rels[] = {"DET", "NSUBJ", "ROOT", "DET", "OBJ"};
  DepTree dep;
  SrlFrameSet fs;
  for (int i = 0; i < 5; ++i) {
    Token tok;
    tok.index = i + 1;
    tok.form = forms[i];
    dep.tokens.push_back(tok);
    dep.heads.push_back(heads[i]);
    dep.relations.push_back(rels[i]);
    fs.sentence.push_back(tok);
  }
  SrlFrame frame;
  frame.predicate_index = 3;
  frame.sense = verb + ".01";
  frame.arguments.push_back({"ARG0", 1, 2});
  frame.arguments.push_back({"ARG1", 4, 5});
  fs.frames.push_back(frame);
  return {fs, dep};
}

}  // namespace testsup
