#include "amrize/conllu.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace amrize {

int DepTree::position_of(int token_index) const {
  for (std::size_t i = 0; i < tokens.size(); ++i)
    if (tokens[i].index == token_index) return static_cast<int>(i);
  return -1;
}

int DepTree::root_position() const {
  for (std::size_t i = 0; i < heads.size(); ++i)
    if (heads[i] == 0) return static_cast<int>(i);
  return -1;
}

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw std::runtime_error("conllu: line " + std::to_string(line_no) + ": " + msg);
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      cols.push_back(line.substr(start));
      break;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return cols;
}

bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string normalize_deprel(const std::string& raw) {
  std::string rel = raw.substr(0, raw.find(':'));  // drop subtype
  for (char& c : rel)
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  return rel;
}

void finish_sentence(DepTree& t, std::vector<std::size_t>& token_lines,
                     std::size_t end_line, std::vector<DepTree>& out) {
  if (t.tokens.empty()) return;
  int n = static_cast<int>(t.tokens.size());
  int roots = 0;
  for (std::size_t i = 0; i < t.heads.size(); ++i) {
    if (t.heads[i] < 0 || t.heads[i] > n)
      fail(token_lines[i], "HEAD " + std::to_string(t.heads[i]) +
                               " out of range for sentence of " +
                               std::to_string(n) + " tokens");
    if (t.heads[i] == 0) {
      ++roots;
      if (t.relations[i] != "ROOT")
        fail(token_lines[i],
             "token with HEAD 0 must have relation ROOT, got '" + t.relations[i] + "'");
      if (roots > 1) fail(token_lines[i], "sentence has multiple ROOT tokens");
    }
  }
  if (roots == 0) fail(end_line, "sentence has no ROOT token");
  // every token must reach the root without revisiting
  for (int i = 0; i < n; ++i) {
    int cur = i;
    for (int steps = 0; ; ++steps) {
      if (steps > n) fail(token_lines[i], "cyclic heads detected at token " +
                                              std::to_string(t.tokens[i].index));
      int h = t.heads[cur];
      if (h == 0) break;
      cur = h - 1;
    }
  }
  out.push_back(std::move(t));
  t = DepTree{};
  token_lines.clear();
}

}  // namespace

std::vector<DepTree> read_conllu(const std::string& text) {
  std::vector<DepTree> out;
  DepTree cur;
  std::vector<std::size_t> cur_lines;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  int expected_id = 1;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      finish_sentence(cur, cur_lines, line_no, out);
      expected_id = 1;
      continue;
    }
    if (line[0] == '#') continue;

    std::vector<std::string> cols = split_tabs(line);
    if (cols.size() != 10)
      fail(line_no, "expected 10 tab-separated columns, got " + std::to_string(cols.size()));

    const std::string& id = cols[0];
    if (id.find('-') != std::string::npos) continue;  // multiword token range
    if (id.find('.') != std::string::npos) continue;  // empty node

    int idx = 0;
    if (!parse_int(id, idx) || idx <= 0) fail(line_no, "bad token id '" + id + "'");
    if (idx != expected_id)
      fail(line_no, "unexpected token id " + std::to_string(idx) + ", expected " +
                        std::to_string(expected_id));
    ++expected_id;

    if (cols[1].empty()) fail(line_no, "empty FORM");
    int head = 0;
    if (!parse_int(cols[6], head))
      fail(line_no, "non-integer HEAD '" + cols[6] + "'");
    if (head < 0) fail(line_no, "negative HEAD");

    Token tok;
    tok.index = idx;
    tok.form = cols[1];
    if (cols[2] != "_" && !cols[2].empty()) tok.lemma = cols[2];
    cur.tokens.push_back(std::move(tok));
    cur.heads.push_back(head);
    cur.relations.push_back(normalize_deprel(cols[7]));
    cur_lines.push_back(line_no);
  }
  finish_sentence(cur, cur_lines, line_no + 1, out);
  return out;
}

std::string write_conllu(const std::vector<DepTree>& trees) {
  std::string out;
  for (std::size_t s = 0; s < trees.size(); ++s) {
    const DepTree& t = trees[s];
    for (std::size_t i = 0; i < t.tokens.size(); ++i) {
      out += std::to_string(t.tokens[i].index);
      out += '\t';
      out += t.tokens[i].form;
      out += '\t';
      out += t.tokens[i].lemma ? *t.tokens[i].lemma : "_";
      out += "\t_\t_\t_\t";
      out += std::to_string(t.heads[i]);
      out += '\t';
      out += t.relations[i];
      out += "\t_\t_\n";
    }
    out += '\n';
  }
  return out;
}

}  // namespace amrize
