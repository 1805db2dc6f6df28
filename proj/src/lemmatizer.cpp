#include "amrize/lemmatizer.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace amrize {

const std::unordered_map<std::string, std::string>& lemma_exceptions();

namespace {

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool all_alpha_upper(const std::string& s) {
  bool saw_alpha = false;
  for (unsigned char c : s) {
    if (std::isalpha(c)) {
      saw_alpha = true;
      if (std::islower(c)) return false;
    }
  }
  return saw_alpha;
}

std::string to_lower(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool doubled_final_consonant(const std::string& stem) {
  if (stem.size() < 2) return false;
  char a = stem[stem.size() - 2], b = stem[stem.size() - 1];
  if (a != b) return false;
  switch (b) {
    case 'b': case 'd': case 'g': case 'm':
    case 'n': case 'p': case 'r': case 't':
      return true;
    default:
      return false;
  }
}

// After stripping -ing/-ed, decide whether the stem lost a final 'e'
// (mak -> make, writ -> write). Short stems only: beyond four letters the
// heuristic misfires more than it helps (visited must stay visit), so the
// frequent longer -e verbs live in the exception table instead.
bool wants_final_e(const std::string& stem) {
  auto hard_consonant = [](char c) {
    return !is_vowel(c) && c != 'w' && c != 'x' && c != 'y';
  };
  if (stem.size() == 2)
    return is_vowel(stem[0]) && hard_consonant(stem[1]);
  if (stem.size() == 3 || stem.size() == 4) {
    char c1 = stem[stem.size() - 3], c2 = stem[stem.size() - 2],
         c3 = stem[stem.size() - 1];
    return !is_vowel(c1) && is_vowel(c2) && hard_consonant(c3);
  }
  return false;
}

std::string strip_participle(std::string stem) {
  if (doubled_final_consonant(stem)) {
    stem.pop_back();
    return stem;
  }
  char last = stem.empty() ? '\0' : stem.back();
  // Stems ending in i/u/v virtually never stand alone (di -> die,
  // continu -> continue, leav -> leave), same for the dg cluster.
  if (last == 'i' || last == 'u' || last == 'v' || ends_with(stem, "dg"))
    return stem + "e";
  if (wants_final_e(stem)) return stem + "e";
  return stem;
}

// One pass of the ordered suffix rules; returns true if anything changed.
bool apply_suffix_rule(std::string& x) {
  const std::size_t n = x.size();

  if (n >= 3 && ends_with(x, "'s")) {
    x.resize(n - 2);
    return true;
  }
  if (n >= 3 && ends_with(x, "s'")) {
    x.resize(n - 1);
    return true;
  }
  if (n >= 5 && ends_with(x, "sses")) {
    x.resize(n - 2);
    return true;
  }
  if (n >= 5 && ends_with(x, "ies")) {
    x.resize(n - 3);
    x += 'y';
    return true;
  }
  if ((n >= 4 && ends_with(x, "xes")) || (n >= 5 && ends_with(x, "ches")) ||
      (n >= 5 && ends_with(x, "shes")) || (n >= 5 && ends_with(x, "zzes"))) {
    x.resize(n - 2);
    return true;
  }
  if (n >= 6 && ends_with(x, "oes")) {
    x.resize(n - 2);
    return true;
  }
  if (n >= 4 && x.back() == 's' && !ends_with(x, "ss") && !ends_with(x, "us") &&
      !ends_with(x, "is")) {
    x.resize(n - 1);
    return true;
  }
  if (n >= 6 && ends_with(x, "ing")) {
    x = strip_participle(x.substr(0, n - 3));
    return true;
  }
  if (n >= 5 && ends_with(x, "ied")) {
    x.resize(n - 3);
    x += 'y';
    return true;
  }
  if (ends_with(x, "eed")) return false;  // agreed-class handled by exceptions
  if (n >= 4 && ends_with(x, "ed")) {
    x = strip_participle(x.substr(0, n - 2));
    return true;
  }
  return false;
}

}  // namespace

std::string lemmatize_token(const std::string& form) {
  if (form.empty()) return form;
  if (all_alpha_upper(form)) return form;

  std::string x = to_lower(form);
  const auto& exceptions = lemma_exceptions();

  // Iterate exception lookups and suffix rules to a fixpoint. Every rule
  // shortens the token and exception hops never chain (values are stable),
  // so this terminates; the cap is sheer paranoia.
  for (std::size_t guard = 0; guard < x.size() + 4; ++guard) {
    auto it = exceptions.find(x);
    if (it != exceptions.end()) {
      if (it->second == x) return x;
      x = it->second;
      continue;
    }
    if (!apply_suffix_rule(x)) break;
  }
  return x;
}

}  // namespace amrize
