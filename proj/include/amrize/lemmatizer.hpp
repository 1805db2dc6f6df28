#pragma once

#include <string>
#include <string_view>

namespace amrize {

// Rule-based English lemmatizer: an exception table of irregular forms
// (see src/lemma_exceptions.cpp for the full documented list), then
// ordered suffix rules (-ies, -sses, -es clusters, -s, -ing, -ed with
// consonant undoubling and e-restoration), applied to a fixpoint.
// Tokens are lower-cased unless every alphabetic character is upper case
// (acronym guard). Deterministic and idempotent:
//   lemmatize_token(lemmatize_token(w)) == lemmatize_token(w).
std::string lemmatize_token(const std::string& form);

// Exception-table access, mainly for inspection and tests.
std::size_t lemma_exception_count();
bool lemma_exception_lookup(std::string_view form, std::string& lemma_out);

}  // namespace amrize
