#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "diffalg/relation.hpp"
#include "diffalg/script.hpp"
#include "diffalg/term.hpp"

namespace diffalg {

// Term grammar, tightest first: postfix ' (complement), * (product),
// - (difference), + (sum). All binary operators associate to the left.
// `|x - y|` is the modular difference; adjacent bars need whitespace
// between them. Failures throw SyntaxError with a 1-based line:column.
Term parse_term(std::string_view src);

// Atoms `t = t` and `t <= t`, joined by `/\` (tighter) and `\/`.
Relation parse_relation(std::string_view src);

// Exactly one `lemma ... qed` block.
ProofScript parse_proof_script(std::string_view src);

// Zero or more blocks, in file order. `#` starts a comment that runs to the
// end of the line.
std::vector<ProofScript> parse_proof_corpus(std::string_view src);

enum class RenderStyle {
  minimal,
  // Also parenthesizes differences directly under a sum: (a-b)+(c-d).
  readable,
};

// Fewest parentheses that parse back to the same tree.
std::string render_term(const Term& t, RenderStyle style = RenderStyle::minimal);
std::string render_relation(const Relation& r);
std::string render_proof_script(const ProofScript& script);

}  // namespace diffalg
