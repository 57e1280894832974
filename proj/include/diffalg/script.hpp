#pragma once

#include <string>
#include <vector>

#include "diffalg/term.hpp"

namespace diffalg {

enum class Direction : std::uint8_t { l2r, r2l };

// One line of an equational proof: the declared result of rewriting the
// previous term with `rule` at `at`.
struct ProofStep {
  Term result;
  std::string rule;
  Direction direction = Direction::l2r;
  Path at;
  // Bindings for metavariables the matched side does not determine.
  Substitution bindings;
  int line = 0;
};

struct ProofScript {
  std::string name;
  Term goal_lhs;
  Term goal_rhs;
  std::vector<ProofStep> steps;
  int line = 0;
};

}  // namespace diffalg
