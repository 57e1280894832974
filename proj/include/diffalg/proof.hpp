#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diffalg/error.hpp"
#include "diffalg/script.hpp"
#include "diffalg/term.hpp"

namespace diffalg {

// Equation schema `lhs = rhs` over metavariables, usable in both directions.
struct RewriteRule {
  std::string name;
  Term lhs;
  Term rhs;
};

// Insertion-ordered rules keyed by name.
class RuleRegistry {
 public:
  const RewriteRule* find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }
  // Throws Error(duplicate_name).
  void add(RewriteRule rule);
  const std::vector<RewriteRule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }

 private:
  std::vector<RewriteRule> rules_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

// Axioms I, II, III, the operator definitions IV (+) and V (*), and the
// abbreviations defc (x' = 1-x) and defm (|x-y| = (x-y)+(y-x)), the latter
// four oriented from sugar to its expansion.
RuleRegistry builtin_registry();

// Rewrites the subterm of `current` at `step.at` with the step's rule and
// returns the declared result once it matches the rewrite exactly. Throws
// Error with kind unknown_rule, invalid_path, pattern_mismatch,
// missing_binding or result_mismatch.
Term check_step(const Term& current, const ProofStep& step, const RuleRegistry& registry);

struct ReplayVerdict {
  bool proved = false;
  // 1-based index of the failing step; steps.size() + 1 when every step
  // checks but the chain does not end at the goal's right-hand side.
  std::size_t failed_step = 0;
  std::optional<ErrorKind> error;
  std::string reason;
};

ReplayVerdict replay(const ProofScript& script, const RuleRegistry& registry);

// The script's goal with each object variable lifted to a metavariable:
// single lowercase letters become their uppercase twin, anything else takes
// the next unused letter.
RewriteRule generalize(const ProofScript& script);

// Throws Error(not_proved) or Error(duplicate_name).
RuleRegistry register_lemma(const RuleRegistry& registry, const ProofScript& script);

struct CorpusEntry {
  std::string name;
  ReplayVerdict verdict;
  // Truth-table check of the goal; only computed for proved scripts.
  std::optional<bool> semantically_valid;
};

struct CorpusReport {
  std::vector<CorpusEntry> entries;

  std::size_t proved() const;
  std::size_t failed() const;
  // Every script proved and every proved goal passed the semantic check.
  bool all_ok() const;
};

// Replays in order, registering each proved lemma for later scripts.
CorpusReport verify_corpus(const std::vector<ProofScript>& scripts);
CorpusReport verify_corpus(const std::vector<ProofScript>& scripts, RuleRegistry registry);

}  // namespace diffalg
