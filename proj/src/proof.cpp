#include "diffalg/proof.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "diffalg/parser.hpp"
#include "diffalg/semantics.hpp"

namespace diffalg {

const RewriteRule* RuleRegistry::find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &rules_[it->second];
}

void RuleRegistry::add(RewriteRule rule) {
  if (contains(rule.name)) {
    throw Error(ErrorKind::duplicate_name, "rule '" + rule.name + "' is already registered");
  }
  index_.emplace(rule.name, rules_.size());
  rules_.push_back(std::move(rule));
}

RuleRegistry builtin_registry() {
  static const RuleRegistry registry = [] {
    RuleRegistry r;
    auto add = [&r](const char* name, const char* lhs, const char* rhs) {
      r.add({name, parse_term(lhs), parse_term(rhs)});
    };
    add("I", "X-X", "0");
    add("II", "1-(1-X)", "X");
    add("III", "(1-(C-(A-B)))-D", "((1-(C-A))-D)-(C-(1-B))");
    add("IV", "A+B", "1-((1-A)-B)");
    add("V", "A*B", "A-(1-B)");
    add("defc", "A'", "1-A");
    add("defm", "|A-B|", "(A-B)+(B-A)");
    return r;
  }();
  return registry;
}

Term check_step(const Term& current, const ProofStep& step, const RuleRegistry& registry) {
  const RewriteRule* rule = registry.find(step.rule);
  if (rule == nullptr) throw Error(ErrorKind::unknown_rule, "unknown rule '" + step.rule + "'");

  const Term& target = subterm_at(current, step.at);
  const bool forward = step.direction == Direction::l2r;
  const Term& from = forward ? rule->lhs : rule->rhs;
  const Term& to = forward ? rule->rhs : rule->lhs;

  auto sigma = match_pattern(from, target);
  if (!sigma) {
    throw Error(ErrorKind::pattern_mismatch,
                "rule " + step.rule + (forward ? "" : "~") + " does not match " +
                    render_term(target) + " at " + step.at.to_string());
  }
  for (const auto& [meta, value] : step.bindings) {
    auto [it, inserted] = sigma->emplace(meta, value);
    if (!inserted && it->second != value) {
      throw Error(ErrorKind::pattern_mismatch, "binding " + meta + " := " + render_term(value) +
                                                   " contradicts the match " + meta + " := " +
                                                   render_term(it->second));
    }
  }
  for (const auto& meta : metavariables(to)) {
    if (!sigma->contains(meta)) {
      throw Error(ErrorKind::missing_binding,
                  "rule " + step.rule + (forward ? "" : "~") + " needs a binding for " + meta);
    }
  }

  Term produced = replace_at(current, step.at, apply_substitution(to, *sigma));
  if (produced != step.result) {
    throw Error(ErrorKind::result_mismatch,
                "rewrite gives " + render_term(produced) + " but the step declares " +
                    render_term(step.result));
  }
  return step.result;
}

ReplayVerdict replay(const ProofScript& script, const RuleRegistry& registry) {
  ReplayVerdict verdict;
  Term current = script.goal_lhs;
  for (std::size_t k = 0; k < script.steps.size(); ++k) {
    try {
      current = check_step(current, script.steps[k], registry);
    } catch (const Error& e) {
      verdict.failed_step = k + 1;
      verdict.error = e.kind();
      verdict.reason = e.what();
      return verdict;
    }
  }
  if (current != script.goal_rhs) {
    verdict.failed_step = script.steps.size() + 1;
    verdict.error = ErrorKind::result_mismatch;
    verdict.reason = "chain ends at " + render_term(current) + ", goal is " + render_term(script.goal_rhs);
    return verdict;
  }
  verdict.proved = true;
  return verdict;
}

RewriteRule generalize(const ProofScript& script) {
  auto vars = merge_vars(free_vars(script.goal_lhs), free_vars(script.goal_rhs));
  std::set<char> used;
  Substitution lift;
  std::vector<std::string> pending;
  for (const auto& v : vars) {
    if (v.size() == 1 && v[0] >= 'a' && v[0] <= 'z') {
      char upper = static_cast<char>(v[0] - 'a' + 'A');
      used.insert(upper);
      lift.emplace(v, Term::var(std::string(1, upper)));
    } else {
      pending.push_back(v);
    }
  }
  char next = 'A';
  for (const auto& v : pending) {
    while (next <= 'Z' && used.contains(next)) ++next;
    if (next > 'Z') {
      throw Error(ErrorKind::capacity_exceeded, "lemma '" + script.name + "' has too many variables");
    }
    used.insert(next);
    lift.emplace(v, Term::var(std::string(1, next)));
  }
  // Object variables are not metavariables, so substitute by hand.
  auto rename = [&lift](const Term& t, auto& self) -> Term {
    switch (t.op()) {
      case Op::zero:
      case Op::one: return t;
      case Op::var: return lift.at(t.name());
      case Op::complement: return Term::complement(self(t.child(0), self));
      case Op::diff: return Term::diff(self(t.left(), self), self(t.right(), self));
      case Op::sum: return Term::sum(self(t.left(), self), self(t.right(), self));
      case Op::prod: return Term::prod(self(t.left(), self), self(t.right(), self));
      case Op::mod_diff: return Term::mod_diff(self(t.left(), self), self(t.right(), self));
    }
    return t;
  };
  return {script.name, rename(script.goal_lhs, rename), rename(script.goal_rhs, rename)};
}

RuleRegistry register_lemma(const RuleRegistry& registry, const ProofScript& script) {
  if (registry.contains(script.name)) {
    throw Error(ErrorKind::duplicate_name, "rule '" + script.name + "' is already registered");
  }
  auto verdict = replay(script, registry);
  if (!verdict.proved) {
    throw Error(ErrorKind::not_proved, "lemma '" + script.name + "' failed at step " +
                                           std::to_string(verdict.failed_step) + ": " + verdict.reason);
  }
  RuleRegistry extended = registry;
  extended.add(generalize(script));
  return extended;
}

std::size_t CorpusReport::proved() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.verdict.proved; }));
}

std::size_t CorpusReport::failed() const { return entries.size() - proved(); }

bool CorpusReport::all_ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) {
    return e.verdict.proved && e.semantically_valid.value_or(false);
  });
}

CorpusReport verify_corpus(const std::vector<ProofScript>& scripts) {
  return verify_corpus(scripts, builtin_registry());
}

CorpusReport verify_corpus(const std::vector<ProofScript>& scripts, RuleRegistry registry) {
  CorpusReport report;
  for (const auto& script : scripts) {
    CorpusEntry entry{script.name, {}, std::nullopt};
    if (registry.contains(script.name)) {
      entry.verdict.failed_step = 0;
      entry.verdict.error = ErrorKind::duplicate_name;
      entry.verdict.reason = "rule '" + script.name + "' is already registered";
    } else {
      entry.verdict = replay(script, registry);
    }
    if (entry.verdict.proved) {
      entry.semantically_valid = valid_identity(script.goal_lhs, script.goal_rhs);
      registry.add(generalize(script));
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace diffalg
