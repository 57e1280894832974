#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "diffalg/error.hpp"
#include "diffalg/parser.hpp"
#include "diffalg/proof.hpp"
#include "diffalg/semantics.hpp"

using namespace diffalg;

namespace {

std::string corpus_text() {
  std::ifstream in(DIFFALG_FIXTURES_DIR "/corpus.dproof");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kExchange =
    "lemma exchange : (a-b)-d = (a-d)-b\n"
    "  = (1-(1-(a-b)))-d  by II~ at .0\n"
    "  = ((1-(1-a))-d)-(1-(1-b))  by III at .\n"
    "  = ((1-(1-a))-d)-b  by II at .1\n"
    "  = (a-d)-b  by II at .0.0\n"
    "qed\n";

const char* kContraposition =
    "lemma contraposition : a-b = b'-a'\n"
    "  = (1-(1-a))-b  by II~ at .0\n"
    "  = (1-b)-(1-a)  by exchange at .\n"
    "  = (1-b)-a'  by defc~ at .1\n"
    "  = b'-a'  by defc~ at .0\n"
    "qed\n";

const char* kDiffZero =
    "lemma diff_zero : a-0 = a\n"
    "  = 0'-a'  by contraposition at .\n"
    "  = (1-0)-a'  by defc at .0\n"
    "  = (1-0)-(1-a)  by defc at .1\n"
    "  = (1-(1-1))-(1-a)  by I~ at .0.1 with X := 1\n"
    "  = 1-(1-a)  by II at .0\n"
    "  = a  by II at .\n"
    "qed\n";

ProofStep step(const char* result, const char* rule, Direction dir, Path at, Substitution bind = {}) {
  return ProofStep{parse_term(result), rule, dir, std::move(at), std::move(bind), 0};
}

ErrorKind step_error(const Term& current, const ProofStep& s, const RuleRegistry& reg) {
  try {
    check_step(current, s, reg);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "step accepted";
  return ErrorKind::precondition;
}

RuleRegistry with_lemmas(std::initializer_list<const char*> scripts) {
  RuleRegistry reg = builtin_registry();
  for (auto src : scripts) reg = register_lemma(reg, parse_proof_script(src));
  return reg;
}

}  // namespace

TEST(Registry, Builtins) {
  auto reg = builtin_registry();
  EXPECT_EQ(reg.size(), 7u);
  std::vector<std::string> names;
  for (const auto& r : reg.rules()) names.push_back(r.name);
  EXPECT_EQ(names, (std::vector<std::string>{"I", "II", "III", "IV", "V", "defc", "defm"}));
  EXPECT_EQ(reg.find("II")->lhs, parse_term("1-(1-X)"));
  EXPECT_EQ(reg.find("II")->rhs, parse_term("X"));
  EXPECT_EQ(reg.find("I")->lhs, parse_term("X-X"));
  EXPECT_EQ(reg.find("I")->rhs, Term::zero());
  EXPECT_EQ(reg.find("III")->rhs, parse_term("((1-(C-A))-D)-(C-(1-B))"));
  EXPECT_EQ(reg.find("defm")->lhs, parse_term("|A-B|"));
  EXPECT_EQ(reg.find("prop1"), nullptr);
  EXPECT_THROW(reg.add({"I", Term::zero(), Term::zero()}), Error);
}

TEST(CheckStep, TerminationWithConstantC) {
  auto reg = builtin_registry();
  Term cur = parse_term("(1-(1-(a-b)))-d");
  auto s = step("((1-(1-a))-d)-(1-(1-b))", "III", Direction::l2r, Path{});
  EXPECT_EQ(check_step(cur, s, reg), s.result);
}

TEST(CheckStep, IntroducedMetavariableNeedsBinding) {
  auto reg = builtin_registry();
  Term cur = parse_term("(a'-a)'-0");
  auto no_bind = step("(a'-a)'-(a-a)", "I", Direction::r2l, Path({1}));
  EXPECT_EQ(step_error(cur, no_bind, reg), ErrorKind::missing_binding);
  auto bound = step("(a'-a)'-(a-a)", "I", Direction::r2l, Path({1}), {{"X", Term::var("a")}});
  EXPECT_EQ(check_step(cur, bound, reg), parse_term("(a'-a)'-(a-a)"));
}

TEST(CheckStep, Errors) {
  auto reg = builtin_registry();
  Term ab = parse_term("a-b");
  EXPECT_EQ(step_error(ab, step("a", "II", Direction::l2r, Path{}), reg), ErrorKind::pattern_mismatch);
  EXPECT_EQ(step_error(ab, step("a", "prop1", Direction::l2r, Path{}), reg), ErrorKind::unknown_rule);
  EXPECT_EQ(step_error(ab, step("a", "I", Direction::l2r, Path({0, 1})), reg), ErrorKind::invalid_path);
  EXPECT_EQ(step_error(parse_term("a-a"), step("1", "I", Direction::l2r, Path{}), reg),
            ErrorKind::result_mismatch);
  // a binding that contradicts the match
  EXPECT_EQ(step_error(parse_term("a-a"), step("0", "I", Direction::l2r, Path{}, {{"X", Term::var("b")}}), reg),
            ErrorKind::pattern_mismatch);
}

TEST(CheckStep, DefinitionalRulesFoldAndUnfold) {
  auto reg = builtin_registry();
  EXPECT_EQ(check_step(parse_term("a+b"), step("1-((1-a)-b)", "IV", Direction::l2r, Path{}), reg),
            parse_term("1-((1-a)-b)"));
  EXPECT_EQ(check_step(parse_term("a-(1-b)"), step("a*b", "V", Direction::r2l, Path{}), reg), parse_term("a*b"));
  EXPECT_EQ(check_step(parse_term("c-(1-a)"), step("c-a'", "defc", Direction::r2l, Path({1})), reg),
            parse_term("c-a'"));
  EXPECT_EQ(check_step(parse_term("|a-b|"), step("(a-b)+(b-a)", "defm", Direction::l2r, Path{}), reg),
            parse_term("(a-b)+(b-a)"));
}

TEST(CheckStep, OnlyTouchesTheAddressedSubtree) {
  auto reg = builtin_registry();
  Term cur = parse_term("(1-(1-a))-(1-(1-a))");
  EXPECT_EQ(check_step(cur, step("a-(1-(1-a))", "II", Direction::l2r, Path({0})), reg),
            parse_term("a-(1-(1-a))"));
  EXPECT_EQ(step_error(cur, step("a-a", "II", Direction::l2r, Path({0})), reg), ErrorKind::result_mismatch);
}

TEST(Replay, ExchangeAndItsCitations) {
  auto reg = builtin_registry();
  auto ex = parse_proof_script(kExchange);
  EXPECT_TRUE(replay(ex, reg).proved);
  reg = register_lemma(reg, ex);
  EXPECT_EQ(reg.find("exchange")->lhs, parse_term("(A-B)-D"));
  EXPECT_EQ(reg.find("exchange")->rhs, parse_term("(A-D)-B"));
  auto cp = parse_proof_script(kContraposition);
  EXPECT_TRUE(replay(cp, reg).proved);
  reg = register_lemma(reg, cp);
  auto dz = parse_proof_script(kDiffZero);
  auto verdict = replay(dz, reg);
  EXPECT_TRUE(verdict.proved) << verdict.reason;
}

TEST(Replay, UnregisteredCitationFails) {
  auto verdict = replay(parse_proof_script(kContraposition), builtin_registry());
  EXPECT_FALSE(verdict.proved);
  EXPECT_EQ(verdict.failed_step, 2u);
  EXPECT_EQ(verdict.error, ErrorKind::unknown_rule);
}

TEST(Replay, ChainMustReachTheGoal) {
  auto s = parse_proof_script("lemma short : (a-b)-d = (a-d)-b\n  = (1-(1-(a-b)))-d  by II~ at .0\nqed");
  auto verdict = replay(s, builtin_registry());
  EXPECT_FALSE(verdict.proved);
  EXPECT_EQ(verdict.failed_step, 2u);
  EXPECT_EQ(verdict.error, ErrorKind::result_mismatch);
  EXPECT_TRUE(replay(parse_proof_script("lemma refl : a-b = a-b\nqed"), builtin_registry()).proved);
}

TEST(RegisterLemma, Errors) {
  auto reg = with_lemmas({kExchange});
  try {
    register_lemma(reg, parse_proof_script(kExchange));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::duplicate_name);
  }
  try {
    register_lemma(builtin_registry(), parse_proof_script(kContraposition));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_proved);
  }
}

TEST(Generalize, NamingScheme) {
  auto s = parse_proof_script("lemma g : x1-b = x1-b\nqed");
  auto rule = generalize(s);
  EXPECT_EQ(rule.lhs, parse_term("A-B"));
  auto t = parse_proof_script("lemma h : foo-a-bar = foo-a-bar\nqed");
  EXPECT_EQ(generalize(t).lhs, parse_term("C-A-B"));
}

TEST(Corpus, EverythingProvesAndCrossChecks) {
  auto scripts = parse_proof_corpus(corpus_text());
  ASSERT_GE(scripts.size(), 25u);
  auto report = verify_corpus(scripts);
  for (const auto& e : report.entries) {
    EXPECT_TRUE(e.verdict.proved) << e.name << ": " << e.verdict.reason;
    EXPECT_EQ(e.semantically_valid, std::optional<bool>(true)) << e.name;
  }
  EXPECT_TRUE(report.all_ok());
  for (const auto& s : scripts) EXPECT_TRUE(valid_identity(s.goal_lhs, s.goal_rhs)) << s.name;
}

TEST(Corpus, ContainsTheLandmarkGoals) {
  auto scripts = parse_proof_corpus(corpus_text());
  auto has = [&](const char* lhs, const char* rhs) {
    Term l = parse_term(lhs), r = parse_term(rhs);
    return std::any_of(scripts.begin(), scripts.end(),
                       [&](const ProofScript& s) { return s.goal_lhs == l && s.goal_rhs == r; });
  };
  EXPECT_TRUE(has("(a-b)-d", "(a-d)-b"));
  EXPECT_TRUE(has("a-b", "b'-a'"));
  EXPECT_TRUE(has("a-0", "a"));
  EXPECT_TRUE(has("0-a", "0"));
  EXPECT_TRUE(has("a-1", "0"));
  EXPECT_TRUE(has("(a'-a)'", "a"));
  EXPECT_TRUE(has("a-a'", "a"));
  EXPECT_TRUE(has("(a-b)-c", "(a-c)-(b-c)"));
  EXPECT_TRUE(has("(a-b)-(c-d)", "(((a-b)-d')'-((c'-a')-b))'"));
  EXPECT_TRUE(has("(a+b)'", "a'*b'"));
  EXPECT_TRUE(has("(a*b)'", "a'+b'"));
  EXPECT_TRUE(has("a+b", "b+a"));
  EXPECT_TRUE(has("(a*b)*c", "a*(b*c)"));
  EXPECT_TRUE(has("a+(a*b)", "a"));
}

TEST(Corpus, CorruptedPathFailsItAndItsDependents) {
  auto scripts = parse_proof_corpus(corpus_text());
  ASSERT_EQ(scripts[0].name, "exchange");
  scripts[0].steps[0].at = Path({1});
  auto report = verify_corpus(scripts);
  EXPECT_FALSE(report.entries[0].verdict.proved);
  EXPECT_FALSE(report.entries[1].verdict.proved);
  EXPECT_EQ(report.entries[1].verdict.error, ErrorKind::unknown_rule);
  EXPECT_FALSE(report.all_ok());
  EXPECT_TRUE(verify_corpus({}).entries.empty());
}

TEST(Corpus, DuplicateNameIsReported) {
  auto s = parse_proof_script(kExchange);
  auto report = verify_corpus({s, s});
  EXPECT_TRUE(report.entries[0].verdict.proved);
  EXPECT_FALSE(report.entries[1].verdict.proved);
  EXPECT_EQ(report.entries[1].verdict.error, ErrorKind::duplicate_name);
}
