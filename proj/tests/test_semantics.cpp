#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "diffalg/error.hpp"
#include "diffalg/equivalence.hpp"
#include "diffalg/parser.hpp"
#include "diffalg/proof.hpp"
#include "diffalg/semantics.hpp"
#include "support/random_terms.hpp"

using namespace diffalg;

namespace {

bool eval(const char* src, Assignment sigma) { return eval_core(parse_term(src), sigma); }

// Straightforward recursive evaluation of surface syntax, independent of
// desugaring.
bool direct(const Term& t, const Assignment& s) {
  switch (t.op()) {
    case Op::zero: return false;
    case Op::one: return true;
    case Op::var: return s.at(t.name());
    case Op::diff: return direct(t.left(), s) && !direct(t.right(), s);
    case Op::sum: return direct(t.left(), s) || direct(t.right(), s);
    case Op::prod: return direct(t.left(), s) && direct(t.right(), s);
    case Op::complement: return !direct(t.left(), s);
    case Op::mod_diff: return direct(t.left(), s) != direct(t.right(), s);
  }
  return false;
}

std::vector<std::string> corpus_goals() {
  std::ifstream in(DIFFALG_FIXTURES_DIR "/corpus.dproof");
  std::ostringstream ss;
  ss << in.rdbuf();
  std::vector<std::string> out;
  for (const auto& s : parse_proof_corpus(ss.str())) {
    out.push_back(render_term(s.goal_lhs) + " = " + render_term(s.goal_rhs));
  }
  return out;
}

}  // namespace

TEST(EvalCore, Difference) {
  EXPECT_TRUE(eval("a-b", {{"a", 1}, {"b", 0}}));
  EXPECT_FALSE(eval("a-b", {{"a", 1}, {"b", 1}}));
  EXPECT_FALSE(eval("a-b", {{"a", 0}, {"b", 1}}));
  EXPECT_FALSE(eval("a-b", {{"a", 0}, {"b", 0}}));
}

TEST(EvalCore, AxiomInstances) {
  EXPECT_TRUE(eval("1-(1-a)", {{"a", 1}}));
  EXPECT_FALSE(eval("1-(1-a)", {{"a", 0}}));
  EXPECT_FALSE(eval("a-a", {{"a", 1}}));
}

TEST(EvalCore, Errors) {
  try {
    eval("a-b", {{"a", 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unbound_variable);
  }
  EXPECT_THROW(eval("a+b", {{"a", 1}, {"b", 1}}), Error);
}

TEST(EvalPowerset, Bitwise) {
  EXPECT_EQ(eval_powerset(parse_term("a-b"), 3, {{"a", 0b101}, {"b", 0b011}}), 0b100u);
  for (std::uint64_t a = 0; a < 4; ++a) {
    EXPECT_EQ(eval_powerset(parse_term("1-(1-a)"), 2, {{"a", a}}), a);
  }
  std::mt19937_64 rng(3);
  testkit::TermShape shape;
  shape.sugar = false;
  for (int i = 0; i < 300; ++i) {
    Term t = testkit::random_term(rng, shape);
    for (int r = 0; r < 16; ++r) {
      Assignment s{{"a", r & 1}, {"b", (r >> 1) & 1}, {"c", (r >> 2) & 1}, {"d", (r >> 3) & 1}};
      PowersetAssignment p;
      for (auto& [k, bit] : s) p[k] = bit;
      EXPECT_EQ(eval_powerset(t, 1, p), eval_core(t, s) ? 1u : 0u);
    }
  }
}

TEST(TruthTable, Layout) {
  auto t = truth_table(parse_term("a-b"));
  EXPECT_EQ(t.vars, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(t.bit_string(), "0100");
  EXPECT_EQ(truth_table(parse_term("a-a")).bit_string(), "00");
  EXPECT_EQ(truth_table(parse_term("|a-b|")).bit_string(), "0110");
  EXPECT_EQ(truth_table(parse_term("1")).bit_string(), "1");
  EXPECT_EQ(truth_table(parse_term("0")).bit_string(), "0");
  auto row = t.assignment(1);
  EXPECT_EQ(row.at("a"), true);
  EXPECT_EQ(row.at("b"), false);
}

TEST(TruthTable, MatchesDirectEvaluation) {
  std::mt19937_64 rng(5);
  testkit::TermShape shape;
  shape.vars = {"a", "b", "c", "d", "e", "f", "g"};
  for (int i = 0; i < 400; ++i) {
    Term t = testkit::random_term(rng, shape);
    auto table = truth_table(t);
    for (std::size_t r = 0; r < table.rows(); ++r) {
      ASSERT_EQ(table.bit(r), direct(t, table.assignment(r))) << render_term(t) << " row " << r;
    }
  }
}

TEST(TruthTable, ExplicitVarsAndCapacity) {
  auto t = truth_table(parse_term("b"), {"a", "b", "c"});
  EXPECT_EQ(t.bit_string(), "00110011");
  EXPECT_THROW(truth_table(parse_term("b"), {"a"}), Error);
  Term wide = Term::var("v0");
  for (int i = 1; i <= 25; ++i) wide = Term::diff(wide, Term::var("v" + std::to_string(i)));
  try {
    truth_table(wide);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::capacity_exceeded);
  }
}

TEST(ValidIdentity, Examples) {
  EXPECT_TRUE(valid_identity(parse_term("(a-b)-d"), parse_term("(a-d)-b")));
  EXPECT_FALSE(valid_identity(parse_term("a-b"), parse_term("b-a")));
  auto cex = identity_counterexample(parse_term("a-b"), parse_term("b-a"));
  ASSERT_TRUE(cex);
  EXPECT_EQ(*cex, (Assignment{{"a", true}, {"b", false}}));
  EXPECT_TRUE(valid_identity(parse_term("(a-b)-c"), parse_term("(a-c)-(b-c)")));
  EXPECT_TRUE(valid_identity(parse_term("a-a"), parse_term("b-b")));
}

TEST(Relations, Validity) {
  EXPECT_TRUE(relation_valid(parse_relation("a-b <= a")));
  EXPECT_TRUE(relation_valid(parse_relation("a <= a+b")));
  auto cex = relation_counterexample(parse_relation("a <= a-b"));
  ASSERT_TRUE(cex);
  EXPECT_EQ(*cex, (Assignment{{"a", true}, {"b", true}}));
  EXPECT_TRUE(relation_holds(parse_relation("a = b \\/ a <= b"), {{"a", 0}, {"b", 1}}));
  EXPECT_FALSE(relation_holds(parse_relation("a = b /\\ a <= b"), {{"a", 0}, {"b", 1}}));
}

TEST(Relations, ImplicationsHoldSemantically) {
  for (int r = 0; r < 8; ++r) {
    Assignment s{{"a", r & 1}, {"b", (r >> 1) & 1}, {"c", (r >> 2) & 1}};
    if (relation_holds(parse_relation("a <= b /\\ b <= c"), s)) {
      EXPECT_TRUE(relation_holds(parse_relation("a <= c"), s));
    }
  }
}

TEST(ModularLaws, BooleanValidity) {
  for (const char* id : {"|a-a| = 0", "|a-b| = |b-a|", "| |a-b|-c| = |a-|b-c| |", "|a-b|*c = |a*c-b*c|",
                         "|a-0| = a"}) {
    auto r = parse_relation(id);
    EXPECT_TRUE(valid_identity(r.lhs(), r.rhs())) << id;
  }
  for (const char* rel : {"a-b <= |a-b|", "|a-b| <= |a-c|+|c-b|"}) {
    EXPECT_TRUE(relation_valid(parse_relation(rel))) << rel;
  }
  EXPECT_TRUE(equivalent(parse_relation("|a-b| = 0"), parse_relation("a = b")).equivalent);
  EXPECT_TRUE(equivalent(parse_relation("|a-b| <= c"), parse_relation("a-b <= c /\\ b-a <= c")).equivalent);
}

TEST(Problems, RowByRowAgreement) {
  const std::pair<const char*, const char*> pairs[] = {
      {"a*c <= b*d /\\ a <= b+c /\\ c <= a+d", "a <= b /\\ c <= d"},
      {"(a+b)*c = c - a*b", "c <= a+b /\\ c <= a'+b'"},
  };
  for (auto [phi, psi] : pairs) {
    auto a = parse_relation(phi), b = parse_relation(psi);
    for (int r = 0; r < 16; ++r) {
      Assignment s{{"a", r & 1}, {"b", (r >> 1) & 1}, {"c", (r >> 2) & 1}, {"d", (r >> 3) & 1}};
      EXPECT_EQ(relation_holds(a, s), relation_holds(b, s)) << phi << " row " << r;
    }
  }
}

TEST(Powerset, CorpusGoalsHoldOnSmallModels) {
  for (const auto& goal : corpus_goals()) {
    auto r = parse_relation(goal);
    Term l = desugar(r.lhs()), rt = desugar(r.rhs());
    auto vars = merge_vars(free_vars(l), free_vars(rt));
    for (unsigned k = 1; k <= 3; ++k) {
      const std::uint64_t side = 1u << k;
      std::uint64_t combos = 1;
      for (std::size_t i = 0; i < vars.size(); ++i) combos *= side;
      for (std::uint64_t c = 0; c < combos; ++c) {
        PowersetAssignment p;
        std::uint64_t rest = c;
        for (const auto& v : vars) {
          p[v] = rest % side;
          rest /= side;
        }
        ASSERT_EQ(eval_powerset(l, k, p), eval_powerset(rt, k, p)) << goal << " k=" << k;
      }
    }
  }
}
