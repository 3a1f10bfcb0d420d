#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "stit/formula.hpp"
#include "stit/parser.hpp"

using namespace stit;

namespace {

const std::vector<std::string> kAgents{"a", "b"};
const Formula p = Formula::var("p");
const Formula q = Formula::var("q");

}  // namespace

TEST(Formula, PrintsWithMinimalParentheses) {
  EXPECT_EQ(to_string(Formula::conj(p, Formula::neg(q))), "p & ~q");
  EXPECT_EQ(to_string(Formula::settled(Formula::imp(p, p))), "S (p -> p)");
  EXPECT_EQ(to_string(Formula::imagine("a", p)), "[i a]p");
  EXPECT_EQ(to_string(Formula::imp(p, Formula::imp(q, p))), "p -> q -> p");
  EXPECT_EQ(to_string(Formula::imp(Formula::imp(p, q), p)), "(p -> q) -> p");
  EXPECT_EQ(to_string(Formula::disj(Formula::conj(p, q), p)), "p & q | p");
  EXPECT_EQ(to_string(Formula::conj(Formula::disj(p, q), p)), "(p | q) & p");
  EXPECT_EQ(to_string(Formula::conj(p, Formula::conj(q, p))), "p & (q & p)");
  EXPECT_EQ(to_string(Formula::iff(Formula::iff(p, q), p)), "p <-> q <-> p");
  EXPECT_EQ(to_string(Formula::possible(Formula::dstit("b", Formula::neg(p)))), "P [d b]~p");
}

TEST(Formula, DesugarRewritesDefinedModalities) {
  EXPECT_EQ(desugar(Formula::dstit("a", p)),
            Formula::conj(Formula::cstit("a", p), Formula::neg(Formula::settled(p))));
  EXPECT_EQ(desugar(Formula::possible(p)), Formula::neg(Formula::settled(Formula::neg(p))));
  EXPECT_EQ(desugar(p), p);
  const Formula nested = Formula::imagine("a", Formula::possible(Formula::dstit("b", q)));
  EXPECT_FALSE(is_desugared(nested));
  EXPECT_TRUE(is_desugared(desugar(nested)));
}

TEST(Formula, SubformulasArePostOrderAndDeduplicated) {
  EXPECT_EQ(subformulas(p), std::vector<Formula>{p});
  const Formula np = Formula::neg(p);
  EXPECT_EQ(subformulas(Formula::conj(p, np)), (std::vector<Formula>{p, np, Formula::conj(p, np)}));
  EXPECT_EQ(subformulas(Formula::imagine("a", p)), (std::vector<Formula>{p, Formula::imagine("a", p)}));
}

TEST(Formula, StructuralEqualityIgnoresSharing) {
  const Formula x = Formula::conj(Formula::var("p"), Formula::var("q"));
  const Formula y = Formula::conj(Formula::var("p"), Formula::var("q"));
  EXPECT_NE(x.identity(), y.identity());
  EXPECT_EQ(x, y);
  EXPECT_EQ(x.hash(), y.hash());
  EXPECT_NE(Formula::cstit("a", p), Formula::cstit("b", p));
  EXPECT_NE(Formula::conj(p, q), Formula::disj(p, q));
  EXPECT_EQ(x.size(), 3U);
}

TEST(Formula, VariablesAndAgentsAreSorted) {
  const Formula f = Formula::imp(Formula::cstit("b", q), Formula::imagine("a", p));
  EXPECT_EQ(variables(f), (std::vector<std::string>{"p", "q"}));
  EXPECT_EQ(agents_of(f), (std::vector<std::string>{"a", "b"}));
}

// Properties over random formulas of depth up to 6.
TEST(FormulaProperty, PrintParseRoundTrip) {
  oracle::FormulaGen gen(11, {"p", "q", "r"}, kAgents);
  for (int i = 0; i < 2000; ++i) {
    const Formula f = gen(6);
    const std::string text = to_string(f);
    ASSERT_EQ(parse_formula(text, kAgents), f) << text;
  }
}

TEST(FormulaProperty, DesugarIsIdempotent) {
  oracle::FormulaGen gen(12, {"p", "q"}, kAgents);
  for (int i = 0; i < 2000; ++i) {
    const Formula d = desugar(gen(6));
    ASSERT_EQ(desugar(d), d);
    ASSERT_TRUE(is_desugared(d));
  }
}

// [d a]A copies A, so desugaring can change how often a name occurs. What it
// never changes is which names occur.
TEST(FormulaProperty, DesugarKeepsVariableAndAgentSets) {
  oracle::FormulaGen gen(13, {"p", "q", "r"}, kAgents);
  for (int i = 0; i < 2000; ++i) {
    const Formula f = gen(6);
    ASSERT_EQ(variables(desugar(f)), variables(f));
    ASSERT_EQ(agents_of(desugar(f)), agents_of(f));
  }
}

TEST(FormulaProperty, SubformulasContainEveryChildBeforeItsParent) {
  oracle::FormulaGen gen(14, {"p", "q"}, kAgents, false);
  for (int i = 0; i < 500; ++i) {
    const Formula f = gen(5);
    const auto subs = subformulas(f);
    ASSERT_EQ(subs.back(), f);
    std::set<std::string> seen;
    for (const auto& s : subs) {
      ASSERT_TRUE(seen.insert(to_string(s)).second) << "duplicate " << s;
      if (s.is_unary()) ASSERT_TRUE(seen.contains(to_string(s.operand())));
      if (s.is_binary()) {
        ASSERT_TRUE(seen.contains(to_string(s.lhs())));
        ASSERT_TRUE(seen.contains(to_string(s.rhs())));
      }
    }
  }
}
