#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stit/error.hpp"
#include "stit/generate.hpp"
#include "stit/parser.hpp"
#include "stit/semantics.hpp"

using namespace stit;

namespace {

const std::vector<std::string> kAB{"a", "b"};
Formula F(std::string_view s) { return parse_formula(s, kAB); }

ImaginationModel fork_model() {
  ImaginationModel m(TreeOrder::from_names({"m0", "m1", "m2"}, {{"m0", "m1"}, {"m0", "m2"}}), {"a"});
  m.set_valuation("p", Proposition::singleton(2));  // m1/h0
  return m;
}

ModelBounds random_bounds() {
  ModelBounds b;
  b.max_moments = 5;
  b.agents = kAB;
  b.vars = {"p", "q"};
  b.max_family = 2;
  return b;
}

}  // namespace

TEST(Satisfies, SigmaModelExamples) {
  const auto m = build_sigma_model({"p"}, {"a"});
  EXPECT_TRUE(satisfies(m, {0, 0}, F("~p")));
  EXPECT_FALSE(satisfies(m, {0, 0}, F("[i a]p")));
  EXPECT_TRUE(valid_in_model(m, F("S p <-> p")));
  EXPECT_TRUE(valid_in_model(m, F("[c a]p <-> p")));
  EXPECT_TRUE(extension(m, F("p")).empty());
}

TEST(Satisfies, VacuousChoiceMakesImaginationFalse) {
  auto m = fork_model();
  const Proposition ext_p = Proposition::singleton(2);
  m.set_neighborhood(0, 0, {ext_p});
  m.set_neighborhood(0, 1, {ext_p});
  EXPECT_FALSE(satisfies(m, {0, 0}, F("[i a]p")));
  EXPECT_FALSE(oracle::NaiveEvaluator(m).holds(F("[i a]p"), 0, 0));
}

TEST(Satisfies, ImaginationWithOutsideWitness) {
  auto m = fork_model();
  m.set_choice(0, 0, {{0}, {1}});
  m.set_neighborhood(0, 0, {Proposition::singleton(2)});
  EXPECT_TRUE(satisfies(m, {0, 0}, F("[i a]p")));
  EXPECT_FALSE(satisfies(m, {0, 1}, F("[i a]p")));
  EXPECT_EQ(extension(m, F("[i a]p")), Proposition::singleton(0));
}

TEST(Satisfies, ImaginationUsesTheGlobalExtension) {
  // Ext(p) is {m1/h0}; a neighborhood holding only the moment-local slice
  // {} of p at m0 must not count.
  auto m = fork_model();
  m.set_choice(0, 0, {{0}, {1}});
  m.set_neighborhood(0, 0, {Proposition{}});
  EXPECT_FALSE(satisfies(m, {0, 0}, F("[i a]p")));
  EXPECT_TRUE(satisfies(m, {0, 0}, F("[i a](p & ~p)")));
}

TEST(Satisfies, FaultHookDropsClauseTwo) {
  auto m = fork_model();
  const Proposition ext_p = Proposition::singleton(2);
  m.set_neighborhood(0, 0, {ext_p});
  m.set_neighborhood(0, 1, {ext_p});
  EvalOptions broken{ImaginationClause::WithoutOutsideWitness};
  EXPECT_TRUE(satisfies(m, {0, 0}, F("[i a]p"), nullptr, broken));
  EXPECT_FALSE(valid_in_model(m, F("[i a]p -> ~S [i a]p"), broken));
  EXPECT_TRUE(valid_in_model(m, F("[i a]p -> ~S [i a]p")));
}

TEST(Satisfies, Errors) {
  const auto m = fork_model();
  EXPECT_THROW(satisfies(m, {0, 0}, F("[c b]p")), EvalError);
  EXPECT_THROW(extension(m, F("[i b]p")), EvalError);
  EXPECT_THROW(satisfies(m, {1, 1}, F("p")), Error);
}

TEST(Satisfies, TraceStartsWithTheRoot) {
  auto m = fork_model();
  EvalTrace trace;
  const bool v = satisfies(m, {0, 0}, F("S p | p"), &trace);
  ASSERT_FALSE(trace.steps.empty());
  EXPECT_EQ(trace.steps.front().depth, 0U);
  EXPECT_EQ(trace.steps.front().value, v);
  EXPECT_EQ(trace.steps.front().point, "m0/h0");
  for (std::size_t i = 1; i < trace.steps.size(); ++i) EXPECT_GT(trace.steps[i].depth, 0U);
}

TEST(Extension, BooleanLaws) {
  const auto m = fork_model();
  EXPECT_EQ(extension(m, F("p | ~p")), m.universe());
  EXPECT_EQ(extension(m, F("~p")), m.universe() - extension(m, F("p")));
}

// Point-set agreement against the textbook evaluator and between the two
// library routes, plus the structural laws, on random models and formulas.
TEST(SemanticsProperty, AgreesWithNaiveEvaluator) {
  oracle::FormulaGen gen(31, {"p", "q"}, kAB);
  const auto b = random_bounds();
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto m = random_model(seed, b);
    oracle::NaiveEvaluator naive(m);
    for (int k = 0; k < 8; ++k) {
      const Formula f = gen(4);
      const Proposition ext = extension(m, f);
      ASSERT_EQ(ext, naive.global_extension(f)) << f << " seed " << seed;
      for (std::size_t i = 0; i < m.points().size(); ++i) {
        ASSERT_EQ(ext.contains(i), satisfies(m, m.points()[i], f)) << f << " at " << m.point_name(i);
      }
    }
  }
}

TEST(SemanticsProperty, StructuralLaws) {
  oracle::FormulaGen gen(32, {"p", "q"}, kAB);
  const auto b = random_bounds();
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto m = random_model(seed, b);
    for (int k = 0; k < 5; ++k) {
      const Formula a = gen(3);
      const Formula c = gen(3);
      const Proposition ea = extension(m, a);
      ASSERT_EQ(extension(m, Formula::neg(a)), m.universe() - ea);
      ASSERT_EQ(extension(m, Formula::conj(a, c)), ea & extension(m, c));
      const Proposition s = extension(m, Formula::settled(a));
      const Proposition ca = extension(m, Formula::cstit("a", a));
      ASSERT_TRUE(s.subset_of(ca));
      ASSERT_TRUE(ca.subset_of(ea));
      // Duality: P A holds at m/h iff A holds on some history through m.
      const Proposition pa = extension(m, Formula::possible(a));
      for (std::size_t i = 0; i < m.points().size(); ++i) {
        const auto mo = m.points()[i].moment;
        ASSERT_EQ(pa.contains(i), ea.intersects(m.moment_points(mo)));
      }
      ASSERT_TRUE(valid_in_model(m, Formula::imp(Formula::imagine("a", a),
                                                 Formula::conj(Formula::cstit("a", Formula::imagine("a", a)),
                                                               Formula::neg(Formula::settled(Formula::imagine("a", a)))))));
    }
  }
}

TEST(SemanticsProperty, VacuousChoiceCollapse) {
  oracle::FormulaGen gen(33, {"p", "q"}, {"a"});
  auto b = random_bounds();
  b.agents = {"a"};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto m = random_model(seed, b);
    const Formula a = gen(3);
    const Proposition cst = extension(m, Formula::cstit("a", a));
    const Proposition st = extension(m, Formula::settled(a));
    const Proposition im = extension(m, Formula::imagine("a", a));
    for (std::size_t mo = 0; mo < m.moment_count(); ++mo) {
      if (!m.vacuous_choice(mo, 0)) continue;
      ASSERT_EQ(cst & m.moment_points(mo), st & m.moment_points(mo));
      ASSERT_FALSE(im.intersects(m.moment_points(mo)));
    }
  }
}

// Incremental re-evaluation over an enumeration must match evaluating each
// model from scratch.
TEST(FormulaBatch, IncrementalMatchesFresh) {
  ModelBounds b;
  b.max_moments = 3;
  b.agents = {"a"};
  b.vars = {"p"};
  b.max_family = 1;
  b.placement = NeighborhoodPlacement::ActiveChoices;
  oracle::FormulaGen gen(34, {"p"}, {"a"});
  std::vector<Formula> fs;
  for (int i = 0; i < 30; ++i) fs.push_back(gen(4));
  FormulaBatch batch;
  for (const auto& f : fs) batch.add(f);
  ModelEnumerator e(b);
  std::size_t n = 0;
  while (const auto* m = e.next()) {
    batch.evaluate(*m);
    std::size_t invalid = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const Proposition fresh = extension(*m, fs[i]);
      ASSERT_EQ(batch.value(i), fresh) << fs[i] << " model " << n;
      ASSERT_EQ(batch.valid(i), fresh == m->universe());
      invalid += fresh != m->universe();
    }
    ASSERT_EQ(batch.invalid_count(), invalid);
    ++n;
  }
  EXPECT_GT(n, 1000U);
}

TEST(FormulaBatch, SharesNodesAndTracksGroups) {
  FormulaBatch batch;
  const auto s0 = batch.add(F("p & q"));
  const auto s1 = batch.add(F("(p & q) | p"), 1);
  EXPECT_EQ(batch.node_count(), 4U);
  const auto m = build_sigma_model({"p", "q"}, {"a"});
  batch.evaluate(m);
  EXPECT_FALSE(batch.valid(s0));
  EXPECT_FALSE(batch.valid(s1));
  EXPECT_EQ(batch.invalid_count(), 2U);
  EXPECT_EQ(batch.invalid_count(1), 1U);
  EXPECT_EQ(batch.first_invalid(), 0U);
}
