#include <gtest/gtest.h>

#include "stit/parser.hpp"
#include "stit/search.hpp"
#include "stit/semantics.hpp"
#include "stit/validate.hpp"

using namespace stit;

namespace {

Formula F(std::string_view s) { return parse_formula(s, std::vector<std::string>{"a"}); }

}  // namespace

TEST(Search, FindsImaginationIsNotSettled) {
  const Formula f = F("[i a]p -> S [i a]p");
  const auto out = find_countermodel(f, default_search_bounds(f));
  ASSERT_TRUE(out.found());
  const auto& cm = *out.countermodel;
  EXPECT_TRUE(validate(cm.model).ok());
  EXPECT_TRUE(satisfies(cm.model, cm.point, Formula::neg(f)));
  EXPECT_GT(out.models_examined, 0U);
}

TEST(Search, FindsNonTheorems) {
  for (const char* text : {"S p", "p -> S p", "p -> [c a]p", "[c a]p -> S p", "P p -> p"}) {
    const Formula f = F(text);
    const auto out = find_countermodel(f, default_search_bounds(f));
    ASSERT_TRUE(out.found()) << text;
    EXPECT_TRUE(satisfies(out.countermodel->model, out.countermodel->point, Formula::neg(f))) << text;
  }
}

TEST(Search, ValidFormulasAreNotFound) {
  for (const char* text : {"p -> p", "S p -> p", "[c a]p -> p", "S p -> [c a]p", "[i a]p -> ~S [i a]p"}) {
    const Formula f = F(text);
    const auto b = default_search_bounds(f);
    const auto out = find_countermodel(f, b);
    EXPECT_FALSE(out.found()) << text;
    EXPECT_EQ(out.bounds.max_moments, b.max_moments);
    EXPECT_GT(out.models_examined, 0U);
  }
}

TEST(Search, DefaultBounds) {
  const Formula f = parse_formula("[c b]q -> [i a]p", std::vector<std::string>{"a", "b"});
  const auto b = default_search_bounds(f);
  EXPECT_EQ(b.agents, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(b.vars, (std::vector<std::string>{"p", "q"}));
  EXPECT_EQ(b.max_moments, 3U);
  EXPECT_EQ(b.max_family, 2U);
  EXPECT_EQ(default_search_bounds(F("p -> p")).agents, std::vector<std::string>{"a"});
  EXPECT_EQ(default_search_bounds(f, {"c"}).agents, std::vector<std::string>{"c"});
}
