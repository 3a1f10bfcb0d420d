#include <gtest/gtest.h>

#include "stit/error.hpp"
#include "stit/generate.hpp"
#include "stit/model_io.hpp"
#include "stit/parser.hpp"
#include "stit/semantics.hpp"
#include "stit/soundness.hpp"
#include "stit/validate.hpp"

using namespace stit;

TEST(ModelIo, LoadsTheForkFixture) {
  const auto doc = load_model(STIT_DATA_DIR "/models/imagination_fork.json");
  ASSERT_TRUE(doc.model);
  const auto& m = *doc.model;
  EXPECT_EQ(m.moment_count(), 3U);
  EXPECT_EQ(m.histories().size(), 2U);
  EXPECT_TRUE(validate(m).ok());
  EXPECT_FALSE(doc.refuting_point);
  EXPECT_EQ(history_table(m), "h0 = [m0, m1]\nh1 = [m0, m2]\n");
  EXPECT_TRUE(satisfies(m, {0, 0}, parse_formula("[i a]p", m.agents())));
}

TEST(ModelIo, RoundTripOfRandomModels) {
  ModelBounds b;
  b.max_moments = 5;
  b.agents = {"a", "b"};
  b.vars = {"p", "q"};
  b.max_family = 3;
  b.max_histories = 6;
  b.definable_pool = soundness_pool();
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto m = random_model(s, b);
    const auto doc = parse_model(serialize_model(m));
    ASSERT_TRUE(doc.model);
    ASSERT_TRUE(*doc.model == m) << serialize_model(m);
  }
}

TEST(ModelIo, AnnotationsSurvive) {
  const auto m = build_sigma_model({"p"}, {"a"});
  const auto doc = parse_model(serialize_model(m, {PointRef{0, 0}, "S p"}));
  ASSERT_TRUE(doc.refuting_point);
  EXPECT_EQ(*doc.refuting_point, (PointRef{0, 0}));
  EXPECT_EQ(doc.formula, "S p");
}

TEST(ModelIo, CyclicDocumentKeepsTheOrderOnly) {
  const auto doc = load_model(STIT_DATA_DIR "/models/violates_antisymmetry.json");
  EXPECT_FALSE(doc.model);
  EXPECT_TRUE(validate_order(doc.order).has(FrameCondition::Antisymmetry));
}

TEST(ModelIo, Errors) {
  for (const char* bad : {
           "not json",
           "[]",
           R"({"agents": ["a"]})",
           R"({"agents": ["a"], "moments": ["m0"], "covers": [["m0", "m9"]]})",
           R"({"agents": ["a"], "moments": ["m0", "m0"]})",
           R"({"agents": ["a"], "moments": ["m0"], "choice": {"m0": {"z": [[0]]}}})",
           R"({"agents": ["a"], "moments": ["m0"], "choice": {"m0": {"a": [[3]]}}})",
           R"({"agents": ["a"], "moments": ["m0"], "valuation": {"p": [["m0", 1]]}})",
           R"({"agents": ["a"], "moments": ["m0"], "neighborhoods": {"a": [{"at": ["m1", 0], "props": []}]}})",
           R"({"agents": "a", "moments": ["m0"]})",
       }) {
    EXPECT_THROW(parse_model(bad), ModelError) << bad;
  }
  EXPECT_THROW(load_model("/nonexistent/model.json"), ModelError);
}

TEST(ModelIo, PointSpecs) {
  const auto m = *load_model(STIT_DATA_DIR "/models/imagination_fork.json").model;
  EXPECT_EQ(parse_point(m, "m0:1"), (PointRef{0, 1}));
  EXPECT_EQ(parse_point(m, "m1:h0"), (PointRef{1, 0}));
  EXPECT_EQ(parse_point(m, "m2/h1"), (PointRef{2, 1}));
  for (const char* bad : {"m1:h1", "m3:0", "m0:7", "m0", "m0:x", ""}) {
    EXPECT_THROW(parse_point(m, bad), ModelError) << bad;
  }
}
