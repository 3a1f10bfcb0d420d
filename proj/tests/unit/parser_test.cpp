#include <gtest/gtest.h>

#include "stit/parser.hpp"

using namespace stit;

namespace {

const std::vector<std::string> kA{"a"};
const std::vector<std::string> kAB{"a", "b"};

ParseError::Kind kind_of(std::string_view text, const std::vector<std::string>& agents = kA) {
  try {
    parse_formula(text, agents);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ParseError::Kind::Syntax;
}

}  // namespace

TEST(Parser, ReadsTheGrammar) {
  const Formula p = Formula::var("p");
  const Formula q = Formula::var("q");
  EXPECT_EQ(parse_formula("(p & ~q)", kA), Formula::conj(p, Formula::neg(q)));
  EXPECT_EQ(parse_formula("[d a]p", kA), Formula::dstit("a", p));
  EXPECT_EQ(parse_formula("P p", kA), Formula::possible(p));
  EXPECT_EQ(parse_formula("S S p", kA), Formula::settled(Formula::settled(p)));
  EXPECT_EQ(parse_formula("[c b][i a]q", kAB), Formula::cstit("b", Formula::imagine("a", q)));
}

TEST(Parser, Precedence) {
  const Formula p = Formula::var("p");
  const Formula q = Formula::var("q");
  const Formula r = Formula::var("r");
  EXPECT_EQ(parse_formula("p & q | r", kA), Formula::disj(Formula::conj(p, q), r));
  EXPECT_EQ(parse_formula("p | q -> r", kA), Formula::imp(Formula::disj(p, q), r));
  EXPECT_EQ(parse_formula("p -> q <-> r", kA), Formula::iff(Formula::imp(p, q), r));
  EXPECT_EQ(parse_formula("p -> q -> r", kA), Formula::imp(p, Formula::imp(q, r)));
  EXPECT_EQ(parse_formula("p & q & r", kA), Formula::conj(Formula::conj(p, q), r));
  EXPECT_EQ(parse_formula("p <-> q <-> r", kA), Formula::iff(Formula::iff(p, q), r));
  EXPECT_EQ(parse_formula("~p & q", kA), Formula::conj(Formula::neg(p), q));
  EXPECT_EQ(parse_formula("S p -> p", kA), Formula::imp(Formula::settled(p), p));
}

TEST(Parser, WhitespaceIsFree) {
  EXPECT_EQ(parse_formula("  [ c  a ] ( p->q )", kA), parse_formula("[c a](p -> q)", kA));
}

TEST(Parser, Errors) {
  EXPECT_EQ(kind_of("I a]p"), ParseError::Kind::Syntax);
  EXPECT_EQ(kind_of("p &"), ParseError::Kind::Syntax);
  EXPECT_EQ(kind_of("(p"), ParseError::Kind::Syntax);
  EXPECT_EQ(kind_of("p q"), ParseError::Kind::Syntax);
  EXPECT_EQ(kind_of(""), ParseError::Kind::Syntax);
  EXPECT_EQ(kind_of("[x a]p"), ParseError::Kind::Syntax);
  EXPECT_EQ(kind_of("[c z]p"), ParseError::Kind::UnknownAgent);
  EXPECT_EQ(kind_of("c & p"), ParseError::Kind::ReservedName);
  EXPECT_EQ(kind_of("i"), ParseError::Kind::ReservedName);
}

TEST(Parser, ErrorCarriesPosition) {
  try {
    parse_formula("p & (q | )", kA);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 9U);
  }
}

TEST(Parser, ScanAgentsInOrderOfAppearance) {
  EXPECT_EQ(scan_agents("[i b]p -> [c a][d b]q"), (std::vector<std::string>{"b", "a"}));
  EXPECT_TRUE(scan_agents("S p -> p").empty());
}

TEST(Parser, Identifiers) {
  EXPECT_TRUE(is_identifier("p_1"));
  EXPECT_TRUE(is_identifier("_x"));
  EXPECT_FALSE(is_identifier("1p"));
  EXPECT_FALSE(is_identifier(""));
  for (const char* w : {"S", "P", "c", "d", "i"}) EXPECT_TRUE(is_reserved_word(w));
  EXPECT_FALSE(is_reserved_word("s"));
}
