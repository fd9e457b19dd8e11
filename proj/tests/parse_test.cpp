#include <gtest/gtest.h>

#include "support/helpers.hpp"
#include "wittlab/errors.hpp"
#include "wittlab/sampling.hpp"
#include "wittlab/witt.hpp"

using namespace wittlab;
using namespace testing_helpers;

TEST(Parse, PfisterLiteral) {
  auto k = tower("F3[[t1]]");
  EXPECT_EQ(format_form(parse_form("<<-1,t1>>", k)), "<1,1,s*t1,s*t1>");
}

TEST(Parse, ScaledSumWithHyperbolicPlane) {
  auto k = tower("F3[[t1,t2]]");
  EXPECT_EQ(parse_form("t1*<1,t2> + H", k), form("<t1,t1*t2,1,-1>", k));
}

TEST(Parse, Precedence) {
  auto k = tower("F3[[a,b]]");
  // unary minus binds tighter than *, which binds tighter than +
  EXPECT_EQ(parse_form("-<1> * <1,a> + <b>", k), form("<-1,-a,b>", k));
  EXPECT_EQ(parse_form("<1> + <a> * <1,b>", k), form("<1,a,a*b>", k));
  EXPECT_EQ(parse_form("(<1> + <a>) * <1,b>", k), form("<1,b,a,a*b>", k));
  EXPECT_EQ(parse_form("2 x <a> + 3x H", k).dim(), 8u);
  EXPECT_EQ(parse_form("a*b*<1>", k), form("<a*b>", k));
  EXPECT_EQ(parse_form("s*a * <<b>>", k), form("<s*a,-s*a*b>", k));
  EXPECT_EQ(parse_form("2 x 2 x <1>", k).dim(), 4u);
}

TEST(Parse, EmptyForms) {
  auto k = tower("F5");
  EXPECT_TRUE(parse_form("<>", k).empty());
  EXPECT_EQ(parse_form("<<>>", k), form("<1>", k));
}

TEST(Parse, Multiline) {
  auto k = tower("R[[t]]");
  EXPECT_EQ(parse_form("<1,\n  -t>\n+ <t>", k), form("<1,-t,t>", k));
  try {
    parse_form("<1,\n  u>", k);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
  }
}

TEST(Parse, Errors) {
  auto k = tower("F3[[t]]");
  try {
    parse_form("<1,u>", k);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("unknown variable u"), std::string::npos);
    EXPECT_EQ(e.column(), 4);
  }
  EXPECT_THROW(parse_form("<1", k), ParseError);
  EXPECT_THROW(parse_form("<1,>", k), ParseError);
  EXPECT_THROW(parse_form("t", k), ParseError);
  EXPECT_THROW(parse_form("<1> <t>", k), ParseError);
  EXPECT_THROW(parse_form("<1> + ", k), ParseError);
  EXPECT_THROW(parse_form("(<1>", k), ParseError);
  EXPECT_THROW(parse_form("<1> % <t>", k), ParseError);
  EXPECT_THROW(parse_form("<2>", k), ParseError);
  EXPECT_THROW(parse_form("<s>", tower("C[[t]]")), ParseError);
  EXPECT_THROW(parse_form("", k), ParseError);
}

TEST(Parse, FormatRoundTrip) {
  for (const char* d : {"F3[[t1,t2,t3]]", "R[[a,b]]", "C[[x1,x2,x3]]", "F5[[t]]", "F9"}) {
    auto k = tower(d);
    Rng rng(77, 0);
    for (int i = 0; i < 300; ++i) {
      Form f = random_form(k, rng.below(9), rng);
      EXPECT_EQ(parse_form(format_form(f), k), f) << format_form(f);
      Form can = anisotropic_part(f).form;
      EXPECT_EQ(parse_form(format_form(can), k), can);
      PfisterSpec spec = rng.pfister_spec(k, static_cast<int>(rng.below(4)));
      EXPECT_EQ(parse_form(format_pfister(spec), k), pfister(spec));
    }
  }
}
