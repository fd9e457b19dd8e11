#include <gtest/gtest.h>

#include "support/helpers.hpp"
#include "wittlab/errors.hpp"
#include "wittlab/square_class.hpp"

using namespace wittlab;
using namespace testing_helpers;

TEST(SquareClass, MultiplicationXorsExponents) {
  auto k = tower("F3[[t1,t2]]");
  EXPECT_EQ(cls("s*t1", k) * cls("t1", k), cls("s", k));
  auto r = tower("R[[t]]");
  EXPECT_EQ(cls("-1", r) * cls("-t", r), cls("t", r));
}

TEST(SquareClass, SelfInverse) {
  auto k = tower("F5[[a,b]]");
  for (auto c : enumerate_classes(k)) EXPECT_TRUE((c * c).is_one());
}

TEST(SquareClass, MinusOne) {
  EXPECT_EQ(class_of_minus_one(tower("F3")), SquareClass::base_nonsquare(tower("F3")));
  EXPECT_TRUE(class_of_minus_one(tower("F5")).is_one());
  EXPECT_TRUE(class_of_minus_one(tower("C")).is_one());
  auto r = tower("R[[t]]");
  EXPECT_TRUE(class_of_minus_one(r).base_bit());
  EXPECT_FALSE(class_of_minus_one(r).exponent(1));
  EXPECT_TRUE(class_of_minus_one(tower("F7[[t]]")).base_bit());
  EXPECT_FALSE(class_of_minus_one(tower("F9")).base_bit());
}

TEST(SquareClass, Enumeration) {
  auto f3 = tower("F3");
  auto cs = enumerate_classes(f3);
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(format_class(cs[0]), "1");
  EXPECT_EQ(format_class(cs[1]), "s");

  auto c = enumerate_classes(tower("C[[t]]"));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(format_class(c[1]), "t");

  EXPECT_EQ(enumerate_classes(tower("F3[[t1,t2]]")).size(), 8u);
  EXPECT_EQ(tower("R[[a,b,c]]").num_classes(), 16);
}

TEST(SquareClass, EnumerationIsLexicographic) {
  auto k = tower("F3[[t1,t2]]");
  std::vector<std::string> names;
  for (auto c : enumerate_classes(k)) names.push_back(format_class(c));
  std::vector<std::string> expected = {"1", "t2", "t1", "t1*t2", "s", "s*t2", "s*t1", "s*t1*t2"};
  EXPECT_EQ(names, expected);
}

TEST(SquareClass, SplitClass) {
  auto k = tower("F3[[t1,t2]]");
  auto a = split_class(cls("t2", k));
  EXPECT_TRUE(a.unit_part.is_one());
  EXPECT_EQ(a.t_exp, 1);
  auto b = split_class(cls("s*t1", k));
  EXPECT_EQ(format_class(b.unit_part), "s*t1");
  EXPECT_EQ(b.unit_part.field(), k.residue());
  EXPECT_EQ(b.t_exp, 0);
  auto r = tower("R[[t]]");
  auto c = split_class(cls("-t", r));
  EXPECT_EQ(format_class(c.unit_part), "-1");
  EXPECT_EQ(c.t_exp, 1);
}

TEST(SquareClass, SplitNeedsUniformizer) {
  EXPECT_THROW(split_class(SquareClass::one(tower("F3"))), ValidationError);
}

TEST(SquareClass, TowerMismatchRejected) {
  auto a = SquareClass::one(tower("F3[[t]]"));
  auto b = SquareClass::one(tower("F5[[t]]"));
  EXPECT_THROW(a * b, ValidationError);
}

TEST(SquareClass, TowerShape) {
  auto k = tower("F3[[t1,t2,t3]]");
  EXPECT_EQ(k.height(), 3);
  EXPECT_EQ(k.residue(), tower("F3[[t1,t2]]"));
  EXPECT_EQ(k.residue().residue().residue(), tower("F3"));
  EXPECT_THROW(tower("F3").residue(), ValidationError);
  EXPECT_EQ(tower("F3[[t1,t2]]"), tower(" F3 [[ t1 , t2 ]] "));
}

TEST(SquareClass, DescriptorParsing) {
  EXPECT_EQ(tower("F9[[u]]").q(), 9u);
  EXPECT_EQ(tower("R").height(), 0);
  EXPECT_THROW(tower("F4[[t]]"), ValidationError);
  EXPECT_THROW(tower("F15"), ValidationError);
  EXPECT_THROW(tower("Q[[t]]"), ParseError);
  EXPECT_THROW(tower("F3[[t,t]]"), ValidationError);
  EXPECT_THROW(tower("F3[[s]]"), ValidationError);
  EXPECT_THROW(tower("F3[[t"), ParseError);
}

TEST(SquareClass, LiteralRoundTrip) {
  for (const char* d : {"F3[[t1,t2]]", "R[[x1,y]]", "C[[a,b,c]]", "F5[[t]]"}) {
    auto k = tower(d);
    for (auto c : enumerate_classes(k)) EXPECT_EQ(parse_class(format_class(c), k), c) << d;
  }
}

TEST(SquareClass, LiteralErrors) {
  auto k = tower("F3[[t]]");
  EXPECT_THROW(parse_class("u", k), ParseError);
  EXPECT_THROW(parse_class("t*", k), ParseError);
  EXPECT_THROW(parse_class("s", tower("C[[t]]")), ParseError);
  EXPECT_EQ(parse_class("-s*t", k), cls("t", k));
  EXPECT_EQ(format_class(parse_class("-t", tower("R[[t]]"))), "-t");
}
