#include <gtest/gtest.h>

#include "support/helpers.hpp"
#include "wittlab/errors.hpp"
#include "wittlab/ideals.hpp"

using namespace wittlab;
using namespace testing_helpers;

namespace {
const char* kAlbert = "<1,t1,t2,-t1*t2,-t3,-t3>";
}

TEST(Ideal, Examples) {
  auto k = tower("F3[[a,b]]");
  EXPECT_TRUE(in_In(form("<1,-a,-b,a*b>", k), 2).member);
  EXPECT_TRUE(in_In(form("8 x <1>", tower("R")), 3).member);
  EXPECT_FALSE(in_In(form("4 x <1>", tower("R")), 3).member);
  auto k3 = tower("F3[[t1,t2,t3]]");
  EXPECT_TRUE(in_In(form(kAlbert, k3), 2).member);
  EXPECT_FALSE(in_In(form(kAlbert, k3), 3).member);
  EXPECT_TRUE(in_In(form("<1,t1,t2>", k3), 0).member);
  EXPECT_FALSE(in_In(form("<1,t1,t2>", k3), 1).member);
}

TEST(Ideal, BaseFieldRules) {
  auto c = tower("C");
  EXPECT_TRUE(in_In(form("<1,1>", c), 1).member);
  EXPECT_TRUE(in_In(form("<1,1>", c), 5).member);
  EXPECT_FALSE(in_In(form("<1>", c), 1).member);
  auto f5 = tower("F5");
  EXPECT_TRUE(in_In(form("<1,1>", f5), 2).member);
  EXPECT_FALSE(in_In(form("<1,s>", f5), 2).member);
  EXPECT_TRUE(in_In(form("<1,s,s,1>", f5), 3).member);  // 2<1,s> = 0
  EXPECT_TRUE(in_In(form("<1,s,s,1>", f5), 2).member);
  EXPECT_TRUE(in_In(form("<1,1,-1,-1>", tower("R")), 7).member);
}

TEST(Ideal, CertificatesReplay) {
  auto k3 = tower("F3[[t1,t2,t3]]");
  for (int n = 0; n <= 4; ++n) {
    IdealCert cert = in_In(form(kAlbert, k3), n);
    EXPECT_TRUE(replay(cert)) << n;
    EXPECT_EQ(cert.n, n);
  }
  IdealCert cert = in_In(form(kAlbert, k3), 2);
  cert.member = !cert.member;
  EXPECT_FALSE(replay(cert));
}

TEST(GP, Recognition) {
  auto k = tower("F3[[a,b,c]]");
  EXPECT_TRUE(is_gp_n(form("<<a,b,c>>", k), 3));
  EXPECT_TRUE(is_gp_n(form("s*a*<<a*b,c>>", k), 2));
  EXPECT_TRUE(is_gp_n(form("<1,1,1,1>", tower("F3")), 2));
  EXPECT_FALSE(is_gp_n(form("<1,1,1,t>", tower("F3[[t]]")), 2));
  EXPECT_FALSE(is_gp_n(form("<1,a,b>", k), 2));
  EXPECT_FALSE(is_gp_n(form("<1,a,b,c>", k), 2));
}

TEST(PfisterCatalog, Enumeration) {
  auto k = tower("F3[[t1,t2]]");
  auto zero = enumerate_pfister(k, 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0].cls.form, form("<1>", k));

  auto c = enumerate_pfister(tower("C[[t]]"), 1);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_FALSE(c[0].anisotropic);
  EXPECT_TRUE(c[0].cls.is_zero());
  EXPECT_TRUE(c[1].anisotropic);

  auto target = WittVector::of(form("<<-1,t1>>", k));
  bool found = false;
  for (const auto& e : enumerate_pfister(k, 2)) {
    if (e.vec == target) {
      found = true;
      EXPECT_TRUE(e.anisotropic);
    }
    EXPECT_TRUE(isometric(pfister(e.spec), e.anisotropic ? e.cls.form : pfister(e.spec)));
    EXPECT_EQ(WittVector::of(pfister(e.spec)), e.vec);
  }
  EXPECT_TRUE(found);
}

TEST(PfisterCatalog, BudgetRefusesHugeEnumerations) {
  EXPECT_THROW(pfister_catalog(tower("F3[[a,b,c,d,e,f,g]]"), 4), ResourceError);
}

TEST(PfisterNumber, Examples) {
  auto k3 = tower("F3[[t1,t2,t3]]");
  EXPECT_EQ(pfister_number(form("2 x H", k3), 2, 3).value, 0);
  EXPECT_EQ(pfister_number(form("t2*<<t1,s*t3>>", k3), 2, 3).value, 1);
  PfisterNumber pn = pfister_number(form(kAlbert, k3), 2, 4);
  ASSERT_EQ(pn.value, 2);
  ASSERT_EQ(pn.summands.size(), 2u);
  EXPECT_TRUE(witt_equal(form(kAlbert, k3), perp(pn.summands[0].form(), pn.summands[1].form())));
  EXPECT_TRUE(pfister_number(form(kAlbert, k3), 2, 1).exceeds());
  EXPECT_THROW(pfister_number(form(kAlbert, k3), 3, 4), ValidationError);
}

TEST(Linkage, Examples) {
  auto k = tower("F3[[t1,t2]]");
  auto sigma = form("<<-1,t1>>", k);
  auto pi = form("<<t1,t2>>", k);
  auto one = SquareClass::one(k);
  auto m1 = class_of_minus_one(k);
  Linkage l = linkage_number(sigma, pi, one, m1);
  EXPECT_EQ(l.witt_index, 2u);
  EXPECT_EQ(l.r, 1);
  EXPECT_TRUE(isometric(anisotropic_part(perp(sigma, negate(pi))).form, form("<1,-t1,t2,-t1*t2>", k)));

  Link link = find_link(sigma, pi, 1);
  EXPECT_TRUE(isometric(pfister(link.alpha), form("<<t1>>", k)));
  EXPECT_TRUE(isometric(tensor(pfister(link.alpha), pfister(link.sigma1)), sigma));
  EXPECT_TRUE(isometric(tensor(pfister(link.alpha), pfister(link.pi1)), pi));

  Linkage same = linkage_number(sigma, sigma, one, m1);
  EXPECT_EQ(same.witt_index, 4u);
  EXPECT_EQ(same.r, 2);
  Link self = find_link(sigma, sigma, 2);
  EXPECT_TRUE(isometric(pfister(self.alpha), sigma));
  EXPECT_EQ(self.sigma1.fold(), 0u);
}

TEST(Linkage, Errors) {
  auto k = tower("F3[[t1,t2]]");
  auto one = SquareClass::one(k);
  EXPECT_THROW(linkage_number(form("<1,t1,t2>", k), form("<<t1>>", k), one, one), ValidationError);
  EXPECT_THROW(linkage_number(form("<<t1>>", k), form("<<t1,t2>>", k), one, one), ValidationError);
  EXPECT_THROW(linkage_number(form("<<1,t2>>", k), form("<<t1>>", k), one, one), ValidationError);
}

TEST(Divides, Examples) {
  auto k = tower("F3[[t1,t2]]");
  auto p = form("<<t1>>", k);
  auto f = tensor(p, form("<1,t2>", k));
  auto tau = divides(p, f);
  ASSERT_TRUE(tau.has_value());
  EXPECT_TRUE(isometric(tensor(p, *tau), f));
  EXPECT_FALSE(divides(p, form("<1,t1,t2>", k)).has_value());
  EXPECT_FALSE(divides(p, form("<1,s,t2,t1*t2>", k)).has_value());
  EXPECT_THROW(divides(form("<>", k), f), ValidationError);

  auto k4 = tower("F3[[t1,t2,t3,t4]]");
  auto p4 = form("<<-t4>>", k4);
  auto f4 = tensor(p4, form("<1,t1,t2,-t1*t2,-t3,-t3>", k4));
  auto tau4 = divides(p4, f4);
  ASSERT_TRUE(tau4.has_value());
  EXPECT_TRUE(isometric(tensor(p4, *tau4), f4));
}
