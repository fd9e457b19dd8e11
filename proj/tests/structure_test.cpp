#include <gtest/gtest.h>

#include <unordered_set>

#include <set>

#include "support/helpers.hpp"
#include "wittlab/errors.hpp"
#include "wittlab/sampling.hpp"
#include "wittlab/search.hpp"
#include "wittlab/structure.hpp"

using namespace wittlab;
using namespace testing_helpers;

namespace {
const char* kTower4 = "F3[[t1,t2,t3,t4]]";
const char* kAlbert = "<1,t1,t2,-t1*t2,-t3,-t3>";
}  // namespace

TEST(AlbertFactor, WorkedExample) {
  auto k = tower(kTower4);
  Form sigma = make_albert_factor(form("<<-t4>>", k), form("<t4,t1,t2,-t1*t2,-t3,-t3>", k), 3);
  EXPECT_EQ(sigma, form(kAlbert, k));
}

TEST(AlbertFactor, CofactorAlreadyInI2) {
  auto k = tower(kTower4);
  auto tau = form(kAlbert, k);
  EXPECT_EQ(make_albert_factor(form("<<-t4>>", k), tau, 3), tau);
}

TEST(AlbertFactor, Preconditions) {
  auto k = tower(kTower4);
  EXPECT_THROW(make_albert_factor(form("<<-t4>>", k), form("<1,1,1,t1,t2,t3>", k), 3), ValidationError);
  EXPECT_THROW(make_albert_factor(form("<<-t4>>", k), form(kAlbert, k), 2), ValidationError);
  EXPECT_THROW(make_albert_factor(form("<1,t1,t2>", k), form(kAlbert, k), 3), ValidationError);
  // pi (x) tau not in I^3
  EXPECT_THROW(make_albert_factor(form("<<-t4>>", k), form("<1,t1,t2,-t1*t2,-t3,t3>", k), 3), ValidationError);
}

TEST(GAClassify, PfisterTimesAlbert) {
  auto k = tower(kTower4);
  Form f = tensor(form("<<-t4>>", k), form(kAlbert, k));
  GAClassification c = ga_classify(f, 3);
  EXPECT_TRUE(c.all());
  EXPECT_EQ(verify_classification(c, f), "");
  ASSERT_TRUE(c.albert.has_value());
  EXPECT_EQ(c.albert->dim(), 6u);
}

TEST(GAClassify, AlbertFormsOfDegreeTwo) {
  auto k = tower("F3[[t1,t2,t3]]");
  Form f = form(kAlbert, k);
  GAClassification c = ga_classify(f, 2);
  EXPECT_TRUE(c.all());
  EXPECT_EQ(verify_classification(c, f), "");
}

TEST(GAClassify, Preconditions) {
  auto k = tower(kTower4);
  EXPECT_THROW(ga_classify(form(kAlbert, k), 3), ValidationError);  // wrong dimension
  Form not_i3 = perp(form(kAlbert, k), form("t4*<1,t1,t2,-t1*t2,-t3,t3>", k));
  EXPECT_THROW(ga_classify(not_i3, 3), ValidationError);
  EXPECT_THROW(ga_classify(form("<1,-1,t1,t2,-t1*t2,-t3>", k), 2), ValidationError);  // isotropic
}

TEST(GAClassify, TamperedWitnessIsDetected) {
  auto k = tower(kTower4);
  Form f = tensor(form("<<-t4>>", k), form(kAlbert, k));
  GAClassification c = ga_classify(f, 3);
  ASSERT_TRUE(c.subform.has_value());
  c.subform->slots.slots.pop_back();
  EXPECT_NE(verify_classification(c, f), "");
}

TEST(GeneralisedAlbert, Detection) {
  auto k = tower(kTower4);
  Form f = tensor(form("<<-t4>>", k), form(kAlbert, k));
  GAVerdict v = is_generalised_albert(f, 3);
  EXPECT_TRUE(v.is_ga);
  ASSERT_TRUE(v.pair.has_value());
  EXPECT_TRUE(witt_equal(f, perp((*v.pair)[0].form(), (*v.pair)[1].form())));

  // linkage number 1, so the difference has dimension 12
  Form g = anisotropic_part(perp(form("<<t1,t2,t3>>", k), form("-<<t1,s*t2,t4>>", k))).form;
  ASSERT_EQ(g.dim(), 12u);
  EXPECT_TRUE(is_generalised_albert(g, 3).is_ga);
  EXPECT_THROW(is_generalised_albert(form("<<t1,t2,t3>>", k), 3), ValidationError);
}

TEST(Twisted, ConstructedInstanceIsFound) {
  auto k = tower("F3[[t1,t2]]");
  Form f = form("<1,-t1,-t1,t2>", k);  // <<-1,t1>> - <<t2>>, linkage number 0
  TwistedSearch s = twisted_pfister_detect(f, 2, 1);
  ASSERT_TRUE(s.witness.has_value());
  const auto& w = *s.witness;
  Form sigma = pfister(w.sigma);
  Form pi = pfister(w.pi);
  EXPECT_TRUE(witt_equal(scale(w.a, f), perp(sigma, negate(pi))));
  EXPECT_EQ(linkage_number(sigma, pi, SquareClass::one(k), class_of_minus_one(k)).r, 0);
}

TEST(Twisted, PfisterFormsAreNotTwisted) {
  auto k = tower("F3[[t1,t2]]");
  TwistedSearch s = twisted_pfister_detect(form("<<-1,t1>>", k), 2, 1);
  EXPECT_FALSE(s.witness.has_value());
  EXPECT_TRUE(s.exhausted);
  EXPECT_GT(s.candidates, 0u);
  EXPECT_THROW(twisted_pfister_detect(form("<1,t1>", k), 2, 1), ValidationError);
  EXPECT_THROW(twisted_pfister_detect(form("<1,t1,t2,1>", k), 2, 2), ValidationError);
}

TEST(Twisted, CongruentDetectedFormsAreSimilar) {
  auto k = tower("F3[[t1,t2,t3]]");
  std::unordered_set<WittVector, WittVectorHash> seen;
  std::vector<Form> twisted;
  for (const auto& sigma : pfister_catalog(k, 2)->entries()) {
    if (!sigma.anisotropic) continue;
    for (const auto& pi : pfister_catalog(k, 1)->entries()) {
      if (!pi.anisotropic) continue;
      WittVector v = sigma.vec - pi.vec;
      if (v.diman() != 4) continue;
      for (auto x : enumerate_classes(k)) {
        if (seen.insert(v.scaled(x)).second) twisted.push_back(v.scaled(x).anisotropic_form());
      }
    }
  }
  ASSERT_GT(twisted.size(), 4u);
  int pairs = 0;
  for (std::size_t i = 0; i < twisted.size(); ++i) {
    for (std::size_t j = i + 1; j < twisted.size(); ++j) {
      if (!congruent_mod_In(twisted[i], twisted[j], 3)) continue;
      ++pairs;
      EXPECT_TRUE(similar(twisted[i], twisted[j]).has_value())
          << format_form(twisted[i]) << " vs " << format_form(twisted[j]);
    }
  }
  EXPECT_GT(pairs, 0);
}

TEST(Congruence, Basics) {
  auto k = tower("F3[[t1,t2]]");
  Form f = form("<1,t1,s*t2>", k);
  for (int n = 0; n < 5; ++n) EXPECT_TRUE(congruent_mod_In(f, f, n));
  EXPECT_TRUE(congruent_mod_In(f, perp(f, form("t1*<<t2,s>>", k)), 2));
  EXPECT_FALSE(congruent_mod_In(f, perp(f, form("<<t2>>", k)), 2));
  EXPECT_THROW(congruent_mod_In(f, form("<1>", tower("F3[[t1]]")), 1), ValidationError);
}

TEST(Congruence, SimilarGPFormsAreCongruent) {
  auto k = tower("F3[[t1,t2]]");
  auto gp = gp_catalog(k, 2);
  for (std::size_t i = 0; i < gp->size(); ++i) {
    for (std::size_t j = 0; j < gp->size(); ++j) {
      Form a = gp->witness(i).form();
      Form b = gp->witness(j).form();
      EXPECT_EQ(similar(a, b).has_value(), congruent_mod_In(a, b, 3));
    }
  }
}

TEST(GoingUp, Routes) {
  auto k = tower(kTower4);
  // <<-t4>> (x) alpha = alpha _|_ t4 alpha: residues of equal dimension.
  Form c = tensor(form("<<-t4>>", k), form(kAlbert, k));
  GAUpWitness w = ga_up_witness(c, 3);
  EXPECT_EQ(w.route, 'c');
  EXPECT_TRUE(witt_equal(c, perp(w.pair[0].form(), w.pair[1].form())));

  std::set<char> seen;
  Rng rng(11, 0);
  for (int i = 0; i < 40; ++i) {
    auto s = sample_with_diman(k, 3, 12, rng);
    if (!s) continue;
    GAUpWitness u = ga_up_witness(s->form, 3);
    seen.insert(u.route);
    EXPECT_TRUE(is_gp_n(u.pair[0].form(), 3));
    EXPECT_TRUE(is_gp_n(u.pair[1].form(), 3));
    EXPECT_TRUE(witt_equal(s->form, perp(u.pair[0].form(), u.pair[1].form())));
  }
  EXPECT_TRUE(seen.count('b'));
  EXPECT_TRUE(seen.count('c'));
}

TEST(GoingUp, UnimodularRoute) {
  auto k = tower("R[[t1,t2,t3]]");
  Rng rng(5, 0);
  auto s = sample_with_diman(k.residue(), 3, 12, rng);
  ASSERT_TRUE(s.has_value());
  Form f = lift(s->form, k, 0);
  GAUpWitness w = ga_up_witness(f, 3);
  EXPECT_EQ(w.route, 'a');
  EXPECT_TRUE(witt_equal(f, perp(w.pair[0].form(), w.pair[1].form())));
  GAUpWitness tw = ga_up_witness(lift(s->form, k, 1), 3);
  EXPECT_EQ(tw.route, 'a');
}

TEST(GoingUp, Preconditions) {
  EXPECT_THROW(ga_up_witness(form(kAlbert, tower("F3")), 2), ValidationError);
  auto k = tower(kTower4);
  EXPECT_THROW(ga_up_witness(form(kAlbert, k), 3), ValidationError);
}

TEST(Campaigns, ZeroTrials) {
  auto k = tower("F3[[t1,t2,t3]]");
  for (const auto& r : {sim_campaign(k, 2, 0, 1), going_down_check(k, 2, 0, 1), ga_survey(k, 2, 0, 1),
                        going_up_campaign(k, 2, 0, 1)}) {
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.checks, 0);
  }
}

TEST(Campaigns, JsonShape) {
  auto k = tower("F3[[t1,t2,t3]]");
  CampaignReport r = sim_campaign(k, 2, 5, 9);
  std::string j = r.to_json(false);
  EXPECT_EQ(j.rfind("{\"field\":\"F3[[t1,t2,t3]]\",\"n\":2,\"trials\":5,\"seed\":9,\"checks\":", 0), 0u);
  EXPECT_EQ(j.find("elapsed_ms"), std::string::npos);
  EXPECT_NE(r.to_json(true).find("\"elapsed_ms\":"), std::string::npos);
  CampaignReport bad = r;
  bad.failures.push_back({"<1>", "x\"y"});
  EXPECT_NE(bad.to_json(false).find("\"failures\":[{\"form\":\"<1>\",\"detail\":\"x\\\"y\"}]"), std::string::npos);
  EXPECT_FALSE(bad.passed());
}

TEST(Campaigns, SeedDeterminesReport) {
  auto k = tower("F3[[t1,t2,t3]]");
  set_search_threads(1);
  std::string a = sim_campaign(k, 2, 30, 4).to_json(false);
  set_search_threads(4);
  std::string b = sim_campaign(k, 2, 30, 4).to_json(false);
  set_search_threads(1);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, sim_campaign(k, 2, 30, 5).to_json(false));
}

TEST(Campaigns, GoingDownNeedsUniformizer) {
  EXPECT_THROW(going_down_check(tower("F3"), 2, 1, 1), ValidationError);
  EXPECT_TRUE(going_down_check(tower("F3[[t]]"), 2, 50, 1).passed());
}

TEST(Campaigns, BudgetIsReportedNotGuessed) {
  auto k = tower(kTower4);
  set_search_budget(std::chrono::milliseconds(0));
  CampaignReport r = ga_survey(k, 3, 3, 1);
  set_search_budget(std::nullopt);
  ASSERT_FALSE(r.passed());
  for (const auto& f : r.failures) EXPECT_NE(f.detail.find("budget"), std::string::npos);
}
