#pragma once

// Generalised Albert forms, the Sim(n) property, twisted Pfister forms and
// the going-up / going-down harnesses over discretely valued towers.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wittlab/ideals.hpp"

namespace wittlab {

/// Given phi = pi (x) tau anisotropic with [phi] in I^n, n >= 3 and pi in
/// GP_(n-2), returns sigma with [sigma] in I^2 and phi = pi (x) sigma.
Form make_albert_factor(const Form& pi, const Form& tau, int n);

/// The five equivalent characterisations of a (2^n + 2^(n-1))-dimensional
/// anisotropic I^n form being a sum of two GP_n forms, each decided by its
/// own search.
struct GAClassification {
  int n = 0;
  bool c1 = false;  // [f] = [pi1] + [pi2], pi_i in GP_n
  bool c2 = false;  // f = pi (x) alpha, pi in GP_(n-2), alpha Albert
  bool c3 = false;  // f = s1 _|_ s2 _|_ s3, s_i in GP_(n-1)
  bool c4 = false;  // some GP_(n-1) subform
  bool c5 = false;  // some Pfister neighbour of dimension 2^(n-1) + 1

  std::optional<std::array<PfisterWitness, 2>> sum_pair;
  std::optional<PfisterWitness> albert_divisor;
  std::optional<Form> albert;
  std::optional<std::array<PfisterWitness, 3>> triple;
  std::optional<PfisterWitness> subform;
  std::optional<Form> neighbor;
  std::optional<PfisterWitness> neighbor_pfister;

  bool consistent() const { return c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5; }
  bool all() const { return c1 && c2 && c3 && c4 && c5; }
};

GAClassification ga_classify(const Form& f, int n);
/// Re-checks every witness of a classification with direct engine calls.
/// Returns the empty string on success, otherwise a description.
std::string verify_classification(const GAClassification& c, const Form& f);

struct GAVerdict {
  bool is_ga;
  std::optional<std::array<PfisterWitness, 2>> pair;
};
GAVerdict is_generalised_albert(const Form& f, int n);

/// [a f] = [sigma] - [pi] with sigma in P_n, pi in P_m of linkage number m - 1.
struct TwistedWitness {
  SquareClass a;
  PfisterSpec sigma;
  PfisterSpec pi;
};
struct TwistedSearch {
  std::optional<TwistedWitness> witness;
  bool exhausted = false;
  std::size_t candidates = 0;
};
TwistedSearch twisted_pfister_detect(const Form& f, int n, int m);

bool congruent_mod_In(const Form& f, const Form& g, int n);

/// Decomposition [f] = [pi1] + [pi2] built along the going-up proof.
struct GAUpWitness {
  /// 'a': similar to a unimodular form, 'b': GP_(n-1) second residue,
  /// 'c': residue forms of equal dimension.
  char route;
  std::array<PfisterWitness, 2> pair;
};
GAUpWitness ga_up_witness(const Form& f, int n);

struct CampaignFailure {
  std::string form;
  std::string detail;
};

struct CampaignReport {
  std::string field;
  int n = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::int64_t checks = 0;
  std::vector<CampaignFailure> failures;
  std::int64_t witnesses = 0;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
  /// Exact-key JSON object; elapsed_ms is the only nondeterministic field.
  std::string to_json(bool include_elapsed = true) const;
};

CampaignReport sim_campaign(FieldTower field, int n, std::int64_t trials, std::uint64_t seed);
CampaignReport going_down_check(FieldTower field, int n, std::int64_t trials, std::uint64_t seed);
/// ga_up_witness on sampled (2^n + 2^(n-1))-dimensional I^n forms.
CampaignReport going_up_campaign(FieldTower field, int n, std::int64_t trials, std::uint64_t seed);
/// ga_classify consistency on sampled (2^n + 2^(n-1))-dimensional I^n forms.
CampaignReport ga_survey(FieldTower field, int n, std::int64_t trials, std::uint64_t seed);

}  // namespace wittlab
