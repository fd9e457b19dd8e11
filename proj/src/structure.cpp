#include "wittlab/structure.hpp"

#include <chrono>
#include <functional>
#include <unordered_set>

#include <json.hpp>

#include "wittlab/errors.hpp"
#include "wittlab/sampling.hpp"
#include "wittlab/search.hpp"

namespace wittlab {

namespace {

std::size_t pow2(int n) { return std::size_t{1} << n; }

std::size_t ga_dim(int n) { return pow2(n) + pow2(n - 1); }

SquareClass outer_uniformizer(FieldTower field) {
  return SquareClass::uniformizer(field, field.height());
}

PfisterSpec lift_spec(const PfisterSpec& spec, FieldTower field) {
  PfisterSpec out{field, {}};
  for (auto a : spec.slots) out.slots.push_back(lift_class(a, field, 0));
  return out;
}

PfisterWitness lift_witness(const PfisterWitness& w, FieldTower field) {
  return PfisterWitness{lift_class(w.scalar, field, 0), lift_spec(w.slots, field)};
}

void require_ga_input(const Form& f, int n, const char* op) {
  if (n < 2) throw ValidationError(std::string(op) + ": n must be at least 2");
  if (f.dim() != ga_dim(n)) {
    throw ValidationError(std::string(op) + ": expected dimension " + std::to_string(ga_dim(n)) +
                          ", got " + std::to_string(f.dim()));
  }
  if (is_isotropic(f)) throw ValidationError(std::string(op) + ": form is isotropic");
  if (!in_In(f, n).member) {
    throw ValidationError(std::string(op) + ": " + format_form(f) + " is not in I^" +
                          std::to_string(n));
  }
}

}  // namespace

Form make_albert_factor(const Form& pi, const Form& tau, int n) {
  if (n < 3) throw ValidationError("make_albert_factor: n must be at least 3");
  if (!is_gp_n(pi, n - 2) || is_hyperbolic(pi)) {
    throw ValidationError("make_albert_factor: " + format_form(pi) + " is not a nonzero GP_" +
                          std::to_string(n - 2) + " form");
  }
  const Form phi = tensor(pi, tau);
  if (phi.empty() || is_isotropic(phi)) {
    throw ValidationError("make_albert_factor: pi (x) tau is not an anisotropic form");
  }
  if (!in_In(phi, n).member) {
    throw ValidationError("make_albert_factor: pi (x) tau is not in I^" + std::to_string(n));
  }
  const std::string instance = format_form(pi) + " ; " + format_form(tau) + " ; n=" + std::to_string(n);
  if (tau.dim() % 2 != 0) {
    // An odd cofactor would force -a pi to be hyperbolic.
    throw InvariantViolation("dim(phi)/dim(pi) is odd", instance);
  }
  if (in_In(tau, 2).member) return tau;

  const FieldTower field = tau.field();
  const Form rest(field, std::vector<SquareClass>(tau.diag().begin() + 1, tau.diag().end()));
  SquareClass a = det(rest);
  if ((tau.dim() / 2) % 2 == 1) a = a * class_of_minus_one(field);
  Form sigma = perp(Form(field, {a.mask()}), rest);
  if (!in_In(sigma, 2).member || !isometric(phi, tensor(pi, sigma))) {
    throw InvariantViolation("Albert factor failed verification", instance);
  }
  return sigma;
}

namespace {

struct NeighborState {
  WittVector form_rest;
  WittVector pfister_rest;
  std::size_t start;
  friend bool operator==(const NeighborState&, const NeighborState&) = default;
};

struct NeighborStateHash {
  std::size_t operator()(const NeighborState& s) const {
    return s.form_rest.hash() * 31 + s.pfister_rest.hash() * 17 + s.start;
  }
};

// Builds psi = <y_1, ..., y_len> (y nondecreasing) inside both anisotropic
// forms; <y> fits into an anisotropic form r iff diman(r - <y>) = dim r - 1.
std::optional<Form> common_subform(const WittVector& f, const WittVector& p, std::size_t len) {
  const FieldTower field = f.field();
  const auto classes = enumerate_classes(field);
  std::vector<WittVector> units;
  for (auto y : classes) units.push_back(WittVector::of(y));
  std::vector<SquareClass> chosen;
  std::unordered_set<NeighborState, NeighborStateHash> dead;

  auto walk = [&](auto&& self, const WittVector& rf, const WittVector& rp, std::size_t start) -> bool {
    if (chosen.size() == len) return true;
    check_budget();
    NeighborState state{rf, rp, start};
    if (dead.count(state)) return false;
    const int df = rf.diman();
    const int dp = rp.diman();
    for (std::size_t i = start; i < classes.size(); ++i) {
      WittVector nf = rf - units[i];
      if (nf.diman() != df - 1) continue;
      WittVector np = rp - units[i];
      if (np.diman() != dp - 1) continue;
      chosen.push_back(classes[i]);
      if (self(self, nf, np, i)) return true;
      chosen.pop_back();
    }
    dead.insert(std::move(state));
    return false;
  };
  if (!walk(walk, f, p, 0)) return std::nullopt;
  return Form(field, chosen);
}

}  // namespace

GAClassification ga_classify(const Form& f, int n) {
  require_ga_input(f, n, "ga_classify");
  const FieldTower field = f.field();
  const WittVector vf = WittVector::of(f);
  const int d = static_cast<int>(f.dim());
  const int half = static_cast<int>(pow2(n - 1));
  GAClassification out;
  out.n = n;

  // (1) sum of two GP_n forms
  PfisterNumber pn = pfister_number(f, n, 2);
  if (pn.value == 2) {
    out.c1 = true;
    out.sum_pair = std::array{pn.summands[0], pn.summands[1]};
  }

  // (2) divisible by an (n-2)-fold Pfister form with an Albert cofactor
  for (const auto& entry : pfister_catalog(field, n - 2)->entries()) {
    if (!entry.anisotropic) continue;
    const Form pi = pfister(entry.spec);
    std::optional<Form> tau = divides(pi, f);
    if (!tau) continue;
    Form alpha = in_In(*tau, 2).member ? *tau : make_albert_factor(pi, *tau, n);
    if (alpha.dim() == 6 && in_In(alpha, 2).member) {
      out.c2 = true;
      out.albert_divisor = PfisterWitness{SquareClass::one(field), entry.spec};
      out.albert = alpha;
      break;
    }
  }

  // (3) orthogonal sum of three GP_(n-1) forms
  const auto gp = gp_catalog(field, n - 1);
  for (std::size_t i = 0; i < gp->size() && !out.c3; ++i) {
    check_budget();
    WittVector rest = vf - gp->vec(i);
    if (rest.diman() != d - half) continue;
    for (std::size_t j = i; j < gp->size(); ++j) {
      WittVector last = rest - gp->vec(j);
      if (last.diman() != half) continue;
      auto k = gp->find(last);
      if (!k || *k < j) continue;
      out.c3 = true;
      out.triple = std::array{gp->witness(i), gp->witness(j), gp->witness(*k)};
      break;
    }
  }

  // (4) a GP_(n-1) subform
  for (std::size_t i = 0; i < gp->size(); ++i) {
    if ((vf - gp->vec(i)).diman() == d - half) {
      out.c4 = true;
      out.subform = gp->witness(i);
      break;
    }
  }

  // (5) a Pfister neighbour of dimension 2^(n-1) + 1
  const auto gpn = gp_catalog(field, n);
  for (std::size_t i = 0; i < gpn->size(); ++i) {
    if (auto psi = common_subform(vf, gpn->vec(i), pow2(n - 1) + 1)) {
      out.c5 = true;
      out.neighbor = std::move(psi);
      out.neighbor_pfister = gpn->witness(i);
      break;
    }
  }
  return out;
}

std::string verify_classification(const GAClassification& c, const Form& f) {
  const int n = c.n;
  if (c.c1) {
    if (!c.sum_pair) return "c1 without witness";
    Form p1 = (*c.sum_pair)[0].form();
    Form p2 = (*c.sum_pair)[1].form();
    if (!is_gp_n(p1, n) || !is_gp_n(p2, n) || !witt_equal(f, perp(p1, p2))) {
      return "c1 witness does not sum to f";
    }
  }
  if (c.c2) {
    if (!c.albert_divisor || !c.albert) return "c2 without witness";
    Form pi = c.albert_divisor->form();
    if (!is_gp_n(pi, n - 2) || c.albert->dim() != 6 || !in_In(*c.albert, 2).member ||
        !isometric(f, tensor(pi, *c.albert))) {
      return "c2 witness is not pi (x) Albert";
    }
  }
  if (c.c3) {
    if (!c.triple) return "c3 without witness";
    Form sum(f.field());
    for (const auto& w : *c.triple) {
      if (!is_gp_n(w.form(), n - 1)) return "c3 summand not in GP_(n-1)";
      sum = perp(sum, w.form());
    }
    if (!isometric(f, sum)) return "c3 witness is not isometric to f";
  }
  if (c.c4) {
    if (!c.subform) return "c4 without witness";
    Form s = c.subform->form();
    if (!is_gp_n(s, n - 1) || !is_subform(s, f)) return "c4 witness is not a GP_(n-1) subform";
  }
  if (c.c5) {
    if (!c.neighbor || !c.neighbor_pfister) return "c5 without witness";
    Form p = c.neighbor_pfister->form();
    const Form& psi = *c.neighbor;
    if (psi.dim() != pow2(n - 1) + 1 || is_isotropic(psi) || !is_gp_n(p, n) ||
        !is_subform(psi, f) || !is_subform(psi, p)) {
      return "c5 witness is not a Pfister neighbour inside f";
    }
  }
  return {};
}

GAVerdict is_generalised_albert(const Form& f, int n) {
  if (n < 1) throw ValidationError("is_generalised_albert: n must be positive");
  if (f.dim() <= pow2(n) || f.dim() >= pow2(n + 1)) {
    throw ValidationError("is_generalised_albert: need 2^n < dim < 2^(n+1), got dim " +
                          std::to_string(f.dim()));
  }
  if (is_isotropic(f)) throw ValidationError("is_generalised_albert: form is isotropic");
  if (!in_In(f, n).member) {
    throw ValidationError("is_generalised_albert: form is not in I^" + std::to_string(n));
  }
  if (n >= 2 && f.dim() == ga_dim(n)) {
    // A GP_(n-1) subform scan settles this dimension cheaply.
    const WittVector vf = WittVector::of(f);
    const auto gp = gp_catalog(f.field(), n - 1);
    bool found = false;
    for (std::size_t i = 0; i < gp->size() && !found; ++i) {
      found = (vf - gp->vec(i)).diman() == static_cast<int>(f.dim() - pow2(n - 1));
    }
    if (!found) return GAVerdict{false, std::nullopt};
  }
  PfisterNumber pn = pfister_number(f, n, 2);
  if (pn.value != 2) return GAVerdict{false, std::nullopt};
  return GAVerdict{true, std::array{pn.summands[0], pn.summands[1]}};
}

TwistedSearch twisted_pfister_detect(const Form& f, int n, int m) {
  if (m < 1 || m >= n) throw ValidationError("twisted_pfister_detect: need 1 <= m < n");
  if (f.dim() != pow2(n)) {
    throw ValidationError("twisted_pfister_detect: expected dimension " + std::to_string(pow2(n)));
  }
  const FieldTower field = f.field();
  const WittVector vf = WittVector::of(f);
  const auto sigmas = pfister_catalog(field, n);
  const auto pis = pfister_catalog(field, m);
  TwistedSearch out;
  for (auto a : enumerate_classes(field)) {
    const WittVector scaled = vf.scaled(a);
    for (const auto& sigma : sigmas->entries()) {
      if (!sigma.anisotropic) continue;
      check_budget();
      ++out.candidates;
      auto idx = pis->find(sigma.vec - scaled);
      if (!idx) continue;
      const auto& pi = pis->entries()[*idx];
      if (!pi.anisotropic) continue;
      // linkage number m - 1 <=> i_W(sigma _|_ -pi) = 2^(m-1)
      if (static_cast<std::size_t>((sigma.vec - pi.vec).diman()) != pow2(n)) continue;
      out.witness = TwistedWitness{a, sigma.spec, pi.spec};
      return out;
    }
  }
  out.exhausted = true;
  return out;
}

bool congruent_mod_In(const Form& f, const Form& g, int n) {
  if (!(f.field() == g.field())) throw ValidationError("congruent_mod_In: different towers");
  return in_ideal(WittVector::of(f) - WittVector::of(g), n);
}

namespace {

std::array<PfisterWitness, 2> residue_pair(const Form& f, int n) {
  if (f.field().height() > 0 && n >= 2) return ga_up_witness(f, n).pair;
  PfisterNumber pn = pfister_number(f, n, 2);
  if (pn.value != 2) {
    throw InvariantViolation("residue form is not a generalised Albert form",
                             f.field().descriptor() + " ; " + format_form(f) + " ; n=" + std::to_string(n));
  }
  return {pn.summands[0], pn.summands[1]};
}

}  // namespace

GAUpWitness ga_up_witness(const Form& f, int n) {
  const FieldTower field = f.field();
  if (field.height() == 0) throw ValidationError("ga_up_witness: tower has no uniformizer");
  require_ga_input(f, n, "ga_up_witness");
  const std::string instance = field.descriptor() + " ; " + format_form(f) + " ; n=" + std::to_string(n);
  const SquareClass t = outer_uniformizer(field);

  // Scale by t so that 0 <= dim(second residue) <= dim(first residue).
  Form g = f;
  bool twisted = false;
  auto split = residue_split(g);
  if (split.second.dim() > split.first.dim()) {
    g = scale(t, f);
    twisted = true;
    split = residue_split(g);
  }
  const Form& g1 = split.first;
  const Form& g2 = split.second;

  const PfisterWitness blank{SquareClass::one(field), PfisterSpec{field, {}}};
  GAUpWitness out{'?', {blank, blank}};
  if (g2.empty()) {
    out.route = 'a';
    auto pair = residue_pair(g1, n);
    out.pair = {lift_witness(pair[0], field), lift_witness(pair[1], field)};
  } else if (g2.dim() == pow2(n - 1)) {
    out.route = 'b';
    const Form sigma = lift(g2, field, 1);
    if (!is_gp_n(sigma, n - 1)) throw InvariantViolation("t-part is not in GP_(n-1)", instance);
    const SquareClass y = sigma[0];
    auto rho = pfister_catalog(field, n - 1)->find(WittVector::of(scale(y, sigma)));
    if (!rho) throw InvariantViolation("t-part is not similar to a Pfister form", instance);
    const SquareClass x = lift_class(g1[0], field, 0);
    // y <<rho, -xy>> = sigma _|_ x rho contains the neighbour sigma _|_ <x>.
    PfisterSpec big = pfister_catalog(field, n - 1)->entries()[*rho].spec;
    big.slots.push_back(class_of_minus_one(field) * x * y);
    PfisterWitness first{y, big};
    auto second = gp_catalog(field, n)->find(WittVector::of(g) - WittVector::of(first.form()));
    if (!second) throw InvariantViolation("complement of the Pfister neighbour is not in GP_n", instance);
    out.pair = {first, gp_catalog(field, n)->witness(*second)};
  } else if (n >= 3 && g1.dim() == g2.dim() && g2.dim() == 3 * pow2(n - 2)) {
    out.route = 'c';
    // Residues are congruent mod I^n, hence similar: g2 = x (-g1), so
    // g = g1 _|_ -x t g1 = <<x t>> (x) g1.
    auto x = similar(g2, negate(g1));
    if (!x) throw InvariantViolation("equal-dimension residue forms are not similar", instance);
    const SquareClass xt = lift_class(*x, field, 0) * t;
    auto pair = residue_pair(g1, n - 1);
    for (int i = 0; i < 2; ++i) {
      PfisterWitness w = lift_witness(pair[i], field);
      w.slots.slots.push_back(xt);
      out.pair[i] = w;
    }
  } else {
    throw InvariantViolation("residue dimensions match no case of the going-up argument", instance);
  }

  if (twisted) {
    for (auto& w : out.pair) w.scalar = w.scalar * t;
  }
  Form p1 = out.pair[0].form();
  Form p2 = out.pair[1].form();
  if (!is_gp_n(p1, n) || !is_gp_n(p2, n) || !witt_equal(f, perp(p1, p2))) {
    throw InvariantViolation("going-up witness failed verification", instance);
  }
  return out;
}

std::string CampaignReport::to_json(bool include_elapsed) const {
  nlohmann::ordered_json j;
  j["field"] = field;
  j["n"] = n;
  j["trials"] = trials;
  j["seed"] = seed;
  j["checks"] = checks;
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : failures) {
    j["failures"].push_back(nlohmann::ordered_json{{"form", f.form}, {"detail", f.detail}});
  }
  j["witnesses"] = witnesses;
  if (include_elapsed) j["elapsed_ms"] = elapsed_ms;
  return j.dump();
}

namespace {

struct TrialOutcome {
  std::int64_t checks = 0;
  std::int64_t witnesses = 0;
  std::vector<CampaignFailure> failures;

  void fail(const Form& f, std::string detail) {
    failures.push_back(CampaignFailure{format_form(f), std::move(detail)});
  }
};

using TrialBody = std::function<void(Rng&, TrialOutcome&)>;

CampaignReport run_campaign(FieldTower field, int n, std::int64_t trials, std::uint64_t seed,
                            const TrialBody& body) {
  if (trials < 0) throw ValidationError("trials must be nonnegative");
  const auto start = std::chrono::steady_clock::now();
  CampaignReport report;
  report.field = field.descriptor();
  report.n = n;
  report.trials = trials;
  report.seed = seed;

  auto outcomes = parallel_map<TrialOutcome>(static_cast<std::size_t>(trials), [&](std::size_t i) {
    TrialOutcome out;
    Rng rng(seed, i);
    try {
      body(rng, out);
    } catch (const ResourceError& e) {
      out.failures.push_back({"", "budget: " + std::string(e.what()) + " in trial " + std::to_string(i)});
    } catch (const InvariantViolation& e) {
      out.failures.push_back({e.instance(), "engine invariant violated: " + std::string(e.what())});
    }
    return out;
  });
  for (auto& o : outcomes) {
    report.checks += o.checks;
    report.witnesses += o.witnesses;
    for (auto& f : o.failures) report.failures.push_back(std::move(f));
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

std::optional<Sample> sample_up_to(FieldTower field, int n, std::size_t bound, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Sample s = sample_in_ideal(field, n, rng);
    if (!s.form.empty() && s.form.dim() <= bound) return s;
  }
  return std::nullopt;
}

// A scaled (n+1)-fold Pfister form: either random, or one that trades a
// summand x pi of the sample for x b pi.
PfisterWitness congruence_shift(const Sample& s, int n, Rng& rng) {
  const FieldTower field = s.form.field();
  if (s.summands.empty() || rng.coin()) {
    return PfisterWitness{rng.any_class(field), rng.pfister_spec(field, n + 1)};
  }
  const auto& pick = s.summands[rng.below(s.summands.size())];
  PfisterSpec spec = pick.slots;
  spec.slots.push_back(rng.any_class(field));
  return PfisterWitness{class_of_minus_one(field) * pick.scalar, spec};
}

void check_similar_pair(const Form& f, const Form& g, int n, TrialOutcome& out) {
  ++out.checks;
  if (!congruent_mod_In(f, g, n + 1)) {
    out.fail(f, "partner " + format_form(g) + " is not congruent mod I^" + std::to_string(n + 1));
    return;
  }
  if (similar(f, g)) {
    ++out.witnesses;
  } else {
    out.fail(f, "not similar to congruent partner " + format_form(g));
  }
}

}  // namespace

CampaignReport sim_campaign(FieldTower field, int n, std::int64_t trials, std::uint64_t seed) {
  if (n < 1) throw ValidationError("sim_campaign: n must be positive");
  const std::size_t bound = ga_dim(n);
  return run_campaign(field, n, trials, seed, [=](Rng& rng, TrialOutcome& out) {
    auto s = sample_up_to(field, n, bound, rng);
    if (!s) return;
    PfisterWitness shift = congruence_shift(*s, n, rng);
    Form g = (WittVector::of(s->form) + WittVector::of(shift.form())).anisotropic_form();
    if (g.empty() || g.dim() > bound) return;
    check_similar_pair(s->form, g, n, out);
  });
}

CampaignReport going_down_check(FieldTower field, int n, std::int64_t trials, std::uint64_t seed) {
  if (field.height() == 0) throw ValidationError("going_down_check: tower has no residue field");
  if (n < 2) throw ValidationError("going_down_check: n must be at least 2");
  const FieldTower residue = field.residue();
  const std::size_t d = ga_dim(n);
  const SquareClass t = outer_uniformizer(field);
  const Form pfister_t(field, {SquareClass::one(field).mask(), (class_of_minus_one(field) * t).mask()});

  return run_campaign(field, n, trials, seed, [=](Rng& rng, TrialOutcome& out) {
    // GA_n(K, d) = I^n(K, d) descends to the residue field: the first
    // residues of a K-level pair decompose the residue form.
    if (auto s = sample_with_diman(residue, n, d, rng, 40)) {
      const Form phi = lift(s->form, field, 0);
      PfisterNumber up = pfister_number(phi, n, 2);
      out.checks += 2;
      if (up.value != 2) {
        out.fail(phi, "lift has no K-level generalised Albert witness");
      } else {
        WittVector sum(residue);
        for (const auto& w : up.summands) sum += WittVector::of(residue_split(w.form()).first);
        PfisterNumber down = pfister_number(s->form, n, 2);
        if (!(sum == WittVector::of(s->form))) {
          out.fail(s->form, "first residues of the K-level pair do not add up to the residue form");
        } else if (down.value != 2) {
          out.fail(s->form, "residue form is not a generalised Albert form");
        } else {
          ++out.witnesses;
        }
      }
    }

    // <<t>> (x) lift(psi) has the same Pfister number one level up.
    if (auto s = sample_with_diman(residue, n - 1, d / 2, rng, 40)) {
      const Form phi = tensor(pfister_t, lift(s->form, field, 0));
      ++out.checks;
      if (phi.dim() != d || is_isotropic(phi) || !in_In(phi, n).member) {
        out.fail(phi, "<<t>> (x) lift is not an anisotropic I^n form of dimension d");
      } else {
        PfisterNumber up = pfister_number(phi, n, 3);
        PfisterNumber down = pfister_number(s->form, n - 1, 3);
        if (up.value != down.value) {
          out.fail(s->form, "Pfister numbers of psi and <<t>> (x) psi differ");
        } else if (down.value != 2) {
          out.fail(s->form, "residue form is not a generalised Albert form of degree n-1");
        } else {
          ++out.witnesses;
        }
      }
    }

    // Sim(n) over K transports to Sim(n-1) over the residue field through
    // alpha = psi _|_ t psi.
    if (auto s = sample_with_diman(residue, n - 1, d / 2, rng, 40)) {
      PfisterWitness shift = congruence_shift(*s, n - 1, rng);
      Form partner = (WittVector::of(s->form) + WittVector::of(shift.form())).anisotropic_form();
      if (partner.dim() == d / 2) {
        const Form a1 = tensor(Form(field, {0u, t.mask()}), lift(s->form, field, 0));
        const Form a2 = tensor(Form(field, {0u, t.mask()}), lift(partner, field, 0));
        ++out.checks;
        if (!congruent_mod_In(a1, a2, n + 1)) {
          out.fail(a1, "psi _|_ t psi pair is not congruent mod I^(n+1)");
        } else if (!similar(a1, a2)) {
          out.fail(a1, "K-level pair is not similar");
        } else if (!similar(s->form, partner)) {
          out.fail(s->form, "residue pair is not similar although the K-level pair is");
        } else {
          ++out.witnesses;
        }
      }
    }
  });
}

CampaignReport going_up_campaign(FieldTower field, int n, std::int64_t trials, std::uint64_t seed) {
  if (field.height() == 0) throw ValidationError("going_up_campaign: tower has no uniformizer");
  if (n < 2) throw ValidationError("going_up_campaign: n must be at least 2");
  return run_campaign(field, n, trials, seed, [=](Rng& rng, TrialOutcome& out) {
    auto s = sample_with_diman(field, n, ga_dim(n), rng);
    if (!s) return;
    ++out.checks;
    GAUpWitness w = ga_up_witness(s->form, n);
    (void)w;
    ++out.witnesses;
  });
}

CampaignReport ga_survey(FieldTower field, int n, std::int64_t trials, std::uint64_t seed) {
  if (n < 2) throw ValidationError("ga_survey: n must be at least 2");
  return run_campaign(field, n, trials, seed, [=](Rng& rng, TrialOutcome& out) {
    auto s = sample_with_diman(field, n, ga_dim(n), rng);
    if (!s) return;
    ++out.checks;
    GAClassification c = ga_classify(s->form, n);
    if (!c.consistent()) {
      out.fail(s->form, "characterisations disagree");
    } else if (!c.all()) {
      out.fail(s->form, "not a generalised Albert form");
    } else if (auto problem = verify_classification(c, s->form); !problem.empty()) {
      out.fail(s->form, problem);
    } else {
      out.witnesses += 5;
    }
  });
}

}  // namespace wittlab
