#include "wittlab/ideals.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>

#include "wittlab/errors.hpp"
#include "wittlab/search.hpp"

namespace wittlab {

namespace {

struct BaseVerdict {
  bool member;
  const char* rule;
};

BaseVerdict base_rule(const Form& f, int n) {
  const bool even = f.dim() % 2 == 0;
  switch (f.field().base()) {
    case BaseKind::QuadClosed:
      if (n == 1) return {even, "C: I^1 iff dim even"};
      return {is_hyperbolic(f), "C: I^n (n>=2) iff Witt-trivial"};
    case BaseKind::RealClosed: {
      long long signature = 0;
      for (auto a : f.diag()) signature += a.base_bit() ? -1 : 1;
      bool member = n >= 62 ? signature == 0 : signature % (1LL << n) == 0;
      return {member, "R: signature divisible by 2^n"};
    }
    case BaseKind::FiniteOdd:
      if (n == 1) return {even, "F_q: I^1 iff dim even"};
      if (n == 2) return {even && disc(f).is_one(), "F_q: I^2 iff dim even and disc trivial"};
      return {is_hyperbolic(f), "F_q: I^n (n>=3) iff Witt-trivial"};
  }
  return {false, "unknown base"};
}

constexpr const char* kZeroRule = "n=0: W = I^0";
constexpr const char* kResidueRule = "residues";

std::size_t pow2(int n) { return std::size_t{1} << n; }

}  // namespace

// For f = f1 _|_ t f2 over a 2-Henselian field,
//   [f] = lift([f1] - [f2]) + <1,t> (x) lift([f2]).
// The split exact sequence 0 -> I^n(F) -> I^n(K) -> I^(n-1)(F) -> 0 then
// gives: [f] in I^n(K) iff [f2] in I^(n-1)(F) and [f1] - [f2] in I^n(F).
// Necessity also yields [f1] in I^(n-1)(F); it is kept as a redundant check.
IdealCert in_In(const Form& f, int n) {
  if (n < 0) throw ValidationError("in_In: n must be nonnegative");
  if (n == 0) return IdealCert{0, true, kZeroRule, f, {}};
  if (f.field().height() == 0) {
    auto verdict = base_rule(f, n);
    return IdealCert{n, verdict.member, verdict.rule, f, {}};
  }
  auto [first, second] = residue_split(f);
  IdealCert cert{n, false, kResidueRule, f, {}};
  cert.children.push_back(in_In(second, n - 1));
  cert.children.push_back(in_In(first, n - 1));
  cert.children.push_back(in_In(perp(first, negate(second)), n));
  cert.member = std::all_of(cert.children.begin(), cert.children.end(),
                            [](const IdealCert& c) { return c.member; });
  return cert;
}

bool replay(const IdealCert& cert) {
  if (cert.rule == kZeroRule) return cert.n == 0 && cert.member && cert.children.empty();
  if (cert.rule == kResidueRule) {
    if (cert.subject.field().height() == 0 || cert.children.size() != 3) return false;
    auto [first, second] = residue_split(cert.subject);
    const Form expected[3] = {second, first, perp(first, negate(second))};
    const int levels[3] = {cert.n - 1, cert.n - 1, cert.n};
    bool member = true;
    for (int i = 0; i < 3; ++i) {
      const auto& child = cert.children[i];
      if (!(child.subject == expected[i]) || child.n != levels[i] || !replay(child)) return false;
      member = member && child.member;
    }
    return member == cert.member;
  }
  if (cert.subject.field().height() != 0 || cert.n < 1) return false;
  auto verdict = base_rule(cert.subject, cert.n);
  return cert.rule == verdict.rule && cert.member == verdict.member;
}

bool in_ideal(const WittVector& v, int n) {
  if (n < 0) throw ValidationError("in_ideal: n must be nonnegative");
  if (n == 0) return true;
  if (v.field().height() == 0) return base_rule(v.anisotropic_form(), n).member;
  auto [first, second] = v.residues();
  return in_ideal(second, n - 1) && in_ideal(first, n - 1) && in_ideal(first - second, n);
}

bool is_gp_n(const Form& f, int n) {
  if (n < 0 || n > 30 || f.dim() != pow2(n)) return false;
  WittVector v = WittVector::of(f);
  if (v.is_zero()) return true;
  return static_cast<std::size_t>(v.diman()) == f.dim() && in_ideal(v, n);
}

std::optional<int> anisotropic_pfister_fold(const Form& f) {
  std::size_t d = f.dim();
  if (d == 0 || (d & (d - 1)) != 0) return std::nullopt;
  int n = 0;
  while (pow2(n) < d) ++n;
  if (!is_gp_n(f, n) || is_isotropic(f) || !represents(f, SquareClass::one(f.field()))) {
    return std::nullopt;
  }
  return n;
}

PfisterCatalog::PfisterCatalog(FieldTower field, int n) : field_(field), n_(n) {
  if (n < 0) throw ValidationError("Pfister fold must be nonnegative");
  const auto classes = static_cast<std::size_t>(field.num_classes());
  double tuples = 1;
  for (int i = 0; i < n; ++i) tuples *= static_cast<double>(classes);
  if (tuples > double(1 << 26)) {
    throw ResourceError("enumerating " + std::to_string(n) + "-fold Pfister forms over " +
                        field.descriptor() + " exceeds the enumeration budget");
  }

  const auto all = enumerate_classes(field);
  std::vector<SquareClass> slots;
  // Slots are chosen nondecreasing; the product does not depend on their order.
  auto walk = [&](auto&& self, std::size_t start, const WittVector& acc) -> void {
    if (slots.size() == static_cast<std::size_t>(n)) {
      check_budget();
      if (index_.count(acc)) return;
      index_.emplace(acc, entries_.size());
      entries_.push_back(PfisterEntry{PfisterSpec{field, slots}, WittClass{acc.anisotropic_form()},
                                      acc, static_cast<std::size_t>(acc.diman()) == pow2(n)});
      return;
    }
    for (std::size_t i = start; i < classes; ++i) {
      slots.push_back(all[i]);
      self(self, i, acc - acc.scaled(all[i]));
      slots.pop_back();
    }
  };
  walk(walk, 0, WittVector::of(SquareClass::one(field)));
}

std::optional<std::size_t> PfisterCatalog::find(const WittVector& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

template <class Catalog>
std::shared_ptr<const Catalog> cached(FieldTower field, int n) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, int>, std::shared_ptr<const Catalog>> cache;
  std::lock_guard lock(mutex);
  auto key = std::pair{field.descriptor(), n};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto catalog = std::make_shared<const Catalog>(field, n);
  cache.emplace(key, catalog);
  return catalog;
}

}  // namespace

std::shared_ptr<const PfisterCatalog> pfister_catalog(FieldTower field, int n) {
  return cached<PfisterCatalog>(field, n);
}

std::vector<PfisterEntry> enumerate_pfister(FieldTower field, int n) {
  return pfister_catalog(field, n)->entries();
}

GPCatalog::GPCatalog(FieldTower field, int n) : pfisters_(pfister_catalog(field, n)) {
  const auto& entries = pfisters_->entries();
  for (auto x : enumerate_classes(field)) {
    for (std::size_t p = 0; p < entries.size(); ++p) {
      if (!entries[p].anisotropic) continue;
      WittVector v = entries[p].vec.scaled(x);
      if (index_.count(v)) continue;
      index_.emplace(v, members_.size());
      members_.push_back(Member{x, p, std::move(v)});
    }
  }
}

PfisterWitness GPCatalog::witness(std::size_t i) const {
  const auto& m = members_.at(i);
  return PfisterWitness{m.scalar, pfisters_->entries()[m.pfister].spec};
}

std::optional<std::size_t> GPCatalog::find(const WittVector& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::shared_ptr<const GPCatalog> gp_catalog(FieldTower field, int n) {
  return cached<GPCatalog>(field, n);
}

namespace {

// Is target a sum of k catalog members with indices >= start? Summands are
// taken in nondecreasing index order, so each multiset is visited once.
bool sum_of(const GPCatalog& gp, const WittVector& target, int k, std::size_t start,
            std::size_t block, std::vector<std::size_t>& path) {
  check_budget();
  if (static_cast<std::size_t>(target.diman()) > static_cast<std::size_t>(k) * block) return false;
  if (k == 1) {
    auto idx = gp.find(target);
    if (!idx || *idx < start) return false;
    path.push_back(*idx);
    return true;
  }
  for (std::size_t i = start; i < gp.size(); ++i) {
    if (sum_of(gp, target - gp.vec(i), k - 1, i, block, path)) {
      path.push_back(i);
      return true;
    }
  }
  return false;
}

}  // namespace

PfisterNumber pfister_number(const Form& f, int n, int max_k) {
  if (n < 0 || max_k < 0) throw ValidationError("pfister_number: n and max_k must be nonnegative");
  const WittVector target = WittVector::of(f);
  if (!in_ideal(target, n)) {
    throw ValidationError("pfister_number: " + format_form(f) + " is not in I^" + std::to_string(n));
  }
  if (target.is_zero()) return PfisterNumber{0, {}};

  const auto gp = gp_catalog(f.field(), n);
  const std::size_t block = pow2(n);
  for (int k = 1; k <= max_k; ++k) {
    std::vector<std::size_t> path;
    if (k == 1) {
      if (!sum_of(*gp, target, 1, 0, block, path)) continue;
    } else {
      if (static_cast<std::size_t>(target.diman()) > static_cast<std::size_t>(k) * block) continue;
      auto hit = parallel_first<std::vector<std::size_t>>(gp->size(), [&](std::size_t i) {
        std::vector<std::size_t> p;
        if (!sum_of(*gp, target - gp->vec(i), k - 1, i, block, p)) {
          return std::optional<std::vector<std::size_t>>{};
        }
        p.push_back(i);
        return std::optional{std::move(p)};
      });
      if (!hit) continue;
      path = std::move(hit->second);
    }
    std::sort(path.begin(), path.end());
    PfisterNumber out{k, {}};
    for (auto i : path) out.summands.push_back(gp->witness(i));
    return out;
  }
  return PfisterNumber{std::nullopt, {}};
}

Linkage linkage_number(const Form& sigma, const Form& pi, SquareClass a, SquareClass b) {
  auto n = anisotropic_pfister_fold(sigma);
  auto m = anisotropic_pfister_fold(pi);
  if (!n || !m) {
    throw ValidationError("linkage_number expects anisotropic Pfister forms, got " +
                          format_form(sigma) + " and " + format_form(pi));
  }
  if (*m < 1 || *m > *n) {
    throw ValidationError("linkage_number expects 1 <= fold(pi) <= fold(sigma)");
  }
  std::size_t i = witt_index(perp(scale(a, sigma), scale(b, pi)));
  Linkage out{i, std::nullopt};
  if (i == 0) return out;
  if ((i & (i - 1)) != 0) {
    throw InvariantViolation("Witt index of a sum of scaled Pfister forms is not a power of two",
                             format_form(sigma) + " ; " + format_form(pi) + " ; a=" + format_class(a) +
                                 " ; b=" + format_class(b));
  }
  int r = 0;
  while (pow2(r) < i) ++r;
  out.r = r;
  return out;
}

Link find_link(const Form& sigma, const Form& pi, int r) {
  auto n = anisotropic_pfister_fold(sigma);
  auto m = anisotropic_pfister_fold(pi);
  if (!n || !m) {
    throw ValidationError("find_link expects anisotropic Pfister forms, got " + format_form(sigma) +
                          " and " + format_form(pi));
  }
  if (r < 0 || r > std::min(*n, *m)) throw ValidationError("find_link: r out of range");

  FieldTower field = sigma.field();
  const WittVector vs = WittVector::of(sigma);
  const WittVector vp = WittVector::of(pi);
  const auto links = pfister_catalog(field, r);
  const auto sigma_cofactors = pfister_catalog(field, *n - r);
  const auto pi_cofactors = pfister_catalog(field, *m - r);

  auto cofactor = [](const PfisterCatalog& cat, const WittVector& alpha,
                     const WittVector& target) -> const PfisterEntry* {
    for (const auto& e : cat.entries()) {
      if (alpha * e.vec == target) return &e;
    }
    return nullptr;
  };
  for (const auto& alpha : links->entries()) {
    if (!alpha.anisotropic) continue;
    check_budget();
    const PfisterEntry* s1 = cofactor(*sigma_cofactors, alpha.vec, vs);
    if (!s1) continue;
    const PfisterEntry* p1 = cofactor(*pi_cofactors, alpha.vec, vp);
    if (!p1) continue;
    return Link{alpha.spec, s1->spec, p1->spec};
  }
  throw InvariantViolation("no common " + std::to_string(r) + "-fold Pfister divisor found",
                           field.descriptor() + " ; " + format_form(sigma) + " ; " + format_form(pi));
}

namespace {

struct DivState {
  WittVector rem;
  std::size_t start;
  std::size_t depth;
  friend bool operator==(const DivState&, const DivState&) = default;
};

struct DivStateHash {
  std::size_t operator()(const DivState& s) const {
    return s.rem.hash() ^ (s.start * 0x9e3779b97f4a7c15ull) ^ (s.depth << 48);
  }
};

}  // namespace

// Peels x p off the remainder for nondecreasing x; x p fits into a form of
// dimension d and class [r] iff diman([r] - [x p]) <= d - dim p.
std::optional<Form> divides(const Form& p, const Form& f) {
  if (!(p.field() == f.field())) throw ValidationError("divides: forms over different towers");
  if (p.empty()) throw ValidationError("divides: zero-dimensional divisor");
  if (f.dim() % p.dim() != 0) return std::nullopt;

  FieldTower field = f.field();
  const auto classes = enumerate_classes(field);
  std::vector<WittVector> multiples;
  const WittVector vp = WittVector::of(p);
  for (auto x : classes) multiples.push_back(vp.scaled(x));

  const std::size_t steps = f.dim() / p.dim();
  std::unordered_set<DivState, DivStateHash> dead;
  std::vector<SquareClass> chosen;

  auto walk = [&](auto&& self, const WittVector& rem, std::size_t start) -> bool {
    std::size_t depth = chosen.size();
    if (depth == steps) return rem.is_zero();
    check_budget();
    DivState state{rem, start, depth};
    if (dead.count(state)) return false;
    std::size_t room = f.dim() - (depth + 1) * p.dim();
    for (std::size_t i = start; i < classes.size(); ++i) {
      WittVector next = rem - multiples[i];
      if (static_cast<std::size_t>(next.diman()) > room) continue;
      chosen.push_back(classes[i]);
      if (self(self, next, i)) return true;
      chosen.pop_back();
    }
    dead.insert(std::move(state));
    return false;
  };
  if (!walk(walk, WittVector::of(f), 0)) return std::nullopt;
  return Form(field, chosen);
}

}  // namespace wittlab
