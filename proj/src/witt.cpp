#include "wittlab/witt.hpp"

#include <cstdlib>

#include "wittlab/errors.hpp"

namespace wittlab {

namespace {

enum class BaseRing { Z2, Z, Z4, Z2xZ2 };

BaseRing base_ring(FieldTower k) {
  switch (k.base()) {
    case BaseKind::QuadClosed: return BaseRing::Z2;
    case BaseKind::RealClosed: return BaseRing::Z;
    case BaseKind::FiniteOdd: return k.minus_one_is_square() ? BaseRing::Z2xZ2 : BaseRing::Z4;
  }
  return BaseRing::Z2;
}

std::int32_t mod(std::int32_t a, std::int32_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

std::uint32_t reverse_bits(std::uint32_t x, int bits) {
  std::uint32_t r = 0;
  for (int i = 0; i < bits; ++i) {
    r = (r << 1) | (x & 1u);
    x >>= 1;
  }
  return r;
}

void require_same(FieldTower a, FieldTower b, const char* op) {
  if (!(a == b)) {
    throw ValidationError(std::string(op) + ": different towers " + a.descriptor() + " and " +
                          b.descriptor());
  }
}

}  // namespace

WittVector::WittVector(FieldTower field) : field_(field), c_(field.num_classes(), 0) {}

WittVector WittVector::of(const Form& f) {
  WittVector v(f.field());
  for (auto a : f.diag()) ++v.c_[a.mask()];
  v.normalize();
  return v;
}

WittVector WittVector::of(SquareClass c) {
  WittVector v(c.field());
  v.c_[c.mask()] = 1;
  return v;
}

void WittVector::normalize() {
  const std::uint32_t exps = 1u << field_.height();
  const std::uint32_t base = field_.base_classes() == 2 ? exps : 0u;
  switch (base_ring(field_)) {
    case BaseRing::Z2:
      for (std::uint32_t e = 0; e < exps; ++e) c_[e] = mod(c_[e], 2);
      break;
    case BaseRing::Z:
      for (std::uint32_t e = 0; e < exps; ++e) {
        c_[e] -= c_[e | base];
        c_[e | base] = 0;
      }
      break;
    case BaseRing::Z4:
      for (std::uint32_t e = 0; e < exps; ++e) {
        c_[e] = mod(c_[e] - c_[e | base], 4);
        c_[e | base] = 0;
      }
      break;
    case BaseRing::Z2xZ2:
      for (auto& x : c_) x = mod(x, 2);
      break;
  }
}

bool WittVector::is_zero() const {
  for (auto x : c_) {
    if (x != 0) return false;
  }
  return true;
}

int WittVector::diman() const {
  const std::uint32_t exps = 1u << field_.height();
  int d = 0;
  switch (base_ring(field_)) {
    case BaseRing::Z2:
      for (std::uint32_t e = 0; e < exps; ++e) d += c_[e];
      break;
    case BaseRing::Z:
      for (std::uint32_t e = 0; e < exps; ++e) d += std::abs(c_[e]);
      break;
    case BaseRing::Z4: {
      static constexpr int dims[4] = {0, 1, 2, 1};
      for (std::uint32_t e = 0; e < exps; ++e) d += dims[c_[e]];
      break;
    }
    case BaseRing::Z2xZ2:
      for (auto x : c_) d += x;
      break;
  }
  return d;
}

WittVector& WittVector::operator+=(const WittVector& o) {
  require_same(field_, o.field_, "witt sum");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

WittVector& WittVector::operator-=(const WittVector& o) {
  require_same(field_, o.field_, "witt difference");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

WittVector WittVector::operator-() const {
  WittVector v(field_);
  for (std::size_t i = 0; i < c_.size(); ++i) v.c_[i] = -c_[i];
  v.normalize();
  return v;
}

WittVector operator*(const WittVector& a, const WittVector& b) {
  require_same(a.field_, b.field_, "witt product");
  WittVector v(a.field_);
  const auto n = static_cast<std::uint32_t>(a.c_.size());
  for (std::uint32_t i = 0; i < n; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::uint32_t j = 0; j < n; ++j) {
      if (b.c_[j] != 0) v.c_[i ^ j] += a.c_[i] * b.c_[j];
    }
  }
  v.normalize();
  return v;
}

WittVector WittVector::scaled(SquareClass x) const {
  require_same(field_, x.field(), "witt scaling");
  WittVector v(field_);
  const auto n = static_cast<std::uint32_t>(c_.size());
  for (std::uint32_t m = 0; m < n; ++m) v.c_[m ^ x.mask()] += c_[m];
  v.normalize();
  return v;
}

Form WittVector::anisotropic_form() const {
  const int k = field_.height();
  const std::uint32_t exps = 1u << k;
  const std::uint32_t base = field_.base_classes() == 2 ? exps : 0u;
  const BaseRing ring = base_ring(field_);
  Form out(field_);
  auto put = [&](std::uint32_t m) { out.push_back(SquareClass(field_, m)); };
  // Unimodular part first, then t times the second residue, recursively.
  for (std::uint32_t idx = 0; idx < exps; ++idx) {
    std::uint32_t e = reverse_bits(idx, k);
    std::int32_t lo = c_[e];
    switch (ring) {
      case BaseRing::Z2:
        if (lo) put(e);
        break;
      case BaseRing::Z:
        for (std::int32_t i = 0; i < std::abs(lo); ++i) put(lo > 0 ? e : (e | base));
        break;
      case BaseRing::Z4:
        if (lo == 1) put(e);
        if (lo == 2) {
          put(e);
          put(e);
        }
        if (lo == 3) put(e | base);
        break;
      case BaseRing::Z2xZ2:
        if (lo) put(e);
        if (c_[e | base]) put(e | base);
        break;
    }
  }
  return out;
}

std::pair<WittVector, WittVector> WittVector::residues() const {
  FieldTower residue = field_.residue();
  std::pair<WittVector, WittVector> out{WittVector(residue), WittVector(residue)};
  for (std::uint32_t m = 0; m < c_.size(); ++m) {
    ((m & 1u) ? out.second : out.first).c_[m >> 1] = c_[m];
  }
  return out;
}

WittVector WittVector::lift(const WittVector& residue, FieldTower field, int twist) {
  require_same(field.residue(), residue.field_, "witt lift");
  WittVector v(field);
  for (std::uint32_t m = 0; m < residue.c_.size(); ++m) {
    v.c_[(m << 1) | (twist ? 1u : 0u)] = residue.c_[m];
  }
  return v;
}

std::size_t WittVector::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto x : c_) {
    h ^= static_cast<std::uint32_t>(x);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

// Springer: over a 2-Henselian discretely valued field, <u_1..> _|_ t<v_1..>
// is anisotropic iff both residue forms are anisotropic.
bool is_isotropic(const Form& f) {
  FieldTower k = f.field();
  if (k.height() > 0) {
    auto [first, second] = residue_split(f);
    return is_isotropic(first) || is_isotropic(second);
  }
  switch (k.base()) {
    case BaseKind::QuadClosed: return f.dim() >= 2;
    case BaseKind::RealClosed: {
      bool pos = false, neg = false;
      for (auto a : f.diag()) (a.base_bit() ? neg : pos) = true;
      return pos && neg;
    }
    case BaseKind::FiniteOdd:
      if (f.dim() >= 3) return true;
      if (f.dim() == 2) return (class_of_minus_one(k) * f[0] * f[1]).is_one();
      return false;
  }
  return false;
}

// an(f1 _|_ t f2) = lift(an f1) _|_ t lift(an f2).
WittClass anisotropic_part(const Form& f) {
  FieldTower k = f.field();
  if (k.height() == 0) return WittClass{WittVector::of(f).anisotropic_form()};
  auto [first, second] = residue_split(f);
  Form unimodular = lift(anisotropic_part(first).form, k, 0);
  Form twisted = lift(anisotropic_part(second).form, k, 1);
  return WittClass{perp(unimodular, twisted)};
}

std::size_t diman(const Form& f) { return static_cast<std::size_t>(WittVector::of(f).diman()); }

std::size_t witt_index(const Form& f) { return (f.dim() - diman(f)) / 2; }

bool is_anisotropic(const Form& f) { return !is_isotropic(f); }

bool is_hyperbolic(const Form& f) { return WittVector::of(f).is_zero(); }

bool witt_equal(const Form& f, const Form& g) {
  require_same(f.field(), g.field(), "witt_equal");
  return anisotropic_part(perp(f, negate(g))).is_zero();
}

bool isometric(const Form& f, const Form& g) { return f.dim() == g.dim() && witt_equal(f, g); }

bool represents(const Form& f, SquareClass a) {
  if (f.empty()) throw ValidationError("represents: zero-dimensional form");
  if (is_isotropic(f)) return true;
  return is_isotropic(perp(f, Form(f.field(), {(class_of_minus_one(f.field()) * a).mask()})));
}

bool is_subform(const Form& s, const Form& f) {
  require_same(s.field(), f.field(), "is_subform");
  if (is_isotropic(s) || is_isotropic(f)) {
    throw ValidationError("is_subform expects anisotropic forms, got " + format_form(s) + " and " +
                          format_form(f));
  }
  if (s.dim() > f.dim()) return false;
  return witt_index(perp(f, negate(s))) == s.dim();
}

std::optional<SquareClass> similar(const Form& f, const Form& g) {
  require_same(f.field(), g.field(), "similar");
  if (f.dim() != g.dim()) return std::nullopt;
  const WittVector vf = WittVector::of(f);
  const WittVector vg = WittVector::of(g);
  for (auto x : enumerate_classes(f.field())) {
    if (vg.scaled(x) == vf) return x;
  }
  return std::nullopt;
}

}  // namespace wittlab
