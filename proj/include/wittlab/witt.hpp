#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wittlab/forms.hpp"

namespace wittlab {

/// Witt class in W(K) = W(base)[G], G = (Z/2)^k generated by the uniformizers.
///
/// Coefficients are indexed by square-class mask and kept normalized, one
/// base Witt value per exponent vector:
///   C      slot e holds dim mod 2;
///   R      slot e holds the signature, slot e|base is 0;
///   F_q, q = 3 mod 4   slot e holds the value in W(F_q) = Z/4 (<1> -> 1, <s> -> 3);
///   F_q, q = 1 mod 4   slots e and e|base hold the counts of <1> and <s> mod 2.
/// Normalization is a ring homomorphism Z[K*/K*^2] -> W(K), so sums and
/// products may be formed on raw coefficients and normalized afterwards.
class WittVector {
 public:
  explicit WittVector(FieldTower field);
  static WittVector of(const Form& f);
  static WittVector of(SquareClass c);

  FieldTower field() const { return field_; }
  const std::vector<std::int32_t>& coeffs() const { return c_; }

  bool is_zero() const;
  int diman() const;

  WittVector& operator+=(const WittVector& o);
  WittVector& operator-=(const WittVector& o);
  friend WittVector operator+(WittVector a, const WittVector& b) { return a += b; }
  friend WittVector operator-(WittVector a, const WittVector& b) { return a -= b; }
  WittVector operator-() const;
  /// Tensor product.
  friend WittVector operator*(const WittVector& a, const WittVector& b);
  WittVector scaled(SquareClass x) const;

  /// Canonical diagonal of the anisotropic representative.
  Form anisotropic_form() const;

  /// First and second residue classes over the residue tower.
  std::pair<WittVector, WittVector> residues() const;
  static WittVector lift(const WittVector& residue, FieldTower field, int twist);

  std::size_t hash() const;
  friend bool operator==(const WittVector& a, const WittVector& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  void normalize();

  FieldTower field_;
  std::vector<std::int32_t> c_;
};

struct WittVectorHash {
  std::size_t operator()(const WittVector& v) const { return v.hash(); }
};

/// The canonical anisotropic representative of [f]. Two values compare equal
/// iff the Witt classes agree.
struct WittClass {
  Form form;

  FieldTower field() const { return form.field(); }
  std::size_t diman() const { return form.dim(); }
  bool is_zero() const { return form.empty(); }
  friend bool operator==(const WittClass&, const WittClass&) = default;
};

bool is_isotropic(const Form& f);
WittClass anisotropic_part(const Form& f);
std::size_t diman(const Form& f);
std::size_t witt_index(const Form& f);
bool is_anisotropic(const Form& f);
bool is_hyperbolic(const Form& f);

bool witt_equal(const Form& f, const Form& g);
bool isometric(const Form& f, const Form& g);
bool represents(const Form& f, SquareClass a);
/// Both inputs must be anisotropic.
bool is_subform(const Form& s, const Form& f);
/// First x in enumeration order with f = x g, if any.
std::optional<SquareClass> similar(const Form& f, const Form& g);

}  // namespace wittlab
