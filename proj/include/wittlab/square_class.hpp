#pragma once

// Field towers F((t_1))...((t_k)) over a finite odd, real closed or
// quadratically closed base, and their finite groups of square classes.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wittlab {

enum class BaseKind { FiniteOdd, RealClosed, QuadClosed };

namespace detail {
struct TowerInfo;
}

/// Interned handle to a field tower. Copies are free; equal towers share a
/// handle, so equality is identity.
class FieldTower {
 public:
  static FieldTower finite_odd(unsigned q, std::vector<std::string> vars = {});
  static FieldTower real_closed(std::vector<std::string> vars = {});
  static FieldTower quad_closed(std::vector<std::string> vars = {});
  static FieldTower make(BaseKind base, unsigned q, std::vector<std::string> vars);

  BaseKind base() const;
  /// Field size for FiniteOdd, 0 otherwise.
  unsigned q() const;
  const std::vector<std::string>& vars() const;
  int height() const;
  /// b in |K*/K*^2| = b * 2^k.
  int base_classes() const;
  int num_classes() const;
  bool minus_one_is_square() const;

  /// Drops the outermost variable.
  FieldTower residue() const;
  /// Adjoins a new outermost variable.
  FieldTower extend(std::string var) const;

  /// 1-based index of a variable, 0 if unknown.
  int var_index(std::string_view name) const;
  std::string descriptor() const;

  friend bool operator==(FieldTower a, FieldTower b) { return a.info_ == b.info_; }

 private:
  explicit FieldTower(const detail::TowerInfo* info) : info_(info) {}
  friend class SquareClass;

  const detail::TowerInfo* info_;
};

/// An element of K*/K*^2.
///
/// Encoded as a bit mask whose integer order is the enumeration order
/// (lexicographic on base bit, then e_1..e_k). The base bit sits at
/// position k, the exponent of t_i at position k - i; the outermost
/// uniformizer is therefore bit 0, and dropping it is a right shift.
class SquareClass {
 public:
  SquareClass(FieldTower field, std::uint32_t mask);

  static SquareClass one(FieldTower field) { return SquareClass(field, 0); }
  /// The base nonsquare: s for FiniteOdd, -1 for RealClosed.
  static SquareClass base_nonsquare(FieldTower field);
  static SquareClass uniformizer(FieldTower field, int index);

  FieldTower field() const { return field_; }
  std::uint32_t mask() const { return mask_; }
  bool base_bit() const;
  /// Exponent of t_index mod 2, index in 1..k.
  bool exponent(int index) const;
  bool is_one() const { return mask_ == 0; }

  SquareClass operator*(SquareClass other) const;

  friend bool operator==(SquareClass a, SquareClass b) {
    return a.field_ == b.field_ && a.mask_ == b.mask_;
  }
  friend std::strong_ordering operator<=>(SquareClass a, SquareClass b) {
    return a.mask_ <=> b.mask_;
  }

 private:
  FieldTower field_;
  std::uint32_t mask_;
};

SquareClass mul(SquareClass a, SquareClass b);
SquareClass class_of_minus_one(FieldTower field);
std::vector<SquareClass> enumerate_classes(FieldTower field);

/// c = lift(unit_part) * t^t_exp for the outermost uniformizer t.
struct ClassSplit {
  SquareClass unit_part;
  int t_exp;
};
ClassSplit split_class(SquareClass c);
SquareClass lift_class(SquareClass residue_class, FieldTower field, int twist);

/// `F<q>[[v1,...,vk]]`, `R[[...]]`, `C[[...]]`; brackets optional for k = 0.
FieldTower parse_field(std::string_view descriptor);
/// Optional `-`, then factors `1 | s | <var>` joined by `*`.
SquareClass parse_class(std::string_view literal, FieldTower field);
std::string format_class(SquareClass c);

}  // namespace wittlab
