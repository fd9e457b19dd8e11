#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wittlab/square_class.hpp"

namespace wittlab {

/// A diagonal nondegenerate quadratic form <a_1, ..., a_d>. The diagonal is
/// kept as written; isometry is decided by the witt engine, never here.
class Form {
 public:
  explicit Form(FieldTower field) : field_(field) {}
  Form(FieldTower field, std::vector<SquareClass> diag);
  Form(FieldTower field, std::initializer_list<std::uint32_t> masks);

  FieldTower field() const { return field_; }
  std::size_t dim() const { return diag_.size(); }
  bool empty() const { return diag_.empty(); }
  const std::vector<SquareClass>& diag() const { return diag_; }
  SquareClass operator[](std::size_t i) const { return diag_[i]; }

  void push_back(SquareClass c);

  friend bool operator==(const Form& a, const Form& b) {
    return a.field_ == b.field_ && a.diag_ == b.diag_;
  }

 private:
  FieldTower field_;
  std::vector<SquareClass> diag_;
};

/// Slots a_1..a_n of <<a_1, ..., a_n>> = <1,-a_1> (x) ... (x) <1,-a_n>.
struct PfisterSpec {
  FieldTower field;
  std::vector<SquareClass> slots;

  std::size_t fold() const { return slots.size(); }
  friend bool operator==(const PfisterSpec&, const PfisterSpec&) = default;
};

Form perp(const Form& f, const Form& g);
Form tensor(const Form& f, const Form& g);
Form scale(SquareClass c, const Form& f);
Form negate(const Form& f);
/// k copies of f.
Form repeat(std::size_t k, const Form& f);
Form hyperbolic_plane(FieldTower field);

Form pfister(const PfisterSpec& spec);

SquareClass det(const Form& f);
/// (-1)^(d(d-1)/2) * det.
SquareClass disc(const Form& f);

/// f = f1 _|_ t f2 for the outermost uniformizer t; f1, f2 over the residue tower.
struct ResidueSplit {
  Form first;
  Form second;
};
ResidueSplit residue_split(const Form& f);
Form lift(const Form& residue_form, FieldTower field, int twist);

/// `<a,b,...>`; the zero form prints as `<>`.
std::string format_form(const Form& f);
std::string format_pfister(const PfisterSpec& spec);

}  // namespace wittlab
