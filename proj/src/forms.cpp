#include "wittlab/forms.hpp"

#include "wittlab/errors.hpp"

namespace wittlab {

namespace {

void require_same(FieldTower a, FieldTower b, const char* op) {
  if (!(a == b)) {
    throw ValidationError(std::string(op) + ": forms over different towers " + a.descriptor() +
                          " and " + b.descriptor());
  }
}

}  // namespace

Form::Form(FieldTower field, std::vector<SquareClass> diag) : field_(field), diag_(std::move(diag)) {
  for (auto c : diag_) require_same(field_, c.field(), "form");
}

Form::Form(FieldTower field, std::initializer_list<std::uint32_t> masks) : field_(field) {
  diag_.reserve(masks.size());
  for (auto m : masks) diag_.emplace_back(field, m);
}

void Form::push_back(SquareClass c) {
  require_same(field_, c.field(), "form");
  diag_.push_back(c);
}

Form perp(const Form& f, const Form& g) {
  require_same(f.field(), g.field(), "perp");
  std::vector<SquareClass> d = f.diag();
  d.insert(d.end(), g.diag().begin(), g.diag().end());
  return Form(f.field(), std::move(d));
}

Form tensor(const Form& f, const Form& g) {
  require_same(f.field(), g.field(), "tensor");
  std::vector<SquareClass> d;
  d.reserve(f.dim() * g.dim());
  for (auto a : f.diag()) {
    for (auto b : g.diag()) d.push_back(a * b);
  }
  return Form(f.field(), std::move(d));
}

Form scale(SquareClass c, const Form& f) {
  require_same(c.field(), f.field(), "scale");
  std::vector<SquareClass> d;
  d.reserve(f.dim());
  for (auto a : f.diag()) d.push_back(c * a);
  return Form(f.field(), std::move(d));
}

Form negate(const Form& f) { return scale(class_of_minus_one(f.field()), f); }

Form repeat(std::size_t k, const Form& f) {
  Form out(f.field());
  for (std::size_t i = 0; i < k; ++i) out = perp(out, f);
  return out;
}

Form hyperbolic_plane(FieldTower field) {
  return Form(field, {SquareClass::one(field), class_of_minus_one(field)});
}

Form pfister(const PfisterSpec& spec) {
  Form out(spec.field, {SquareClass::one(spec.field)});
  SquareClass minus_one = class_of_minus_one(spec.field);
  for (auto a : spec.slots) {
    out = tensor(Form(spec.field, {SquareClass::one(spec.field), minus_one * a}), out);
  }
  return out;
}

SquareClass det(const Form& f) {
  SquareClass d = SquareClass::one(f.field());
  for (auto a : f.diag()) d = d * a;
  return d;
}

SquareClass disc(const Form& f) {
  std::size_t d = f.dim();
  SquareClass out = det(f);
  if (d > 0 && (d * (d - 1) / 2) % 2 == 1) out = out * class_of_minus_one(f.field());
  return out;
}

ResidueSplit residue_split(const Form& f) {
  FieldTower residue = f.field().residue();
  ResidueSplit out{Form(residue), Form(residue)};
  for (auto a : f.diag()) {
    auto [unit, t_exp] = split_class(a);
    (t_exp ? out.second : out.first).push_back(unit);
  }
  return out;
}

Form lift(const Form& residue_form, FieldTower field, int twist) {
  Form out(field);
  for (auto a : residue_form.diag()) out.push_back(lift_class(a, field, twist));
  if (residue_form.empty() && !(field.residue() == residue_form.field())) {
    throw ValidationError("cannot lift a form over " + residue_form.field().descriptor() + " to " +
                          field.descriptor());
  }
  return out;
}

std::string format_form(const Form& f) {
  std::string out = "<";
  for (std::size_t i = 0; i < f.dim(); ++i) {
    if (i) out += ',';
    out += format_class(f[i]);
  }
  return out + ">";
}

std::string format_pfister(const PfisterSpec& spec) {
  std::string out = "<<";
  for (std::size_t i = 0; i < spec.slots.size(); ++i) {
    if (i) out += ',';
    out += format_class(spec.slots[i]);
  }
  return out + ">>";
}

}  // namespace wittlab
