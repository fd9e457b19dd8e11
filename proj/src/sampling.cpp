#include "wittlab/sampling.hpp"

namespace wittlab {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t trial) : engine_(splitmix64(seed ^ splitmix64(trial))) {}

SquareClass Rng::any_class(FieldTower field) {
  return SquareClass(field, static_cast<std::uint32_t>(below(field.num_classes())));
}

PfisterSpec Rng::pfister_spec(FieldTower field, int n) {
  PfisterSpec spec{field, {}};
  for (int i = 0; i < n; ++i) spec.slots.push_back(any_class(field));
  return spec;
}

namespace {

PfisterSpec lift_spec(const PfisterSpec& spec, FieldTower field) {
  PfisterSpec out{field, {}};
  for (auto a : spec.slots) out.slots.push_back(lift_class(a, field, 0));
  return out;
}

PfisterWitness random_summand(FieldTower field, int n, Rng& rng) {
  const int strategy = field.height() > 0 ? static_cast<int>(rng.below(3)) : 0;
  SquareClass scalar = rng.any_class(field);
  if (strategy == 1) {
    // Unimodular lift; the scalar carries the twist.
    return PfisterWitness{scalar, lift_spec(rng.pfister_spec(field.residue(), n), field)};
  }
  if (strategy == 2 && n >= 1) {
    PfisterSpec spec = lift_spec(rng.pfister_spec(field.residue(), n - 1), field);
    SquareClass unit = lift_class(rng.any_class(field.residue()), field, 0);
    spec.slots.push_back(unit * SquareClass::uniformizer(field, field.height()));
    return PfisterWitness{scalar, spec};
  }
  return PfisterWitness{scalar, rng.pfister_spec(field, n)};
}

}  // namespace

Sample sample_in_ideal(FieldTower field, int n, Rng& rng, int max_summands) {
  const int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_summands)));
  Sample s{Form(field), {}};
  WittVector acc(field);
  for (int i = 0; i < count; ++i) {
    s.summands.push_back(random_summand(field, n, rng));
    acc += WittVector::of(s.summands.back().form());
  }
  s.form = acc.anisotropic_form();
  return s;
}

std::optional<Sample> sample_with_diman(FieldTower field, int n, std::size_t d, Rng& rng,
                                        int attempts) {
  for (int i = 0; i < attempts; ++i) {
    Sample s = sample_in_ideal(field, n, rng);
    if (s.form.dim() == d) return s;
  }
  return std::nullopt;
}

Form random_form(FieldTower field, std::size_t dim, Rng& rng) {
  Form f(field);
  for (std::size_t i = 0; i < dim; ++i) f.push_back(rng.any_class(field));
  return f;
}

}  // namespace wittlab
