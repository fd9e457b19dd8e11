#pragma once

// Seeded structured generators for campaign inputs.
//
// Every trial draws from its own std::mt19937_64 whose seed is
// splitmix64(seed ^ splitmix64(trial)), so a trial's inputs depend only on
// (seed, trial) and never on scheduling. Bounded draws use engine() % bound.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "wittlab/ideals.hpp"

namespace wittlab {

std::uint64_t splitmix64(std::uint64_t x);

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  bool coin() { return below(2) == 1; }
  SquareClass any_class(FieldTower field);
  PfisterSpec pfister_spec(FieldTower field, int n);

 private:
  std::mt19937_64 engine_;
};

/// A form together with the scaled Pfister summands it was built from.
struct Sample {
  Form form;  // anisotropic part of the sum
  std::vector<PfisterWitness> summands;
};

/// Random element of I^n: a sum of 1..max_summands scaled n-fold Pfister
/// forms. Summands are drawn directly over the tower, lifted from the
/// residue field (possibly twisted by t), or built as <<u t>> (x) lift of an
/// (n-1)-fold Pfister form, so both Springer levels get populated.
Sample sample_in_ideal(FieldTower field, int n, Rng& rng, int max_summands = 3);

/// Rejection sampling for anisotropic I^n forms of dimension exactly d.
std::optional<Sample> sample_with_diman(FieldTower field, int n, std::size_t d, Rng& rng,
                                        int attempts = 400);

/// Random form with the given dimension; entries uniform over the classes.
Form random_form(FieldTower field, std::size_t dim, Rng& rng);

}  // namespace wittlab
