#pragma once

// Powers of the fundamental ideal, Pfister forms and Pfister numbers.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wittlab/forms.hpp"
#include "wittlab/witt.hpp"

namespace wittlab {

/// Membership of [subject] in I^n with the rule that decided it. Recursion
/// nodes carry three children: second residue in I^(n-1), first residue in
/// I^(n-1), and their difference in I^n.
struct IdealCert {
  int n = 0;
  bool member = false;
  std::string rule;
  Form subject;
  std::vector<IdealCert> children;
};

IdealCert in_In(const Form& f, int n);
/// Re-evaluates every node of the trace; true iff it reproduces all verdicts.
bool replay(const IdealCert& cert);
/// Same decision on a Witt vector, without the trace.
bool in_ideal(const WittVector& v, int n);

/// f is similar to an n-fold Pfister form (hyperbolic counts).
bool is_gp_n(const Form& f, int n);
/// n if f is isometric to an anisotropic n-fold Pfister form.
std::optional<int> anisotropic_pfister_fold(const Form& f);

struct PfisterEntry {
  PfisterSpec spec;
  WittClass cls;
  WittVector vec;
  bool anisotropic;
};

/// Isometry classes of n-fold Pfister forms over one tower.
class PfisterCatalog {
 public:
  PfisterCatalog(FieldTower field, int n);

  FieldTower field() const { return field_; }
  int fold() const { return n_; }
  const std::vector<PfisterEntry>& entries() const { return entries_; }
  /// Index of the entry with this Witt class, if it is an n-fold Pfister class.
  std::optional<std::size_t> find(const WittVector& v) const;

 private:
  FieldTower field_;
  int n_;
  std::vector<PfisterEntry> entries_;
  std::unordered_map<WittVector, std::size_t, WittVectorHash> index_;
};

/// Shared, cached catalog; safe to call concurrently.
std::shared_ptr<const PfisterCatalog> pfister_catalog(FieldTower field, int n);
std::vector<PfisterEntry> enumerate_pfister(FieldTower field, int n);

/// scalar * <<slots>>.
struct PfisterWitness {
  SquareClass scalar;
  PfisterSpec slots;

  Form form() const { return scale(scalar, pfister(slots)); }
};

/// Nonzero classes of scaled anisotropic n-fold Pfister forms, ordered by
/// (scalar, Pfister entry), first occurrence kept.
class GPCatalog {
 public:
  GPCatalog(FieldTower field, int n);

  const PfisterCatalog& pfisters() const { return *pfisters_; }
  std::size_t size() const { return members_.size(); }
  const WittVector& vec(std::size_t i) const { return members_[i].vec; }
  PfisterWitness witness(std::size_t i) const;
  std::optional<std::size_t> find(const WittVector& v) const;

 private:
  struct Member {
    SquareClass scalar;
    std::size_t pfister;
    WittVector vec;
  };
  std::shared_ptr<const PfisterCatalog> pfisters_;
  std::vector<Member> members_;
  std::unordered_map<WittVector, std::size_t, WittVectorHash> index_;
};

std::shared_ptr<const GPCatalog> gp_catalog(FieldTower field, int n);

/// Exact minimum k <= max_k with [f] a sum of k scaled n-fold Pfister
/// classes; value is empty when the minimum exceeds max_k.
struct PfisterNumber {
  std::optional<int> value;
  std::vector<PfisterWitness> summands;

  bool exceeds() const { return !value.has_value(); }
};
PfisterNumber pfister_number(const Form& f, int n, int max_k);

struct Linkage {
  std::size_t witt_index;
  /// log2 of the Witt index when it is >= 1.
  std::optional<int> r;
};
Linkage linkage_number(const Form& sigma, const Form& pi, SquareClass a, SquareClass b);

/// sigma = alpha (x) sigma1 and pi = alpha (x) pi1 with alpha an r-fold Pfister form.
struct Link {
  PfisterSpec alpha;
  PfisterSpec sigma1;
  PfisterSpec pi1;
};
Link find_link(const Form& sigma, const Form& pi, int r);

/// tau with f = p (x) tau, by complete backtracking; nullopt when dim p
/// does not divide dim f or no such tau exists.
std::optional<Form> divides(const Form& p, const Form& f);

}  // namespace wittlab
