#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "prlab/universe.hpp"

namespace prlab {

/// A preradical relative to a universe: one fully invariant submodule per
/// representative, natural with respect to every cached hom.
class Preradical {
 public:
  Preradical() = default;
  /// values[i] indexes u->subs(i). Throws InvalidParameter unless the table is
  /// fully invariant, natural and zero on the zero module.
  Preradical(UniversePtr u, std::vector<std::size_t> values);
  static Preradical from_submodules(UniversePtr u, const std::vector<Submodule>& values);

  const Universe& universe() const { return *u_; }
  const UniversePtr& universe_ptr() const { return u_; }
  const std::vector<std::size_t>& values() const { return values_; }
  const Submodule& value(std::size_t rep) const { return u_->subs(rep)[values_.at(rep)].sub; }

  bool is_torsion(std::size_t rep) const { return value(rep).is_whole(); }
  bool is_torsion_free(std::size_t rep) const { return value(rep).is_zero(); }
  /// sigma(N) for a submodule N of a representative, as a submodule of that representative.
  Submodule at_sub(std::size_t rep, const Submodule& n) const;
  /// Preimage in the representative of sigma(M/N).
  Submodule at_quotient(std::size_t rep, const Submodule& n) const;
  bool is_torsion_sub(std::size_t rep, const Submodule& n) const { return at_sub(rep, n) == n; }
  bool is_torsion_free_quotient(std::size_t rep, const Submodule& n) const { return at_quotient(rep, n) == n; }

  friend bool operator==(const Preradical& a, const Preradical& b) {
    return a.u_ == b.u_ && a.values_ == b.values_;
  }

 private:
  UniversePtr u_;
  std::vector<std::size_t> values_;
};

/// Checks full invariance, naturality on cached homs and sigma(0) = 0.
bool is_natural(const Universe& u, const std::vector<std::size_t>& values);

Preradical zero_preradical(const UniversePtr& u);
Preradical identity_preradical(const UniversePtr& u);
Preradical socle_preradical(const UniversePtr& u);
Preradical jacobson_preradical(const UniversePtr& u);
Preradical singular_preradical(const UniversePtr& u);

/// alpha^M_N(K) = sum of f(N) over f: M -> K. N must be fully invariant in M.
Preradical alpha(const UniversePtr& u, std::size_t m, const Submodule& n);
/// omega^M_N(K) = intersection of f^{-1}(N) over f: K -> M.
Preradical omega(const UniversePtr& u, std::size_t m, const Submodule& n);

bool leq(const Preradical& a, const Preradical& b);
Preradical join(const Preradical& a, const Preradical& b);
Preradical meet(const Preradical& a, const Preradical& b);
Preradical join(const std::vector<Preradical>& family);
Preradical meet(const std::vector<Preradical>& family);
/// (sigma tau)(M) = sigma(tau(M)).
Preradical prod(const Preradical& sigma, const Preradical& tau);
/// (sigma : tau)(M) = preimage of tau(M / sigma(M)).
Preradical coprod(const Preradical& sigma, const Preradical& tau);

/// Greatest idempotent below: sum of the sigma-torsion submodules.
Preradical hat(const Preradical& sigma);
/// Least radical above: intersection of N with M/N sigma-torsion-free.
Preradical bar(const Preradical& sigma);
/// Least left exact above: sigma(E(M)) intersected with M.
Preradical tilde(const Preradical& sigma);
/// Greatest essentially idempotent below.
Preradical circ(const Preradical& sigma);
/// Least prehereditary above.
Preradical square(const Preradical& sigma);

/// Least submodule K >= N of rep M with M/K sigma-torsion-free.
Submodule purification(const Preradical& sigma, std::size_t rep, const Submodule& n);

struct Witness {
  std::size_t rep = kNoRep;
  std::optional<Submodule> sub;
  std::string detail;
};

struct TraitResult {
  bool holds = true;
  std::optional<Witness> witness;
};

struct TraitReport {
  TraitResult idempotent;
  TraitResult radical;
  TraitResult left_exact;
  TraitResult prehereditary;
  TraitResult essentially_idempotent;
  TraitResult essentially_coidempotent;
  TraitResult strongly_nilpotent;
  TraitResult costable;
  TraitResult autocostable;

  std::vector<std::pair<std::string, const TraitResult*>> items() const;
};

TraitReport traits(const Preradical& sigma);

bool is_idempotent(const Preradical& s);
bool is_radical(const Preradical& s);
bool is_left_exact(const Preradical& s);
bool is_prehereditary(const Preradical& s);
bool is_essentially_idempotent(const Preradical& s);
bool is_essentially_coidempotent(const Preradical& s);
bool is_strongly_nilpotent(const Preradical& s);
bool is_costable(const Preradical& s);
bool is_autocostable(const Preradical& s);

/// Every natural table over the universe, in lexicographic order of the
/// fully invariant candidate indices. Throws BudgetExceeded (with the
/// partial count in the message) past `budget` tables.
std::vector<Preradical> enumerate_preradicals(const UniversePtr& u, std::size_t budget = 1000000);

}  // namespace prlab
