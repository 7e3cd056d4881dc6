#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "prlab/element_set.hpp"
#include "prlab/int_matrix.hpp"
#include "prlab/ring.hpp"
#include "prlab/shape.hpp"

namespace prlab {

class FinModule;
using ModulePtr = std::shared_ptr<const FinModule>;

/// Default cap on module cardinality.
inline constexpr std::size_t kDefaultMaxModuleSize = 4096;

/// A finite unitary left module: an abelian group in invariant-factor
/// coordinates plus one integer action matrix per additive generator of the
/// ring (column i is the image of basis vector e_i).
class FinModule {
 public:
  /// Validates the action and throws InvalidParameter on violations. When
  /// `gens` is empty a generating set is chosen on demand.
  static ModulePtr create(RingPtr ring, std::vector<std::int64_t> invariant_factors,
                          std::vector<IntMatrix> action, std::vector<Elem> gens = {},
                          std::size_t max_size = kDefaultMaxModuleSize);

  const FiniteRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const Shape& shape() const { return shape_; }
  std::size_t size() const { return shape_.size(); }
  const std::vector<std::int64_t>& invariant_factors() const { return shape_.factors(); }
  const std::vector<IntMatrix>& action() const { return action_; }

  Elem add(Elem a, Elem b) const { return shape_.add(a, b); }
  Elem neg(Elem a) const { return shape_.neg(a); }
  Elem sub(Elem a, Elem b) const { return shape_.sub(a, b); }
  /// r * x for a ring element code r.
  Elem act(Elem r, Elem x) const { return act_[static_cast<std::size_t>(r) * size() + x]; }

  /// Rx.
  ElementSet cyclic(Elem x) const;
  ElementSet span(const std::vector<Elem>& gens) const;
  ElementSet sum(const ElementSet& a, const ElementSet& b) const;
  /// ann(x) as a left ideal (element set over the ring).
  ElementSet annihilator(Elem x) const;

  /// Distinguished generating set (greedy: each pick maximizes the span).
  const std::vector<Elem>& gens() const;
  /// For every additive basis vector e_i, ring coefficients r_il with
  /// e_i = sum_l r_il * gens()[l].
  const std::vector<std::vector<Elem>>& basis_in_gens() const;

 private:
  FinModule() = default;
  void build_generator_data() const;

  RingPtr ring_;
  Shape shape_;
  std::vector<IntMatrix> action_;
  std::vector<Elem> act_;

  mutable std::once_flag gens_once_;
  mutable std::vector<Elem> gens_;
  mutable std::vector<std::vector<Elem>> basis_in_gens_;
};

/// The regular left module R_R with gens = [1].
ModulePtr regular_module(const RingPtr& ring);
/// The zero module over a ring.
ModulePtr zero_module(const RingPtr& ring);

/// A submodule of a fixed parent, stored as its element set together with its
/// canonical generators (lexicographically first generating set).
class Submodule {
 public:
  Submodule() = default;
  /// `members` must be closed under addition and the ring action.
  Submodule(ModulePtr parent, ElementSet members);

  static Submodule zero(const ModulePtr& parent);
  static Submodule whole(const ModulePtr& parent);
  static Submodule generated(const ModulePtr& parent, const std::vector<Elem>& gens);

  const FinModule& parent() const { return *parent_; }
  const ModulePtr& parent_ptr() const { return parent_; }
  const ElementSet& members() const { return members_; }
  const std::vector<Elem>& canon() const { return canon_; }
  std::size_t size() const { return size_; }
  bool contains(Elem x) const { return members_.test(x); }
  bool is_zero() const { return size_ == 1; }
  bool is_whole() const { return size_ == parent_->size(); }
  bool is_subset_of(const Submodule& o) const { return members_.is_subset_of(o.members_); }

  friend bool operator==(const Submodule& a, const Submodule& b) { return a.members_ == b.members_; }
  /// Canonical order: cardinality, then canonical generators lexicographically.
  friend std::strong_ordering operator<=>(const Submodule& a, const Submodule& b);

 private:
  ModulePtr parent_;
  ElementSet members_;
  std::vector<Elem> canon_;
  std::size_t size_ = 0;
};

Submodule meet(const Submodule& a, const Submodule& b);
Submodule join(const Submodule& a, const Submodule& b);

/// An R-linear map, stored as its full value table.
class ModuleHom {
 public:
  ModuleHom() = default;
  /// Trusts the table; use from_basis_images for validated construction.
  ModuleHom(ModulePtr dom, ModulePtr cod, std::vector<Elem> table);

  /// Builds the additive extension of the basis images and returns it if it
  /// is a well-defined R-linear map.
  static std::optional<ModuleHom> from_basis_images(const ModulePtr& dom, const ModulePtr& cod,
                                                    const std::vector<Elem>& images);
  static ModuleHom identity(const ModulePtr& m);
  static ModuleHom zero(const ModulePtr& dom, const ModulePtr& cod);

  const FinModule& dom() const { return *dom_; }
  const FinModule& cod() const { return *cod_; }
  const ModulePtr& dom_ptr() const { return dom_; }
  const ModulePtr& cod_ptr() const { return cod_; }
  const std::vector<Elem>& table() const { return table_; }

  Elem operator()(Elem x) const { return table_[x]; }
  /// Images of the additive basis of the domain.
  std::vector<Elem> matrix() const;

  bool is_injective() const;
  bool is_surjective() const;
  bool is_zero() const;
  Submodule image() const;
  Submodule image(const Submodule& s) const;
  Submodule preimage(const Submodule& s) const;
  Submodule kernel() const;

  /// Checks additivity and R-linearity exhaustively.
  bool is_linear() const;

  friend bool operator==(const ModuleHom& a, const ModuleHom& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.table_ == b.table_;
  }

 private:
  ModulePtr dom_;
  ModulePtr cod_;
  std::vector<Elem> table_;
};

/// g after f.
ModuleHom compose(const ModuleHom& g, const ModuleHom& f);
/// Pointwise sum of two parallel homs.
ModuleHom add_homs(const ModuleHom& f, const ModuleHom& g);
/// Inverse of a bijective hom.
ModuleHom inverse(const ModuleHom& f);
/// Restriction along an injective hom into the domain: f after incl.
inline ModuleHom restrict_along(const ModuleHom& f, const ModuleHom& incl) { return compose(f, incl); }

}  // namespace prlab
