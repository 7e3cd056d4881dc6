#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "prlab/element_set.hpp"
#include "prlab/shape.hpp"

namespace prlab {

/// Families the builtin constructors produce. Only used for naming modules.
enum class RingFamily { generic, cyclic, product_cyclic, upper_triangular };

struct RingFamilyInfo {
  RingFamily kind = RingFamily::generic;
  std::int64_t a = 0;  // n for Z_n, first factor for products, p for T2(F_p)
  std::int64_t b = 0;  // second factor for products
  /// Coordinates of the idempotent (1, 0) for product rings.
  std::vector<std::int64_t> idempotent;
};

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// Structure constants: products[i][j] holds the coordinates of g_i * g_j.
using StructureConstants = std::vector<std::vector<std::vector<std::int64_t>>>;

/// A finite unital ring presented by the invariant factors of its additive
/// group and the structure constants of the product on additive generators.
class FiniteRing {
 public:
  /// Largest ring the engine accepts; the full product table is materialized.
  static constexpr std::size_t kMaxSize = 1024;

  /// Validates the axioms (exhaustively for small rings) and throws
  /// InvalidParameter on any violation.
  static RingPtr create(std::string name, std::vector<std::int64_t> invariant_factors,
                        StructureConstants products, std::vector<std::int64_t> one,
                        RingFamilyInfo family = {});

  const std::string& name() const { return name_; }
  const RingFamilyInfo& family() const { return family_; }
  const Shape& shape() const { return shape_; }
  std::size_t size() const { return shape_.size(); }
  std::size_t rank() const { return shape_.rank(); }
  const std::vector<std::int64_t>& invariant_factors() const { return shape_.factors(); }
  const StructureConstants& structure_constants() const { return products_; }
  const std::vector<std::int64_t>& one_coords() const { return one_coords_; }

  Elem one() const { return one_; }
  Elem zero() const { return 0; }
  Elem generator(std::size_t i) const { return shape_.basis(i); }

  Elem add(Elem a, Elem b) const { return shape_.add(a, b); }
  Elem neg(Elem a) const { return shape_.neg(a); }
  Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * size() + b]; }

  bool is_commutative() const;

  /// Left ideals as element sets, sorted by (size, canonical generators).
  const std::vector<ElementSet>& left_ideals() const { return left_ideals_; }
  /// Left ideal generated by the given elements.
  ElementSet left_ideal_span(const std::vector<Elem>& gens) const;
  bool is_essential_left_ideal(const ElementSet& ideal) const;
  /// (I : a) = { r | r a in I }.
  ElementSet colon(const ElementSet& ideal, Elem a) const;
  /// Lexicographically first minimal generating set of a left ideal.
  std::vector<Elem> canonical_generators(const ElementSet& ideal) const;

 private:
  FiniteRing() = default;
  void build_left_ideals();

  std::string name_;
  RingFamilyInfo family_;
  Shape shape_;
  StructureConstants products_;
  std::vector<std::int64_t> one_coords_;
  Elem one_ = 0;
  std::vector<Elem> mul_;
  std::vector<ElementSet> left_ideals_;
};

/// Z/nZ. Throws InvalidParameter when n < 2.
RingPtr make_zn(std::int64_t n);
/// Componentwise product ring; additive coordinates renormalized to invariant factors.
RingPtr product_ring(const FiniteRing& a, const FiniteRing& b);
/// Upper triangular 2x2 matrices over F_p.
RingPtr upper_triangular_2(std::int64_t p);
/// Builtin names: z<n>, z<n>xz<m>, t2f<p>.
RingPtr builtin_ring(const std::string& name);

}  // namespace prlab
