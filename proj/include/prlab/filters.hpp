#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "prlab/preradical.hpp"
#include "prlab/ring.hpp"

namespace prlab {

/// A set of left ideals of a ring, stored as sorted indices into
/// ring.left_ideals().
class Filter {
 public:
  Filter() = default;
  Filter(RingPtr ring, std::vector<std::size_t> ideals);

  const FiniteRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const std::vector<std::size_t>& ideals() const { return ideals_; }
  bool contains(std::size_t ideal) const;
  bool contains(const ElementSet& ideal) const;

  friend bool operator==(const Filter& a, const Filter& b) { return a.ring_ == b.ring_ && a.ideals_ == b.ideals_; }

 private:
  RingPtr ring_;
  std::vector<std::size_t> ideals_;
  std::vector<char> member_;
};

/// Index of a left ideal in ring.left_ideals(); throws InvalidParameter if the set is not one.
std::size_t ideal_index(const FiniteRing& ring, const ElementSet& ideal);

struct FilterWitness {
  std::string axiom;
  std::vector<std::size_t> ideals;  // the ideals the axiom fails on
  std::optional<Elem> element;
};

struct FilterCheck {
  bool holds = true;
  std::optional<FilterWitness> witness;
};

/// R in F, upward closed, closed under finite intersections and (I:a).
FilterCheck check_linear(const Filter& f);
/// Linear, and J in F whenever (J:a) in F for every a of some I in F.
FilterCheck check_gabriel(const Filter& f);
inline bool is_linear_filter(const Filter& f) { return check_linear(f).holds; }
inline bool is_gabriel_filter(const Filter& f) { return check_gabriel(f).holds; }

/// Left ideals I with R/I sigma-torsion.
Filter filter_of(const Preradical& sigma);
/// sigma(M) = { x | ann(x) in F }. Throws InvalidParameter unless f is linear.
Preradical preradical_of_filter(const UniversePtr& u, const Filter& f);

/// Every linear filter of the ring. A linear filter of a finite ring is the
/// up-set of its intersection, so only up-sets of single ideals are tested.
/// Ordered by that least ideal.
std::vector<Filter> enumerate_linear_filters(const RingPtr& ring);

/// The torsion class of sigma, restricted to the universe, is closed under
/// submodules, quotients and extensions.
bool is_hereditary_torsion_class(const Preradical& sigma);

}  // namespace prlab
