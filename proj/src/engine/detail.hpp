#pragma once

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "prlab/element_set.hpp"

namespace prlab::detail {

/// {a + b | a in A, b in B}; for subgroups this is their sum.
template <class Add>
ElementSet sum_sets(const ElementSet& a, const ElementSet& b, Add&& add) {
  ElementSet out(a.universe_size());
  const auto bs = b.members();
  a.for_each([&](Elem x) {
    for (Elem y : bs) out.set(add(x, y));
  });
  return out;
}

/// Lexicographically first generating set: scan members in code order and keep
/// every element not already in the span of the kept ones.
template <class Cyclic, class Add>
std::vector<Elem> greedy_generators(const ElementSet& members, Cyclic&& cyclic, Add&& add) {
  std::vector<Elem> gens;
  ElementSet span(members.universe_size());
  span.set(0);
  members.for_each([&](Elem x) {
    if (span.test(x)) return;
    gens.push_back(x);
    span = sum_sets(span, cyclic(x), add);
  });
  return gens;
}

/// All subsets closed under the sum operation generated from the given cyclic
/// pieces, i.e. every sum of cyclic submodules (including {0}).
template <class Add>
std::vector<ElementSet> enumerate_sums(std::size_t n, const std::vector<ElementSet>& cyclics, Add&& add) {
  std::vector<ElementSet> pieces;
  {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (const auto& c : cyclics)
      if (seen.insert(c).second) pieces.push_back(c);
  }
  ElementSet zero(n);
  zero.set(0);
  std::vector<ElementSet> found{zero};
  std::unordered_set<ElementSet, ElementSetHash> seen{zero};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& c : pieces) {
      if (c.is_subset_of(found[i])) continue;
      ElementSet s = sum_sets(found[i], c, add);
      if (seen.insert(s).second) found.push_back(std::move(s));
    }
  }
  return found;
}

}  // namespace prlab::detail
