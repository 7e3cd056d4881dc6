#include "prlab/filters.hpp"

#include <algorithm>

#include "prlab/constructions.hpp"
#include "prlab/errors.hpp"

namespace prlab {

Filter::Filter(RingPtr ring, std::vector<std::size_t> ideals) : ring_(std::move(ring)), ideals_(std::move(ideals)) {
  std::sort(ideals_.begin(), ideals_.end());
  ideals_.erase(std::unique(ideals_.begin(), ideals_.end()), ideals_.end());
  member_.assign(ring_->left_ideals().size(), 0);
  for (std::size_t i : ideals_) {
    if (i >= member_.size()) throw InvalidParameter("ideal index out of range");
    member_[i] = 1;
  }
}

bool Filter::contains(std::size_t ideal) const { return ideal < member_.size() && member_[ideal]; }

bool Filter::contains(const ElementSet& ideal) const { return contains(ideal_index(*ring_, ideal)); }

std::size_t ideal_index(const FiniteRing& ring, const ElementSet& ideal) {
  const auto& all = ring.left_ideals();
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] == ideal) return i;
  throw InvalidParameter("not a left ideal");
}

FilterCheck check_linear(const Filter& f) {
  const FiniteRing& r = f.ring();
  const auto& all = r.left_ideals();
  const std::size_t whole = all.size() - 1;
  if (!f.contains(whole)) return {false, FilterWitness{"contains R", {whole}, std::nullopt}};
  for (std::size_t i : f.ideals())
    for (std::size_t j = 0; j < all.size(); ++j)
      if (all[i].is_subset_of(all[j]) && !f.contains(j)) return {false, FilterWitness{"upward closed", {i, j}, std::nullopt}};
  for (std::size_t i : f.ideals())
    for (std::size_t j : f.ideals())
      if (!f.contains(all[i] & all[j])) return {false, FilterWitness{"intersection closed", {i, j}, std::nullopt}};
  for (std::size_t i : f.ideals())
    for (Elem a = 0; a < r.size(); ++a)
      if (!f.contains(r.colon(all[i], a))) return {false, FilterWitness{"colon closed", {i}, a}};
  return {};
}

FilterCheck check_gabriel(const Filter& f) {
  if (auto lin = check_linear(f); !lin.holds) return lin;
  const FiniteRing& r = f.ring();
  const auto& all = r.left_ideals();
  for (std::size_t j = 0; j < all.size(); ++j) {
    if (f.contains(j)) continue;
    for (std::size_t i : f.ideals()) {
      bool every = true;
      all[i].for_each([&](Elem a) { every = every && f.contains(r.colon(all[j], a)); });
      if (every) return {false, FilterWitness{"gabriel", {j, i}, std::nullopt}};
    }
  }
  return {};
}

namespace {

// Iso from the regular module onto the regular rep of the universe.
ModuleHom regular_iso(const Universe& u) {
  const auto c = u.classify(regular_module(u.ring_ptr()));
  if (c.rep != u.regular_index()) throw InvalidParameter("regular module misclassified");
  return c.iso;
}

}  // namespace

Filter filter_of(const Preradical& sigma) {
  const Universe& u = sigma.universe();
  const ModuleHom iso = regular_iso(u);
  const auto& all = u.ring().left_ideals();
  std::vector<std::size_t> in;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Submodule n = iso.image(Submodule(iso.dom_ptr(), all[i]));
    if (sigma.at_quotient(u.regular_index(), n).is_whole()) in.push_back(i);
  }
  return Filter(u.ring_ptr(), std::move(in));
}

Preradical preradical_of_filter(const UniversePtr& u, const Filter& f) {
  if (f.ring_ptr() != u->ring_ptr()) throw UniverseMismatch("filter and universe over different rings");
  if (auto lin = check_linear(f); !lin.holds) throw InvalidParameter("filter is not linear: " + lin.witness->axiom);
  const FiniteRing& r = u->ring();
  std::vector<Submodule> values;
  for (const auto& m : u->reps()) {
    ElementSet members(m->size());
    for (Elem x = 0; x < m->size(); ++x) {
      ElementSet ann(r.size());
      for (Elem a = 0; a < r.size(); ++a)
        if (m->act(a, x) == 0) ann.set(a);
      if (f.contains(ann)) members.set(x);
    }
    values.emplace_back(m, std::move(members));
  }
  return Preradical::from_submodules(u, values);
}

std::vector<Filter> enumerate_linear_filters(const RingPtr& ring) {
  const auto& all = ring->left_ideals();
  std::vector<Filter> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::vector<std::size_t> up;
    for (std::size_t j = 0; j < all.size(); ++j)
      if (all[i].is_subset_of(all[j])) up.push_back(j);
    Filter f(ring, std::move(up));
    if (is_linear_filter(f)) out.push_back(std::move(f));
  }
  return out;
}

bool is_hereditary_torsion_class(const Preradical& sigma) {
  const Universe& u = sigma.universe();
  for (std::size_t i = 0; i < u.size(); ++i) {
    const bool torsion = sigma.is_torsion(i);
    for (const auto& e : u.subs(i)) {
      const bool sub_t = sigma.is_torsion(e.sub_rep), quot_t = sigma.is_torsion(e.quot_rep);
      if (torsion && (!sub_t || !quot_t)) return false;
      if (!torsion && sub_t && quot_t) return false;
    }
  }
  return true;
}

}  // namespace prlab
