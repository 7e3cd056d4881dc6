#include "prlab/lattice.hpp"

#include <algorithm>

#include "detail.hpp"
#include "prlab/constructions.hpp"

namespace prlab {

std::vector<Submodule> submodules(const ModulePtr& m) {
  std::vector<ElementSet> cyclics;
  for (Elem x = 1; x < m->size(); ++x) cyclics.push_back(m->cyclic(x));
  auto sets = detail::enumerate_sums(m->size(), cyclics, [&](Elem a, Elem b) { return m->add(a, b); });
  std::vector<Submodule> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.emplace_back(m, std::move(s));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_fully_invariant(const Submodule& s) {
  bool ok = true;
  for_each_hom(s.parent_ptr(), s.parent_ptr(), [&](const ModuleHom& f) {
    for (Elem c : s.canon())
      if (!s.contains(f(c))) {
        ok = false;
        return false;
      }
    return true;
  });
  return ok;
}

std::vector<Submodule> fully_invariant_submodules(const ModulePtr& m) {
  auto subs = submodules(m);
  std::vector<bool> alive(subs.size(), true);
  for_each_hom(m, m, [&](const ModuleHom& f) {
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (!alive[i]) continue;
      for (Elem c : subs[i].canon())
        if (!subs[i].contains(f(c))) {
          alive[i] = false;
          break;
        }
    }
    return true;
  });
  std::vector<Submodule> out;
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (alive[i]) out.push_back(std::move(subs[i]));
  return out;
}

bool is_essential(const Submodule& n) {
  const FinModule& m = n.parent();
  for (Elem x = 1; x < m.size(); ++x) {
    if (n.contains(x)) continue;
    if ((m.cyclic(x) & n.members()).count() == 1) return false;
  }
  return true;
}

bool is_simple(const ModulePtr& m) {
  if (m->size() == 1) return false;
  for (Elem x = 1; x < m->size(); ++x)
    if (m->cyclic(x).count() != m->size()) return false;
  return true;
}

Submodule socle(const ModulePtr& m) {
  ElementSet soc(m->size());
  soc.set(0);
  for (Elem x = 1; x < m->size(); ++x) {
    if (soc.test(x)) continue;
    const ElementSet c = m->cyclic(x);
    const std::size_t n = c.count();
    bool simple = true;
    c.for_each([&](Elem y) {
      if (simple && y != 0 && m->cyclic(y).count() != n) simple = false;
    });
    if (simple) soc = m->sum(soc, c);
  }
  return Submodule(m, std::move(soc));
}

ElementSet ring_jacobson(const FiniteRing& r) {
  const auto& ideals = r.left_ideals();
  ElementSet j(r.size());
  for (Elem x = 0; x < r.size(); ++x) j.set(x);
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (ideals[i].count() == r.size()) continue;
    bool maximal = true;
    for (std::size_t k = 0; k < ideals.size() && maximal; ++k)
      if (k != i && ideals[k].count() != r.size() && ideals[k].count() > ideals[i].count() &&
          ideals[i].is_subset_of(ideals[k]))
        maximal = false;
    if (maximal) j &= ideals[i];
  }
  return j;
}

Submodule jacobson(const ModulePtr& m) {
  const ElementSet j = ring_jacobson(m->ring());
  std::vector<Elem> gens;
  j.for_each([&](Elem r) {
    for (Elem g : m->gens()) gens.push_back(m->act(r, g));
  });
  return Submodule::generated(m, gens);
}

Submodule singular(const ModulePtr& m) {
  ElementSet s(m->size());
  for (Elem x = 0; x < m->size(); ++x)
    if (m->ring().is_essential_left_ideal(m->annihilator(x))) s.set(x);
  return Submodule(m, std::move(s));
}

std::vector<Submodule> maximal_submodules(const ModulePtr& m) {
  const auto subs = submodules(m);
  std::vector<Submodule> out;
  for (const auto& s : subs) {
    if (s.is_whole()) continue;
    bool maximal = true;
    for (const auto& t : subs)
      if (!t.is_whole() && t.size() > s.size() && s.is_subset_of(t)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(s);
  }
  return out;
}

}  // namespace prlab
