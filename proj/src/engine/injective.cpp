#include "prlab/injective.hpp"

#include <algorithm>
#include <set>

#include "prlab/constructions.hpp"
#include "prlab/errors.hpp"
#include "prlab/lattice.hpp"

namespace prlab {

ModulePtr character_module(const RingPtr& ring) {
  const FiniteRing& R = *ring;
  const auto& d = R.invariant_factors();
  const auto& m = R.structure_constants();
  const std::size_t k = R.rank();
  // basis phi_i(g_l) = delta_il / d_i; (g_j phi_i)(g_l) = phi_i(g_l g_j)
  std::vector<IntMatrix> action;
  for (std::size_t j = 0; j < k; ++j) {
    IntMatrix a(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l) a(l, i) = mod_floor(d[l] * m[l][j][i] / d[i], d[l]);
    action.push_back(std::move(a));
  }
  return FinModule::create(ring, d, std::move(action), {}, FiniteRing::kMaxSize);
}

InjectiveHull injective_hull(const ModulePtr& m, std::size_t budget) {
  if (m->size() == 1) return {m, ModuleHom::identity(m)};
  const ModulePtr c = character_module(m->ring_ptr());
  const auto homs = hom_set(m, c);
  std::vector<const ModuleHom*> chosen;
  Submodule ker = Submodule::whole(m);
  while (!ker.is_zero()) {
    const ModuleHom* best = nullptr;
    std::size_t best_size = ker.size();
    for (const auto& h : homs) {
      const std::size_t s = (ker.members() & h.kernel().members()).count();
      if (s < best_size) {
        best_size = s;
        best = &h;
      }
    }
    if (!best) throw Error("internal: character module does not separate points");
    chosen.push_back(best);
    ker = meet(ker, best->kernel());
  }
  std::size_t ambient_size = 1;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    ambient_size *= c->size();
    if (ambient_size > budget)
      throw BudgetExceeded("injective hull needs an ambient module larger than " + std::to_string(budget));
  }
  const DirectSum ds = direct_sum(std::vector<ModulePtr>(chosen.size(), c));
  const ModulePtr& amb = ds.module;
  std::vector<Elem> emb(m->size());
  for (Elem x = 0; x < m->size(); ++x) {
    Elem acc = 0;
    for (std::size_t t = 0; t < chosen.size(); ++t) acc = amb->add(acc, ds.inj[t]((*chosen[t])(x)));
    emb[x] = acc;
  }
  ElementSet image(amb->size());
  for (Elem y : emb) image.set(y);

  // K maximal with K n M' = 0, then L >= M' maximal with L n K = 0.
  ElementSet k(amb->size());
  k.set(0);
  for (Elem x = 1; x < amb->size(); ++x) {
    if (k.test(x) || image.test(x)) continue;
    ElementSet grown = amb->sum(k, amb->cyclic(x));
    if ((grown & image).count() == 1) k = std::move(grown);
  }
  ElementSet l = image;
  for (Elem x = 1; x < amb->size(); ++x) {
    if (l.test(x) || k.test(x)) continue;
    ElementSet grown = amb->sum(l, amb->cyclic(x));
    if ((grown & k).count() == 1) l = std::move(grown);
  }
  const SubmoduleModule e = submodule_as_module(Submodule(amb, l));
  std::vector<std::int64_t> to_e(amb->size(), -1);
  for (Elem y = 0; y < e.module->size(); ++y) to_e[e.incl(y)] = y;
  std::vector<Elem> table(m->size());
  for (Elem x = 0; x < m->size(); ++x) table[x] = static_cast<Elem>(to_e[emb[x]]);
  InjectiveHull out{e.module, ModuleHom(m, e.module, std::move(table))};
  if (!is_essential(out.embed.image())) throw Error("internal: hull embedding is not essential");
  return out;
}

bool is_injective(const ModulePtr& m) {
  const RingPtr& ring = m->ring_ptr();
  const ModulePtr r = regular_module(ring);
  for (const auto& ideal : ring->left_ideals()) {
    const Submodule i(r, ideal);
    std::set<std::vector<Elem>> restrictions;
    for (Elem x = 0; x < m->size(); ++x) {
      std::vector<Elem> v;
      for (Elem g : i.canon()) v.push_back(m->act(g, x));
      restrictions.insert(std::move(v));
    }
    if (hom_count(submodule_as_module(i).module, m) != restrictions.size()) return false;
  }
  return true;
}

bool is_rel_injective(const ModulePtr& m, const ModulePtr& k) {
  const auto homs = hom_set(k, m);
  for (const auto& n : submodules(k)) {
    std::set<std::vector<Elem>> restrictions;
    for (const auto& f : homs) {
      std::vector<Elem> v;
      for (Elem g : n.canon()) v.push_back(f(g));
      restrictions.insert(std::move(v));
    }
    if (hom_count(submodule_as_module(n).module, m) != restrictions.size()) return false;
  }
  return true;
}

bool is_quasi_injective(const ModulePtr& m) { return is_rel_injective(m, m); }

bool fuchs_criterion(const ModulePtr& m) {
  const RingPtr& ring = m->ring_ptr();
  const ModulePtr r = regular_module(ring);
  std::vector<ElementSet> anns;
  for (Elem x = 0; x < m->size(); ++x) {
    ElementSet a = m->annihilator(x);
    if (std::find(anns.begin(), anns.end(), a) == anns.end()) anns.push_back(std::move(a));
  }
  for (const auto& ideal : ring->left_ideals()) {
    const Submodule l(r, ideal);
    const SubmoduleModule lm = submodule_as_module(l);
    std::vector<Elem> to_l(ring->size(), 0);
    for (Elem y = 0; y < lm.module->size(); ++y) to_l[lm.incl(y)] = y;
    const auto members = ideal.members();
    bool ok = true;
    for_each_hom(lm.module, m, [&](const ModuleHom& h) {
      ElementSet ker(ring->size());
      for (Elem a : members)
        if (h(to_l[a]) == 0) ker.set(a);
      const bool in_omega =
          std::any_of(anns.begin(), anns.end(), [&](const ElementSet& a) { return a.is_subset_of(ker); });
      if (!in_omega) return true;
      for (Elem x = 0; x < m->size(); ++x) {
        bool extends = true;
        for (Elem g : l.canon())
          if (m->act(g, x) != h(to_l[g])) {
            extends = false;
            break;
          }
        if (extends) return true;
      }
      ok = false;
      return false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace prlab
