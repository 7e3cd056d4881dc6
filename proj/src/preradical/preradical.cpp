#include "prlab/preradical.hpp"

#include <algorithm>

#include "prlab/errors.hpp"
#include "prlab/lattice.hpp"

namespace prlab {

namespace {

bool maps_into(const ModuleHom& f, const Submodule& from, const Submodule& to) {
  return std::all_of(from.canon().begin(), from.canon().end(), [&](Elem c) { return to.contains(f(c)); });
}

Submodule sum_of(const ModulePtr& m, const std::vector<Submodule>& parts) {
  Submodule acc = Submodule::zero(m);
  for (const auto& p : parts)
    if (!p.is_subset_of(acc)) acc = join(acc, p);
  return acc;
}

const SubEntry& classified(const Universe& u, std::size_t rep, const Submodule& n, bool need_sub, bool need_quot) {
  const SubEntry& e = u.entry(rep, n);
  if (need_sub && e.sub_rep == kNoRep) throw NotInUniverse("submodule of " + u.label(rep) + " is not classified");
  if (need_quot && e.quot_rep == kNoRep) throw NotInUniverse("quotient of " + u.label(rep) + " is not classified");
  return e;
}

void check_same(const Preradical& a, const Preradical& b) {
  if (a.universe_ptr() != b.universe_ptr()) throw UniverseMismatch("preradicals over different universes");
}

const HullEntry& hull_of(const Universe& u, std::size_t rep) {
  const auto& h = u.hull(rep);
  if (!h) throw NotInUniverse("injective hull of " + u.label(rep) + " is not in the universe");
  return *h;
}

}  // namespace

bool is_natural(const Universe& u, const std::vector<std::size_t>& values) {
  const std::size_t n = u.size();
  if (values.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& fi = u.fully_invariant(i);
    if (values[i] >= u.subs(i).size() || std::find(fi.begin(), fi.end(), values[i]) == fi.end()) return false;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Submodule& a = u.subs(i)[values[i]].sub;
      const Submodule& b = u.subs(j)[values[j]].sub;
      for (const auto& f : u.homs(i, j).gens)
        if (!maps_into(f, a, b)) return false;
    }
  return true;
}

Preradical::Preradical(UniversePtr u, std::vector<std::size_t> values) : u_(std::move(u)), values_(std::move(values)) {
  if (!is_natural(*u_, values_)) throw InvalidParameter("table is not a preradical over this universe");
}

Preradical Preradical::from_submodules(UniversePtr u, const std::vector<Submodule>& values) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < values.size(); ++i) idx.push_back(u->sub_index(i, values[i]));
  return Preradical(std::move(u), std::move(idx));
}

Submodule Preradical::at_sub(std::size_t rep, const Submodule& n) const {
  const SubEntry& e = classified(*u_, rep, n, true, false);
  return e.incl.image(value(e.sub_rep));
}

Submodule Preradical::at_quotient(std::size_t rep, const Submodule& n) const {
  const SubEntry& e = classified(*u_, rep, n, false, true);
  return e.proj.preimage(value(e.quot_rep));
}

namespace {

template <class F>
Preradical pointwise(const UniversePtr& u, F&& f) {
  std::vector<Submodule> v;
  for (std::size_t i = 0; i < u->size(); ++i) v.push_back(f(i));
  return Preradical::from_submodules(u, v);
}

}  // namespace

Preradical zero_preradical(const UniversePtr& u) {
  return pointwise(u, [&](std::size_t i) { return Submodule::zero(u->rep(i)); });
}

Preradical identity_preradical(const UniversePtr& u) {
  return pointwise(u, [&](std::size_t i) { return Submodule::whole(u->rep(i)); });
}

Preradical socle_preradical(const UniversePtr& u) {
  return pointwise(u, [&](std::size_t i) { return socle(u->rep(i)); });
}

Preradical jacobson_preradical(const UniversePtr& u) {
  return pointwise(u, [&](std::size_t i) { return jacobson(u->rep(i)); });
}

Preradical singular_preradical(const UniversePtr& u) {
  return pointwise(u, [&](std::size_t i) { return singular(u->rep(i)); });
}

namespace {

void require_fully_invariant(const Universe& u, std::size_t m, const Submodule& n) {
  const auto& fi = u.fully_invariant(m);
  if (std::find(fi.begin(), fi.end(), u.sub_index(m, n)) == fi.end())
    throw InvalidParameter("submodule is not fully invariant in " + u.label(m));
}

}  // namespace

Preradical alpha(const UniversePtr& u, std::size_t m, const Submodule& n) {
  require_fully_invariant(*u, m, n);
  return pointwise(u, [&](std::size_t k) {
    std::vector<Submodule> parts;
    for (const auto& f : u->homs(m, k).gens) parts.push_back(f.image(n));
    return sum_of(u->rep(k), parts);
  });
}

Preradical omega(const UniversePtr& u, std::size_t m, const Submodule& n) {
  require_fully_invariant(*u, m, n);
  return pointwise(u, [&](std::size_t k) {
    Submodule acc = Submodule::whole(u->rep(k));
    for (const auto& f : u->homs(k, m).gens) acc = meet(acc, f.preimage(n));
    return acc;
  });
}

bool leq(const Preradical& a, const Preradical& b) {
  check_same(a, b);
  for (std::size_t i = 0; i < a.universe().size(); ++i)
    if (!a.value(i).is_subset_of(b.value(i))) return false;
  return true;
}

Preradical join(const Preradical& a, const Preradical& b) {
  check_same(a, b);
  return pointwise(a.universe_ptr(), [&](std::size_t i) { return join(a.value(i), b.value(i)); });
}

Preradical meet(const Preradical& a, const Preradical& b) {
  check_same(a, b);
  return pointwise(a.universe_ptr(), [&](std::size_t i) { return meet(a.value(i), b.value(i)); });
}

Preradical join(const std::vector<Preradical>& family) {
  if (family.empty()) throw InvalidParameter("join of an empty family");
  Preradical acc = family.front();
  for (std::size_t i = 1; i < family.size(); ++i) acc = join(acc, family[i]);
  return acc;
}

Preradical meet(const std::vector<Preradical>& family) {
  if (family.empty()) throw InvalidParameter("meet of an empty family");
  Preradical acc = family.front();
  for (std::size_t i = 1; i < family.size(); ++i) acc = meet(acc, family[i]);
  return acc;
}

Preradical prod(const Preradical& sigma, const Preradical& tau) {
  check_same(sigma, tau);
  return pointwise(sigma.universe_ptr(), [&](std::size_t i) { return sigma.at_sub(i, tau.value(i)); });
}

Preradical coprod(const Preradical& sigma, const Preradical& tau) {
  check_same(sigma, tau);
  return pointwise(sigma.universe_ptr(), [&](std::size_t i) { return tau.at_quotient(i, sigma.value(i)); });
}

Preradical hat(const Preradical& sigma) {
  const Universe& u = sigma.universe();
  return pointwise(sigma.universe_ptr(), [&](std::size_t i) {
    std::vector<Submodule> parts;
    for (const auto& e : u.subs(i)) {
      if (e.sub_rep == kNoRep) throw NotInUniverse("submodule of " + u.label(i) + " is not classified");
      if (sigma.is_torsion(e.sub_rep)) parts.push_back(e.sub);
    }
    return sum_of(u.rep(i), parts);
  });
}

Preradical bar(const Preradical& sigma) {
  const Universe& u = sigma.universe();
  return pointwise(sigma.universe_ptr(), [&](std::size_t i) {
    Submodule acc = Submodule::whole(u.rep(i));
    for (const auto& e : u.subs(i)) {
      if (e.quot_rep == kNoRep) throw NotInUniverse("quotient of " + u.label(i) + " is not classified");
      if (sigma.is_torsion_free(e.quot_rep)) acc = meet(acc, e.sub);
    }
    return acc;
  });
}

Preradical tilde(const Preradical& sigma) {
  const Universe& u = sigma.universe();
  return pointwise(sigma.universe_ptr(), [&](std::size_t i) {
    const HullEntry& h = hull_of(u, i);
    return h.embed.preimage(sigma.value(h.rep));
  });
}

Preradical circ(const Preradical& sigma) {
  const UniversePtr& u = sigma.universe_ptr();
  Preradical tau = sigma;
  while (true) {
    const Preradical h = hat(tau);
    std::size_t bad = kNoRep;
    for (std::size_t i = 0; i < u->size() && bad == kNoRep; ++i)
      if (!tau.is_torsion_free(i) && h.is_torsion_free(i)) bad = i;
    if (bad == kNoRep) return tau;
    tau = meet(tau, omega(u, bad, Submodule::zero(u->rep(bad))));
  }
}

Preradical square(const Preradical& sigma) {
  const UniversePtr& u = sigma.universe_ptr();
  Preradical tau = sigma;
  while (true) {
    std::size_t culprit = kNoRep;
    for (std::size_t i = 0; i < u->size() && culprit == kNoRep; ++i) {
      if (!tau.is_torsion(i)) continue;
      for (const auto& e : u->subs(i)) {
        if (e.sub_rep == kNoRep) throw NotInUniverse("submodule of " + u->label(i) + " is not classified");
        if (!tau.is_torsion(e.sub_rep)) {
          culprit = e.sub_rep;
          break;
        }
      }
    }
    if (culprit == kNoRep) return tau;
    tau = join(tau, alpha(u, culprit, Submodule::whole(u->rep(culprit))));
  }
}

Submodule purification(const Preradical& sigma, std::size_t rep, const Submodule& n) {
  const Universe& u = sigma.universe();
  Submodule acc = Submodule::whole(u.rep(rep));
  for (const auto& e : u.subs(rep)) {
    if (!n.is_subset_of(e.sub)) continue;
    if (e.quot_rep == kNoRep) throw NotInUniverse("quotient of " + u.label(rep) + " is not classified");
    if (sigma.is_torsion_free(e.quot_rep)) acc = meet(acc, e.sub);
  }
  return acc;
}

// ---------------------------------------------------------------- traits

std::vector<std::pair<std::string, const TraitResult*>> TraitReport::items() const {
  return {{"idempotent", &idempotent},
          {"radical", &radical},
          {"left_exact", &left_exact},
          {"prehereditary", &prehereditary},
          {"essentially_idempotent", &essentially_idempotent},
          {"essentially_coidempotent", &essentially_coidempotent},
          {"strongly_nilpotent", &strongly_nilpotent},
          {"costable", &costable},
          {"autocostable", &autocostable}};
}

namespace {

TraitResult fail(std::size_t rep, std::optional<Submodule> sub, std::string detail) {
  return {false, Witness{rep, std::move(sub), std::move(detail)}};
}

TraitResult check_idempotent(const Preradical& s) {
  const Preradical ss = prod(s, s);
  for (std::size_t i = 0; i < s.universe().size(); ++i)
    if (!(ss.value(i) == s.value(i))) return fail(i, s.value(i), "sigma(sigma(M)) != sigma(M)");
  return {};
}

TraitResult check_radical(const Preradical& s) {
  for (std::size_t i = 0; i < s.universe().size(); ++i)
    if (!s.is_torsion_free_quotient(i, s.value(i))) return fail(i, s.value(i), "sigma(M/sigma(M)) != 0");
  return {};
}

TraitResult check_left_exact(const Preradical& s) {
  const Universe& u = s.universe();
  for (std::size_t i = 0; i < u.size(); ++i)
    for (const auto& e : u.subs(i))
      if (!(s.at_sub(i, e.sub) == meet(e.sub, s.value(i)))) return fail(i, e.sub, "sigma(N) != N meet sigma(M)");
  return {};
}

TraitResult check_prehereditary(const Preradical& s) {
  const Universe& u = s.universe();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!s.is_torsion(i)) continue;
    for (const auto& e : u.subs(i))
      if (!s.is_torsion_sub(i, e.sub)) return fail(i, e.sub, "M is torsion but its submodule N is not");
  }
  return {};
}

TraitResult check_essentially_idempotent(const Preradical& s) {
  const Preradical h = hat(s);
  for (std::size_t i = 0; i < s.universe().size(); ++i)
    if (!s.is_torsion_free(i) && h.is_torsion_free(i)) return fail(i, s.value(i), "sigma(M) != 0 but hat(sigma)(M) = 0");
  return {};
}

TraitResult check_essentially_coidempotent(const Preradical& s) {
  const Preradical b = bar(s);
  for (std::size_t i = 0; i < s.universe().size(); ++i)
    if (b.is_torsion(i) && !s.is_torsion(i)) return fail(i, s.value(i), "bar(sigma)(M) = M but sigma(M) != M");
  return {};
}

TraitResult check_strongly_nilpotent(const Preradical& s) {
  const Preradical h = hat(s);
  for (std::size_t i = 0; i < s.universe().size(); ++i)
    if (!h.is_torsion_free(i)) return fail(i, h.value(i), "hat(sigma)(M) != 0");
  return {};
}

TraitResult check_costable(const Preradical& s) {
  const Universe& u = s.universe();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!s.is_torsion_free(i)) continue;
    const HullEntry& h = hull_of(u, i);
    if (!s.is_torsion_free(h.rep)) return fail(i, std::nullopt, "M torsion-free but E(M) is not");
  }
  return {};
}

TraitResult check_autocostable(const Preradical& s) {
  const Universe& u = s.universe();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!s.is_torsion_free(i)) continue;
    const HullEntry& h = hull_of(u, i);
    const Submodule es = purification(s, h.rep, h.embed.image());
    if (!s.at_sub(h.rep, es).is_zero()) return fail(i, std::nullopt, "M torsion-free but E_sigma(M) is not");
  }
  return {};
}

}  // namespace

TraitReport traits(const Preradical& s) {
  TraitReport r;
  r.idempotent = check_idempotent(s);
  r.radical = check_radical(s);
  r.left_exact = check_left_exact(s);
  r.prehereditary = check_prehereditary(s);
  r.essentially_idempotent = check_essentially_idempotent(s);
  r.essentially_coidempotent = check_essentially_coidempotent(s);
  r.strongly_nilpotent = check_strongly_nilpotent(s);
  r.costable = check_costable(s);
  r.autocostable = check_autocostable(s);
  return r;
}

bool is_idempotent(const Preradical& s) { return check_idempotent(s).holds; }
bool is_radical(const Preradical& s) { return check_radical(s).holds; }
bool is_left_exact(const Preradical& s) { return check_left_exact(s).holds; }
bool is_prehereditary(const Preradical& s) { return check_prehereditary(s).holds; }
bool is_essentially_idempotent(const Preradical& s) { return check_essentially_idempotent(s).holds; }
bool is_essentially_coidempotent(const Preradical& s) { return check_essentially_coidempotent(s).holds; }
bool is_strongly_nilpotent(const Preradical& s) { return check_strongly_nilpotent(s).holds; }
bool is_costable(const Preradical& s) { return check_costable(s).holds; }
bool is_autocostable(const Preradical& s) { return check_autocostable(s).holds; }

// ---------------------------------------------------------------- enumeration

std::vector<Preradical> enumerate_preradicals(const UniversePtr& u, std::size_t budget) {
  const std::size_t n = u->size();
  std::vector<std::vector<std::size_t>> cand(n);
  for (std::size_t i = 0; i < n; ++i) cand[i] = u->fully_invariant(i);
  // compat[i][j][a * |cand j| + b]: candidates a at i and b at j respect all homs between i and j
  std::vector<std::vector<std::vector<char>>> compat(n, std::vector<std::vector<char>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      auto& c = compat[i][j];
      c.assign(cand[i].size() * cand[j].size(), 1);
      for (std::size_t a = 0; a < cand[i].size(); ++a)
        for (std::size_t b = 0; b < cand[j].size(); ++b) {
          const Submodule& sa = u->subs(i)[cand[i][a]].sub;
          const Submodule& sb = u->subs(j)[cand[j][b]].sub;
          bool ok = true;
          for (const auto& f : u->homs(i, j).gens) ok = ok && maps_into(f, sa, sb);
          for (const auto& f : u->homs(j, i).gens) ok = ok && maps_into(f, sb, sa);
          c[a * cand[j].size() + b] = ok;
        }
    }
  std::vector<Preradical> out;
  std::vector<std::size_t> pick(n);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (out.size() >= budget)
        throw BudgetExceeded("preradical enumeration exceeded the budget after " + std::to_string(out.size()) +
                             " tables");
      std::vector<std::size_t> values(n);
      for (std::size_t k = 0; k < n; ++k) values[k] = cand[k][pick[k]];
      out.emplace_back(u, std::move(values));
      return;
    }
    for (std::size_t a = 0; a < cand[i].size(); ++a) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = compat[i][j][a * cand[j].size() + pick[j]];
      if (!ok) continue;
      pick[i] = a;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace prlab
