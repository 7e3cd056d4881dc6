#include "prlab/constructions.hpp"

#include <set>

#include "prlab/errors.hpp"

namespace prlab {

namespace {

/// Additive generators of a submodule: g_j * c over ring generators g_j and
/// canonical module generators c.
std::vector<Elem> additive_generators(const Submodule& s) {
  const FinModule& m = s.parent();
  std::vector<Elem> out;
  for (Elem c : s.canon())
    for (std::size_t j = 0; j < m.ring().rank(); ++j) out.push_back(m.act(m.ring().generator(j), c));
  return out;
}

/// k x (n + k) matrix whose columns are the generator coordinates followed by
/// the additive relations d_i e_i.
IntMatrix relation_matrix(const FinModule& m, const std::vector<Elem>& gens) {
  const std::size_t k = m.shape().rank();
  IntMatrix g(k, gens.size() + k);
  for (std::size_t c = 0; c < gens.size(); ++c) {
    const auto v = m.shape().decode(gens[c]);
    for (std::size_t r = 0; r < k; ++r) g(r, c) = v[r];
  }
  for (std::size_t i = 0; i < k; ++i) g(i, gens.size() + i) = m.invariant_factors()[i];
  return g;
}

Elem encode_column(const Shape& sh, const IntMatrix& a, std::size_t col) {
  std::vector<std::int64_t> v(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) v[r] = a(r, col);
  return sh.encode(v);
}

std::vector<IntMatrix> action_in_new_basis(const FinModule& parent, const std::vector<Elem>& basis_in_parent,
                                           const Shape& shape, const std::function<Elem(Elem)>& to_new) {
  const FiniteRing& R = parent.ring();
  std::vector<IntMatrix> action;
  for (std::size_t j = 0; j < R.rank(); ++j) {
    IntMatrix a(shape.rank(), shape.rank());
    for (std::size_t i = 0; i < shape.rank(); ++i) {
      const auto col = shape.decode(to_new(parent.act(R.generator(j), basis_in_parent[i])));
      for (std::size_t r = 0; r < shape.rank(); ++r) a(r, i) = col[r];
    }
    action.push_back(std::move(a));
  }
  return action;
}

bool is_chain(const std::vector<std::int64_t>& f) {
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f[i] % f[i - 1] != 0) return false;
  return true;
}

}  // namespace

SubmoduleModule submodule_as_module(const Submodule& s) {
  const ModulePtr& parent = s.parent_ptr();
  const FinModule& m = *parent;
  if (s.is_zero()) {
    auto z = zero_module(m.ring_ptr());
    return {z, ModuleHom::zero(z, parent)};
  }
  const std::size_t k = m.shape().rank();
  const auto& d = m.invariant_factors();
  const SmithForm f1 = smith_normal_form(relation_matrix(m, additive_generators(s)));
  // lattice basis b_i = s_i * U^{-1} e_i; relations C = diag(1/s) U D
  IntMatrix b(k, k), c(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < k; ++r) {
      b(r, i) = f1.left_inv(r, i) * f1.diag[i];
      c(i, r) = f1.left(i, r) * d[r] / f1.diag[i];
    }
  const SmithForm f2 = smith_normal_form(c);
  const IntMatrix w = b * f2.left_inv;
  std::vector<std::int64_t> factors;
  std::vector<Elem> basis_in_parent;
  for (std::size_t i = 0; i < k; ++i)
    if (f2.diag[i] > 1) {
      factors.push_back(f2.diag[i]);
      basis_in_parent.push_back(encode_column(m.shape(), w, i));
    }
  const Shape shape(factors);
  std::vector<Elem> table(shape.size());
  std::vector<std::int64_t> to_new(m.size(), -1);
  for (Elem y = 0; y < shape.size(); ++y) {
    Elem acc = 0;
    for (std::size_t i = 0; i < shape.rank(); ++i)
      if (const auto cy = shape.coord(y, i)) acc = m.add(acc, m.shape().scale(cy, basis_in_parent[i]));
    table[y] = acc;
    to_new[acc] = y;
  }
  if (table.size() != s.size()) throw Error("internal: submodule realization has wrong size");
  auto action = action_in_new_basis(m, basis_in_parent, shape, [&](Elem x) {
    if (to_new[x] < 0) throw Error("internal: submodule not closed under the action");
    return static_cast<Elem>(to_new[x]);
  });
  std::vector<Elem> gens;
  for (Elem g : s.canon()) gens.push_back(static_cast<Elem>(to_new[g]));
  auto sub = FinModule::create(m.ring_ptr(), factors, std::move(action), std::move(gens), m.size());
  return {sub, ModuleHom(sub, parent, std::move(table))};
}

QuotientModule quotient(const Submodule& s) {
  const ModulePtr& parent = s.parent_ptr();
  const FinModule& m = *parent;
  if (s.is_whole()) {
    auto z = zero_module(m.ring_ptr());
    return {z, ModuleHom::zero(parent, z)};
  }
  const std::size_t k = m.shape().rank();
  const SmithForm f = smith_normal_form(relation_matrix(m, additive_generators(s)));
  std::vector<std::size_t> kept;
  std::vector<std::int64_t> factors;
  std::vector<Elem> lifts;
  for (std::size_t i = 0; i < k; ++i)
    if (f.diag[i] > 1) {
      kept.push_back(i);
      factors.push_back(f.diag[i]);
      lifts.push_back(encode_column(m.shape(), f.left_inv, i));
    }
  const Shape shape(factors);
  std::vector<Elem> table(m.size());
  std::vector<std::int64_t> y(kept.size());
  for (Elem x = 0; x < m.size(); ++x) {
    const auto c = m.shape().decode(x);
    for (std::size_t t = 0; t < kept.size(); ++t) {
      std::int64_t v = 0;
      for (std::size_t r = 0; r < k; ++r) v = mod_floor(v + f.left(kept[t], r) * c[r], factors[t]);
      y[t] = v;
    }
    table[x] = shape.encode(y);
  }
  auto action = action_in_new_basis(m, lifts, shape, [&](Elem x) { return table[x]; });
  std::vector<Elem> gens;
  for (Elem g : m.gens()) gens.push_back(table[g]);
  auto q = FinModule::create(m.ring_ptr(), factors, std::move(action), std::move(gens), m.size());
  return {q, ModuleHom(parent, q, std::move(table))};
}

SubmoduleModule normalize_module(const ModulePtr& m) {
  if (is_chain(m->invariant_factors())) return {m, ModuleHom::identity(m)};
  return submodule_as_module(Submodule::whole(m));
}

DirectSum direct_sum(const std::vector<ModulePtr>& parts) {
  if (parts.empty()) throw InvalidParameter("direct sum of no modules");
  const RingPtr& ring = parts.front()->ring_ptr();
  std::vector<std::int64_t> factors;
  std::vector<std::size_t> offsets;
  std::size_t total = 1, rank = 0;
  for (const auto& p : parts) {
    if (p->ring_ptr() != ring) throw InvalidParameter("direct sum over different rings");
    offsets.push_back(rank);
    rank += p->shape().rank();
    total *= p->size();
    if (total > kDefaultMaxModuleSize) throw BudgetExceeded("direct sum exceeds the module size budget");
    for (auto d : p->invariant_factors()) factors.push_back(d);
  }
  std::vector<IntMatrix> action;
  for (std::size_t j = 0; j < ring->rank(); ++j) {
    IntMatrix a(rank, rank);
    for (std::size_t t = 0; t < parts.size(); ++t) {
      const IntMatrix& pa = parts[t]->action()[j];
      for (std::size_t r = 0; r < pa.rows(); ++r)
        for (std::size_t c = 0; c < pa.cols(); ++c) a(offsets[t] + r, offsets[t] + c) = pa(r, c);
    }
    action.push_back(std::move(a));
  }
  // raw codes are x_0 + |M_0| x_1 + |M_0||M_1| x_2 + ...
  std::vector<Elem> gens;
  std::vector<Elem> place;
  Elem stride = 1;
  for (const auto& p : parts) {
    place.push_back(stride);
    for (Elem g : p->gens()) gens.push_back(g * stride);
    stride *= static_cast<Elem>(p->size());
  }
  auto raw = FinModule::create(ring, factors, std::move(action), std::move(gens));
  const SubmoduleModule norm = normalize_module(raw);
  const ModuleHom to_norm = inverse(norm.incl);
  DirectSum out{norm.module, {}, {}};
  for (std::size_t t = 0; t < parts.size(); ++t) {
    const Elem n = static_cast<Elem>(parts[t]->size());
    std::vector<Elem> inj(n), proj(raw->size());
    for (Elem x = 0; x < n; ++x) inj[x] = x * place[t];
    for (Elem z = 0; z < raw->size(); ++z) proj[z] = (z / place[t]) % n;
    out.inj.push_back(compose(to_norm, ModuleHom(parts[t], raw, std::move(inj))));
    out.proj.push_back(compose(ModuleHom(raw, parts[t], std::move(proj)), norm.incl));
  }
  return out;
}

namespace {

/// Enumerates tuples of generator images. `candidates[l]` lists the allowed
/// images of gens()[l].
void enumerate_gen_images(const ModulePtr& a, const ModulePtr& b, const std::vector<std::vector<Elem>>& candidates,
                          const std::function<bool(const ModuleHom&)>& f) {
  const auto& gens = a->gens();
  const auto& wit = a->basis_in_gens();
  const std::size_t m = gens.size();
  for (const auto& c : candidates)
    if (c.empty()) return;
  std::vector<std::size_t> idx(m, 0);
  std::vector<Elem> images(a->shape().rank());
  while (true) {
    for (std::size_t i = 0; i < images.size(); ++i) {
      Elem acc = 0;
      for (std::size_t l = 0; l < m; ++l) acc = b->add(acc, b->act(wit[i][l], candidates[l][idx[l]]));
      images[i] = acc;
    }
    if (auto h = ModuleHom::from_basis_images(a, b, images)) {
      bool consistent = true;
      for (std::size_t l = 0; l < m && consistent; ++l) consistent = (*h)(gens[l]) == candidates[l][idx[l]];
      if (consistent && !f(*h)) return;
    }
    std::size_t l = 0;
    while (l < m && ++idx[l] == candidates[l].size()) idx[l++] = 0;
    if (l == m) return;
  }
}

std::vector<Elem> ideal_generators(const FiniteRing& R, const ElementSet& ideal) {
  return R.canonical_generators(ideal);
}

}  // namespace

void for_each_hom(const ModulePtr& a, const ModulePtr& b, const std::function<bool(const ModuleHom&)>& f) {
  if (a->ring_ptr() != b->ring_ptr()) throw InvalidParameter("hom between modules over different rings");
  if (a->size() == 1) {
    f(ModuleHom::zero(a, b));
    return;
  }
  const FiniteRing& R = a->ring();
  std::vector<std::vector<Elem>> candidates;
  for (Elem g : a->gens()) {
    const auto ann = ideal_generators(R, a->annihilator(g));
    std::vector<Elem> c;
    for (Elem y = 0; y < b->size(); ++y) {
      bool ok = true;
      for (Elem r : ann)
        if (b->act(r, y) != 0) {
          ok = false;
          break;
        }
      if (ok) c.push_back(y);
    }
    candidates.push_back(std::move(c));
  }
  enumerate_gen_images(a, b, candidates, f);
}

std::vector<ModuleHom> hom_set(const ModulePtr& a, const ModulePtr& b) {
  std::vector<ModuleHom> out;
  for_each_hom(a, b, [&](const ModuleHom& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

std::size_t hom_count(const ModulePtr& a, const ModulePtr& b) {
  std::size_t n = 0;
  for_each_hom(a, b, [&](const ModuleHom&) {
    ++n;
    return true;
  });
  return n;
}

std::optional<ModuleHom> find_isomorphism(const ModulePtr& a, const ModulePtr& b) {
  if (a->ring_ptr() != b->ring_ptr()) return std::nullopt;
  if (a->invariant_factors() != b->invariant_factors()) return std::nullopt;
  const FiniteRing& R = a->ring();
  for (Elem r = 0; r < R.size(); ++r) {
    std::size_t ka = 0, kb = 0;
    for (Elem x = 0; x < a->size(); ++x) {
      ka += a->act(r, x) == 0;
      kb += b->act(r, x) == 0;
    }
    if (ka != kb) return std::nullopt;
  }
  if (a->size() == 1) return ModuleHom::zero(a, b);
  std::vector<std::vector<Elem>> candidates;
  std::vector<ElementSet> b_ann(b->size());
  for (Elem y = 0; y < b->size(); ++y) b_ann[y] = b->annihilator(y);
  for (Elem g : a->gens()) {
    const ElementSet ann = a->annihilator(g);
    std::vector<Elem> c;
    for (Elem y = 0; y < b->size(); ++y)
      if (b_ann[y] == ann) c.push_back(y);
    candidates.push_back(std::move(c));
  }
  std::optional<ModuleHom> found;
  enumerate_gen_images(a, b, candidates, [&](const ModuleHom& h) {
    if (!h.is_injective()) return true;
    found = h;
    return false;
  });
  return found;
}

HomGroup hom_group(const ModulePtr& a, const ModulePtr& b) {
  HomGroup out;
  const auto& gens = a->gens();
  std::set<std::vector<Elem>> span{std::vector<Elem>(gens.size(), 0)};
  for_each_hom(a, b, [&](const ModuleHom& h) {
    ++out.count;
    std::vector<Elem> key;
    for (Elem g : gens) key.push_back(h(g));
    if (span.contains(key)) return true;
    out.gens.push_back(h);
    std::vector<std::vector<Elem>> grown;
    for (const auto& s : span) {
      std::vector<Elem> t = s;
      while (true) {
        for (std::size_t l = 0; l < t.size(); ++l) t[l] = b->add(t[l], key[l]);
        if (t == s) break;
        grown.push_back(t);
      }
    }
    span.insert(grown.begin(), grown.end());
    return true;
  });
  return out;
}

std::size_t hom_span_size(const ModulePtr& a, const ModulePtr& b, const std::vector<ModuleHom>& gens) {
  const auto& ag = a->gens();
  std::set<std::vector<Elem>> span{std::vector<Elem>(ag.size(), 0)};
  for (const auto& h : gens) {
    std::vector<Elem> key;
    for (Elem g : ag) key.push_back(h(g));
    if (span.contains(key)) continue;
    std::vector<std::vector<Elem>> grown;
    for (const auto& s : span) {
      std::vector<Elem> t = s;
      while (true) {
        for (std::size_t l = 0; l < t.size(); ++l) t[l] = b->add(t[l], key[l]);
        if (t == s) break;
        grown.push_back(t);
      }
    }
    span.insert(grown.begin(), grown.end());
  }
  return span.size();
}

std::vector<ModulePtr> decompose(const ModulePtr& m) {
  if (m->size() == 1) return {};
  std::optional<ModuleHom> split;
  for_each_hom(m, m, [&](const ModuleHom& e) {
    if (e.is_zero()) return true;
    bool idempotent = true, identity = true;
    for (Elem x = 0; x < m->size() && idempotent; ++x) {
      idempotent = e(e(x)) == e(x);
      identity = identity && e(x) == x;
    }
    if (!idempotent || identity) return true;
    split = e;
    return false;
  });
  if (!split) return {m};
  const Submodule image = split->image();
  const Submodule kernel = split->kernel();
  auto out = decompose(submodule_as_module(image).module);
  for (auto& p : decompose(submodule_as_module(kernel).module)) out.push_back(std::move(p));
  return out;
}

bool is_isomorphic(const ModulePtr& a, const ModulePtr& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace prlab
