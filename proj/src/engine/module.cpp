#include "prlab/module.hpp"

#include <algorithm>

#include "detail.hpp"
#include "prlab/errors.hpp"

namespace prlab {

namespace {
constexpr std::size_t kExhaustiveActionBudget = std::size_t{1} << 22;
}

ModulePtr FinModule::create(RingPtr ring, std::vector<std::int64_t> invariant_factors,
                            std::vector<IntMatrix> action, std::vector<Elem> gens, std::size_t max_size) {
  if (!ring) throw InvalidParameter("module requires a ring");
  std::size_t size = 1;
  for (auto d : invariant_factors) {
    if (d < 2) throw InvalidParameter("module invariant factors must be >= 2");
    size *= static_cast<std::size_t>(d);
    if (size > max_size)
      throw BudgetExceeded("module of size > " + std::to_string(max_size) + " exceeds the size budget");
  }
  const std::size_t k = invariant_factors.size();
  const FiniteRing& R = *ring;
  if (action.size() != R.rank()) throw InvalidParameter("action needs one matrix per ring generator");
  for (auto& a : action)
    if (a.rows() != k || a.cols() != k) throw InvalidParameter("action matrices must be square of module rank");

  std::shared_ptr<FinModule> m(new FinModule());
  m->ring_ = std::move(ring);
  m->shape_ = Shape(std::move(invariant_factors));
  const Shape& sh = m->shape_;
  for (auto& a : action)
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) a(r, c) = mod_floor(a(r, c), sh.factors()[r]);
  m->action_ = std::move(action);

  // well-definedness on the additive relations of module and ring
  for (std::size_t j = 0; j < R.rank(); ++j)
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::int64_t> col(k);
      for (std::size_t r = 0; r < k; ++r) col[r] = m->action_[j](r, i);
      const Elem v = sh.encode(col);
      if (sh.scale(sh.factors()[i], v) != 0 || sh.scale(R.invariant_factors()[j], v) != 0)
        throw InvalidParameter("action matrix incompatible with additive orders");
    }

  std::vector<std::vector<Elem>> gen_act(R.rank(), std::vector<Elem>(size));
  for (std::size_t j = 0; j < R.rank(); ++j) {
    std::vector<Elem> col_codes(k);
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::int64_t> col(k);
      for (std::size_t r = 0; r < k; ++r) col[r] = m->action_[j](r, i);
      col_codes[i] = sh.encode(col);
    }
    for (Elem x = 0; x < size; ++x) {
      Elem acc = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const auto c = sh.coord(x, i);
        if (c) acc = sh.add(acc, sh.scale(c, col_codes[i]));
      }
      gen_act[j][x] = acc;
    }
  }
  m->act_.assign(R.size() * size, 0);
  for (Elem r = 0; r < R.size(); ++r) {
    const auto rc = R.shape().decode(r);
    for (Elem x = 0; x < size; ++x) {
      Elem acc = 0;
      for (std::size_t j = 0; j < R.rank(); ++j)
        if (rc[j]) acc = sh.add(acc, sh.scale(rc[j], gen_act[j][x]));
      m->act_[static_cast<std::size_t>(r) * size + x] = acc;
    }
  }

  for (Elem x = 0; x < size; ++x)
    if (m->act(R.one(), x) != x) throw InvalidParameter("1 does not act as the identity");
  std::vector<Elem> probe;
  if (R.size() * R.size() * size <= kExhaustiveActionBudget) {
    for (Elem r = 0; r < R.size(); ++r) probe.push_back(r);
  } else {
    for (std::size_t j = 0; j < R.rank(); ++j) probe.push_back(R.generator(j));
  }
  for (Elem r : probe)
    for (Elem s : probe) {
      const Elem rs = R.mul(r, s);
      for (Elem x = 0; x < size; ++x)
        if (m->act(rs, x) != m->act(r, m->act(s, x)))
          throw InvalidParameter("action does not respect ring multiplication");
    }

  if (!gens.empty()) {
    for (Elem g : gens)
      if (g >= size) throw InvalidParameter("generator out of range");
    if (m->span(gens).count() != size) throw InvalidParameter("gens do not generate the module");
    m->gens_ = std::move(gens);
  }
  return m;
}

ElementSet FinModule::cyclic(Elem x) const {
  ElementSet s(size());
  for (Elem r = 0; r < ring_->size(); ++r) s.set(act(r, x));
  return s;
}

ElementSet FinModule::sum(const ElementSet& a, const ElementSet& b) const {
  return detail::sum_sets(a, b, [this](Elem x, Elem y) { return add(x, y); });
}

ElementSet FinModule::span(const std::vector<Elem>& gens) const {
  ElementSet s(size());
  s.set(0);
  for (Elem g : gens)
    if (!s.test(g)) s = sum(s, cyclic(g));
  return s;
}

ElementSet FinModule::annihilator(Elem x) const {
  ElementSet s(ring_->size());
  for (Elem r = 0; r < ring_->size(); ++r)
    if (act(r, x) == 0) s.set(r);
  return s;
}

const std::vector<Elem>& FinModule::gens() const {
  std::call_once(gens_once_, [this] { build_generator_data(); });
  return gens_;
}

const std::vector<std::vector<Elem>>& FinModule::basis_in_gens() const {
  std::call_once(gens_once_, [this] { build_generator_data(); });
  return basis_in_gens_;
}

void FinModule::build_generator_data() const {
  if (gens_.empty()) {
    ElementSet span(size());
    span.set(0);
    std::size_t span_size = 1;
    while (span_size < size()) {
      Elem best = 0;
      std::size_t best_size = 0;
      for (Elem x = 0; x < size(); ++x) {
        if (span.test(x)) continue;
        const ElementSet c = cyclic(x);
        // |S + C| = |S| |C| / |S n C|
        const std::size_t grown = span_size * c.count() / (c & span).count();
        if (grown > best_size) {
          best_size = grown;
          best = x;
        }
      }
      gens_.push_back(best);
      span = sum(span, cyclic(best));
      span_size = span.count();
    }
  }
  const std::size_t m = gens_.size();
  std::vector<std::vector<Elem>> wit(size());
  ElementSet seen(size());
  seen.set(0);
  wit[0].assign(m, 0);
  std::vector<Elem> reached{0};
  for (std::size_t l = 0; l < m; ++l) {
    const std::vector<Elem> snapshot = reached;
    for (Elem s : snapshot)
      for (Elem r = 0; r < ring_->size(); ++r) {
        const Elem y = add(s, act(r, gens_[l]));
        if (seen.test(y)) continue;
        seen.set(y);
        wit[y] = wit[s];
        wit[y][l] = r;
        reached.push_back(y);
      }
  }
  basis_in_gens_.clear();
  for (std::size_t i = 0; i < shape_.rank(); ++i) basis_in_gens_.push_back(wit[shape_.basis(i)]);
}

ModulePtr regular_module(const RingPtr& ring) {
  const FiniteRing& R = *ring;
  std::vector<IntMatrix> action;
  for (std::size_t j = 0; j < R.rank(); ++j) {
    IntMatrix a(R.rank(), R.rank());
    for (std::size_t i = 0; i < R.rank(); ++i) {
      const auto col = R.shape().decode(R.mul(R.generator(j), R.generator(i)));
      for (std::size_t r = 0; r < R.rank(); ++r) a(r, i) = col[r];
    }
    action.push_back(std::move(a));
  }
  return FinModule::create(ring, R.invariant_factors(), std::move(action), {R.one()}, FiniteRing::kMaxSize);
}

ModulePtr zero_module(const RingPtr& ring) {
  std::vector<IntMatrix> action(ring->rank(), IntMatrix(0, 0));
  return FinModule::create(ring, {}, std::move(action));
}

// ---------------------------------------------------------------- Submodule

Submodule::Submodule(ModulePtr parent, ElementSet members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  size_ = members_.count();
  const FinModule& p = *parent_;
  canon_ = detail::greedy_generators(
      members_, [&p](Elem x) { return p.cyclic(x); }, [&p](Elem a, Elem b) { return p.add(a, b); });
}

Submodule Submodule::zero(const ModulePtr& parent) {
  ElementSet s(parent->size());
  s.set(0);
  return Submodule(parent, std::move(s));
}

Submodule Submodule::whole(const ModulePtr& parent) {
  ElementSet s(parent->size());
  for (Elem x = 0; x < parent->size(); ++x) s.set(x);
  return Submodule(parent, std::move(s));
}

Submodule Submodule::generated(const ModulePtr& parent, const std::vector<Elem>& gens) {
  return Submodule(parent, parent->span(gens));
}

std::strong_ordering operator<=>(const Submodule& a, const Submodule& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return a.canon_ <=> b.canon_;
}

Submodule meet(const Submodule& a, const Submodule& b) { return Submodule(a.parent_ptr(), a.members() & b.members()); }

Submodule join(const Submodule& a, const Submodule& b) {
  return Submodule(a.parent_ptr(), a.parent().sum(a.members(), b.members()));
}

// ---------------------------------------------------------------- ModuleHom

ModuleHom::ModuleHom(ModulePtr dom, ModulePtr cod, std::vector<Elem> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {}

std::optional<ModuleHom> ModuleHom::from_basis_images(const ModulePtr& dom, const ModulePtr& cod,
                                                      const std::vector<Elem>& images) {
  const Shape& ds = dom->shape();
  const Shape& cs = cod->shape();
  if (images.size() != ds.rank()) throw InvalidParameter("hom needs one image per domain basis vector");
  for (std::size_t i = 0; i < ds.rank(); ++i)
    if (cs.scale(ds.factors()[i], images[i]) != 0) return std::nullopt;
  auto eval = [&](Elem x) {
    Elem acc = 0;
    for (std::size_t i = 0; i < ds.rank(); ++i)
      if (const auto c = ds.coord(x, i)) acc = cs.add(acc, cs.scale(c, images[i]));
    return acc;
  };
  const FiniteRing& R = dom->ring();
  for (std::size_t j = 0; j < R.rank(); ++j) {
    const Elem g = R.generator(j);
    for (std::size_t i = 0; i < ds.rank(); ++i)
      if (eval(dom->act(g, ds.basis(i))) != cod->act(g, images[i])) return std::nullopt;
  }
  std::vector<Elem> table(dom->size());
  table[0] = 0;
  for (Elem x = 1; x < dom->size(); ++x) {
    std::size_t i = 0;
    while (ds.coord(x, i) == 0) ++i;
    table[x] = cs.add(table[x - ds.basis(i)], images[i]);
  }
  return ModuleHom(dom, cod, std::move(table));
}

ModuleHom ModuleHom::identity(const ModulePtr& m) {
  std::vector<Elem> t(m->size());
  for (Elem x = 0; x < m->size(); ++x) t[x] = x;
  return ModuleHom(m, m, std::move(t));
}

ModuleHom ModuleHom::zero(const ModulePtr& dom, const ModulePtr& cod) {
  return ModuleHom(dom, cod, std::vector<Elem>(dom->size(), 0));
}

std::vector<Elem> ModuleHom::matrix() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < dom_->shape().rank(); ++i) out.push_back(table_[dom_->shape().basis(i)]);
  return out;
}

bool ModuleHom::is_injective() const { return kernel().is_zero(); }

bool ModuleHom::is_surjective() const { return image().is_whole(); }

bool ModuleHom::is_zero() const {
  return std::all_of(table_.begin(), table_.end(), [](Elem y) { return y == 0; });
}

Submodule ModuleHom::image() const {
  ElementSet s(cod_->size());
  for (Elem y : table_) s.set(y);
  return Submodule(cod_, std::move(s));
}

Submodule ModuleHom::image(const Submodule& sub) const {
  ElementSet s(cod_->size());
  sub.members().for_each([&](Elem x) { s.set(table_[x]); });
  return Submodule(cod_, std::move(s));
}

Submodule ModuleHom::preimage(const Submodule& sub) const {
  ElementSet s(dom_->size());
  for (Elem x = 0; x < dom_->size(); ++x)
    if (sub.contains(table_[x])) s.set(x);
  return Submodule(dom_, std::move(s));
}

Submodule ModuleHom::kernel() const {
  ElementSet s(dom_->size());
  for (Elem x = 0; x < dom_->size(); ++x)
    if (table_[x] == 0) s.set(x);
  return Submodule(dom_, std::move(s));
}

bool ModuleHom::is_linear() const {
  const FinModule& d = *dom_;
  const FinModule& c = *cod_;
  for (Elem x = 0; x < d.size(); ++x) {
    for (Elem y = 0; y < d.size(); ++y)
      if (table_[d.add(x, y)] != c.add(table_[x], table_[y])) return false;
    for (Elem r = 0; r < d.ring().size(); ++r)
      if (table_[d.act(r, x)] != c.act(r, table_[x])) return false;
  }
  return true;
}

ModuleHom compose(const ModuleHom& g, const ModuleHom& f) {
  if (f.cod().size() != g.dom().size()) throw InvalidParameter("compose: codomain/domain mismatch");
  std::vector<Elem> t(f.dom().size());
  for (Elem x = 0; x < f.dom().size(); ++x) t[x] = g(f(x));
  return ModuleHom(f.dom_ptr(), g.cod_ptr(), std::move(t));
}

ModuleHom add_homs(const ModuleHom& f, const ModuleHom& g) {
  std::vector<Elem> t(f.dom().size());
  for (Elem x = 0; x < f.dom().size(); ++x) t[x] = f.cod().add(f(x), g(x));
  return ModuleHom(f.dom_ptr(), f.cod_ptr(), std::move(t));
}

ModuleHom inverse(const ModuleHom& f) {
  if (f.dom().size() != f.cod().size() || !f.is_injective()) throw InvalidParameter("inverse of non-bijective hom");
  std::vector<Elem> t(f.cod().size());
  for (Elem x = 0; x < f.dom().size(); ++x) t[f(x)] = x;
  return ModuleHom(f.cod_ptr(), f.dom_ptr(), std::move(t));
}

}  // namespace prlab
