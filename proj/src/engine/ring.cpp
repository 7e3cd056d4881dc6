#include "prlab/ring.hpp"

#include <algorithm>
#include <functional>
#include <regex>

#include "detail.hpp"
#include "prlab/errors.hpp"
#include "prlab/int_matrix.hpp"

namespace prlab {

namespace {

constexpr std::size_t kExhaustiveAxiomBudget = std::size_t{1} << 21;

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

RingPtr FiniteRing::create(std::string name, std::vector<std::int64_t> invariant_factors,
                           StructureConstants products, std::vector<std::int64_t> one,
                           RingFamilyInfo family) {
  if (invariant_factors.empty()) throw InvalidParameter("the zero ring is not supported");
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (invariant_factors[i] < 2) throw InvalidParameter("ring invariant factors must be >= 2");
    if (i + 1 < invariant_factors.size() && invariant_factors[i + 1] % invariant_factors[i] != 0)
      throw InvalidParameter("ring invariant factors must form a divisibility chain");
  }
  std::size_t size = 1;
  for (auto d : invariant_factors) {
    size *= static_cast<std::size_t>(d);
    if (size > kMaxSize) throw BudgetExceeded("ring larger than " + std::to_string(kMaxSize) + " elements");
  }
  const std::size_t k = invariant_factors.size();
  if (products.size() != k) throw InvalidParameter("mult_table must have one row per additive generator");
  for (auto& row : products) {
    if (row.size() != k) throw InvalidParameter("mult_table rows must have one entry per additive generator");
    for (auto& v : row) {
      if (v.size() != k) throw InvalidParameter("mult_table entries must be coordinate vectors");
      for (std::size_t t = 0; t < k; ++t) v[t] = mod_floor(v[t], invariant_factors[t]);
    }
  }
  if (one.size() != k) throw InvalidParameter("one must be a coordinate vector");

  // d_i g_i = 0 forces d_i (g_i g_j) = 0 and d_j (g_i g_j) = 0.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t t = 0; t < k; ++t) {
        const auto c = products[i][j][t];
        if ((invariant_factors[i] * c) % invariant_factors[t] != 0 ||
            (invariant_factors[j] * c) % invariant_factors[t] != 0)
          throw InvalidParameter("mult_table incompatible with additive orders");
      }

  std::shared_ptr<FiniteRing> r(new FiniteRing());
  r->name_ = std::move(name);
  r->family_ = family;
  r->shape_ = Shape(invariant_factors);
  r->products_ = std::move(products);
  r->one_coords_ = std::move(one);
  for (std::size_t t = 0; t < k; ++t) r->one_coords_[t] = mod_floor(r->one_coords_[t], invariant_factors[t]);
  r->one_ = r->shape_.encode(r->one_coords_);

  const Shape& sh = r->shape_;
  std::vector<Elem> basis_products(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) basis_products[i * k + j] = sh.encode(r->products_[i][j]);
  r->mul_.assign(size * size, 0);
  std::vector<std::vector<std::int64_t>> coords(size);
  for (Elem x = 0; x < size; ++x) coords[x] = sh.decode(x);
  for (Elem a = 0; a < size; ++a)
    for (Elem b = 0; b < size; ++b) {
      Elem acc = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (coords[a][i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j) {
          if (coords[b][j] == 0) continue;
          acc = sh.add(acc, sh.scale(coords[a][i] * coords[b][j], basis_products[i * k + j]));
        }
      }
      r->mul_[static_cast<std::size_t>(a) * size + b] = acc;
    }

  for (Elem x = 0; x < size; ++x)
    if (r->mul(r->one_, x) != x || r->mul(x, r->one_) != x)
      throw InvalidParameter("one is not a two-sided identity");

  const bool exhaustive = size * size * size <= kExhaustiveAxiomBudget;
  std::vector<Elem> probe;
  if (exhaustive) {
    for (Elem x = 0; x < size; ++x) probe.push_back(x);
  } else {
    for (std::size_t i = 0; i < k; ++i) probe.push_back(sh.basis(i));
  }
  for (Elem a : probe)
    for (Elem b : probe)
      for (Elem c : probe) {
        if (r->mul(r->mul(a, b), c) != r->mul(a, r->mul(b, c)))
          throw InvalidParameter("multiplication is not associative");
        if (exhaustive && (r->mul(sh.add(a, b), c) != sh.add(r->mul(a, c), r->mul(b, c)) ||
                           r->mul(c, sh.add(a, b)) != sh.add(r->mul(c, a), r->mul(c, b))))
          throw InvalidParameter("multiplication is not distributive");
      }

  r->build_left_ideals();
  return r;
}

bool FiniteRing::is_commutative() const {
  for (Elem a = 0; a < size(); ++a)
    for (Elem b = a + 1; b < size(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

ElementSet FiniteRing::left_ideal_span(const std::vector<Elem>& gens) const {
  ElementSet span(size());
  span.set(0);
  auto add = [this](Elem a, Elem b) { return shape_.add(a, b); };
  for (Elem g : gens) {
    ElementSet c(size());
    for (Elem r = 0; r < size(); ++r) c.set(mul(r, g));
    span = detail::sum_sets(span, c, add);
  }
  return span;
}

std::vector<Elem> FiniteRing::canonical_generators(const ElementSet& ideal) const {
  auto add = [this](Elem a, Elem b) { return shape_.add(a, b); };
  auto cyclic = [this](Elem g) {
    ElementSet c(size());
    for (Elem r = 0; r < size(); ++r) c.set(mul(r, g));
    return c;
  };
  return detail::greedy_generators(ideal, cyclic, add);
}

void FiniteRing::build_left_ideals() {
  std::vector<ElementSet> cyclics;
  for (Elem x = 0; x < size(); ++x) {
    ElementSet c(size());
    for (Elem r = 0; r < size(); ++r) c.set(mul(r, x));
    cyclics.push_back(std::move(c));
  }
  auto add = [this](Elem a, Elem b) { return shape_.add(a, b); };
  auto ideals = detail::enumerate_sums(size(), cyclics, add);
  std::vector<std::pair<std::vector<Elem>, ElementSet>> keyed;
  for (auto& s : ideals) keyed.emplace_back(canonical_generators(s), std::move(s));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    const auto ca = a.second.count(), cb = b.second.count();
    if (ca != cb) return ca < cb;
    return a.first < b.first;
  });
  left_ideals_.clear();
  for (auto& [g, s] : keyed) left_ideals_.push_back(std::move(s));
}

bool FiniteRing::is_essential_left_ideal(const ElementSet& ideal) const {
  for (Elem r = 1; r < size(); ++r) {
    bool meets = false;
    for (Elem s = 0; s < size() && !meets; ++s) {
      const Elem sr = mul(s, r);
      meets = sr != 0 && ideal.test(sr);
    }
    if (!meets) return false;
  }
  return true;
}

ElementSet FiniteRing::colon(const ElementSet& ideal, Elem a) const {
  ElementSet out(size());
  for (Elem r = 0; r < size(); ++r)
    if (ideal.test(mul(r, a))) out.set(r);
  return out;
}

RingPtr make_zn(std::int64_t n) {
  if (n < 2) throw InvalidParameter("Z_n requires n >= 2");
  if (static_cast<std::size_t>(n) > FiniteRing::kMaxSize) throw BudgetExceeded("Z_n too large");
  return FiniteRing::create("z" + std::to_string(n), {n}, {{{1}}}, {1}, {RingFamily::cyclic, n, 0, {}});
}

namespace {

/// Re-expresses a ring given on raw cyclic coordinates (not necessarily a
/// divisibility chain) in invariant-factor coordinates.
RingPtr normalize_ring(std::string name, const std::vector<std::int64_t>& raw_factors,
                       const std::function<std::vector<std::int64_t>(const std::vector<std::int64_t>&,
                                                                     const std::vector<std::int64_t>&)>& raw_mul,
                       const std::vector<std::int64_t>& raw_one, RingFamilyInfo family) {
  const std::size_t k = raw_factors.size();
  IntMatrix d(k, k);
  for (std::size_t i = 0; i < k; ++i) d(i, i) = raw_factors[i];
  const SmithForm snf = smith_normal_form(d);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < k; ++i)
    if (snf.diag[i] != 1) keep.push_back(i);
  std::vector<std::int64_t> factors;
  for (auto i : keep) factors.push_back(snf.diag[i]);

  auto to_new = [&](const std::vector<std::int64_t>& raw) {
    std::vector<std::int64_t> out;
    for (auto t : keep) {
      std::int64_t v = 0;
      for (std::size_t j = 0; j < k; ++j) v += snf.left(t, j) * raw[j];
      out.push_back(mod_floor(v, snf.diag[t]));
    }
    return out;
  };
  std::vector<std::vector<std::int64_t>> basis;
  for (auto t : keep) {
    std::vector<std::int64_t> b(k);
    for (std::size_t j = 0; j < k; ++j) b[j] = mod_floor(snf.left_inv(j, t), raw_factors[j]);
    basis.push_back(std::move(b));
  }
  StructureConstants products(keep.size(), std::vector<std::vector<std::int64_t>>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) products[i][j] = to_new(raw_mul(basis[i], basis[j]));
  if (!family.idempotent.empty()) family.idempotent = to_new(family.idempotent);
  return FiniteRing::create(std::move(name), factors, std::move(products), to_new(raw_one), family);
}

}  // namespace

RingPtr product_ring(const FiniteRing& a, const FiniteRing& b) {
  if (a.size() * b.size() > FiniteRing::kMaxSize)
    throw BudgetExceeded("product ring exceeds " + std::to_string(FiniteRing::kMaxSize) + " elements");
  std::vector<std::int64_t> raw = a.invariant_factors();
  raw.insert(raw.end(), b.invariant_factors().begin(), b.invariant_factors().end());
  const std::size_t ka = a.rank();
  auto raw_mul = [&](const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
    std::vector<std::int64_t> xa(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(ka));
    std::vector<std::int64_t> xb(x.begin() + static_cast<std::ptrdiff_t>(ka), x.end());
    std::vector<std::int64_t> ya(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(ka));
    std::vector<std::int64_t> yb(y.begin() + static_cast<std::ptrdiff_t>(ka), y.end());
    auto pa = a.shape().decode(a.mul(a.shape().encode(xa), a.shape().encode(ya)));
    auto pb = b.shape().decode(b.mul(b.shape().encode(xb), b.shape().encode(yb)));
    pa.insert(pa.end(), pb.begin(), pb.end());
    return pa;
  };
  std::vector<std::int64_t> one = a.one_coords();
  one.insert(one.end(), b.one_coords().begin(), b.one_coords().end());
  RingFamilyInfo fam;
  if (a.family().kind == RingFamily::cyclic && b.family().kind == RingFamily::cyclic) {
    fam = {RingFamily::product_cyclic, a.family().a, b.family().a, a.one_coords()};
    fam.idempotent.resize(raw.size(), 0);
  }
  return normalize_ring(a.name() + "x" + b.name(), raw, raw_mul, one, fam);
}

RingPtr upper_triangular_2(std::int64_t p) {
  if (!is_prime(p)) throw InvalidParameter("upper_triangular_2 requires a prime");
  if (static_cast<std::size_t>(p * p * p) > FiniteRing::kMaxSize)
    throw InvalidParameter("upper_triangular_2: prime too large");
  // basis e11, e12, e22
  StructureConstants m(3, std::vector<std::vector<std::int64_t>>(3, std::vector<std::int64_t>(3, 0)));
  m[0][0] = {1, 0, 0};  // e11 e11 = e11
  m[0][1] = {0, 1, 0};  // e11 e12 = e12
  m[1][2] = {0, 1, 0};  // e12 e22 = e12
  m[2][2] = {0, 0, 1};  // e22 e22 = e22
  return FiniteRing::create("t2f" + std::to_string(p), {p, p, p}, m, {1, 0, 1},
                            {RingFamily::upper_triangular, p, 0, {}});
}

RingPtr builtin_ring(const std::string& name) {
  static const std::regex zn(R"(z(\d+))");
  static const std::regex prod(R"(z(\d+)xz(\d+))");
  static const std::regex t2(R"(t2f(\d+))");
  std::smatch m;
  if (std::regex_match(name, m, prod)) return product_ring(*make_zn(std::stoll(m[1])), *make_zn(std::stoll(m[2])));
  if (std::regex_match(name, m, zn)) return make_zn(std::stoll(m[1]));
  if (std::regex_match(name, m, t2)) return upper_triangular_2(std::stoll(m[1]));
  throw InvalidParameter("unknown builtin ring '" + name + "'");
}

}  // namespace prlab
