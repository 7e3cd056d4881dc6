#pragma once

// Brute-force reference computations used by the tests. They only read the
// raw addition and action tables of a module and never call library
// algorithms beyond those accessors.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "prlab/constructions.hpp"
#include "prlab/module.hpp"

namespace oracle {

using prlab::Elem;
using prlab::ModulePtr;

inline bool closed(const ModulePtr& m, const std::vector<bool>& in) {
  for (Elem x = 0; x < m->size(); ++x) {
    if (!in[x]) continue;
    for (Elem y = 0; y < m->size(); ++y)
      if (in[y] && !in[m->add(x, y)]) return false;
    for (Elem r = 0; r < m->ring().size(); ++r)
      if (!in[m->act(r, x)]) return false;
  }
  return in[0];
}

/// Every subset closed under + and the action; only for |M| <= 16.
inline std::vector<std::vector<bool>> submodules(const ModulePtr& m) {
  std::vector<std::vector<bool>> out;
  const std::size_t n = m->size();
  for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {
    std::vector<bool> in(n);
    for (std::size_t i = 0; i < n; ++i) in[i] = (mask >> i) & 1u;
    if (closed(m, in)) out.push_back(in);
  }
  return out;
}

/// Every R-linear map, found among all assignments of basis images.
inline std::vector<std::vector<Elem>> homs(const ModulePtr& a, const ModulePtr& b) {
  std::vector<std::vector<Elem>> out;
  const std::size_t k = a->shape().rank();
  std::vector<Elem> img(k, 0);
  while (true) {
    std::vector<Elem> t(a->size());
    for (Elem x = 0; x < a->size(); ++x) {
      Elem acc = 0;
      for (std::size_t i = 0; i < k; ++i)
        for (std::int64_t c = 0; c < a->shape().coord(x, i); ++c) acc = b->add(acc, img[i]);
      t[x] = acc;
    }
    bool ok = true;
    for (Elem x = 0; x < a->size() && ok; ++x) {
      for (Elem y = 0; y < a->size() && ok; ++y) ok = t[a->add(x, y)] == b->add(t[x], t[y]);
      for (Elem r = 0; r < a->ring().size() && ok; ++r) ok = t[a->act(r, x)] == b->act(r, t[x]);
    }
    if (ok) out.push_back(std::move(t));
    std::size_t i = 0;
    while (i < k && ++img[i] == b->size()) img[i++] = 0;
    if (i == k) break;
  }
  return out;
}

/// Every nonzero submodule meets `sub`.
inline bool essential(const ModulePtr& m, const std::vector<bool>& sub) {
  for (const auto& s : submodules(m)) {
    bool nonzero = false, meets = false;
    for (Elem x = 1; x < m->size(); ++x)
      if (s[x]) {
        nonzero = true;
        meets = meets || sub[x];
      }
    if (nonzero && !meets) return false;
  }
  return true;
}

/// Every natural table over `reps`: one submodule per module such that every
/// hom f: reps[i] -> reps[j] (endomorphisms included) maps the i-th value into
/// the j-th. Tables are returned as membership vectors.
inline std::vector<std::vector<std::vector<bool>>> preradical_tables(const std::vector<ModulePtr>& reps) {
  const std::size_t n = reps.size();
  std::vector<std::vector<std::vector<bool>>> subs(n);
  for (std::size_t i = 0; i < n; ++i) subs[i] = submodules(reps[i]);
  std::vector<std::vector<std::vector<std::vector<Elem>>>> h(n, std::vector<std::vector<std::vector<Elem>>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = homs(reps[i], reps[j]);
  std::vector<std::vector<std::vector<bool>>> out;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        for (const auto& f : h[i][j]) {
          for (Elem x = 0; x < reps[i]->size() && ok; ++x)
            if (subs[i][pick[i]][x] && !subs[j][pick[j]][f[x]]) ok = false;
          if (!ok) break;
        }
    if (ok) {
      std::vector<std::vector<bool>> t;
      for (std::size_t i = 0; i < n; ++i) t.push_back(subs[i][pick[i]]);
      out.push_back(std::move(t));
    }
    std::size_t i = 0;
    while (i < n && ++pick[i] == subs[i].size()) pick[i++] = 0;
    if (i == n) break;
  }
  return out;
}

struct FilterCounts {
  std::size_t linear = 0;
  std::size_t gabriel = 0;
};

/// Counts linear and Gabriel filters among all subsets of left ideals, with
/// every axiom evaluated from the multiplication table.
inline FilterCounts filter_counts(const prlab::FiniteRing& r) {
  const std::size_t n = r.size();
  std::vector<std::vector<bool>> ideals;
  for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {
    std::vector<bool> in(n);
    for (std::size_t i = 0; i < n; ++i) in[i] = (mask >> i) & 1u;
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x)
      for (Elem y = 0; y < n && ok; ++y)
        if (in[x] && ((in[y] && !in[r.add(x, y)]) || !in[r.mul(y, x)])) ok = false;
    if (ok) ideals.push_back(in);
  }
  const std::size_t k = ideals.size();
  auto index = [&](const std::vector<bool>& s) {
    for (std::size_t i = 0; i < k; ++i)
      if (ideals[i] == s) return i;
    return k;
  };
  auto colon = [&](const std::vector<bool>& s, Elem a) {
    std::vector<bool> out(n);
    for (Elem x = 0; x < n; ++x) out[x] = s[r.mul(x, a)];
    return out;
  };
  auto subset = [&](const std::vector<bool>& a, const std::vector<bool>& b) {
    for (std::size_t x = 0; x < n; ++x)
      if (a[x] && !b[x]) return false;
    return true;
  };
  FilterCounts out;
  for (std::uint64_t f = 1; f < (std::uint64_t{1} << k); ++f) {
    auto in = [&](std::size_t i) { return i < k && ((f >> i) & 1u); };
    bool linear = in(index(std::vector<bool>(n, true)));
    for (std::size_t i = 0; i < k && linear; ++i) {
      if (!in(i)) continue;
      for (std::size_t j = 0; j < k && linear; ++j) {
        if (subset(ideals[i], ideals[j]) && !in(j)) linear = false;
        if (in(j)) {
          std::vector<bool> both(n);
          for (std::size_t x = 0; x < n; ++x) both[x] = ideals[i][x] && ideals[j][x];
          if (!in(index(both))) linear = false;
        }
      }
      for (Elem a = 0; a < n && linear; ++a)
        if (!in(index(colon(ideals[i], a)))) linear = false;
    }
    if (!linear) continue;
    ++out.linear;
    bool gabriel = true;
    for (std::size_t j = 0; j < k && gabriel; ++j) {
      if (in(j)) continue;
      for (std::size_t i = 0; i < k && gabriel; ++i) {
        if (!in(i)) continue;
        bool every = true;
        for (Elem a = 0; a < n; ++a)
          if (ideals[i][a] && !in(index(colon(ideals[j], a)))) every = false;
        if (every) gabriel = false;
      }
    }
    if (gabriel) ++out.gabriel;
  }
  return out;
}

/// Random module: a direct sum of cyclic modules R/I, sometimes passed
/// through a random submodule or quotient.
inline ModulePtr random_module(const prlab::RingPtr& ring, std::mt19937& rng, std::size_t max_size) {
  const auto reg = prlab::regular_module(ring);
  const auto& ideals = ring->left_ideals();
  while (true) {
    std::uniform_int_distribution<std::size_t> count(1, 2), pick(0, ideals.size() - 1);
    std::vector<ModulePtr> parts;
    std::size_t size = 1;
    const std::size_t n = count(rng);
    for (std::size_t i = 0; i < n; ++i) {
      auto q = prlab::quotient(prlab::Submodule(reg, ideals[pick(rng)])).module;
      if (q->size() == 1) continue;
      parts.push_back(q);
      size *= q->size();
    }
    if (parts.empty() || size > max_size) continue;
    auto m = prlab::direct_sum(parts).module;
    std::uniform_int_distribution<int> mode(0, 3);
    const int md = mode(rng);
    if (md == 0 && m->size() > 1) {
      std::uniform_int_distribution<Elem> el(1, static_cast<Elem>(m->size() - 1));
      return prlab::submodule_as_module(prlab::Submodule::generated(m, {el(rng)})).module;
    }
    if (md == 1 && m->size() > 1) {
      std::uniform_int_distribution<Elem> el(1, static_cast<Elem>(m->size() - 1));
      return prlab::quotient(prlab::Submodule::generated(m, {el(rng)})).module;
    }
    return m;
  }
}

}  // namespace oracle
