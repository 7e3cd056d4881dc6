#include "prlab/universe.hpp"

#include <algorithm>
#include <deque>

#include "prlab/errors.hpp"
#include "prlab/injective.hpp"
#include "prlab/lattice.hpp"

namespace prlab {

std::vector<std::size_t> module_fingerprint(const FinModule& m) {
  std::vector<std::size_t> fp;
  for (auto d : m.invariant_factors()) fp.push_back(static_cast<std::size_t>(d));
  fp.push_back(0);
  for (Elem r = 0; r < m.ring().size(); ++r) {
    std::size_t k = 0;
    for (Elem x = 0; x < m.size(); ++x) k += m.act(r, x) == 0;
    fp.push_back(k);
  }
  return fp;
}

namespace {

bool rep_less(const ModulePtr& a, const ModulePtr& b) {
  if (a->size() != b->size()) return a->size() < b->size();
  if (a->invariant_factors() != b->invariant_factors()) return a->invariant_factors() < b->invariant_factors();
  for (std::size_t j = 0; j < a->action().size(); ++j) {
    const IntMatrix& x = a->action()[j];
    const IntMatrix& y = b->action()[j];
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t c = 0; c < x.cols(); ++c)
        if (x(r, c) != y(r, c)) return x(r, c) < y(r, c);
  }
  return false;
}

std::string join_labels(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "+") + p;
  return out;
}

}  // namespace

UniversePtr Universe::build(RingPtr ring, const std::vector<ModulePtr>& seeds, ClosurePolicy policy) {
  if (policy.sum_bound < 1) throw InvalidParameter("sum_bound must be >= 1");
  std::vector<ModulePtr> reps;
  std::vector<std::vector<std::size_t>> fps;
  std::deque<std::size_t> queue;
  auto add = [&](ModulePtr m, const std::string& construction) {
    if (m->size() > policy.max_module_size)
      throw BudgetExceeded("universe closure under " + construction + " produced a module of size " +
                           std::to_string(m->size()) + " > " + std::to_string(policy.max_module_size));
    m = normalize_module(m).module;
    auto fp = module_fingerprint(*m);
    for (std::size_t j = 0; j < reps.size(); ++j)
      if (fps[j] == fp && is_isomorphic(m, reps[j])) return false;
    reps.push_back(std::move(m));
    fps.push_back(std::move(fp));
    queue.push_back(reps.size() - 1);
    return true;
  };
  add(zero_module(ring), "seeds");
  add(regular_module(ring), "seeds");
  for (const auto& s : seeds) {
    if (s->ring_ptr() != ring) throw InvalidParameter("seed module over a different ring");
    add(s, "seeds");
  }
  std::vector<std::size_t> ind;
  while (true) {
    while (!queue.empty()) {
      const ModulePtr m = reps[queue.front()];
      queue.pop_front();
      if (policy.submodules || policy.quotients)
        for (const auto& s : submodules(m)) {
          if (policy.submodules) add(submodule_as_module(s).module, "submodules");
          if (policy.quotients) add(quotient(s).module, "quotients");
        }
      if (policy.injective_hulls) {
        InjectiveHull h;
        try {
          h = injective_hull(m, std::max(policy.max_module_size, kDefaultHullBudget));
        } catch (const BudgetExceeded& e) {
          throw BudgetExceeded(std::string("universe closure under injective hulls: ") + e.what());
        }
        add(h.module, "injective hulls");
      }
    }
    if (!policy.direct_sums) break;
    while (ind.size() < reps.size()) ind.push_back(decompose(reps[ind.size()]).size());
    bool grew = false;
    const std::size_t n = reps.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        if (ind[a] == 0 || ind[b] == 0 || ind[a] + ind[b] > policy.sum_bound) continue;
        if (reps[a]->size() * reps[b]->size() > policy.max_module_size)
          throw BudgetExceeded("universe closure under direct sums: " + std::to_string(reps[a]->size()) + " x " +
                               std::to_string(reps[b]->size()) + " exceeds the size cap");
        grew = add(direct_sum({reps[a], reps[b]}).module, "direct sums") || grew;
      }
    if (!grew && queue.empty()) break;
  }
  std::stable_sort(reps.begin(), reps.end(), rep_less);
  return from_reps(std::move(ring), std::move(reps), policy);
}

UniversePtr Universe::from_reps(RingPtr ring, std::vector<ModulePtr> reps, ClosurePolicy policy) {
  std::shared_ptr<Universe> u(new Universe());
  u->ring_ = std::move(ring);
  u->policy_ = policy;
  for (auto& m : reps) {
    if (m->ring_ptr() != u->ring_) throw UniverseMismatch("representative over a different ring");
    u->fingerprint_.push_back(module_fingerprint(*m));
  }
  u->reps_ = std::move(reps);
  const ModulePtr regular = regular_module(u->ring_);
  for (std::size_t i = 0; i < u->reps_.size(); ++i) {
    if (u->reps_[i]->size() == 1 && u->zero_ == kNoRep) u->zero_ = i;
    if (u->regular_ == kNoRep && u->fingerprint_[i] == module_fingerprint(*regular) &&
        is_isomorphic(u->reps_[i], regular))
      u->regular_ = i;
    u->ind_.push_back(decompose(u->reps_[i]).size());
  }
  u->build_caches();
  u->assign_labels();
  return u;
}

void Universe::build_caches() {
  const std::size_t n = reps_.size();
  homs_.clear();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) homs_.push_back(hom_group(reps_[a], reps_[b]));
  subs_.assign(n, {});
  fi_.assign(n, {});
  hulls_.assign(n, std::nullopt);
  bool subs_closed = true, quots_closed = true, hulls_closed = true;
  for (std::size_t i = 0; i < n; ++i) {
    const ModulePtr& m = reps_[i];
    for (auto& s : submodules(m)) {
      SubEntry e;
      const SubmoduleModule sm = submodule_as_module(s);
      if (s.is_whole()) {
        e.sub_rep = i;
        e.incl = ModuleHom::identity(m);
      } else if (auto c = try_classify(sm.module)) {
        e.sub_rep = c->rep;
        e.incl = compose(sm.incl, inverse(c->iso));
      } else {
        subs_closed = false;
      }
      const QuotientModule q = quotient(s);
      if (s.is_zero()) {
        e.quot_rep = i;
        e.proj = ModuleHom::identity(m);
      } else if (auto c = try_classify(q.module)) {
        e.quot_rep = c->rep;
        e.proj = compose(c->iso, q.proj);
      } else {
        quots_closed = false;
      }
      e.sub = std::move(s);
      subs_[i].push_back(std::move(e));
    }
    const auto& ends = homs(i, i).gens;
    for (std::size_t k = 0; k < subs_[i].size(); ++k) {
      const Submodule& s = subs_[i][k].sub;
      const bool invariant = std::all_of(ends.begin(), ends.end(), [&](const ModuleHom& f) {
        return std::all_of(s.canon().begin(), s.canon().end(), [&](Elem c) { return s.contains(f(c)); });
      });
      if (invariant) fi_[i].push_back(k);
    }
    if (policy_.injective_hulls) {
      const InjectiveHull h = injective_hull(m, std::max(policy_.max_module_size, kDefaultHullBudget));
      if (auto c = try_classify(h.module))
        hulls_[i] = HullEntry{c->rep, compose(c->iso, h.embed)};
      else
        hulls_closed = false;
    }
  }
  certificate_.has_zero_and_regular = zero_ != kNoRep && regular_ != kNoRep;
  bool distinct = true;
  for (std::size_t a = 0; a < n && distinct; ++a)
    for (std::size_t b = a + 1; b < n && distinct; ++b)
      if (fingerprint_[a] == fingerprint_[b] && is_isomorphic(reps_[a], reps_[b])) distinct = false;
  certificate_.pairwise_non_isomorphic = distinct;
  certificate_.submodules = subs_closed;
  certificate_.quotients = quots_closed;
  certificate_.injective_hulls = policy_.injective_hulls ? hulls_closed : false;
  bool sums_closed = true;
  for (std::size_t a = 0; a < n && sums_closed; ++a)
    for (std::size_t b = a; b < n && sums_closed; ++b) {
      if (ind_[a] == 0 || ind_[b] == 0 || ind_[a] + ind_[b] > policy_.sum_bound) continue;
      if (reps_[a]->size() * reps_[b]->size() > policy_.max_module_size) {
        sums_closed = false;
        continue;
      }
      sums_closed = try_classify(direct_sum({reps_[a], reps_[b]}).module).has_value();
    }
  certificate_.direct_sums = sums_closed;
}

void Universe::assign_labels() {
  const std::size_t n = reps_.size();
  labels_.assign(n, "");
  const RingFamilyInfo& fam = ring_->family();
  for (std::size_t i = 0; i < n; ++i) {
    const ModulePtr& m = reps_[i];
    std::vector<std::string> parts;
    switch (fam.kind) {
      case RingFamily::cyclic:
        for (auto d : m->invariant_factors()) parts.push_back("Z" + std::to_string(d));
        break;
      case RingFamily::product_cyclic: {
        const Elem e = ring_->shape().encode(fam.idempotent);
        const Elem f = ring_->shape().sub(ring_->one(), e);
        ElementSet em(m->size()), fm(m->size());
        for (Elem x = 0; x < m->size(); ++x) {
          em.set(m->act(e, x));
          fm.set(m->act(f, x));
        }
        const ModulePtr left = submodule_as_module(Submodule(m, em)).module;
        const ModulePtr right = submodule_as_module(Submodule(m, fm)).module;
        for (auto d : left->invariant_factors()) parts.push_back("Z" + std::to_string(d) + "x0");
        for (auto d : right->invariant_factors()) parts.push_back("0xZ" + std::to_string(d));
        break;
      }
      case RingFamily::upper_triangular: {
        const auto p = static_cast<std::size_t>(fam.a);
        const Elem e11 = ring_->generator(0);
        std::vector<int> kinds;
        for (const auto& s : decompose(m)) {
          if (s->size() == p) {
            bool identity = true;
            for (Elem x = 0; x < s->size(); ++x) identity = identity && s->act(e11, x) == x;
            // S2 is the simple socle of P, on which e11 acts as the identity
            kinds.push_back(identity ? 1 : 0);
          } else {
            kinds.push_back(2);
          }
        }
        std::sort(kinds.begin(), kinds.end());
        static const char* names[] = {"S1", "S2", "P"};
        for (int k : kinds) parts.push_back(names[k]);
        break;
      }
      case RingFamily::generic:
        parts.push_back(m->size() == 1 ? "0" : "N" + std::to_string(i));
        break;
    }
    labels_[i] = join_labels(parts);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (labels_[i] == labels_[j]) labels_[j] = "N" + std::to_string(j);
}

std::size_t Universe::find_label(const std::string& label) const {
  if (label == "R") return regular_;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return kNoRep;
}

std::size_t Universe::sub_index(std::size_t i, const Submodule& s) const {
  const auto& list = subs(i);
  auto it = std::lower_bound(list.begin(), list.end(), s,
                             [](const SubEntry& e, const Submodule& x) { return e.sub < x; });
  if (it == list.end() || !(it->sub == s)) throw InvalidParameter("not a submodule of the representative");
  return static_cast<std::size_t>(it - list.begin());
}

std::optional<Classification> Universe::try_classify(const ModulePtr& m) const {
  if (m->ring_ptr() != ring_) throw UniverseMismatch("module over a different ring");
  const auto fp = module_fingerprint(*m);
  for (std::size_t j = 0; j < reps_.size(); ++j) {
    if (fingerprint_[j] != fp) continue;
    if (auto iso = find_isomorphism(m, reps_[j])) return Classification{j, *iso};
  }
  return std::nullopt;
}

Classification Universe::classify(const ModulePtr& m) const {
  if (auto c = try_classify(m)) return *c;
  throw NotInUniverse("module of size " + std::to_string(m->size()) + " is not isomorphic to any representative");
}

ClosureCertificate Universe::verify() const {
  ClosureCertificate c;
  c.has_zero_and_regular = false;
  bool zero = false, regular = false;
  const ModulePtr reg = regular_module(ring_);
  for (const auto& m : reps_) {
    zero = zero || m->size() == 1;
    regular = regular || is_isomorphic(m, reg);
  }
  c.has_zero_and_regular = zero && regular;
  c.pairwise_non_isomorphic = true;
  for (std::size_t a = 0; a < reps_.size(); ++a)
    for (std::size_t b = a + 1; b < reps_.size(); ++b)
      if (is_isomorphic(reps_[a], reps_[b])) c.pairwise_non_isomorphic = false;
  c.submodules = c.quotients = true;
  for (const auto& m : reps_)
    for (const auto& s : submodules(m)) {
      c.submodules = c.submodules && try_classify(submodule_as_module(s).module).has_value();
      c.quotients = c.quotients && try_classify(quotient(s).module).has_value();
    }
  c.injective_hulls = policy_.injective_hulls;
  if (c.injective_hulls)
    for (const auto& m : reps_) {
      const InjectiveHull h = injective_hull(m, std::max(policy_.max_module_size, kDefaultHullBudget));
      c.injective_hulls = c.injective_hulls && is_injective(h.module) && is_essential(h.embed.image()) &&
                          try_classify(h.module).has_value();
    }
  c.direct_sums = true;
  for (std::size_t a = 0; a < reps_.size(); ++a)
    for (std::size_t b = a; b < reps_.size(); ++b) {
      const std::size_t ia = decompose(reps_[a]).size(), ib = decompose(reps_[b]).size();
      if (ia == 0 || ib == 0 || ia + ib > policy_.sum_bound) continue;
      if (reps_[a]->size() * reps_[b]->size() > policy_.max_module_size ||
          !try_classify(direct_sum({reps_[a], reps_[b]}).module))
        c.direct_sums = false;
    }
  return c;
}

}  // namespace prlab
