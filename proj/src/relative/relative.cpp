#include "prlab/relative.hpp"

#include <functional>

#include "prlab/constructions.hpp"
#include "prlab/errors.hpp"
#include "prlab/lattice.hpp"

namespace prlab {

namespace {

// incl^{-1} o f, for f landing in the image of the injective map incl.
ModuleHom lift_through(const ModuleHom& incl, const ModuleHom& f) {
  std::vector<Elem> back(incl.cod().size(), 0);
  for (Elem y = 0; y < incl.dom().size(); ++y) back[incl(y)] = y;
  std::vector<Elem> t(f.dom().size());
  for (Elem x = 0; x < t.size(); ++x) t[x] = back[f(x)];
  return ModuleHom(f.dom_ptr(), incl.dom_ptr(), std::move(t));
}

const HullEntry& require_hull(const Universe& u, std::size_t m) {
  const auto& h = u.hull(m);
  if (!h) throw NotInUniverse("injective hull of " + u.label(m) + " is not in the universe");
  return *h;
}

// Every hom from K into m extends along the inclusion of K into N.
bool extends(const Universe& u, std::size_t n, const SubEntry& e, std::size_t m, bool unique) {
  if (e.sub_rep == kNoRep) throw NotInUniverse("submodule of " + u.label(n) + " is not classified");
  std::vector<ModuleHom> restricted;
  for (const auto& g : u.homs(n, m).gens) restricted.push_back(compose(g, e.incl));
  const std::size_t target = u.homs(e.sub_rep, m).count;
  if (hom_span_size(u.rep(e.sub_rep), u.rep(m), restricted) != target) return false;
  return !unique || u.homs(n, m).count == target;
}

InjectivityResult extension_test(const Preradical& s, std::size_t m, bool regular_only, bool unique) {
  const Universe& u = s.universe();
  for (std::size_t n = 0; n < u.size(); ++n) {
    if (regular_only && n != u.regular_index()) continue;
    for (const auto& e : u.subs(n)) {
      if (!s.at_quotient(n, e.sub).is_whole()) continue;
      if (!extends(u, n, e, m, unique)) return {false, n, e.sub};
    }
  }
  return {};
}

}  // namespace

DensityCert is_dense(const Preradical& sigma, std::size_t m, const Submodule& n) {
  const SubEntry& e = sigma.universe().entry(m, n);
  if (e.quot_rep == kNoRep) throw NotInUniverse("quotient is not classified");
  return {m, n, e.quot_rep, sigma.is_torsion(e.quot_rep)};
}

bool is_pure(const Preradical& sigma, std::size_t m, const Submodule& n) { return sigma.is_torsion_free_quotient(m, n); }

const char* to_string(InjectivityMode m) {
  switch (m) {
    case InjectivityMode::definitional: return "definitional";
    case InjectivityMode::purity: return "purity";
    case InjectivityMode::baer: return "baer";
  }
  return "?";
}

InjectivityResult is_sigma_injective(const Preradical& sigma, std::size_t m, InjectivityMode mode) {
  switch (mode) {
    case InjectivityMode::definitional: return extension_test(sigma, m, false, false);
    case InjectivityMode::baer: return extension_test(sigma, m, true, false);
    case InjectivityMode::purity: {
      const HullEntry& h = require_hull(sigma.universe(), m);
      InjectivityResult r;
      r.holds = is_pure(sigma, h.rep, h.embed.image());
      if (!r.holds) {
        r.n_rep = h.rep;
        r.k = h.embed.image();
      }
      return r;
    }
  }
  return {};
}

SigmaHull sigma_injective_hull(const Preradical& sigma, std::size_t m) {
  const Universe& u = sigma.universe();
  const HullEntry& h = require_hull(u, m);
  SigmaHull out;
  out.rep = m;
  out.ambient = h.rep;
  out.ambient_embed = h.embed;
  out.purified = purification(sigma, h.rep, h.embed.image());
  if (out.purified == h.embed.image()) {
    out.hull_rep = m;
    out.embed = ModuleHom::identity(u.rep(m));
    return out;
  }
  const SubEntry& e = u.entry(h.rep, out.purified);
  if (e.sub_rep == kNoRep) throw NotInUniverse("sigma-injective hull is not classified");
  out.hull_rep = e.sub_rep;
  out.embed = lift_through(e.incl, h.embed);
  return out;
}

std::optional<Submodule> pseudocomplement(const Preradical& sigma, std::size_t m, const Submodule& n) {
  for (const auto& e : sigma.universe().subs(m)) {
    if (!meet(n, e.sub).is_zero()) continue;
    const Submodule sum = join(n, e.sub);
    if (is_essential(sum) && sigma.at_quotient(m, sum).is_whole()) return e.sub;
  }
  return std::nullopt;
}

std::vector<std::size_t> subp(const Preradical& sigma, std::size_t m) {
  std::vector<std::size_t> out;
  const auto& subs = sigma.universe().subs(m);
  for (std::size_t k = 0; k < subs.size(); ++k)
    if (pseudocomplement(sigma, m, subs[k].sub)) out.push_back(k);
  return out;
}

bool is_absolutely_pure(const Preradical& sigma, std::size_t m) {
  return sigma.is_torsion_free(m) && is_sigma_injective(sigma, m, InjectivityMode::definitional).holds;
}

bool unique_extension_check(const Preradical& sigma, std::size_t m) {
  return extension_test(sigma, m, false, true).holds;
}

Localization localize(const Preradical& sigma, std::size_t m) {
  const Universe& u = sigma.universe();
  const SubEntry& e = u.entry(m, sigma.value(m));
  if (e.quot_rep == kNoRep) throw NotInUniverse("quotient is not classified");
  const SigmaHull h = sigma_injective_hull(sigma, e.quot_rep);
  return {m, h.hull_rep, compose(h.embed, e.proj)};
}

std::vector<ModuleHom> localize_hom(const Preradical& sigma, const ModuleHom& f, std::size_t m, std::size_t n) {
  const Universe& u = sigma.universe();
  const Localization lm = localize(sigma, m), ln = localize(sigma, n);
  const ModuleHom target = compose(ln.eta, f);
  std::vector<ModuleHom> out;
  for_each_hom(u.rep(lm.q_rep), u.rep(ln.q_rep), [&](const ModuleHom& g) {
    if (compose(g, lm.eta) == target) out.push_back(g);
    return true;
  });
  return out;
}

namespace {

std::string universe_name(const Universe& u) {
  return u.ring().name() + " sum_bound=" + std::to_string(u.policy().sum_bound) + " reps=" + std::to_string(u.size());
}

// Q(sigma(M)) as a rep index.
std::size_t q_of_sigma(const Preradical& s, std::size_t m) {
  const auto& e = s.universe().entry(m, s.value(m));
  return localize(s, e.sub_rep).q_rep;
}

// sigma(Q(M)) as a rep index.
std::size_t sigma_of_q(const Preradical& s, std::size_t m) {
  const std::size_t q = localize(s, m).q_rep;
  return s.universe().entry(q, s.value(q)).sub_rep;
}

}  // namespace

CheckReport localization_report(const Preradical& s) {
  const Universe& u = s.universe();
  const std::string un = universe_name(u);
  CheckReport report;
  auto add = [&](std::string id, std::string hyp, bool applicable, const std::function<std::string()>& run) {
    ClaimResult c;
    c.id = std::move(id);
    c.hypotheses = std::move(hyp);
    c.universe = un;
    if (!applicable) {
      report.claims.push_back(std::move(c));
      return;
    }
    c.instances = 1;
    c.witness = run();
    c.status = c.witness.empty() ? ClaimStatus::pass : ClaimStatus::fail;
    report.claims.push_back(std::move(c));
  };

  add("localization.q_sigma_zero_iff_idempotent", "any", true, [&]() -> std::string {
    bool zero = true;
    for (std::size_t m = 0; m < u.size(); ++m) zero = zero && q_of_sigma(s, m) == u.zero_index();
    if (zero == is_idempotent(s)) return "";
    return std::string("Q(sigma) = 0 is ") + (zero ? "true" : "false") + " but idempotent is " +
           (zero ? "false" : "true");
  });
  add("localization.commutes_iff_left_exact_radical", "any", true, [&]() -> std::string {
    bool commute = true;
    for (std::size_t m = 0; m < u.size(); ++m) commute = commute && q_of_sigma(s, m) == sigma_of_q(s, m);
    const bool ler = is_left_exact(s) && is_radical(s);
    if (commute == ler) return "";
    return std::string("Q sigma = sigma Q is ") + (commute ? "true" : "false") + " but left exact radical is " +
           (ler ? "true" : "false");
  });

  const bool ler = is_left_exact(s) && is_radical(s);
  const std::string hyp = "sigma left exact radical";
  auto per_rep = [&](const std::function<bool(std::size_t)>& ok) -> std::string {
    for (std::size_t m = 0; m < u.size(); ++m)
      if (!ok(m)) return "M = " + u.label(m);
    return "";
  };
  add("localization.ker_eta_torsion", hyp, ler, [&] {
    return per_rep([&](std::size_t m) { return s.is_torsion_sub(m, localize(s, m).eta.kernel()); });
  });
  add("localization.coker_eta_torsion_free", hyp, ler, [&] {
    return per_rep([&](std::size_t m) {
      const Localization l = localize(s, m);
      return s.is_torsion_free_quotient(l.q_rep, l.eta.image());
    });
  });
  report.claims.back().expected_fail = true;
  add("localization.coker_eta_torsion", hyp, ler, [&] {
    return per_rep([&](std::size_t m) {
      const Localization l = localize(s, m);
      return s.at_quotient(l.q_rep, l.eta.image()).is_whole();
    });
  });
  add("localization.q_idempotent", hyp, ler, [&] {
    return per_rep([&](std::size_t m) {
      const std::size_t q = localize(s, m).q_rep;
      return localize(s, q).q_rep == q;
    });
  });
  add("localization.eta_natural", hyp, ler, [&]() -> std::string {
    for (std::size_t m = 0; m < u.size(); ++m)
      for (std::size_t n = 0; n < u.size(); ++n)
        for (const auto& f : u.homs(m, n).gens)
          if (localize_hom(s, f, m, n).size() != 1) return "f: " + u.label(m) + " -> " + u.label(n);
    return "";
  });
  add("localization.eta_of_q_is_identity", hyp, ler, [&] {
    return per_rep([&](std::size_t m) {
      const std::size_t q = localize(s, m).q_rep;
      const Localization lq = localize(s, q);
      return lq.q_rep == q && lq.eta == ModuleHom::identity(u.rep(q));
    });
  });
  add("localization.q_of_eta_is_identity", hyp, ler, [&] {
    return per_rep([&](std::size_t m) {
      const Localization l = localize(s, m);
      const auto g = localize_hom(s, l.eta, m, l.q_rep);
      return g.size() == 1 && localize(s, l.q_rep).q_rep == l.q_rep && g[0] == ModuleHom::identity(u.rep(l.q_rep));
    });
  });
  return report;
}

}  // namespace prlab
