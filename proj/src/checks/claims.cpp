#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "prlab/checks.hpp"
#include "prlab/constructions.hpp"
#include "prlab/errors.hpp"
#include "prlab/filters.hpp"
#include "prlab/injective.hpp"
#include "prlab/lattice.hpp"
#include "prlab/relative.hpp"

namespace prlab {

namespace {

struct Ctx {
  UniversePtr u;
  std::vector<Preradical> tables;
  bool exhaustive = false;
  std::size_t pair_n = 0;
  std::string uname;
  std::vector<TraitReport> tr;
  std::vector<Preradical> hat_, bar_, tilde_, circ_, sq_;
  // [table][rep]
  std::vector<std::vector<char>> def, pur, baer;

  mutable std::vector<std::optional<CheckReport>> loc;
  mutable std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> subp_;
  mutable std::vector<std::optional<bool>> qi;

  const CheckReport& localization(std::size_t k) const {
    if (!loc[k]) loc[k] = localization_report(tables[k]);
    return *loc[k];
  }
  const std::vector<std::size_t>& subp_of(std::size_t k, std::size_t m) const {
    auto it = subp_.find({k, m});
    if (it == subp_.end()) it = subp_.emplace(std::pair{k, m}, subp(tables[k], m)).first;
    return it->second;
  }
  bool quasi_injective(std::size_t m) const {
    if (!qi[m]) qi[m] = is_quasi_injective(u->rep(m));
    return *qi[m];
  }
};

struct Tally {
  std::size_t instances = 0;
  bool failed = false;
  std::string witness;
  std::string evidence;

  template <class W>
  void check(bool ok, W&& why) {
    ++instances;
    if (!ok && !failed) {
      failed = true;
      witness = why();
    }
  }
};

using ClaimFn = std::function<void(const Ctx&, Tally&)>;

struct Claim {
  ClaimInfo info;
  ClaimFn run;
};

std::string describe(const Preradical& s) {
  const Universe& u = s.universe();
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (s.is_torsion_free(i)) continue;
    if (!first) out += ", ";
    first = false;
    const auto& v = s.value(i);
    out += u.label(i) + ": " + (v.is_whole() ? std::string("all") : u.label(u.entry(i, v).sub_rep));
  }
  return out + "}";
}

std::string at(const Universe& u, std::size_t m) { return "M = " + u.label(m); }

std::string at(const Universe& u, std::size_t m, const Submodule& n) {
  return "M = " + u.label(m) + ", N ~ " + u.label(u.entry(m, n).sub_rep);
}

bool dense(const Preradical& s, std::size_t m, const Submodule& n) { return s.at_quotient(m, n).is_whole(); }
bool pure(const Preradical& s, std::size_t m, const Submodule& n) { return s.is_torsion_free_quotient(m, n); }

bool same_torsion(const Preradical& a, const Preradical& b) {
  for (std::size_t i = 0; i < a.universe().size(); ++i)
    if (a.is_torsion(i) != b.is_torsion(i)) return false;
  return true;
}

bool same_torsion_free(const Preradical& a, const Preradical& b) {
  for (std::size_t i = 0; i < a.universe().size(); ++i)
    if (a.is_torsion_free(i) != b.is_torsion_free(i)) return false;
  return true;
}

Submodule doubles(const ModulePtr& m) {
  std::vector<Elem> g;
  for (Elem x = 0; x < m->size(); ++x) g.push_back(m->add(x, x));
  return Submodule::generated(m, g);
}

template <class F>
void each_table(const Ctx& c, F&& f) {
  for (std::size_t k = 0; k < c.tables.size(); ++k) f(k, c.tables[k]);
}

template <class F>
void each_pair(const Ctx& c, F&& f) {
  for (std::size_t a = 0; a < c.pair_n; ++a)
    for (std::size_t b = 0; b < c.pair_n; ++b) f(a, b, c.tables[a], c.tables[b]);
}

std::string pair_desc(const Preradical& a, const Preradical& b) { return describe(a) + " and " + describe(b); }

bool ess_idem(const Ctx& c, std::size_t k) { return c.tr[k].essentially_idempotent.holds; }
bool idem(const Ctx& c, std::size_t k) { return c.tr[k].idempotent.holds; }
bool rad(const Ctx& c, std::size_t k) { return c.tr[k].radical.holds; }
bool preh(const Ctx& c, std::size_t k) { return c.tr[k].prehereditary.holds; }
bool lex(const Ctx& c, std::size_t k) { return c.tr[k].left_exact.holds; }

// Regular module onto the regular rep, to move left ideals into the universe.
ModuleHom regular_iso(const Universe& u) { return u.classify(regular_module(u.ring_ptr())).iso; }

bool has_pseudocomplement(const Preradical& s, std::size_t m, const Submodule& n) {
  return pseudocomplement(s, m, n).has_value();
}

std::vector<Claim> build_registry() {
  std::vector<Claim> r;
  auto add = [&](std::string id, std::string statement, std::string hyp, ClaimFn fn, bool xfail = false) {
    r.push_back({{std::move(id), std::move(statement), std::move(hyp), xfail}, std::move(fn)});
  };

  // ------------------------------------------------------------ preradicals

  add("counterexample.z4xz4",
      "over Z4xZ4 with I = Z4x2Z4: alpha^R_I(0xZ4) = 0x2Z4, hat(alpha^R_I)(0xZ4) = 0, hat(alpha^R_I)(R) = Z4x0, "
      "and alpha^R_I is not essentially idempotent",
      "ring Z4xZ4", [](const Ctx& c, Tally& t) {
        const auto& fam = c.u->ring().family();
        if (fam.kind != RingFamily::product_cyclic || fam.a != 4 || fam.b != 4) return;
        const auto& u = c.u;
        const std::size_t r = u->regular_index(), z = u->find_label("0xZ4");
        if (z == kNoRep) return;
        const auto& rm = u->rep(r);
        const Elem e = u->ring().shape().encode(fam.idempotent);
        std::vector<Elem> eg;
        for (Elem x = 0; x < rm->size(); ++x) eg.push_back(rm->act(e, x));
        const Submodule er = Submodule::generated(rm, eg);
        const Submodule ideal = join(er, doubles(rm));
        const auto a = alpha(u, r, ideal);
        const auto h = hat(a);
        t.check(a.value(z) == doubles(u->rep(z)), [] { return std::string("alpha^R_I(0xZ4) != 0x2Z4"); });
        t.check(h.value(z).is_zero(), [] { return std::string("hat(alpha^R_I)(0xZ4) != 0"); });
        t.check(h.value(r) == er, [] { return std::string("hat(alpha^R_I)(R) != Z4x0"); });
        const auto ei = traits(a).essentially_idempotent;
        t.check(!ei.holds, [] { return std::string("alpha^R_I is essentially idempotent"); });
        if (ei.witness) t.evidence = "witness " + u->label(ei.witness->rep);
      });

  add("alpha_omega.bounds", "alpha^M_N(M) = N = omega^M_N(M), and sigma(M) = N iff alpha^M_N <= sigma <= omega^M_N",
      "N fully invariant in M", [](const Ctx& c, Tally& t) {
        const auto& u = c.u;
        for (std::size_t m = 0; m < u->size(); ++m)
          for (std::size_t k : u->fully_invariant(m)) {
            const Submodule& n = u->subs(m)[k].sub;
            const auto a = alpha(u, m, n), w = omega(u, m, n);
            t.check(a.value(m) == n && w.value(m) == n, [&] { return at(*u, m, n); });
            each_table(c, [&](std::size_t, const Preradical& s) {
              t.check((s.value(m) == n) == (leq(a, s) && leq(s, w)), [&] { return at(*u, m, n) + " " + describe(s); });
            });
          }
      });

  add("lattice.operations_natural", "joins, meets, products and coproducts of preradicals are preradicals", "any",
      [](const Ctx& c, Tally& t) {
        each_pair(c, [&](std::size_t, std::size_t, const Preradical& a, const Preradical& b) {
          bool ok = true;
          try {
            (void)join(a, b);
            (void)meet(a, b);
            (void)prod(a, b);
            (void)coprod(a, b);
          } catch (const InvalidParameter&) {
            ok = false;
          }
          t.check(ok, [&] { return pair_desc(a, b); });
        });
      });

  add("operators.extremal",
      "hat, bar, tilde, circ and square are the greatest idempotent / least radical / least left exact / greatest "
      "essentially idempotent / least prehereditary tables below or above sigma",
      "exhaustive enumeration", [](const Ctx& c, Tally& t) {
        if (!c.exhaustive) return;
        for (std::size_t k = 0; k < c.pair_n; ++k) {
          const auto& s = c.tables[k];
          bool ok = is_idempotent(c.hat_[k]) && leq(c.hat_[k], s) && is_radical(c.bar_[k]) && leq(s, c.bar_[k]) &&
                    is_left_exact(c.tilde_[k]) && leq(s, c.tilde_[k]) && is_essentially_idempotent(c.circ_[k]) &&
                    leq(c.circ_[k], s) && is_prehereditary(c.sq_[k]) && leq(s, c.sq_[k]);
          for (std::size_t j = 0; j < c.tables.size() && ok; ++j) {
            const auto& o = c.tables[j];
            if (leq(o, s) && idem(c, j)) ok = leq(o, c.hat_[k]);
            if (ok && leq(s, o) && rad(c, j)) ok = leq(c.bar_[k], o);
            if (ok && leq(s, o) && lex(c, j)) ok = leq(c.tilde_[k], o);
            if (ok && leq(o, s) && ess_idem(c, j)) ok = leq(o, c.circ_[k]);
            if (ok && leq(s, o) && preh(c, j)) ok = leq(c.sq_[k], o);
          }
          t.check(ok, [&] { return describe(s); });
        }
      });

  add("tilde.fixpoint", "tilde(sigma) = sigma iff sigma is left exact", "any", [](const Ctx& c, Tally& t) {
    each_table(c, [&](std::size_t k, const Preradical& s) {
      t.check((c.tilde_[k] == s) == lex(c, k), [&] { return describe(s); });
    });
  });

  add("essentially_idempotent.join_closed", "the join of essentially idempotent preradicals is essentially idempotent",
      "sigma, tau essentially idempotent", [](const Ctx& c, Tally& t) {
        each_pair(c, [&](std::size_t a, std::size_t b, const Preradical& x, const Preradical& y) {
          if (!ess_idem(c, a) || !ess_idem(c, b)) return;
          t.check(is_essentially_idempotent(join(x, y)), [&] { return pair_desc(x, y); });
        });
      });

  add("circ.closure_laws", "circ is monotone, deflatory and idempotent", "any", [](const Ctx& c, Tally& t) {
    each_table(c, [&](std::size_t k, const Preradical& s) {
      t.check(leq(c.circ_[k], s) && circ(c.circ_[k]) == c.circ_[k], [&] { return describe(s); });
    });
    each_pair(c, [&](std::size_t a, std::size_t b, const Preradical& x, const Preradical& y) {
      if (leq(x, y)) t.check(leq(c.circ_[a], c.circ_[b]), [&] { return pair_desc(x, y); });
    });
  });

  add("square.closure_laws", "square is monotone, inflatory and idempotent", "any", [](const Ctx& c, Tally& t) {
    each_table(c, [&](std::size_t k, const Preradical& s) {
      t.check(leq(s, c.sq_[k]) && square(c.sq_[k]) == c.sq_[k], [&] { return describe(s); });
    });
    each_pair(c, [&](std::size_t a, std::size_t b, const Preradical& x, const Preradical& y) {
      if (leq(x, y)) t.check(leq(c.sq_[a], c.sq_[b]), [&] { return pair_desc(x, y); });
    });
  });

  add("circ.torsion_classes", "T(sigma) = T(circ sigma) = T(hat sigma) and hat(circ sigma) = hat(sigma)", "any",
      [](const Ctx& c, Tally& t) {
        each_table(c, [&](std::size_t k, const Preradical& s) {
          t.check(same_torsion(s, c.circ_[k]) && same_torsion(s, c.hat_[k]) && hat(c.circ_[k]) == c.hat_[k],
                  [&] { return describe(s); });
        });
      });

  add("essentially_idempotent.bar", "bar(sigma) is essentially idempotent when sigma is", "sigma essentially idempotent",
      [](const Ctx& c, Tally& t) {
        each_table(c, [&](std::size_t k, const Preradical& s) {
          if (ess_idem(c, k)) t.check(is_essentially_idempotent(c.bar_[k]), [&] { return describe(s); });
        });
      });

  add("hat.meet_of_hats", "hat(sigma meet tau) = hat(hat sigma meet hat tau)", "any", [](const Ctx& c, Tally& t) {
    each_pair(c, [&](std::size_t a, std::size_t b, const Preradical& x, const Preradical& y) {
      t.check(hat(meet(x, y)) == hat(meet(c.hat_[a], c.hat_[b])), [&] { return pair_desc(x, y); });
    });
  });

  add("essentially_idempotent.torsion_free_class", "sigma is essentially idempotent iff F(hat sigma) = F(sigma)", "any",
      [](const Ctx& c, Tally& t) {
        each_table(c, [&](std::size_t k, const Preradical& s) {
          t.check(ess_idem(c, k) == same_torsion_free(c.hat_[k], s), [&] { return describe(s); });
        });
      });

  add("essentially_idempotent.extension_closed",
      "F(sigma) is closed under extensions: N and M/N torsion-free imply M torsion-free", "sigma essentially idempotent",
      [](const Ctx& c, Tally& t) {
        const auto& u = *c.u;
        each_table(c, [&](std::size_t k, const Preradical& s) {
          if (!ess_idem(c, k)) return;
          for (std::size_t m = 0; m < u.size(); ++m)
            for (const auto& e : u.subs(m))
              if (s.is_torsion_free(e.sub_rep) && s.is_torsion_free(e.quot_rep))
                t.check(s.is_torsion_free(m), [&] { return describe(s) + " " + at(u, m, e.sub); });
        });
      });

  add("essentially_idempotent.radical_is_idempotent", "an essentially idempotent radical is idempotent",
      "sigma essentially idempotent radical", [](const Ctx& c, Tally& t) {
        each_table(c, [&](std::size_t k, const Preradical& s) {
          if (ess_idem(c, k) && rad(c, k)) t.check(idem(c, k), [&] { return describe(s); });
        });
      });

  add("prehereditary.meet_closed", "the meet of prehereditary preradicals is prehereditary",
      "sigma, tau prehereditary", [](const Ctx& c, Tally& t) {
        each_pair(c, [&](std::size_t a, std::size_t b, const Preradical& x, const Preradical& y) {
          if (preh(c, a) && preh(c, b)) t.check(is_prehereditary(meet(x, y)), [&] { return pair_desc(x, y); });
        });
      });

  add("prehereditary.radical_meet", "the meet of prehereditary radicals is a prehereditary radical",
      "sigma, tau prehereditary radicals", [](const Ctx& c, Tally& t) {
        each_pair(c, [&](std::size_t a, std::size_t b, const Preradical& x, const Preradical& y) {
          if (!(preh(c, a) && preh(c, b) && rad(c, a) && rad(c, b))) return;
          const auto m = meet(x, y);
          t.check(is_prehereditary(m) && is_radical(m), [&] { return pair_desc(x, y); });
        });
      });

  add("square.hat_lemma", "sigma <= hat(square sigma) iff tilde(sigma) = square(sigma)", "any",
      [](const Ctx& c, Tally& t) {
        each_table(c, [&](std::size_t k, const Preradical& s) {
          t.check(leq(s, hat(c.sq_[k])) == (c.tilde_[k] == c.sq_[k]), [&] { return describe(s); });
        });
      });

  add("square.idempotent_left_exact", "square(sigma) is left exact when sigma is idempotent", "sigma idempotent",
      [](const Ctx& c, Tally& t) {
        each_table(c, [&](std::size_t k, const Preradical& s) {
          if (idem(c, k)) t.check(is_left_exact(c.sq_[k]), [&] { return describe(s); });
        });
      });

  add("costable.radical_left_exact", "a costable radical is left exact", "sigma costable radical",
      [](const Ctx& c, Tally& t) {
        each_table(c, [&](std::size_t k, const Preradical& s) {
          if (rad(c, k) && c.tr[k].costable.holds) t.check(lex(c, k), [&] { return describe(s); });
        });
      });

  add("costable.essentially_idempotent_prehereditary", "an essentially idempotent prehereditary preradical is costable",
      "sigma essentially idempotent and prehereditary", [](const Ctx& c, Tally& t) {
        each_table(c, [&](std::size_t k, const Preradical& s) {
          if (ess_idem(c, k) && preh(c, k)) t.check(c.tr[k].costable.holds, [&] { return describe(s); });
        });
      });

  add("square.torsion_in_extensions", "M sigma-torsion implies M <= square(sigma)(N) for every N containing M", "any",
      [](const Ctx& c, Tally& t) {
        const auto& u = *c.u;
        each_table(c, [&](std::size_t k, const Preradical& s) {
          for (std::size_t n = 0; n < u.size(); ++n)
            for (const auto& e : u.subs(n))
              if (s.is_torsion(e.sub_rep))
                t.check(e.sub.is_subset_of(c.sq_[k].value(n)), [&] { return describe(s) + " " + at(u, n, e.sub); });
        });
      });

  add("alpha.simple_injective_left_exact", "alpha^S_S is left exact for a simple injective S", "S simple injective",
      [](const Ctx& c, Tally& t) {
        const auto& u = c.u;
        for (std::size_t i = 0; i < u->size(); ++i) {
          if (!is_simple(u->rep(i)) || u->hull(i)->rep != i) continue;
          t.check(is_left_exact(alpha(u, i, Submodule::whole(u->rep(i)))), [&] { return "S = " + u->label(i); });
        }
      });

  add("alpha.simple_hull_idempotent", "alpha^{E(S)}_S essentially idempotent implies idempotent", "S simple",
      [](const Ctx& c, Tally& t) {
        const auto& u = c.u;
        for (std::size_t i = 0; i < u->size(); ++i) {
          if (!is_simple(u->rep(i))) continue;
          const auto& h = *u->hull(i);
          const auto a = alpha(u, h.rep, h.embed.image());
          if (is_essentially_idempotent(a)) t.check(is_idempotent(a), [&] { return "S = " + u->label(i); });
        }
      });

  auto atoms = [](const Ctx& c) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < c.tables.size(); ++k) {
      const auto& s = c.tables[k];
      if (s == zero_preradical(c.u)) continue;
      bool minimal = true;
      for (const auto& o : c.tables)
        if (!(o == s) && !(o == zero_preradical(c.u)) && leq(o, s)) minimal = false;
      if (minimal) out.push_back(k);
    }
    return out;
  };

  add("atoms.prehereditary", "every atom of the preradical lattice is prehereditary", "exhaustive enumeration",
      [atoms](const Ctx& c, Tally& t) {
        if (!c.exhaustive) return;
        for (std::size_t k : atoms(c)) t.check(preh(c, k), [&] { return describe(c.tables[k]); });
      });

  add("atoms.semisimple_essentially_idempotent", "over a semisimple ring every atom is essentially idempotent",
      "exhaustive enumeration, J(R) = 0", [atoms](const Ctx& c, Tally& t) {
        if (!c.exhaustive || ring_jacobson(c.u->ring()).count() != 1) return;
        for (std::size_t k : atoms(c)) t.check(ess_idem(c, k), [&] { return describe(c.tables[k]); });
      });

  add("prehereditary.left_exact_join_nilpotent",
      "sigma left exact, tau strongly nilpotent and sigma meet tau = 0 imply sigma join tau prehereditary",
      "sigma left exact, tau strongly nilpotent, disjoint", [](const Ctx& c, Tally& t) {
        each_pair(c, [&](std::size_t a, std::size_t b, const Preradical& x, const Preradical& y) {
          if (!lex(c, a) || !c.tr[b].strongly_nilpotent.holds || !(meet(x, y) == zero_preradical(c.u))) return;
          t.check(is_prehereditary(join(x, y)), [&] { return pair_desc(x, y); });
        });
      });

  add("jacobson.max_ring",
      "J prehereditary, T(J) = {0}, hat(J) = 0 and every nonzero module has a maximal submodule are equivalent",
      "any ring", [](const Ctx& c, Tally& t) {
        const auto& u = c.u;
        const auto j = jacobson_preradical(u);
        const bool p = is_prehereditary(j);
        bool only_zero = true;
        for (std::size_t i = 0; i < u->size(); ++i)
          if (i != u->zero_index() && j.is_torsion(i)) only_zero = false;
        const bool h = hat(j) == zero_preradical(u);
        bool max = true;
        for (std::size_t i = 0; i < u->size(); ++i)
          if (i != u->zero_index() && maximal_submodules(u->rep(i)).empty()) max = false;
        auto b = [](bool x) { return x ? "true" : "false"; };
        const std::string items = std::string("prehereditary=") + b(p) + " T_J={0}=" + b(only_zero) + " hat_J=0=" + b(h) +
                                  " max=" + b(max);
        t.check(p == only_zero && only_zero == h && h == max, [&] { return items; });
        t.evidence = items;
      });

  add("trace.non_hereditary",
      "over T2(F_p) the trace of P has a torsion class containing P but not soc(P); its square is strictly larger and "
      "prehereditary",
      "upper triangular ring", [](const Ctx& c, Tally& t) {
        const auto& u = c.u;
        if (u->ring().family().kind != RingFamily::upper_triangular) return;
        const std::size_t p = u->find_label("P"), s2 = u->find_label("S2");
        if (p == kNoRep || s2 == kNoRep) return;
        const auto tr = alpha(u, p, Submodule::whole(u->rep(p)));
        const auto sq = square(tr);
        t.check(tr.is_torsion(p) && !tr.is_torsion_sub(p, socle(u->rep(p))), [] { return std::string("trace of P"); });
        t.check(leq(tr, sq) && !(sq == tr) && is_prehereditary(sq) && sq.is_torsion(s2),
                [] { return std::string("square of the trace of P"); });
      });

  // ------------------------------------------------------------ filters

  add("filters.prehereditary_iff_linear", "sigma is prehereditary iff I(sigma) is a linear filter", "any",
      [](const Ctx& c, Tally& t) {
        each_table(c, [&](std::size_t k, const Preradical& s) {
          t.check(preh(c, k) == is_linear_filter(filter_of(s)), [&] { return describe(s); });
        });
      });

  add("filters.hereditary_torsion_iff_gabriel", "T(sigma) is a hereditary torsion class iff I(sigma) is Gabriel", "any",
      [](const Ctx& c, Tally& t) {
        each_table(c, [&](std::size_t, const Preradical& s) {
          t.check(is_hereditary_torsion_class(s) == is_gabriel_filter(filter_of(s)), [&] { return describe(s); });
        });
      });

  add("filters.round_trips", "linear filters and left exact preradicals correspond bijectively", "any",
      [](const Ctx& c, Tally& t) {
        each_table(c, [&](std::size_t k, const Preradical& s) {
          if (lex(c, k)) t.check(preradical_of_filter(c.u, filter_of(s)) == s, [&] { return describe(s); });
        });
        for (const auto& f : enumerate_linear_filters(c.u->ring_ptr())) {
          const auto s = preradical_of_filter(c.u, f);
          t.check(is_left_exact(s) && filter_of(s) == f, [&] { return "filter of " + describe(s); });
        }
      });

  // ------------------------------------------------------------ density

  auto for_subs = [](const Ctx& c, const std::function<void(std::size_t, const Preradical&, std::size_t, const SubEntry&)>& f) {
    each_table(c, [&](std::size_t k, const Preradical& s) {
      for (std::size_t m = 0; m < c.u->size(); ++m)
        for (const auto& e : c.u->subs(m)) f(k, s, m, e);
    });
  };

  add("density.upward", "K dense in M and K <= N imply N dense in M", "any", [for_subs](const Ctx& c, Tally& t) {
    for_subs(c, [&](std::size_t, const Preradical& s, std::size_t m, const SubEntry& e) {
      if (!dense(s, m, e.sub)) return;
      for (const auto& f : c.u->subs(m))
        if (e.sub.is_subset_of(f.sub))
          t.check(dense(s, m, f.sub), [&] { return describe(s) + " " + at(*c.u, m, e.sub); });
    });
  });

  add("density.colon", "N dense in M implies (N:x) dense in R", "sigma prehereditary",
      [for_subs](const Ctx& c, Tally& t) {
        const auto& u = *c.u;
        const ModuleHom iso = regular_iso(u);
        const FiniteRing& ring = u.ring();
        for_subs(c, [&](std::size_t k, const Preradical& s, std::size_t m, const SubEntry& e) {
          if (!preh(c, k) || !dense(s, m, e.sub)) return;
          const auto& mm = u.rep(m);
          for (Elem x = 0; x < mm->size(); ++x) {
            ElementSet ideal(ring.size());
            for (Elem a = 0; a < ring.size(); ++a)
              if (e.sub.contains(mm->act(a, x))) ideal.set(a);
            const Submodule in_r = iso.image(Submodule(iso.dom_ptr(), ideal));
            t.check(dense(s, u.regular_index(), in_r), [&] { return describe(s) + " " + at(u, m, e.sub); });
          }
        });
      });

  add("density.intersection", "N and K dense in M imply N meet K dense in M", "sigma prehereditary",
      [for_subs](const Ctx& c, Tally& t) {
        for_subs(c, [&](std::size_t k, const Preradical& s, std::size_t m, const SubEntry& e) {
          if (!preh(c, k) || !dense(s, m, e.sub)) return;
          for (const auto& f : c.u->subs(m))
            if (dense(s, m, f.sub))
              t.check(dense(s, m, meet(e.sub, f.sub)), [&] { return describe(s) + " " + at(*c.u, m, e.sub); });
        });
      });

  add("density.restriction", "K dense in M and K <= N imply K dense in N", "sigma prehereditary",
      [for_subs](const Ctx& c, Tally& t) {
        for_subs(c, [&](std::size_t k, const Preradical& s, std::size_t m, const SubEntry& n) {
          if (!preh(c, k)) return;
          for (const auto& e : c.u->subs(m)) {
            if (!e.sub.is_subset_of(n.sub) || !dense(s, m, e.sub)) continue;
            t.check(dense(s, n.sub_rep, n.incl.preimage(e.sub)), [&] { return describe(s) + " " + at(*c.u, m, e.sub); });
          }
        });
      });

  add("density.pullback", "N <= M and K dense in M imply K meet N dense in N", "sigma prehereditary",
      [for_subs](const Ctx& c, Tally& t) {
        for_subs(c, [&](std::size_t k, const Preradical& s, std::size_t m, const SubEntry& n) {
          if (!preh(c, k)) return;
          for (const auto& e : c.u->subs(m)) {
            if (!dense(s, m, e.sub)) continue;
            t.check(dense(s, n.sub_rep, n.incl.preimage(meet(e.sub, n.sub))),
                    [&] { return describe(s) + " " + at(*c.u, m, e.sub); });
          }
        });
      });

  add("density.transitive", "K dense in N and N dense in M imply K dense in M", "sigma essentially coidempotent",
      [for_subs](const Ctx& c, Tally& t) {
        for_subs(c, [&](std::size_t k, const Preradical& s, std::size_t m, const SubEntry& n) {
          if (!c.tr[k].essentially_coidempotent.holds || !dense(s, m, n.sub)) return;
          for (const auto& e : c.u->subs(m)) {
            if (!e.sub.is_subset_of(n.sub) || !dense(s, n.sub_rep, n.incl.preimage(e.sub))) continue;
            t.check(dense(s, m, e.sub), [&] { return describe(s) + " " + at(*c.u, m, e.sub); });
          }
        });
      });

  add("density.monotone", "sigma <= tau and N sigma-dense imply N tau-dense", "sigma <= tau", [](const Ctx& c, Tally& t) {
    const auto& u = *c.u;
    each_pair(c, [&](std::size_t, std::size_t, const Preradical& x, const Preradical& y) {
      if (!leq(x, y)) return;
      for (std::size_t m = 0; m < u.size(); ++m)
        for (const auto& e : u.subs(m))
          if (dense(x, m, e.sub)) t.check(dense(y, m, e.sub), [&] { return pair_desc(x, y); });
    });
  });

  add("density.hat", "N is sigma-dense iff N is hat(sigma)-dense", "any", [for_subs](const Ctx& c, Tally& t) {
    for_subs(c, [&](std::size_t k, const Preradical& s, std::size_t m, const SubEntry& e) {
      t.check(dense(s, m, e.sub) == dense(c.hat_[k], m, e.sub), [&] { return describe(s) + " " + at(*c.u, m, e.sub); });
    });
  });

  add("density.torsion_free_essential", "M torsion-free and N dense in M imply N essential in M", "sigma prehereditary",
      [for_subs](const Ctx& c, Tally& t) {
        for_subs(c, [&](std::size_t k, const Preradical& s, std::size_t m, const SubEntry& e) {
          if (!preh(c, k) || !s.is_torsion_free(m) || !dense(s, m, e.sub)) return;
          t.check(is_essential(e.sub), [&] { return describe(s) + " " + at(*c.u, m, e.sub); });
        });
      });

  // ------------------------------------------------------------ purity

  add("purity.intersection", "intersections of sigma-pure submodules are sigma-pure", "any",
      [for_subs](const Ctx& c, Tally& t) {
        for_subs(c, [&](std::size_t, const Preradical& s, std::size_t m, const SubEntry& e) {
          if (!pure(s, m, e.sub)) return;
          for (const auto& f : c.u->subs(m))
            if (pure(s, m, f.sub))
              t.check(pure(s, m, meet(e.sub, f.sub)), [&] { return describe(s) + " " + at(*c.u, m, e.sub); });
        });
      });

  add("purity.bar_quotient", "bar(sigma)(M/N) = N^M_sigma / N", "any", [for_subs](const Ctx& c, Tally& t) {
    for_subs(c, [&](std::size_t k, const Preradical& s, std::size_t m, const SubEntry& e) {
      t.check(c.bar_[k].at_quotient(m, e.sub) == purification(s, m, e.sub),
              [&] { return describe(s) + " " + at(*c.u, m, e.sub); });
    });
  });

  add("purity.bar_invariant", "N^M_sigma = N^M_{bar sigma}", "any", [for_subs](const Ctx& c, Tally& t) {
    for_subs(c, [&](std::size_t k, const Preradical& s, std::size_t m, const SubEntry& e) {
      t.check(purification(s, m, e.sub) == purification(c.bar_[k], m, e.sub),
              [&] { return describe(s) + " " + at(*c.u, m, e.sub); });
    });
  });

  add("purity.fixpoint", "N is sigma-pure in M iff N = N^M_sigma", "any", [for_subs](const Ctx& c, Tally& t) {
    for_subs(c, [&](std::size_t, const Preradical& s, std::size_t m, const SubEntry& e) {
      t.check(pure(s, m, e.sub) == (purification(s, m, e.sub) == e.sub),
              [&] { return describe(s) + " " + at(*c.u, m, e.sub); });
    });
  });

  add("purity.zero", "bar(sigma)(M) = 0^M_sigma", "any", [](const Ctx& c, Tally& t) {
    each_table(c, [&](std::size_t k, const Preradical& s) {
      for (std::size_t m = 0; m < c.u->size(); ++m)
        t.check(c.bar_[k].value(m) == purification(s, m, Submodule::zero(c.u->rep(m))),
                [&] { return describe(s) + " " + at(*c.u, m); });
    });
  });

  add("purity.torsion_pins", "N sigma-pure in M and N sigma-torsion imply sigma(M) = N", "any",
      [for_subs](const Ctx& c, Tally& t) {
        for_subs(c, [&](std::size_t, const Preradical& s, std::size_t m, const SubEntry& e) {
          if (pure(s, m, e.sub) && s.is_torsion(e.sub_rep))
            t.check(s.value(m) == e.sub, [&] { return describe(s) + " " + at(*c.u, m, e.sub); });
        });
      });

  add("purity.idempotent_radical_torsion", "N^M_sigma / N is sigma-torsion", "sigma idempotent radical",
      [for_subs](const Ctx& c, Tally& t) {
        for_subs(c, [&](std::size_t k, const Preradical& s, std::size_t m, const SubEntry& e) {
          if (!idem(c, k) || !rad(c, k)) return;
          const SubEntry& p = c.u->entry(m, purification(s, m, e.sub));
          t.check(dense(s, p.sub_rep, p.incl.preimage(e.sub)), [&] { return describe(s) + " " + at(*c.u, m, e.sub); });
        });
      });

  // ------------------------------------------------------------ injectivity

  auto each_rep = [](const Ctx& c, const std::function<void(std::size_t, const Preradical&, std::size_t)>& f) {
    each_table(c, [&](std::size_t k, const Preradical& s) {
      for (std::size_t m = 0; m < c.u->size(); ++m) f(k, s, m);
    });
  };

  add("sigma_injective.purity_iff_summand",
      "M is sigma-pure in E(M) iff every module containing M has a sigma-pure submodule containing M as a summand", "any",
      [each_rep](const Ctx& c, Tally& t) {
        const auto& u = *c.u;
        each_rep(c, [&](std::size_t k, const Preradical& s, std::size_t m) {
          bool summand = true;
          for (std::size_t n = 0; n < u.size() && summand; ++n)
            for (const auto& e : u.subs(n)) {
              if (e.sub_rep != m) continue;
              bool found = false;
              for (const auto& kk : u.subs(n)) {
                if (found) break;
                if (!e.sub.is_subset_of(kk.sub) || !pure(s, n, kk.sub)) continue;
                for (const auto& l : u.subs(n))
                  if (l.sub.is_subset_of(kk.sub) && meet(l.sub, e.sub).is_zero() && join(l.sub, e.sub) == kk.sub) {
                    found = true;
                    break;
                  }
              }
              if (!found) {
                summand = false;
                break;
              }
            }
          t.check(static_cast<bool>(c.pur[k][m]) == summand, [&] { return describe(s) + " " + at(u, m); });
        });
      });

  add("sigma_injective.purity_implies_definitional", "M sigma-pure in E(M) implies M sigma-injective", "any",
      [each_rep](const Ctx& c, Tally& t) {
        each_rep(c, [&](std::size_t k, const Preradical& s, std::size_t m) {
          if (c.pur[k][m]) t.check(c.def[k][m], [&] { return describe(s) + " " + at(*c.u, m); });
        });
      });

  add("sigma_injective.definitional_implies_baer", "sigma-injective implies sigma-injective with respect to R", "any",
      [each_rep](const Ctx& c, Tally& t) {
        each_rep(c, [&](std::size_t k, const Preradical& s, std::size_t m) {
          if (c.def[k][m]) t.check(c.baer[k][m], [&] { return describe(s) + " " + at(*c.u, m); });
        });
      });

  add("sigma_injective.idempotent_radical_modes", "sigma-injective iff sigma-pure in E(M)", "sigma idempotent radical",
      [each_rep](const Ctx& c, Tally& t) {
        each_rep(c, [&](std::size_t k, const Preradical& s, std::size_t m) {
          if (idem(c, k) && rad(c, k)) t.check(c.def[k][m] == c.pur[k][m], [&] { return describe(s) + " " + at(*c.u, m); });
        });
      });

  add("sigma_injective.prehereditary_baer", "sigma-injective iff sigma-injective with respect to R",
      "sigma prehereditary", [each_rep](const Ctx& c, Tally& t) {
        each_rep(c, [&](std::size_t k, const Preradical& s, std::size_t m) {
          if (preh(c, k)) t.check(c.def[k][m] == c.baer[k][m], [&] { return describe(s) + " " + at(*c.u, m); });
        });
      });

  add("sigma_injective.direct_sum", "a direct sum is sigma-injective iff every summand is", "any",
      [each_rep](const Ctx& c, Tally& t) {
        const auto& u = *c.u;
        std::vector<std::vector<std::size_t>> parts(u.size());
        for (std::size_t m = 0; m < u.size(); ++m)
          if (u.indecomposables(m) >= 2)
            for (const auto& p : decompose(u.rep(m))) parts[m].push_back(u.classify(p).rep);
        each_rep(c, [&](std::size_t k, const Preradical& s, std::size_t m) {
          if (parts[m].empty()) return;
          bool all = true;
          for (std::size_t p : parts[m]) all = all && c.def[k][p];
          t.check(static_cast<bool>(c.def[k][m]) == all, [&] { return describe(s) + " " + at(u, m); });
        });
      });

  add("sigma_injective.pure_submodule", "sigma-pure submodules of sigma-injective modules are sigma-injective",
      "sigma idempotent radical", [each_rep](const Ctx& c, Tally& t) {
        each_rep(c, [&](std::size_t k, const Preradical& s, std::size_t m) {
          if (!idem(c, k) || !rad(c, k) || !c.def[k][m]) return;
          for (const auto& e : c.u->subs(m))
            if (pure(s, m, e.sub)) t.check(c.def[k][e.sub_rep], [&] { return describe(s) + " " + at(*c.u, m, e.sub); });
        });
      });

  add("sigma_injective.torsion_hull", "M sigma-injective and sigma-torsion implies sigma(E(M)) = M",
      "sigma idempotent radical", [each_rep](const Ctx& c, Tally& t) {
        each_rep(c, [&](std::size_t k, const Preradical& s, std::size_t m) {
          if (!idem(c, k) || !rad(c, k) || !c.def[k][m] || !s.is_torsion(m)) return;
          const auto& h = *c.u->hull(m);
          t.check(s.value(h.rep) == h.embed.image(), [&] { return describe(s) + " " + at(*c.u, m); });
        });
      });

  add("sigma_injective.radical_hull", "sigma(E(M)) = M implies M sigma-injective", "sigma radical",
      [each_rep](const Ctx& c, Tally& t) {
        each_rep(c, [&](std::size_t k, const Preradical& s, std::size_t m) {
          if (!rad(c, k)) return;
          const auto& h = *c.u->hull(m);
          if (s.value(h.rep) == h.embed.image()) t.check(c.def[k][m], [&] { return describe(s) + " " + at(*c.u, m); });
        });
      });

  add("sigma_injective.torsion_quasi_injective", "a sigma-torsion sigma-injective module is quasi-injective", "any",
      [each_rep](const Ctx& c, Tally& t) {
        each_rep(c, [&](std::size_t k, const Preradical& s, std::size_t m) {
          if (c.def[k][m] && s.is_torsion(m)) t.check(c.quasi_injective(m), [&] { return describe(s) + " " + at(*c.u, m); });
        });
      });

  add("sigma_injective.quasi_injective_omega",
      "M quasi-injective with omega^{E(M)}_M a radical is sigma-injective whenever sigma(E(M)) = M",
      "M quasi-injective, omega^{E(M)}_M radical", [](const Ctx& c, Tally& t) {
        const auto& u = c.u;
        for (std::size_t m = 0; m < u->size(); ++m) {
          if (!c.quasi_injective(m)) continue;
          const auto& h = *u->hull(m);
          const Submodule img = h.embed.image();
          if (!is_fully_invariant(img) || !is_radical(omega(u, h.rep, img))) continue;
          each_table(c, [&](std::size_t k, const Preradical& s) {
            if (s.value(h.rep) == img) t.check(c.def[k][m], [&] { return describe(s) + " " + at(*u, m); });
          });
        }
      });

  add("hull.essential", "M is essential in E_sigma(M)", "any", [each_rep](const Ctx& c, Tally& t) {
    each_rep(c, [&](std::size_t, const Preradical& s, std::size_t m) {
      const auto h = sigma_injective_hull(s, m);
      t.check(is_essential(h.embed.image()), [&] { return describe(s) + " " + at(*c.u, m); });
    });
  });

  add("hull.sigma_injective", "E_sigma(M) is sigma-injective", "any", [each_rep](const Ctx& c, Tally& t) {
    each_rep(c, [&](std::size_t k, const Preradical& s, std::size_t m) {
      t.check(c.def[k][sigma_injective_hull(s, m).hull_rep], [&] { return describe(s) + " " + at(*c.u, m); });
    });
  });

  add("hull.dense", "M is sigma-dense in E_sigma(M)", "sigma idempotent radical", [each_rep](const Ctx& c, Tally& t) {
    each_rep(c, [&](std::size_t k, const Preradical& s, std::size_t m) {
      if (!idem(c, k) || !rad(c, k)) return;
      const auto h = sigma_injective_hull(s, m);
      t.check(dense(s, h.hull_rep, h.embed.image()), [&] { return describe(s) + " " + at(*c.u, m); });
    });
  });

  add("hull.uniqueness", "a sigma-injective K with M dense and sigma-dense in it is E_sigma(M)",
      "sigma idempotent radical", [each_rep](const Ctx& c, Tally& t) {
        each_rep(c, [&](std::size_t k, const Preradical& s, std::size_t m) {
          if (!idem(c, k) || !rad(c, k) || !c.def[k][m]) return;
          for (const auto& e : c.u->subs(m))
            if (is_essential(e.sub) && dense(s, m, e.sub))
              t.check(sigma_injective_hull(s, e.sub_rep).hull_rep == m,
                      [&] { return describe(s) + " " + at(*c.u, m, e.sub); });
        });
      });

  add("hull.fixpoint", "M is sigma-injective iff E_sigma(M) = M", "sigma idempotent radical",
      [each_rep](const Ctx& c, Tally& t) {
        each_rep(c, [&](std::size_t k, const Preradical& s, std::size_t m) {
          if (!idem(c, k) || !rad(c, k)) return;
          t.check(static_cast<bool>(c.def[k][m]) == (sigma_injective_hull(s, m).hull_rep == m),
                  [&] { return describe(s) + " " + at(*c.u, m); });
        });
      });

  // ------------------------------------------------------------ pseudocomplements

  add("subp.basics",
      "M, 0, sigma-dense submodules and direct summands are sigma-pseudocomplemented; every submodule of a torsion module is",
      "any", [](const Ctx& c, Tally& t) {
        const auto& u = *c.u;
        each_table(c, [&](std::size_t, const Preradical& s) {
          for (std::size_t m = 0; m < u.size(); ++m) {
            const auto& subs = u.subs(m);
            for (const auto& e : subs) {
              bool expect = e.sub.is_zero() || e.sub.is_whole() || dense(s, m, e.sub) || s.is_torsion(m);
              for (const auto& f : subs)
                if (meet(e.sub, f.sub).is_zero() && join(e.sub, f.sub).is_whole()) expect = true;
              if (expect) t.check(has_pseudocomplement(s, m, e.sub), [&] { return describe(s) + " " + at(u, m, e.sub); });
            }
          }
        });
      });

  add("subp.monotone", "sigma <= tau implies Subp_sigma(M) <= Subp_tau(M)", "sigma <= tau", [](const Ctx& c, Tally& t) {
    const auto& u = *c.u;
    each_pair(c, [&](std::size_t xa, std::size_t yb, const Preradical& x, const Preradical& y) {
      if (!leq(x, y)) return;
      for (std::size_t m = 0; m < u.size(); ++m) {
        const auto &a = c.subp_of(xa, m), &b = c.subp_of(yb, m);
        t.check(std::includes(b.begin(), b.end(), a.begin(), a.end()), [&] { return pair_desc(x, y) + " " + at(u, m); });
      }
    });
  });

  add("subp.transitive", "K pseudocomplemented in N and N in M imply K pseudocomplemented in M",
      "sigma essentially coidempotent", [](const Ctx& c, Tally& t) {
        const auto& u = *c.u;
        each_table(c, [&](std::size_t k, const Preradical& s) {
          if (!c.tr[k].essentially_coidempotent.holds) return;
          for (std::size_t m = 0; m < u.size(); ++m)
            for (const auto& n : u.subs(m)) {
              if (!has_pseudocomplement(s, m, n.sub)) continue;
              for (const auto& e : u.subs(m)) {
                if (!e.sub.is_subset_of(n.sub) || !has_pseudocomplement(s, n.sub_rep, n.incl.preimage(e.sub))) continue;
                t.check(has_pseudocomplement(s, m, e.sub), [&] { return describe(s) + " " + at(u, m, e.sub); });
              }
            }
        });
      });

  add("subp.restriction", "K pseudocomplemented in M and K <= N <= M imply K pseudocomplemented in N",
      "sigma prehereditary", [](const Ctx& c, Tally& t) {
        const auto& u = *c.u;
        each_table(c, [&](std::size_t k, const Preradical& s) {
          if (!preh(c, k)) return;
          for (std::size_t m = 0; m < u.size(); ++m)
            for (const auto& e : u.subs(m)) {
              if (!has_pseudocomplement(s, m, e.sub)) continue;
              for (const auto& n : u.subs(m))
                if (e.sub.is_subset_of(n.sub))
                  t.check(has_pseudocomplement(s, n.sub_rep, n.incl.preimage(e.sub)),
                          [&] { return describe(s) + " " + at(u, m, e.sub); });
            }
        });
      });

  add("subp.same_injectives", "Subp_sigma = Subp_tau on every module implies the same injective classes", "any",
      [](const Ctx& c, Tally& t) {
        const auto& u = *c.u;
        std::vector<std::vector<std::vector<std::size_t>>> sp(c.pair_n);
        for (std::size_t k = 0; k < c.pair_n; ++k)
          for (std::size_t m = 0; m < u.size(); ++m) sp[k].push_back(c.subp_of(k, m));
        each_pair(c, [&](std::size_t a, std::size_t b, const Preradical& x, const Preradical& y) {
          if (a >= b || sp[a] != sp[b]) return;
          t.check(c.def[a] == c.def[b], [&] { return pair_desc(x, y); });
        });
      });

  add("subp.singular_injective", "a module is injective iff it is injective relative to the singular preradical",
      "any", [](const Ctx& c, Tally& t) {
        const auto& u = c.u;
        const auto z = singular_preradical(u);
        for (std::size_t m = 0; m < u->size(); ++m)
          t.check(is_injective(u->rep(m)) == is_sigma_injective(z, m, InjectivityMode::definitional).holds,
                  [&] { return at(*u, m); });
      });

  // ------------------------------------------------------------ absolute purity

  add("absolutely_pure.unique_extension",
      "absolutely sigma-pure implies unique extension along dense submodules, with equivalence for idempotent sigma",
      "any", [each_rep](const Ctx& c, Tally& t) {
        each_rep(c, [&](std::size_t k, const Preradical& s, std::size_t m) {
          const bool abs = s.is_torsion_free(m) && c.def[k][m];
          const bool uni = unique_extension_check(s, m);
          if (abs) t.check(uni, [&] { return describe(s) + " " + at(*c.u, m); });
          if (idem(c, k)) t.check(abs == uni, [&] { return describe(s) + " " + at(*c.u, m); });
        });
      });

  auto pure_in_torsion_free_extensions = [](const Preradical& s, std::size_t m) {
    const auto& u = s.universe();
    for (std::size_t n = 0; n < u.size(); ++n) {
      if (!s.is_torsion_free(n)) continue;
      for (const auto& e : u.subs(n))
        if (e.sub_rep == m && !pure(s, n, e.sub)) return false;
    }
    return true;
  };

  add("absolutely_pure.costable",
      "M torsion-free and sigma-pure in every torsion-free module containing it is absolutely sigma-pure",
      "sigma costable", [each_rep, pure_in_torsion_free_extensions](const Ctx& c, Tally& t) {
        each_rep(c, [&](std::size_t k, const Preradical& s, std::size_t m) {
          if (!c.tr[k].costable.holds || !s.is_torsion_free(m) || !pure_in_torsion_free_extensions(s, m)) return;
          t.check(c.def[k][m], [&] { return describe(s) + " " + at(*c.u, m); });
        });
      });

  add("absolutely_pure.essentially_idempotent",
      "an absolutely sigma-pure module is sigma-pure in every torsion-free module containing it",
      "sigma essentially idempotent", [each_rep, pure_in_torsion_free_extensions](const Ctx& c, Tally& t) {
        each_rep(c, [&](std::size_t k, const Preradical& s, std::size_t m) {
          if (!ess_idem(c, k) || !s.is_torsion_free(m) || !c.def[k][m]) return;
          t.check(pure_in_torsion_free_extensions(s, m), [&] { return describe(s) + " " + at(*c.u, m); });
        });
      });

  // ------------------------------------------------------------ autocostable

  add("autocostable.from_costable", "costable implies autocostable", "sigma costable", [](const Ctx& c, Tally& t) {
    each_table(c, [&](std::size_t k, const Preradical& s) {
      if (c.tr[k].costable.holds) t.check(c.tr[k].autocostable.holds, [&] { return describe(s); });
    });
  });

  add("autocostable.essentially_idempotent_costable", "autocostable and essentially idempotent imply costable",
      "sigma autocostable, essentially idempotent", [](const Ctx& c, Tally& t) {
        each_table(c, [&](std::size_t k, const Preradical& s) {
          if (c.tr[k].autocostable.holds && ess_idem(c, k)) t.check(c.tr[k].costable.holds, [&] { return describe(s); });
        });
      });

  add("autocostable.left_exact_radical", "an autocostable essentially idempotent radical is left exact",
      "sigma autocostable, essentially idempotent radical", [](const Ctx& c, Tally& t) {
        each_table(c, [&](std::size_t k, const Preradical& s) {
          if (c.tr[k].autocostable.holds && ess_idem(c, k) && rad(c, k)) t.check(lex(c, k), [&] { return describe(s); });
        });
      });

  // ------------------------------------------------------------ localization

  struct LocalClaim {
    const char* id;
    const char* statement;
    const char* hyp;
    bool xfail;
  };
  for (const LocalClaim& lc : std::vector<LocalClaim>{
           {"localization.q_sigma_zero_iff_idempotent", "Q_sigma sigma = 0 iff sigma is idempotent", "any", false},
           {"localization.commutes_iff_left_exact_radical", "Q_sigma sigma = sigma Q_sigma iff sigma is a left exact radical",
            "any", false},
           {"localization.ker_eta_torsion", "ker eta_M is sigma-torsion", "sigma left exact radical", false},
           {"localization.coker_eta_torsion_free", "coker eta_M is sigma-torsion-free", "sigma left exact radical", true},
           {"localization.coker_eta_torsion", "coker eta_M is sigma-torsion", "sigma left exact radical", false},
           {"localization.q_idempotent", "Q_sigma Q_sigma = Q_sigma", "sigma left exact radical", false},
           {"localization.eta_natural", "eta is natural: Q(f) exists uniquely for every f", "sigma left exact radical",
            false},
           {"localization.eta_of_q_is_identity", "eta_{Q(M)} is the identity", "sigma left exact radical", false},
           {"localization.q_of_eta_is_identity", "Q(eta_M) is the identity", "sigma left exact radical", false}}) {
    const std::string id = lc.id;
    add(
        id, lc.statement, lc.hyp,
        [id](const Ctx& c, Tally& t) {
          each_table(c, [&](std::size_t k, const Preradical& s) {
            for (const auto& r : c.localization(k).claims) {
              if (r.id != id || r.status == ClaimStatus::not_applicable) continue;
              t.check(r.status == ClaimStatus::pass, [&] { return describe(s) + " " + r.witness; });
            }
          });
        },
        lc.xfail);
  }
  return r;
}

const std::vector<Claim>& registry() {
  static const std::vector<Claim> r = build_registry();
  return r;
}

Ctx make_ctx(const UniversePtr& u, const CheckOptions& opts) {
  Ctx c;
  c.u = u;
  c.tables = claim_tables(u, opts.enumeration_budget, &c.exhaustive);
  c.pair_n = std::min(c.tables.size(), opts.pair_limit);
  c.loc.resize(c.tables.size());
  c.qi.resize(u->size());
  c.uname = u->ring().name() + " sum_bound=" + std::to_string(u->policy().sum_bound) +
            " reps=" + std::to_string(u->size()) + " tables=" + std::to_string(c.tables.size()) +
            (c.exhaustive ? " (all)" : " (sample)");
  for (const auto& s : c.tables) {
    c.tr.push_back(traits(s));
    c.hat_.push_back(hat(s));
    c.bar_.push_back(bar(s));
    c.tilde_.push_back(tilde(s));
    c.circ_.push_back(circ(s));
    c.sq_.push_back(square(s));
    std::vector<char> d, p, b;
    for (std::size_t m = 0; m < u->size(); ++m) {
      d.push_back(is_sigma_injective(s, m, InjectivityMode::definitional).holds);
      p.push_back(is_sigma_injective(s, m, InjectivityMode::purity).holds);
      b.push_back(is_sigma_injective(s, m, InjectivityMode::baer).holds);
    }
    c.def.push_back(std::move(d));
    c.pur.push_back(std::move(p));
    c.baer.push_back(std::move(b));
  }
  return c;
}

ClaimResult run_claim(const Claim& claim, const Ctx& c) {
  Tally t;
  claim.run(c, t);
  ClaimResult r;
  r.id = claim.info.id;
  r.hypotheses = claim.info.hypotheses;
  r.universe = c.uname;
  r.expected_fail = claim.info.expected_fail;
  r.instances = t.instances;
  r.status = t.instances == 0 ? ClaimStatus::not_applicable : (t.failed ? ClaimStatus::fail : ClaimStatus::pass);
  r.witness = t.failed ? t.witness : t.evidence;
  return r;
}

void require_closed(const Universe& u) {
  const auto& cert = u.certificate();
  if (!(cert.submodules && cert.quotients && cert.injective_hulls))
    throw NotInUniverse("claim checks need a universe closed under submodules, quotients and injective hulls");
}

}  // namespace

std::vector<ClaimInfo> claim_registry() {
  std::vector<ClaimInfo> out;
  for (const auto& c : registry()) out.push_back(c.info);
  return out;
}

std::vector<Preradical> claim_tables(const UniversePtr& u, std::size_t budget, bool* exhaustive) {
  try {
    auto all = enumerate_preradicals(u, budget);
    if (exhaustive) *exhaustive = true;
    return all;
  } catch (const BudgetExceeded&) {
  }
  if (exhaustive) *exhaustive = false;
  std::vector<Preradical> seeds{zero_preradical(u), identity_preradical(u), socle_preradical(u),
                                jacobson_preradical(u), singular_preradical(u)};
  for (std::size_t i = 0; i < u->size(); ++i)
    for (std::size_t k : u->fully_invariant(i)) {
      seeds.push_back(alpha(u, i, u->subs(i)[k].sub));
      seeds.push_back(omega(u, i, u->subs(i)[k].sub));
    }
  std::vector<Preradical> out;
  std::set<std::vector<std::size_t>> seen;
  auto push = [&](const Preradical& p) {
    if (seen.insert(p.values()).second) out.push_back(p);
  };
  for (const auto& s : seeds) push(s);
  for (const auto& s : seeds) {
    push(hat(s));
    push(bar(s));
    push(circ(s));
    push(square(s));
  }
  return out;
}

CheckReport check_all(const UniversePtr& u, const CheckOptions& opts) {
  require_closed(*u);
  const Ctx c = make_ctx(u, opts);
  CheckReport rep;
  for (const auto& claim : registry()) rep.claims.push_back(run_claim(claim, c));
  return rep;
}

CheckReport check_claim(const UniversePtr& u, const std::string& id, const CheckOptions& opts) {
  const auto& reg = registry();
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const Claim& c) { return c.info.id == id; });
  if (it == reg.end()) throw InvalidParameter("unknown claim id: " + id);
  require_closed(*u);
  const Ctx c = make_ctx(u, opts);
  CheckReport rep;
  rep.claims.push_back(run_claim(*it, c));
  return rep;
}

}  // namespace prlab
