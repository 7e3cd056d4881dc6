// Acceptance run: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "json.hpp"
#include "oracles.hpp"
#include "prlab/filters.hpp"
#include "prlab/injective.hpp"
#include "prlab/lattice.hpp"
#include "prlab/relative.hpp"

using namespace prlab;

namespace {

// Collects the first violation; a criterion passes when none was recorded.
struct Verdict {
  std::string failure;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failure.empty()) failure = what;
  }
};

nlohmann::json golden(const std::string& name) {
  std::ifstream in(std::string(PRLAB_GOLDEN_DIR) + "/" + name);
  return nlohmann::json::parse(in);
}

Submodule doubles(const ModulePtr& m) {
  std::vector<Elem> g;
  for (Elem x = 0; x < m->size(); ++x) g.push_back(m->add(x, x));
  return Submodule::generated(m, g);
}

bool same_torsion_free(const Preradical& a, const Preradical& b) {
  for (std::size_t i = 0; i < a.universe().size(); ++i)
    if (a.is_torsion_free(i) != b.is_torsion_free(i)) return false;
  return true;
}

void counterexample(Verdict& v) {
  const auto u = Universe::build(builtin_ring("z4xz4"), {}, {});
  const std::size_t r = u->regular_index(), c = u->find_label("0xZ4");
  v.expect(c != kNoRep, "0xZ4 is not a rep");
  if (c == kNoRep) return;
  const auto& rm = u->rep(r);
  const Elem e = u->ring().shape().encode(u->ring().family().idempotent);
  std::vector<Elem> eg;
  for (Elem x = 0; x < rm->size(); ++x) eg.push_back(rm->act(e, x));
  const Submodule z4x0 = Submodule::generated(rm, eg);
  const Submodule ideal = join(z4x0, doubles(rm));
  v.expect(ideal.size() == 8, "I = Z4 x 2Z4 has 8 elements");
  const auto a = alpha(u, r, ideal);
  v.expect(a.value(c) == doubles(u->rep(c)), "alpha(0xZ4) = 0x2Z4");
  const auto h = hat(a);
  v.expect(h.value(c).is_zero(), "hat(alpha)(0xZ4) = 0");
  v.expect(h.value(r) == z4x0, "hat(alpha)(R) = Z4x0");
  v.expect(!traits(a).essentially_idempotent.holds, "alpha not essentially idempotent");
}

void operator_laws(Verdict& v) {
  const auto u = Universe::build(make_zn(4), {}, {});
  v.expect(u->size() == 6, "Z4 universe has 6 reps");
  const auto all = enumerate_preradicals(u);
  v.expect(all.size() == golden("preradical_counts.json")["z4_sum_bound_2"].get<std::size_t>(), "golden count");
  for (const auto& s : all) {
    const auto c = circ(s), q = square(s), h = hat(s);
    v.expect(leq(c, s) && circ(c) == c, "circ deflatory and idempotent");
    v.expect(leq(s, q) && square(q) == q, "square inflatory and idempotent");
    v.expect(is_essentially_idempotent(s) == same_torsion_free(h, s), "essentially idempotent iff F(hat) = F");
    if (is_essentially_idempotent(s) && is_radical(s)) v.expect(is_idempotent(s), "essentially idempotent radical");
    for (const auto& t : all) {
      if (leq(s, t)) {
        v.expect(leq(c, circ(t)), "circ monotone");
        v.expect(leq(q, square(t)), "square monotone");
      }
      if (is_essentially_idempotent(s) && is_essentially_idempotent(t))
        v.expect(is_essentially_idempotent(join(s, t)), "join of essentially idempotent");
      if (is_prehereditary(s) && is_prehereditary(t)) v.expect(is_prehereditary(meet(s, t)), "meet of prehereditary");
    }
  }
  // hat of a meet over every nonempty subfamily
  const std::size_t n = all.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Preradical> fam, hats;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) {
        fam.push_back(all[i]);
        hats.push_back(hat(all[i]));
      }
    v.expect(hat(meet(fam)) == hat(meet(hats)), "hat of meets");
  }
}

void filter_correspondence(Verdict& v) {
  const auto u = Universe::build(make_zn(4), {}, {});
  const auto fs = enumerate_linear_filters(u->ring_ptr());
  std::size_t gab = 0;
  for (const auto& f : fs) gab += check_gabriel(f).holds;
  const auto oc = oracle::filter_counts(u->ring());
  v.expect(u->ring().left_ideals().size() == 3, "three left ideals");
  const auto g = golden("filter_counts.json")["z4"];
  v.expect(fs.size() == 3 && oc.linear == 3 && g["linear"] == 3, "3 linear filters");
  v.expect(gab == 2 && oc.gabriel == 2 && g["gabriel"] == 2, "2 Gabriel filters");
  for (const auto& s : enumerate_preradicals(u)) {
    const Filter f = filter_of(s);
    v.expect(is_prehereditary(s) == check_linear(f).holds, "prehereditary iff linear");
    v.expect(is_hereditary_torsion_class(s) == check_gabriel(f).holds, "hereditary torsion iff Gabriel");
    if (is_left_exact(s)) v.expect(preradical_of_filter(u, f) == s, "round trip from left exact");
  }
  for (const auto& f : fs) {
    const auto s = preradical_of_filter(u, f);
    v.expect(is_left_exact(s) && filter_of(s) == f, "round trip from filter");
  }
}

// Largest rep that M embeds into essentially, by brute force.
std::size_t oracle_hull(const Universe& u, std::size_t m) {
  std::size_t best = kNoRep;
  for (std::size_t n = 0; n < u.size(); ++n) {
    if (best != kNoRep && u.rep(n)->size() <= u.rep(best)->size()) continue;
    for (const auto& t : oracle::homs(u.rep(m), u.rep(n))) {
      std::vector<bool> img(u.rep(n)->size());
      std::size_t hits = 0;
      for (Elem x : t) hits += !img[x], img[x] = true;
      if (hits == u.rep(m)->size() && oracle::essential(u.rep(n), img)) {
        best = n;
        break;
      }
    }
  }
  return best;
}

void hulls(Verdict& v) {
  const auto u4 = Universe::build(make_zn(4), {}, {});
  v.expect(u4->hull(u4->find_label("Z2"))->rep == u4->find_label("Z4"), "E(Z2) = Z4");
  v.expect(u4->hull(u4->zero_index())->rep == u4->zero_index(), "E(0) = 0");
  for (const char* ring : {"z4", "z8", "z2xz2"}) {
    const auto u = Universe::build(builtin_ring(ring), {}, {});
    for (std::size_t i = 0; i < u->size(); ++i) {
      const auto& h = *u->hull(i);
      const std::string at = std::string(ring) + " " + u->label(i);
      v.expect(u->hull(h.rep)->rep == h.rep, "E(E(M)) = E(M) at " + at);
      v.expect(h.embed.is_injective() && h.embed.is_linear(), "hull embedding at " + at);
      v.expect(is_essential(h.embed.image()), "hull essential at " + at);
      v.expect(is_injective(u->rep(h.rep)), "hull injective at " + at);
      if (u->size() <= 8) v.expect(oracle_hull(*u, i) == h.rep, "essential-extension oracle at " + at);
    }
  }
}

void trace_of_projective(Verdict& v) {
  const auto u = Universe::build(builtin_ring("t2f2"), {}, {});
  const std::size_t p = u->find_label("P");
  v.expect(p != kNoRep && u->rep(p)->size() == 4, "P of length 2");
  if (p == kNoRep) return;
  const auto tr = alpha(u, p, Submodule::whole(u->rep(p)));
  v.expect(tr.is_torsion(p), "P torsion");
  v.expect(!tr.is_torsion_sub(p, socle(u->rep(p))), "soc(P) not torsion");
  const auto sq = square(tr);
  v.expect(leq(tr, sq) && !(sq == tr), "square strictly above");
  v.expect(is_prehereditary(sq), "square prehereditary");
}

void relative_injectivity(Verdict& v) {
  const auto u = Universe::build(make_zn(4), {}, {});
  for (const auto& s : enumerate_preradicals(u)) {
    const bool idem_rad = is_idempotent(s) && is_radical(s);
    for (std::size_t i = 0; i < u->size(); ++i) {
      const bool def = is_sigma_injective(s, i, InjectivityMode::definitional).holds;
      if (idem_rad) v.expect(def == is_sigma_injective(s, i, InjectivityMode::purity).holds, "purity iff definitional");
      if (is_prehereditary(s)) v.expect(def == is_sigma_injective(s, i, InjectivityMode::baer).holds, "Baer iff definitional");
      const auto h = sigma_injective_hull(s, i);
      v.expect(is_essential(h.embed.image()), "M essential in E_sigma(M)");
      if (!idem_rad) continue;
      v.expect(is_dense(s, h.hull_rep, h.embed.image()).dense, "M dense in E_sigma(M)");
      if (!def) continue;
      for (const auto& e : u->subs(i))
        if (is_essential(e.sub) && is_dense(s, i, e.sub).dense)
          v.expect(sigma_injective_hull(s, e.sub_rep).hull_rep == i, "hull uniqueness");
    }
  }
}

void localization(Verdict& v) {
  const auto u = Universe::build(make_zn(4), {}, {});
  for (const auto& s : enumerate_preradicals(u))
    for (const auto& c : localization_report(s).claims) v.expect(c.status != ClaimStatus::fail, c.id + " " + c.witness);
}

void max_ring(Verdict& v) {
  for (const char* ring : {"z4", "z8", "t2f2"}) {
    const auto u = Universe::build(builtin_ring(ring), {}, {});
    const auto j = jacobson_preradical(u);
    v.expect(is_prehereditary(j), std::string(ring) + ": J prehereditary");
    bool only_zero = true, max = true;
    for (std::size_t i = 0; i < u->size(); ++i) {
      if (i == u->zero_index()) continue;
      only_zero = only_zero && !j.is_torsion(i);
      max = max && !maximal_submodules(u->rep(i)).empty();
    }
    v.expect(only_zero, std::string(ring) + ": T_J = {0}");
    v.expect(hat(j) == zero_preradical(u), std::string(ring) + ": hat(J) = 0");
    v.expect(max, std::string(ring) + ": nonzero modules have maximal submodules");
  }
}

struct Criterion {
  int number;
  const char* name;
  double limit_s;
  std::function<void(Verdict&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Z4xZ4 counterexample", 10, counterexample},
      {2, "operator laws over Z4", 300, operator_laws},
      {3, "filter correspondence over Z4", 60, filter_correspondence},
      {4, "injective hulls", 120, hulls},
      {5, "non-hereditary torsion class over T2(F2)", 120, trace_of_projective},
      {6, "relative injectivity over Z4", 300, relative_injectivity},
      {7, "localization over Z4", 300, localization},
      {8, "Jacobson and max rings", 60, max_ring},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.expect(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.limit_s) v.expect(false, "time limit exceeded");
    const bool ok = v.failure.empty();
    all = all && ok;
    char time[32];
    std::snprintf(time, sizeof time, "%.2fs", s);
    std::cout << "criterion " << c.number << ": " << (ok ? "PASS" : "FAIL") << "  " << c.name << "  (" << v.checks
              << " checks, " << time << ", limit " << c.limit_s << "s)";
    if (!ok) std::cout << "  " << v.failure;
    std::cout << "\n";
  }
  return all ? 0 : 1;
}
