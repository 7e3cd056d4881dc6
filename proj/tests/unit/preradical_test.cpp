#include <gtest/gtest.h>

#include <fstream>
#include <set>

#include "json.hpp"
#include "oracles.hpp"
#include "prlab/errors.hpp"
#include "prlab/lattice.hpp"
#include "prlab/preradical.hpp"

using namespace prlab;

namespace {

nlohmann::json golden(const std::string& name) {
  std::ifstream in(std::string(PRLAB_GOLDEN_DIR) + "/" + name);
  return nlohmann::json::parse(in);
}

UniversePtr u4() {
  static const UniversePtr u = Universe::build(make_zn(4), {}, {});
  return u;
}

UniversePtr uz4z4() {
  static const UniversePtr u = Universe::build(builtin_ring("z4xz4"), {}, {});
  return u;
}

UniversePtr ut2() {
  static const UniversePtr u = Universe::build(builtin_ring("t2f2"), {}, {});
  return u;
}

Submodule doubles(const ModulePtr& m) {
  std::vector<Elem> g;
  for (Elem x = 0; x < m->size(); ++x) g.push_back(m->add(x, x));
  return Submodule::generated(m, g);
}

Submodule e_part(const UniversePtr& u, const ModulePtr& m) {
  const Elem e = u->ring().shape().encode(u->ring().family().idempotent);
  std::vector<Elem> g;
  for (Elem x = 0; x < m->size(); ++x) g.push_back(m->act(e, x));
  return Submodule::generated(m, g);
}

// I = Z4 x 2Z4 inside R = Z4 x Z4
Submodule ideal_i(const UniversePtr& u) {
  const auto& r = u->rep(u->regular_index());
  return join(e_part(u, r), doubles(r));
}

std::vector<Preradical> tables(const UniversePtr& u) { return enumerate_preradicals(u); }

}  // namespace

TEST(Preradical, CounterexampleOverZ4xZ4) {
  auto u = uz4z4();
  const std::size_t r = u->regular_index();
  const std::size_t c = u->find_label("0xZ4");
  ASSERT_NE(c, kNoRep);
  const auto a = alpha(u, r, ideal_i(u));
  EXPECT_EQ(a.value(r), ideal_i(u));
  EXPECT_EQ(a.value(c), doubles(u->rep(c)));
  const auto h = hat(a);
  EXPECT_TRUE(h.value(c).is_zero());
  EXPECT_EQ(h.value(r), e_part(u, u->rep(r)));
  const auto t = traits(a);
  EXPECT_FALSE(t.essentially_idempotent.holds);
  ASSERT_TRUE(t.essentially_idempotent.witness.has_value());
  EXPECT_EQ(t.essentially_idempotent.witness->rep, c);
  const auto ci = circ(a);
  EXPECT_TRUE(leq(ci, a));
  EXPECT_FALSE(ci == a);
  EXPECT_TRUE(is_essentially_idempotent(ci));
}

TEST(Preradical, AlphaOmegaExamples) {
  auto u = u4();
  const std::size_t z4 = u->find_label("Z4"), z2 = u->find_label("Z2");
  const auto& m = u->rep(z4);
  EXPECT_EQ(alpha(u, z4, Submodule::zero(m)), zero_preradical(u));
  EXPECT_EQ(alpha(u, z4, Submodule::whole(m)), identity_preradical(u));
  EXPECT_EQ(omega(u, z4, doubles(m)).value(z4), doubles(m));
  EXPECT_EQ(omega(u, z4, Submodule::whole(m)), identity_preradical(u));
  EXPECT_EQ(omega(u, z2, Submodule::zero(u->rep(z2))).value(z4), doubles(m));
  EXPECT_TRUE(leq(alpha(u, z4, doubles(m)), omega(u, z4, doubles(m))));

  // not fully invariant: the first summand of Z2+Z2
  const std::size_t v = u->find_label("Z2+Z2");
  const auto line = u->subs(v)[1].sub;
  ASSERT_EQ(line.size(), 2u);
  EXPECT_THROW(alpha(u, v, line), InvalidParameter);
  EXPECT_THROW(omega(u, v, line), InvalidParameter);
}

TEST(Preradical, LatticeAndProductExamples) {
  auto u = u4();
  const std::size_t z4 = u->find_label("Z4");
  const auto& m = u->rep(z4);
  const auto soc = socle_preradical(u), jac = jacobson_preradical(u);
  EXPECT_EQ(meet(soc, jac).value(z4), doubles(m));
  EXPECT_EQ(join(soc, zero_preradical(u)), soc);
  EXPECT_EQ(prod(soc, soc), soc);
  EXPECT_TRUE(prod(jac, jac).value(z4).is_zero());
  for (const auto& t : tables(u)) EXPECT_EQ(coprod(zero_preradical(u), t), t);
}

TEST(Preradical, OperatorExamples) {
  auto u = u4();
  const std::size_t z4 = u->find_label("Z4"), z2 = u->find_label("Z2");
  const auto soc = socle_preradical(u), jac = jacobson_preradical(u), one = identity_preradical(u);
  EXPECT_EQ(hat(one), one);
  EXPECT_TRUE(bar(soc).value(z4).is_whole());
  EXPECT_TRUE(tilde(soc).value(z2).is_whole());
  EXPECT_EQ(circ(jac), zero_preradical(u));
  EXPECT_EQ(square(jac), jac);
  const auto t = traits(jac);
  EXPECT_TRUE(t.prehereditary.holds);
  EXPECT_TRUE(t.strongly_nilpotent.holds);
  const auto z = traits(zero_preradical(u));
  EXPECT_TRUE(z.idempotent.holds && z.radical.holds && z.left_exact.holds);
}

TEST(Preradical, TraceOfProjectiveOverT2) {
  auto u = ut2();
  const std::size_t p = u->find_label("P"), s2 = u->find_label("S2");
  const auto tr = alpha(u, p, Submodule::whole(u->rep(p)));
  EXPECT_TRUE(tr.is_torsion(p));
  EXPECT_FALSE(tr.is_torsion(s2));
  EXPECT_FALSE(tr.is_torsion_sub(p, socle(u->rep(p))));
  EXPECT_FALSE(is_prehereditary(tr));
  const auto sq = square(tr);
  EXPECT_TRUE(leq(tr, sq));
  EXPECT_FALSE(sq == tr);
  EXPECT_TRUE(sq.is_torsion(s2));
  EXPECT_TRUE(is_prehereditary(sq));
}

TEST(Preradical, EnumerationMatchesOracleAndGolden) {
  const auto g = golden("preradical_counts.json");
  ClosurePolicy one;
  one.sum_bound = 1;
  auto u2 = Universe::build(make_zn(2), {}, one);
  EXPECT_EQ(tables(u2).size(), g["z2_sum_bound_1"].get<std::size_t>());
  EXPECT_EQ(tables(u4()).size(), g["z4_sum_bound_2"].get<std::size_t>());
  EXPECT_EQ(tables(ut2()).size(), g["t2f2_sum_bound_2"].get<std::size_t>());

  for (const auto& u : {u4(), ut2()}) {
    std::set<std::vector<std::vector<bool>>> expect, got;
    for (const auto& t : oracle::preradical_tables(u->reps())) expect.insert(t);
    for (const auto& t : tables(u)) {
      std::vector<std::vector<bool>> row;
      for (std::size_t i = 0; i < u->size(); ++i) {
        std::vector<bool> in(u->rep(i)->size());
        for (Elem x = 0; x < in.size(); ++x) in[x] = t.value(i).contains(x);
        row.push_back(in);
      }
      got.insert(row);
    }
    EXPECT_EQ(got, expect);
  }
}

TEST(Preradical, EnumerationBudget) {
  EXPECT_THROW(enumerate_preradicals(u4(), 2), BudgetExceeded);
  EXPECT_NO_THROW(enumerate_preradicals(u4(), 4));
}

TEST(Preradical, RejectsNonNaturalTable) {
  auto u = u4();
  std::vector<std::size_t> v(u->size(), 0);
  v[u->find_label("Z2")] = 1;  // sigma(Z2) = Z2 but sigma(Z4) = 0
  EXPECT_FALSE(is_natural(*u, v));
  EXPECT_THROW(Preradical(u, v), InvalidParameter);
  auto other = Universe::build(make_zn(4), {}, {});
  EXPECT_THROW(join(zero_preradical(u), zero_preradical(other)), UniverseMismatch);
}

// Extremal characterizations of the operators, checked against every table.
TEST(Preradical, OperatorsAreExtremal) {
  for (const auto& u : {u4(), ut2()}) {
    const auto all = tables(u);
    for (const auto& s : all) {
      const auto h = hat(s), b = bar(s), ti = tilde(s), c = circ(s), sq = square(s);
      EXPECT_TRUE(is_idempotent(h) && leq(h, s));
      EXPECT_TRUE(is_radical(b) && leq(s, b));
      EXPECT_TRUE(is_left_exact(ti) && leq(s, ti));
      EXPECT_EQ(ti == s, is_left_exact(s));
      EXPECT_TRUE(is_essentially_idempotent(c) && leq(c, s));
      EXPECT_TRUE(is_prehereditary(sq) && leq(s, sq));
      for (const auto& t : all) {
        if (leq(t, s) && is_idempotent(t)) EXPECT_TRUE(leq(t, h));
        if (leq(s, t) && is_radical(t)) EXPECT_TRUE(leq(b, t));
        if (leq(s, t) && is_left_exact(t)) EXPECT_TRUE(leq(ti, t));
        if (leq(t, s) && is_essentially_idempotent(t)) EXPECT_TRUE(leq(t, c));
        if (leq(s, t) && is_prehereditary(t)) EXPECT_TRUE(leq(sq, t));
      }
    }
  }
}

TEST(Preradical, WitnessesReverify) {
  for (const auto& u : {u4(), ut2(), uz4z4()}) {
    std::vector<Preradical> sample{zero_preradical(u), identity_preradical(u), socle_preradical(u),
                                   jacobson_preradical(u), singular_preradical(u)};
    for (std::size_t i = 0; i < u->size(); ++i)
      for (std::size_t k : u->fully_invariant(i)) {
        sample.push_back(alpha(u, i, u->subs(i)[k].sub));
        sample.push_back(omega(u, i, u->subs(i)[k].sub));
      }
    for (const auto& s : sample) {
      const auto r = traits(s);
      for (const auto& [name, res] : r.items()) {
        EXPECT_EQ(res->holds, !res->witness.has_value()) << name;
        if (!res->witness) continue;
        const std::size_t m = res->witness->rep;
        if (name == "idempotent") EXPECT_NE(s.at_sub(m, s.value(m)), s.value(m));
        if (name == "radical") EXPECT_FALSE(s.is_torsion_free_quotient(m, s.value(m)));
        if (name == "left_exact") EXPECT_NE(s.at_sub(m, *res->witness->sub), meet(*res->witness->sub, s.value(m)));
        if (name == "prehereditary") EXPECT_TRUE(s.is_torsion(m) && !s.is_torsion_sub(m, *res->witness->sub));
        if (name == "essentially_idempotent") EXPECT_TRUE(!s.is_torsion_free(m) && hat(s).is_torsion_free(m));
        if (name == "strongly_nilpotent") EXPECT_FALSE(hat(s).is_torsion_free(m));
        if (name == "costable") EXPECT_FALSE(s.is_torsion_free(u->hull(m)->rep));
      }
    }
  }
}
