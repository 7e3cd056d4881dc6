#include <gtest/gtest.h>

#include "prlab/constructions.hpp"
#include "prlab/errors.hpp"
#include "prlab/lattice.hpp"
#include "prlab/universe.hpp"

using namespace prlab;

namespace {

std::vector<std::string> labels(const Universe& u) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < u.size(); ++i) out.push_back(u.label(i));
  return out;
}

}  // namespace

TEST(Universe, Z4SumBound2) {
  auto u = Universe::build(make_zn(4), {}, {});
  EXPECT_EQ(labels(*u), (std::vector<std::string>{"0", "Z2", "Z2+Z2", "Z4", "Z2+Z4", "Z4+Z4"}));
  EXPECT_EQ(u->regular_index(), 3u);
  EXPECT_EQ(u->zero_index(), 0u);
  EXPECT_EQ(u->find_label("R"), 3u);
  const ClosureCertificate all{true, true, true, true, true, true};
  EXPECT_EQ(u->certificate(), all);
  EXPECT_EQ(u->verify(), all);
}

TEST(Universe, SmallCounts) {
  ClosurePolicy one;
  one.sum_bound = 1;
  EXPECT_EQ(Universe::build(make_zn(2), {}, one)->size(), 2u);
  EXPECT_EQ(Universe::build(make_zn(8), {}, {})->size(), 10u);
  EXPECT_EQ(Universe::build(builtin_ring("z4xz4"), {}, {})->size(), 15u);
}

TEST(Universe, UpperTriangularLabels) {
  auto u = Universe::build(builtin_ring("t2f2"), {}, {});
  EXPECT_EQ(labels(*u),
            (std::vector<std::string>{"0", "S1", "S2", "S1+S1", "S1+S2", "P", "S2+S2", "S1+P", "S2+P", "P+P"}));
  const std::size_t p = u->find_label("P");
  ASSERT_NE(p, kNoRep);
  // the socle of P is S2, its top is S1
  const auto soc = socle(u->rep(p));
  EXPECT_EQ(u->entry(p, soc).sub_rep, u->find_label("S2"));
  EXPECT_EQ(u->entry(p, soc).quot_rep, u->find_label("S1"));
  EXPECT_EQ(u->label(u->regular_index()), "S2+P");
}

TEST(Universe, ProductLabels) {
  auto u = Universe::build(builtin_ring("z4xz4"), {}, {});
  EXPECT_EQ(u->label(u->regular_index()), "Z4x0+0xZ4");
  EXPECT_NE(u->find_label("0xZ4"), kNoRep);
  EXPECT_NE(u->find_label("Z2x0+Z4x0"), kNoRep);
  for (std::size_t i = 0; i < u->size(); ++i) {
    EXPECT_EQ(u->label(i).find_first_of("(),"), std::string::npos);
  }
}

TEST(Universe, DeterministicRebuild) {
  auto r = make_zn(4);
  auto a = Universe::build(r, {}, {});
  auto b = Universe::build(r, {}, {});
  ASSERT_EQ(a->size(), b->size());
  for (std::size_t i = 0; i < a->size(); ++i) {
    EXPECT_EQ(a->rep(i)->invariant_factors(), b->rep(i)->invariant_factors());
    EXPECT_EQ(a->rep(i)->action(), b->rep(i)->action());
    for (std::size_t j = 0; j < a->size(); ++j) EXPECT_EQ(a->homs(i, j).count, b->homs(i, j).count);
  }
}

TEST(Universe, CachesAgreeWithFreshComputation) {
  auto u = Universe::build(builtin_ring("t2f2"), {}, {});
  for (std::size_t i = 0; i < u->size(); ++i) {
    for (std::size_t j = 0; j < u->size(); ++j) EXPECT_EQ(u->homs(i, j).count, hom_count(u->rep(i), u->rep(j)));
    for (const auto& e : u->subs(i)) {
      EXPECT_TRUE(e.incl.is_injective());
      EXPECT_EQ(e.incl.image(), e.sub);
      EXPECT_EQ(e.proj.kernel(), e.sub);
      EXPECT_TRUE(e.proj.is_surjective());
    }
    const auto fi = fully_invariant_submodules(u->rep(i));
    ASSERT_EQ(fi.size(), u->fully_invariant(i).size());
    for (std::size_t k = 0; k < fi.size(); ++k) EXPECT_EQ(fi[k], u->subs(i)[u->fully_invariant(i)[k]].sub);
    ASSERT_TRUE(u->hull(i).has_value());
    EXPECT_TRUE(is_essential(u->hull(i)->embed.image()));
  }
}

TEST(Universe, Classify) {
  auto r = make_zn(4);
  auto u = Universe::build(r, {}, {});
  auto reg = regular_module(r);
  auto two = Submodule::generated(reg, {2});
  EXPECT_EQ(u->label(u->classify(quotient(two).module).rep), "Z2");
  EXPECT_EQ(u->label(u->classify(submodule_as_module(two).module).rep), "Z2");
  auto z2 = quotient(two).module;
  EXPECT_EQ(u->label(u->classify(direct_sum({z2, z2}).module).rep), "Z2+Z2");
  auto c = u->classify(direct_sum({reg, z2}).module);
  EXPECT_TRUE(c.iso.is_injective());
  EXPECT_TRUE(c.iso.is_linear());
  EXPECT_THROW(u->classify(direct_sum({reg, reg, reg}).module), NotInUniverse);
}

TEST(Universe, SizeCapIsAnError) {
  ClosurePolicy p;
  p.max_module_size = 8;
  EXPECT_THROW(Universe::build(make_zn(4), {}, p), BudgetExceeded);
}
