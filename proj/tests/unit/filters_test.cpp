#include <gtest/gtest.h>

#include <fstream>

#include "json.hpp"
#include "prlab/errors.hpp"
#include "prlab/filters.hpp"

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

// Left ideals of Z4 are sorted 0, 2Z4, Z4.
Filter z4_filter(std::vector<std::size_t> ideals) { return Filter(u4()->ring_ptr(), std::move(ideals)); }

}  // namespace

TEST(Filters, FilterOfExamples) {
  auto u = u4();
  ASSERT_EQ(u->ring().left_ideals().size(), 3u);
  EXPECT_EQ(filter_of(jacobson_preradical(u)), z4_filter({2}));
  EXPECT_EQ(filter_of(identity_preradical(u)), z4_filter({0, 1, 2}));
  EXPECT_EQ(filter_of(socle_preradical(u)), z4_filter({1, 2}));
}

TEST(Filters, AxiomExamples) {
  const auto mid = z4_filter({1, 2});
  EXPECT_TRUE(is_linear_filter(mid));
  const auto g = check_gabriel(mid);
  EXPECT_FALSE(g.holds);
  ASSERT_TRUE(g.witness.has_value());
  EXPECT_EQ(g.witness->ideals, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(is_gabriel_filter(z4_filter({2})));
  EXPECT_TRUE(is_gabriel_filter(z4_filter({0, 1, 2})));
  EXPECT_FALSE(check_linear(z4_filter({1})).holds);
  EXPECT_EQ(check_linear(z4_filter({0, 2})).witness->axiom, "upward closed");
  EXPECT_EQ(check_linear(z4_filter({})).witness->axiom, "contains R");
}

TEST(Filters, PreradicalOfFilterExamples) {
  auto u = u4();
  const std::size_t z4 = u->find_label("Z4");
  EXPECT_EQ(preradical_of_filter(u, z4_filter({1, 2})).value(z4).size(), 2u);
  EXPECT_EQ(preradical_of_filter(u, z4_filter({2})), zero_preradical(u));
  EXPECT_EQ(preradical_of_filter(u, z4_filter({0, 1, 2})), identity_preradical(u));
  EXPECT_THROW(preradical_of_filter(u, z4_filter({1})), InvalidParameter);
}

TEST(Filters, CountsMatchGolden) {
  const auto g = golden("filter_counts.json");
  for (const auto& [name, c] : g.items()) {
    const auto fs = enumerate_linear_filters(builtin_ring(name));
    std::size_t gab = 0;
    for (const auto& f : fs) gab += is_gabriel_filter(f);
    EXPECT_EQ(fs.size(), c["linear"].get<std::size_t>()) << name;
    EXPECT_EQ(gab, c["gabriel"].get<std::size_t>()) << name;
  }
}

TEST(Filters, CorrespondenceOverEnumeratedTables) {
  for (const char* ring : {"z4", "z8", "t2f2", "z2xz2"}) {
    auto u = Universe::build(builtin_ring(ring), {}, {});
    for (const auto& s : enumerate_preradicals(u)) {
      const Filter f = filter_of(s);
      EXPECT_EQ(is_prehereditary(s), is_linear_filter(f)) << ring;
      EXPECT_EQ(is_hereditary_torsion_class(s), is_gabriel_filter(f)) << ring;
      if (is_left_exact(s)) EXPECT_EQ(preradical_of_filter(u, f), s) << ring;
    }
    for (const auto& f : enumerate_linear_filters(u->ring_ptr())) {
      const auto s = preradical_of_filter(u, f);
      EXPECT_TRUE(is_left_exact(s)) << ring;
      EXPECT_EQ(filter_of(s), f) << ring;
    }
  }
}
