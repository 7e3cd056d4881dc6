#include <gtest/gtest.h>

#include "prlab/checks.hpp"
#include "prlab/errors.hpp"
#include "prlab/json_io.hpp"

using namespace prlab;

namespace {

UniversePtr u4() {
  static const UniversePtr u = Universe::build(make_zn(4), {}, {});
  return u;
}

}  // namespace

TEST(JsonIo, RingRoundTrip) {
  for (const char* name : {"z4", "z2xz4", "t2f2", "t2f3"}) {
    const RingPtr r = builtin_ring(name);
    const Json j = to_json(*r);
    const RingPtr back = ring_from_json(parse_json(j.dump()));
    EXPECT_EQ(to_json(*back), j) << name;
    EXPECT_EQ(back->invariant_factors(), r->invariant_factors());
  }
  const Json z4 = to_json(*make_zn(4));
  EXPECT_EQ(z4["mult_table"], Json::parse("[[[1]]]"));
  EXPECT_EQ(z4["one"], Json::parse("[1]"));
}

TEST(JsonIo, UniverseRoundTrip) {
  for (const char* name : {"z4", "t2f2", "z2xz2"}) {
    const auto u = Universe::build(builtin_ring(name), {}, {});
    const Json j = to_json(*u);
    EXPECT_EQ(j.dump(), to_json(*Universe::build(builtin_ring(name), {}, {})).dump()) << name;
    const auto back = universe_from_json(parse_json(j.dump()));
    EXPECT_EQ(to_json(*back), j) << name;
    ASSERT_EQ(back->size(), u->size());
    for (std::size_t i = 0; i < u->size(); ++i) EXPECT_EQ(back->subs(i).size(), u->subs(i).size());
  }
}

TEST(JsonIo, UniverseRejectsTampering) {
  Json j = to_json(*u4());
  Json bad = j;
  bad["closure_certificate"]["injective_hulls"] = false;
  EXPECT_THROW(universe_from_json(bad), InvalidParameter);
  bad = j;
  bad["labels"][1] = "Q";
  EXPECT_THROW(universe_from_json(bad), InvalidParameter);
  bad = j;
  bad["policy"].erase("sum_bound");
  EXPECT_THROW(universe_from_json(bad), InvalidParameter);
  bad = j;
  bad["reps"][1]["action"][0][0][0] = 3;  // 1 acting on Z2 as 3 is fine, as 0 is not
  EXPECT_NO_THROW(universe_from_json(bad));
  bad["reps"][1]["action"][0][0][0] = 0;
  EXPECT_THROW(universe_from_json(bad), InvalidParameter);
}

TEST(JsonIo, PreradicalRoundTrip) {
  auto u = u4();
  for (const auto& s : enumerate_preradicals(u)) {
    const Json j = to_json(s);
    EXPECT_EQ(preradical_from_json(parse_json(j.dump()), u), s);
  }
  const Json soc = to_json(socle_preradical(u));
  EXPECT_EQ(soc["values"]["Z4"], Json::parse("[[2]]"));
  Json bad = soc;
  bad["values"]["Z2"] = Json::parse("[]");
  bad["values"]["Z4"] = Json::parse("[[2]]");
  EXPECT_THROW(preradical_from_json(bad, u), InvalidParameter);
}

TEST(JsonIo, FilterRoundTrip) {
  for (const char* name : {"z4", "z8", "t2f2", "z2xz2"}) {
    const RingPtr r = builtin_ring(name);
    for (const auto& f : enumerate_linear_filters(r)) {
      const Json j = to_json(f);
      EXPECT_TRUE(j["flags"]["linear"].get<bool>());
      EXPECT_EQ(filter_from_json(parse_json(j.dump()), r), f) << name;
    }
  }
  const RingPtr z4 = u4()->ring_ptr();
  const Json j = to_json(Filter(z4, {1, 2}));
  EXPECT_EQ(j["ideals"], Json::parse("[[[2]], [[1]]]"));
  EXPECT_EQ(j["flags"]["gabriel"], false);
}

TEST(JsonIo, TraitReportRoundTrip) {
  for (const auto& u : {u4(), Universe::build(builtin_ring("t2f2"), {}, {})})
    for (const auto& s : enumerate_preradicals(u)) {
      const TraitReport t = traits(s);
      const Json j = to_json(t, *u);
      EXPECT_TRUE(trait_report_from_json(parse_json(j.dump()), u) == t);
    }
}

TEST(JsonIo, CheckReportRoundTrip) {
  const auto r = check_all(Universe::build(builtin_ring("t2f2"), {}, {}));
  const Json j = to_json(r);
  EXPECT_EQ(check_report_from_json(parse_json(j.dump())), r);
  EXPECT_EQ(j[0]["status"], "not-applicable");
}

TEST(JsonIo, MalformedInput) {
  try {
    parse_json("{\"name\": \"z4\",, }");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 15u);
  }
  EXPECT_THROW(ring_from_json(parse_json("{\"name\": \"z4\"}")), InvalidParameter);
  EXPECT_THROW(ring_from_json(parse_json("[1, 2]")), InvalidParameter);
  EXPECT_THROW(
      ring_from_json(parse_json(R"({"name":"bad","invariant_factors":[4],"mult_table":[[[2]]],"one":[1]})")),
      InvalidParameter);
}
