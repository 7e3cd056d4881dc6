#include <gtest/gtest.h>

#include <set>

#include "prlab/checks.hpp"
#include "prlab/errors.hpp"

using namespace prlab;

namespace {

const ClaimResult& find(const CheckReport& r, const std::string& id) {
  for (const auto& c : r.claims)
    if (c.id == id) return c;
  throw std::runtime_error("missing claim " + id);
}

}  // namespace

TEST(Checks, RegistryIsWellFormed) {
  const auto reg = claim_registry();
  std::set<std::string> ids;
  for (const auto& c : reg) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_FALSE(c.statement.empty()) << c.id;
    EXPECT_FALSE(c.hypotheses.empty()) << c.id;
  }
  EXPECT_GE(reg.size(), 60u);
  std::size_t xfail = 0;
  for (const auto& c : reg) xfail += c.expected_fail;
  EXPECT_EQ(xfail, 1u);
}

TEST(Checks, AllClaimsHoldOverSmallUniverses) {
  for (const char* ring : {"z4", "z2xz2", "z8", "t2f2", "z4xz4", "z2xz4"}) {
    const auto r = check_all(Universe::build(builtin_ring(ring), {}, {}));
    EXPECT_TRUE(r.ok()) << ring;
    for (const auto& c : r.claims)
      if (!c.expected_fail) EXPECT_NE(c.status, ClaimStatus::fail) << ring << " " << c.id << " " << c.witness;
  }
}

TEST(Checks, LocalizationOverZ4) {
  const auto r = check_all(Universe::build(make_zn(4), {}, {}));
  for (const auto& c : r.claims) {
    if (c.id.rfind("localization.", 0) != 0) continue;
    EXPECT_EQ(c.status, ClaimStatus::pass) << c.id;
    EXPECT_GT(c.instances, 0u) << c.id;
  }
}

TEST(Checks, CounterexampleCitesWitness) {
  const auto u = Universe::build(builtin_ring("z4xz4"), {}, {});
  const auto r = check_claim(u, "counterexample.z4xz4");
  ASSERT_EQ(r.claims.size(), 1u);
  EXPECT_EQ(r.claims[0].status, ClaimStatus::pass);
  EXPECT_EQ(r.claims[0].witness, "witness 0xZ4");
  EXPECT_EQ(check_claim(Universe::build(make_zn(4), {}, {}), "counterexample.z4xz4").claims[0].status,
            ClaimStatus::not_applicable);
}

TEST(Checks, ExpectedFailureIsReportedNotFatal) {
  const auto r = check_all(Universe::build(builtin_ring("t2f2"), {}, {}));
  const auto& c = find(r, "localization.coker_eta_torsion_free");
  EXPECT_EQ(c.status, ClaimStatus::fail);
  EXPECT_TRUE(c.expected_fail);
  EXPECT_NE(c.witness.find("M = S2"), std::string::npos);
  EXPECT_EQ(find(r, "localization.coker_eta_torsion").status, ClaimStatus::pass);
  EXPECT_TRUE(r.ok());
}

TEST(Checks, JacobsonItemsAgree) {
  for (const char* ring : {"z4", "z2xz2", "t2f2", "z9"}) {
    const auto r = check_claim(Universe::build(builtin_ring(ring), {}, {}), "jacobson.max_ring");
    EXPECT_EQ(r.claims[0].status, ClaimStatus::pass) << ring;
    EXPECT_EQ(r.claims[0].witness, "prehereditary=true T_J={0}=true hat_J=0=true max=true") << ring;
  }
}

TEST(Checks, SamplesWhenEnumerationExceedsBudget) {
  const auto u = Universe::build(builtin_ring("z4xz4"), {}, {});
  bool exhaustive = true;
  const auto sample = claim_tables(u, 3, &exhaustive);
  EXPECT_FALSE(exhaustive);
  EXPECT_GT(sample.size(), 3u);
  std::set<std::vector<std::size_t>> distinct;
  for (const auto& s : sample) distinct.insert(s.values());
  EXPECT_EQ(distinct.size(), sample.size());

  CheckOptions opts;
  opts.enumeration_budget = 3;
  opts.pair_limit = 10;
  const auto r = check_all(u, opts);
  EXPECT_TRUE(r.ok());
  EXPECT_NE(r.claims[0].universe.find("(sample)"), std::string::npos);
  EXPECT_EQ(find(r, "operators.extremal").status, ClaimStatus::not_applicable);
}

TEST(Checks, UnknownClaimThrows) {
  EXPECT_THROW(check_claim(Universe::build(make_zn(4), {}, {}), "no.such.claim"), InvalidParameter);
}
