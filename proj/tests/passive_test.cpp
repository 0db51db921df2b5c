#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "segmarket/error.hpp"
#include "segmarket/oracle.hpp"
#include "segmarket/passive.hpp"

using namespace segmarket;
using namespace segmarket::testing;

namespace {

struct ExpectedStep {
  std::initializer_list<const char*> masses;
  const char* price;
};

void expect_steps(const Construction& c, std::initializer_list<ExpectedStep> steps) {
  ASSERT_EQ(c.trace.size(), steps.size());
  std::size_t k = 0;
  for (const auto& step : steps) {
    const TraceStep& got = c.trace[k];
    EXPECT_EQ(got.segment, market_on(got.segment.grid_ptr(), step.masses)) << "step " << k + 1;
    EXPECT_EQ(got.segment.grid()[got.price], R(step.price)) << "step " << k + 1;
    EXPECT_EQ(got.gamma, got.segment.mass());
    ++k;
  }
}

Surplus surplus_of(const Construction& c) { return scheme_surplus(c.scheme); }

}  // namespace

TEST(BbmSegment, UnregulatedSteps) {
  Construction c = bbm_segment(m1());
  expect_steps(c, {{{"0.36", "0.12", "0.12", "0.12"}, "1"},
                   {{"0", "0.06", "0.06", "0.06"}, "2"},
                   {{"0", "0.02", "0", "0.01"}, "2"},
                   {{"0", "0", "0", "0.07"}, "6"}});
  EXPECT_EQ(values_of(m1(), c.trace[2].support), rationals({"2", "6"}));
  EXPECT_TRUE(c.complete());
  Surplus s = surplus_of(c);
  EXPECT_EQ(s.cs, R("1.30"));
  EXPECT_EQ(s.ps, R("1.56"));
}

TEST(BbmSegment, RejectsZeroMarket) {
  EXPECT_THROW(bbm_segment(Market::zero(grid_1236())), Error);
}

TEST(BbmSegment, GuardOverride) {
  ConstructionOptions opts;
  opts.max_iterations = 2;
  try {
    bbm_segment(m1(), opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonTermination);
  }
}

TEST(BSet, Examples) {
  EXPECT_EQ(b_set(m1(), f23()), (IndexSet{0, 2, 3}));
  Market r = market_on(grid_1236(), {"0", "0.20", "0", "0.08"});
  EXPECT_EQ(b_set(r, f23()), (IndexSet{1, 3}));
  Market none = market_on(grid_1236(), {"1", "0", "0", "1"});
  try {
    b_set(none, f23());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoSupportInF);
  }
}

TEST(PsMax, GoldenSteps) {
  Construction c = ps_max_scheme(m1(), f23());
  expect_steps(c, {{{"0.36", "0", "0.09", "0.09"}, "3"},
                   {{"0", "0", "0.09", "0.09"}, "3"},
                   {{"0", "0.16", "0", "0.08"}, "2"},
                   {{"0", "0.04", "0", "0"}, "2"}});
  EXPECT_TRUE(c.complete());
  Surplus s = surplus_of(c);
  EXPECT_EQ(s.cs, R("0.86"));
  EXPECT_EQ(s.ps, R("1.64"));
  EXPECT_TRUE(validate_scheme(c.scheme, f23(), Model::Passive).valid());
}

TEST(PsMax, UniquenessFixture) {
  Market x = uniqueness_market();
  Construction c = ps_max_scheme(x, RegulatedSet(1, 2));
  ASSERT_TRUE(c.complete());
  ASSERT_EQ(c.scheme.segments.size(), 2u);
  EXPECT_EQ(c.scheme.segments[0].market, market_on(x.grid_ptr(), {"1", "1", "0", "0"}));
  EXPECT_EQ(c.scheme.segments[0].price, 1u);
  EXPECT_EQ(c.scheme.segments[1].market, market_on(x.grid_ptr(), {"8", "0", "1", "3"}));
  EXPECT_EQ(c.scheme.segments[1].price, 2u);
}

TEST(PsMax, InfeasibleSetLeavesRemainder) {
  Construction c = ps_max_scheme(m1(), RegulatedSet(2, 2));
  EXPECT_FALSE(c.complete());
  EXPECT_EQ(c.remainder, market_on(grid_1236(), {"0", "0.02", "0", "0.08"}));
  EXPECT_FALSE(is_feasible(m1(), RegulatedSet(2, 2)));
  EXPECT_TRUE(is_feasible(m1(), f23()));
  EXPECT_TRUE(validate_scheme(c.scheme, RegulatedSet(2, 2), Model::Passive).valid());
}

TEST(PsMax, FullExtractionWhenEveryValueAboveFloorIsInF) {
  // F = {2,3,6}: each buyer from v_2 up can be charged their own value
  Construction c = ps_max_scheme(m1(), RegulatedSet(1, 3));
  EXPECT_TRUE(c.complete());
  Surplus s = scheme_surplus(c.scheme);
  EXPECT_EQ(s.ps, R("2.5"));  // 0.20*2 + 0.18*3 + 0.26*6
  EXPECT_EQ(s.cs, 0);
}

TEST(CsMax, GoldenSteps) {
  Construction c = cs_max_scheme(m1(), f23());
  expect_steps(c, {{{"0.36", "0", "0.09", "0.09"}, "3"},
                   {{"0", "0", "0.05", "0.05"}, "3"},
                   {{"0", "0.04", "0.04", "0.04"}, "2"},
                   {{"0", "0.16", "0", "0.08"}, "2"}});
  EXPECT_EQ(c.trace[1].gamma, R("0.10"));
  Surplus s = surplus_of(c);
  EXPECT_EQ(s.cs, R("0.94"));
  EXPECT_EQ(s.ps, R("1.56"));
  EXPECT_TRUE(validate_scheme(c.scheme, f23(), Model::Passive).valid());
}

TEST(CsMax, InfeasibleThrows) {
  try {
    cs_max_scheme(m1(), RegulatedSet(2, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InfeasibleSet);
  }
}

TEST(SubFeasible, RunningExample) {
  SubFeasibleSpec spec = compute_i0_eta0(m1(), f23());
  EXPECT_EQ(m1().grid()[spec.i0], R("2"));
  EXPECT_EQ(spec.eta0, R("0.16"));
  EXPECT_EQ(cs_p_min(m1(), f23()), R("0.86"));
}

TEST(SubFeasible, WholeTailFeasibleGivesTopIndex) {
  // F = {2,3,6} contains the optimal price 6, so {6} alone is feasible
  SubFeasibleSpec spec = compute_i0_eta0(m1(), RegulatedSet(1, 3));
  EXPECT_EQ(spec.i0, 3u);
}

TEST(SwMin, GoldenSteps) {
  Construction c = sw_min_scheme(m1(), f23());
  expect_steps(c, {{{"0.12", "0.04", "0.04", "0.04"}, "3"},
                   {{"0.24", "0", "0.06", "0.06"}, "3"},
                   {{"0", "0", "0.08", "0.08"}, "3"},
                   {{"0", "0.16", "0", "0.08"}, "2"}});
  EXPECT_EQ(values_of(m1(), c.trace[0].support), rationals({"1", "2", "3", "6"}));
  Surplus s = surplus_of(c);
  EXPECT_EQ(s.cs, R("0.86"));
  EXPECT_EQ(s.ps, R("1.56"));
  EXPECT_TRUE(validate_scheme(c.scheme, f23(), Model::Passive).valid());
}

TEST(SwMin, InfeasibleThrows) {
  EXPECT_THROW(sw_min_scheme(m1(), RegulatedSet(2, 2)), Error);
  EXPECT_THROW(cs_p_min(m1(), RegulatedSet(2, 2)), Error);
}

TEST(SwMin, RejectsBadSpec) {
  SubFeasibleSpec spec{f23(), 0, R("0")};
  EXPECT_THROW(sw_min_scheme(m1(), spec), Error);
}

// Property: the constructions reach the LP optima on random small instances.
TEST(PassiveProperty, AgreesWithOracle) {
  std::mt19937_64 rng(2024);
  int feasible_count = 0;
  for (int trial = 0; trial < 80; ++trial) {
    auto inst = random_instance(rng, 4, 10);
    const Market& x = inst.market;
    const RegulatedSet& F = inst.F;
    bool feasible = is_feasible(x, F);
    ASSERT_EQ(feasible, oracle_feasible(x, F, Model::Passive));
    if (!feasible) continue;
    ++feasible_count;
    Construction pmax = ps_max_scheme(x, F);
    Construction cmax = cs_max_scheme(x, F);
    Construction smin = sw_min_scheme(x, F);
    for (const Construction* c : {&pmax, &cmax, &smin}) {
      EXPECT_TRUE(c->complete());
      EXPECT_TRUE(validate_scheme(c->scheme, F, Model::Passive).valid());
      EXPECT_EQ(c->scheme.segments.size(), F.size());
    }
    Rational min_cs = oracle_min_cs(x, F, Model::Passive).value;
    EXPECT_EQ(scheme_surplus(pmax.scheme).ps, oracle_max_ps(x, F, Model::Passive).value);
    EXPECT_EQ(scheme_surplus(pmax.scheme).cs, min_cs);
    EXPECT_EQ(scheme_surplus(smin.scheme).cs, min_cs);
    EXPECT_EQ(cs_p_min(x, F), min_cs);
    EXPECT_EQ(scheme_surplus(cmax.scheme).ps, r_uniform(x));
    EXPECT_EQ(scheme_surplus(smin.scheme).ps, r_uniform(x));
  }
  EXPECT_GT(feasible_count, 10);
}

TEST(PassiveProperty, FeasibilityMonotoneUnderLeftExtension) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    auto inst = random_instance(rng, 5, 12);
    const Market& x = inst.market;
    for (Index hi = 0; hi < x.size(); ++hi) {
      bool seen = false;
      for (Index lo = hi + 1; lo-- > 0;) {
        bool f = is_feasible(x, RegulatedSet(lo, hi));
        EXPECT_TRUE(!seen || f);
        seen = seen || f;
      }
    }
  }
}
