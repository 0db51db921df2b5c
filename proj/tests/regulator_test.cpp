#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "segmarket/error.hpp"
#include "segmarket/oracle.hpp"
#include "segmarket/passive.hpp"
#include "segmarket/regulator.hpp"

using namespace segmarket;
using namespace segmarket::testing;

TEST(SufficientCondition, Examples) {
  EXPECT_TRUE(sufficient_condition(deviate_market(), RegulatedSet(0, 1)));
  EXPECT_TRUE(is_feasible(deviate_market(), RegulatedSet(0, 1)));
  EXPECT_FALSE(sufficient_condition(m1(), f23()));
  EXPECT_TRUE(is_feasible(m1(), f23()));
  try {
    sufficient_condition(m1(), RegulatedSet(2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::HypothesisViolated);
  }
  // tied optimal prices also fail the hypothesis
  EXPECT_THROW(sufficient_condition(uniform_market(1, 4), RegulatedSet(0, 0)), Error);
}

TEST(SufficientCondition, SoundOnSmallUniformMarkets) {
  for (long R_ = 1; R_ <= 12; ++R_) {
    for (long L = 1; L <= R_; ++L) {
      Market x = uniform_market(L, R_);
      IndexSet opt = opt_prices(x);
      if (opt.size() != 1) continue;
      for (Index lo = 0; lo < x.size(); ++lo) {
        for (Index hi = lo; hi < x.size(); ++hi) {
          RegulatedSet F(lo, hi);
          if (F.contains(opt.front())) continue;
          if (sufficient_condition(x, F)) EXPECT_TRUE(is_feasible(x, F));
        }
      }
    }
  }
}

TEST(UniformMarket, Examples) {
  Market a = uniform_market(1, 4);
  EXPECT_EQ(a.masses(), std::vector<Rational>(4, ratio(1, 4)));
  EXPECT_EQ(a.grid()[0], 1);
  Market b = uniform_market(5, 5);
  EXPECT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], 1);
  EXPECT_EQ(opt_prices(uniform_market(1, 99)), IndexSet{49});
  try {
    uniform_market(3, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadRange);
  }
  EXPECT_THROW(uniform_market(0, 2), Error);
}

TEST(DesignF, Examples) {
  // {1} is infeasible (one price 1 cannot beat 6 * 0.26 = 1.56 > 1); {1,2} already is
  EXPECT_EQ(design_f(m1()), RegulatedSet(0, 1));
  EXPECT_FALSE(is_feasible(m1(), RegulatedSet(0, 0)));
  EXPECT_FALSE(oracle_feasible(m1(), RegulatedSet(0, 0), Model::Passive));
  EXPECT_TRUE(oracle_feasible(m1(), RegulatedSet(0, 1), Model::Passive));
  Market top = market_on(grid_1236(), {"1", "0", "0", "0.01"});
  EXPECT_EQ(design_f(top), RegulatedSet(0, 0));
  EXPECT_THROW(design_f(Market::zero(grid_1236())), Error);
}

TEST(DesignF, HandWitnessForPrefixOneTwo) {
  auto g = grid_1236();
  MarketScheme witness{m1(),
                       {{market_on(g, {"0", "0.18", "0.18", "0.18"}), 1},
                        {market_on(g, {"0", "0.02", "0", "0.01"}), 1},
                        {market_on(g, {"0.35", "0", "0", "0.07"}), 0},
                        {market_on(g, {"0.01", "0", "0", "0"}), 0}}};
  EXPECT_TRUE(validate_scheme(witness, RegulatedSet(0, 1), Model::Passive).valid());
}

TEST(DesignF, MaximizesMinimalConsumerSurplus) {
  std::mt19937_64 rng(600);
  for (int trial = 0; trial < 15; ++trial) {
    Market x = random_instance(rng, 6, 14).market;
    Rational best = -1;
    for (Index lo = 0; lo < x.size(); ++lo) {
      for (Index hi = lo; hi < x.size(); ++hi) {
        RegulatedSet F(lo, hi);
        if (!oracle_feasible(x, F, Model::Passive)) continue;
        Rational v = oracle_min_cs(x, F, Model::Passive).value;
        if (v > best) best = v;
      }
    }
    EXPECT_EQ(cs_p_min(x, design_f(x)), best);
  }
}

TEST(Sweep, SmallRowByHand) {
  // L=1, R=3: revenues 1, 4/3, 1 so OptPrice = {2}; candidate sets {1} and {3}.
  // {1}: every segment needs R(1) >= R(2), but summed R(1) = 1 < 4/3.
  // {3}: (0,a,b) needs b >= 2a and (c,0,d) needs d >= c/2, so b + d >= 2/3 + 1/6 > 1/3.
  SweepRow row = sweep_row(1, 3);
  EXPECT_EQ(row.n_sets, 2u);
  EXPECT_FALSE(row.opt_price_tie);
  EXPECT_EQ(row.n_feasible, 0u);
  EXPECT_EQ(*row.prop_feasible, 0);
  EXPECT_EQ(row.n_sufficient, 0u);
}

TEST(Sweep, TiesAndEmptyRows) {
  SweepRow single = sweep_row(4, 4);
  EXPECT_EQ(single.n_sets, 0u);
  EXPECT_FALSE(single.prop_feasible.has_value());
  SweepRow tie = sweep_row(1, 4);  // revenues 1, 3/2, 3/2, 1
  EXPECT_TRUE(tie.opt_price_tie);
  EXPECT_EQ(tie.n_sufficient, 0u);
  EXPECT_EQ(tie.n_sets, 2u);
}

TEST(Sweep, DeterministicAcrossWorkerCounts) {
  std::vector<long> Ls{1, 2, 3, 4, 5, 6, 7, 8, 9};
  std::string serial = sweep_csv(feasibility_sweep(9, Ls, 1));
  std::string parallel = sweep_csv(feasibility_sweep(9, Ls, 3));
  EXPECT_EQ(serial, parallel);
  EXPECT_EQ(serial.substr(0, serial.find('\n')),
            "L,R,n_sets,n_feasible,n_sufficient,prop_feasible,prop_sufficient,"
            "prop_feasible_decimal,prop_sufficient_decimal,opt_price_tie");
  EXPECT_NE(serial.find("9,9,0,0,0,NA,NA,NA,NA,0"), std::string::npos);
  EXPECT_THROW(feasibility_sweep(9, {10}), Error);
}
