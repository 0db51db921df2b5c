#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "segmarket/error.hpp"
#include "segmarket/passive.hpp"
#include "segmarket/region.hpp"

using namespace segmarket;
using namespace segmarket::testing;

namespace {

SurplusPoint P(const char* cs, const char* ps) { return {R(cs), R(ps)}; }

}  // namespace

TEST(Region, PassiveRunningExample) {
  SurplusRegion r = passive_region(m1(), f23());
  EXPECT_EQ(r.v_min, P("0.86", "1.56"));
  EXPECT_EQ(r.v_seller, P("0.86", "1.64"));
  EXPECT_EQ(r.v_buyer, P("0.94", "1.56"));
  EXPECT_EQ(r.model, Model::Passive);
  EXPECT_THROW(passive_region(m1(), RegulatedSet(2, 2)), Error);
}

TEST(Region, ActiveRunningExample) {
  SurplusRegion r = active_region(m1(), f23());
  EXPECT_EQ(r.v_min, P("0.78", "1.32"));
  EXPECT_EQ(r.v_seller, P("0.78", "1.72"));
  EXPECT_EQ(r.v_buyer, P("1.18", "1.32"));
}

TEST(Region, ContainsIsBoundaryInclusive) {
  SurplusRegion r = passive_region(m1(), f23());
  EXPECT_TRUE(contains(r, r.v_min));
  EXPECT_TRUE(contains(r, r.v_seller));
  EXPECT_TRUE(contains(r, r.v_buyer));
  EXPECT_TRUE(contains(r, P("0.90", "1.60")));  // on the hypotenuse
  EXPECT_FALSE(contains(r, P("0.90", "1.61")));
  EXPECT_FALSE(contains(r, P("0.85", "1.60")));
  EXPECT_FALSE(contains(r, P("0.90", "1.55")));
}

TEST(Region, PassiveInsideActiveOnRandomInstances) {
  std::mt19937_64 rng(4242);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto inst = random_instance(rng, 5, 12);
    if (!is_feasible(inst.market, inst.F)) continue;
    ++checked;
    SurplusRegion p = passive_region(inst.market, inst.F);
    SurplusRegion a = active_region(inst.market, inst.F);
    for (const auto& v : {p.v_min, p.v_seller, p.v_buyer}) EXPECT_TRUE(contains(a, v));
  }
  EXPECT_GT(checked, 10);
}

TEST(SchemeForPoint, VerticesAndCentroid) {
  MixedScheme at_buyer = scheme_for_point(m1(), f23(), P("0.94", "1.56"), Model::Passive);
  EXPECT_EQ(at_buyer.w_buyer, 1);
  EXPECT_EQ(at_buyer.w_min, 0);
  EXPECT_EQ(at_buyer.w_seller, 0);
  Surplus s = scheme_surplus(at_buyer.scheme);
  EXPECT_EQ(s.cs, R("0.94"));
  EXPECT_EQ(s.ps, R("1.56"));

  SurplusPoint centroid{(R("0.86") + R("0.86") + R("0.94")) / 3, (R("1.56") + R("1.64") + R("1.56")) / 3};
  MixedScheme mix = scheme_for_point(m1(), f23(), centroid, Model::Passive);
  EXPECT_EQ(mix.w_min, ratio(1, 3));
  EXPECT_EQ(mix.w_seller, ratio(1, 3));
  EXPECT_EQ(mix.w_buyer, ratio(1, 3));
  Surplus c = scheme_surplus(mix.scheme);
  EXPECT_EQ(c.cs, centroid.cs);
  EXPECT_EQ(c.ps, centroid.ps);
  EXPECT_TRUE(validate_scheme(mix.scheme, f23(), Model::Passive).valid());

  MixedScheme merged = scheme_for_point(m1(), f23(), centroid, Model::Passive, true);
  EXPECT_EQ(merged.scheme.segments.size(), 2u);
  EXPECT_EQ(scheme_surplus(merged.scheme), c);
}

TEST(SchemeForPoint, OutsideThrows) {
  try {
    scheme_for_point(m1(), f23(), P("2", "2"), Model::Passive);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PointOutsideRegion);
  }
}

TEST(SchemeForPoint, RandomInteriorPointsBothModels) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> k(1, 50);
  for (Model model : {Model::Passive, Model::Active}) {
    SurplusRegion r = region_for(m1(), f23(), model);
    const Rational leg = r.v_buyer.cs - r.v_min.cs;
    for (int t = 0; t < 10; ++t) {
      Rational a = ratio(k(rng), 101), b = ratio(k(rng), 101);  // a + b < 1
      SurplusPoint target{r.v_min.cs + a * leg, r.v_min.ps + b * leg};
      MixedScheme mix = scheme_for_point(m1(), f23(), target, model);
      Surplus s = scheme_surplus(mix.scheme);
      EXPECT_EQ(s.cs, target.cs);
      EXPECT_EQ(s.ps, target.ps);
      EXPECT_TRUE(validate_scheme(mix.scheme, f23(), model).valid());
      EXPECT_TRUE(contains(r, {s.cs, s.ps}));
    }
  }
}

TEST(SchemeForPoint, DegenerateRegionIsAPoint) {
  // all mass at the bottom of F: every vertex coincides
  Market x = market_on(grid_1236(), {"0", "1", "0", "0"});
  SurplusRegion r = passive_region(x, f23());
  EXPECT_EQ(r.v_min, r.v_seller);
  EXPECT_EQ(r.v_min, r.v_buyer);
  MixedScheme mix = scheme_for_point(x, f23(), r.v_min, Model::Passive);
  EXPECT_EQ(mix.w_min, 1);
  EXPECT_EQ(scheme_surplus(mix.scheme).ps, 2);
}
