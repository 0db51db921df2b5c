#include "segmarket/region.hpp"

#include "segmarket/active.hpp"
#include "segmarket/error.hpp"
#include "segmarket/passive.hpp"

namespace segmarket {
namespace {

SurplusRegion triangle(const Rational& cs_min, const Rational& ps_min, const Rational& sw,
                       Model model) {
  return {{cs_min, ps_min}, {cs_min, sw - cs_min}, {sw - ps_min, ps_min}, model};
}

}  // namespace

SurplusRegion passive_region(const Market& aggregate, const RegulatedSet& F) {
  return triangle(cs_p_min(aggregate, F), r_uniform(aggregate), sw_max(aggregate, F),
                  Model::Passive);
}

SurplusRegion active_region(const Market& aggregate, const RegulatedSet& F) {
  modified_market(aggregate, F);  // EmptyAboveFloor check
  ActiveBenchmarks b = active_benchmarks(aggregate, F);
  return triangle(b.cs_a_min, b.r_uniform_F, b.sw_max, Model::Active);
}

SurplusRegion region_for(const Market& aggregate, const RegulatedSet& F, Model model) {
  return model == Model::Passive ? passive_region(aggregate, F) : active_region(aggregate, F);
}

bool contains(const SurplusRegion& region, const SurplusPoint& point) {
  const Rational welfare = region.v_seller.cs + region.v_seller.ps;
  return point.cs >= region.v_min.cs && point.ps >= region.v_min.ps &&
         point.cs + point.ps <= welfare;
}

MixedScheme scheme_for_point(const Market& aggregate, const RegulatedSet& F,
                             const SurplusPoint& target, Model model, bool merge) {
  const SurplusRegion region = region_for(aggregate, F, model);
  if (!contains(region, target)) {
    throw Error(ErrorCode::PointOutsideRegion, "target (" + to_string(target.cs) + ", " +
                                                   to_string(target.ps) + ") is outside the region");
  }

  // Both legs have length `leg`, so the weights fall out of the two offsets.
  MixedScheme out{Rational(1), Rational(0), Rational(0), {aggregate, {}}};
  const Rational leg = region.v_buyer.cs - region.v_min.cs;
  if (leg != 0) {
    out.w_buyer = (target.cs - region.v_min.cs) / leg;
    out.w_seller = (target.ps - region.v_min.ps) / leg;
    out.w_min = Rational(1) - out.w_buyer - out.w_seller;
  }

  auto add = [&](const Rational& weight, const MarketScheme& parent) {
    if (weight == 0) return;
    for (const auto& s : parent.segments) {
      out.scheme.segments.push_back({s.market.scaled(weight), s.price});
    }
  };
  if (model == Model::Passive) {
    const SubFeasibleSpec spec = compute_i0_eta0(aggregate, F);
    if (out.w_min != 0) add(out.w_min, sw_min_scheme(aggregate, spec).scheme);
    if (out.w_seller != 0) add(out.w_seller, ps_max_scheme(aggregate, F).scheme);
    if (out.w_buyer != 0) add(out.w_buyer, cs_max_scheme(aggregate, F).scheme);
  } else {
    add(out.w_min, sw_min_active(aggregate, F));
    add(out.w_seller, ps_max_active(aggregate, F));
    add(out.w_buyer, cs_max_active(aggregate, F));
  }
  if (merge) out.scheme = standardize(out.scheme, F);
  return out;
}

}  // namespace segmarket
