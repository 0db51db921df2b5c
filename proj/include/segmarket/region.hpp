#pragma once

#include "segmarket/scheme.hpp"

namespace segmarket {

struct SurplusPoint {
  Rational cs;
  Rational ps;

  bool operator==(const SurplusPoint&) const = default;
};

/// Right triangle of achievable (CS, PS) pairs: vertical left edge through
/// v_min and v_seller, horizontal bottom edge through v_min and v_buyer,
/// hypotenuse on the maximal-welfare line.
struct SurplusRegion {
  SurplusPoint v_min;
  SurplusPoint v_seller;
  SurplusPoint v_buyer;
  Model model = Model::Passive;
};

/// Throws InfeasibleSet.
SurplusRegion passive_region(const Market& aggregate, const RegulatedSet& F);

/// Throws EmptyAboveFloor.
SurplusRegion active_region(const Market& aggregate, const RegulatedSet& F);

SurplusRegion region_for(const Market& aggregate, const RegulatedSet& F, Model model);

/// Boundary-inclusive exact membership test.
bool contains(const SurplusRegion& region, const SurplusPoint& point);

struct MixedScheme {
  Rational w_min;
  Rational w_seller;
  Rational w_buyer;
  MarketScheme scheme;
};

/// Barycentric mix of the three extreme schemes hitting `target` exactly.
/// Segments with zero weight are dropped; with merge = true the result is
/// standardized over F. Throws PointOutsideRegion, InfeasibleSet.
MixedScheme scheme_for_point(const Market& aggregate, const RegulatedSet& F,
                             const SurplusPoint& target, Model model, bool merge = false);

}  // namespace segmarket
