#pragma once

#include <vector>

#include "segmarket/market.hpp"

namespace segmarket {

/// The unique unit-mass market supported on D whose revenue is the same
/// (namely min(D)) at every price in D. Throws EmptySupport.
Market equal_revenue_unit(const GridPtr& grid, const IndexSet& D);

struct DominatedEqualRevenue {
  Rational gamma;
  Market market;  // gamma * equal_revenue_unit(D)
};

/// Largest gamma >= 0 with gamma * x^D <= cap coordinate-wise and
/// gamma <= every entry of extra_bounds. Closed form: the minimum of the
/// ratios cap_i / x^D_i over D and the extra bounds.
/// Throws EmptySupport, or NegativeBound if an extra bound is negative.
DominatedEqualRevenue max_dominated_er(const IndexSet& D, const Market& cap,
                                       const std::vector<Rational>& extra_bounds = {});

}  // namespace segmarket
