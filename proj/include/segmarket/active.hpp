#pragma once

#include "segmarket/passive.hpp"
#include "segmarket/scheme.hpp"

namespace segmarket {

/// Scalar benchmarks of the active model for (x*, F).
struct ActiveBenchmarks {
  Rational r_uniform_F;  // best single price restricted to F
  Rational cs_a_min;     // sum_{i > hi} x_i (v_i - v_hi)
  Rational sw_max;       // sum_{i >= lo} x_i v_i
};

ActiveBenchmarks active_benchmarks(const Market& aggregate, const RegulatedSet& F);

/// |F| segments: everything at or below v_lo priced v_lo, everything at or
/// above v_hi priced v_hi, each interior value isolated at its own price.
MarketScheme ps_max_active(const Market& aggregate, const RegulatedSet& F);

/// Drops mass below F and moves all mass above F onto v_hi.
/// Throws EmptyAboveFloor if nothing sits at or above v_lo.
Market modified_market(const Market& aggregate, const RegulatedSet& F);

/// Equal-revenue decomposition of the modified market lifted back onto the
/// aggregate: the first segment also takes all mass below F, and the mass a
/// segment holds at v_hi is spread over v_hi..v_n in proportion to the aggregate.
struct ActiveSegmentation {
  std::vector<Market> lifted;
  std::vector<Market> modified;  // the matching segments of the modified market
};

ActiveSegmentation active_segmentation(const Market& aggregate, const RegulatedSet& F);

/// Each lifted segment priced at the lowest F-value it covers.
MarketScheme cs_max_active(const Market& aggregate, const RegulatedSet& F);

/// Same segments priced at the highest F-value they cover.
MarketScheme sw_min_active(const Market& aggregate, const RegulatedSet& F);

}  // namespace segmarket
