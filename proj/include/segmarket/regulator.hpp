#pragma once

#include <optional>
#include <string>
#include <vector>

#include "segmarket/market.hpp"

namespace segmarket {

/// Checks sum_{j=lo..hi} x_j v_j + v_lo * sum_{j>hi} x_j >= R_uniform(x).
/// Only meaningful when OptPrice(x) is a single price outside F; otherwise
/// throws HypothesisViolated. A true result implies F is feasible.
bool sufficient_condition(const Market& aggregate, const RegulatedSet& F);

/// {v_1..v_w} with the smallest w that is feasible. Throws ZeroMarket.
RegulatedSet design_f(const Market& aggregate);

/// Uniform unit-mass market on the integer grid L..R. Throws BadRange.
Market uniform_market(long L, long R);

struct SweepRow {
  long L = 0;
  long R = 0;
  std::size_t n_sets = 0;       // contiguous F disjoint from OptPrice
  std::size_t n_feasible = 0;
  std::size_t n_sufficient = 0; // always 0 when OptPrice has ties
  std::optional<Rational> prop_feasible;   // empty when n_sets = 0
  std::optional<Rational> prop_sufficient;
  bool opt_price_tie = false;
};

/// One row per L, in the order given. Independent L values may be spread
/// over `workers` threads; output is identical for any worker count.
std::vector<SweepRow> feasibility_sweep(long R, const std::vector<long>& L_values,
                                        unsigned workers = 1);

SweepRow sweep_row(long L, long R);

/// CSV with header L,R,n_sets,n_feasible,n_sufficient,prop_feasible,
/// prop_sufficient followed by the 6-decimal renderings and the tie flag.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace segmarket
