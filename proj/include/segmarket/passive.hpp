#pragma once

#include <optional>
#include <string>
#include <vector>

#include "segmarket/scheme.hpp"

namespace segmarket {

/// One extraction of the iterative equal-revenue construction.
struct TraceStep {
  Market residual;      // market before this extraction
  IndexSet opt_prices;  // OptPrice(residual)
  IndexSet support;     // support D of the extracted equal-revenue market
  Rational gamma;       // its total mass
  Market segment;       // gamma * x^D
  Index price;
};

struct Construction {
  MarketScheme scheme;  // standard form over F (raw extraction order for bbm_segment)
  Market remainder;     // residual left when the loop stops
  std::vector<TraceStep> trace;

  bool complete() const { return remainder.is_zero(); }
};

struct ConstructionOptions {
  /// Loop guard; defaults to 2n + 2 iterations.
  std::optional<std::size_t> max_iterations;
};

/// (F, i0, eta0): the tail {v_i0..v_hi} of F and the least mass of value
/// v_i0 that must be sold at price v_i0 for that tail to stay feasible.
struct SubFeasibleSpec {
  RegulatedSet F;
  Index i0 = 0;
  Rational eta0;

  RegulatedSet reduced() const { return {i0, F.hi}; }
};

/// Unregulated consumer-optimal decomposition: repeatedly peel the largest
/// equal-revenue market on the residual's support, priced at its minimum.
Construction bbm_segment(const Market& aggregate, const ConstructionOptions& opts = {});

/// (support(x) \ F) plus the largest support value inside F. Throws NoSupportInF.
IndexSet b_set(const Market& x, const RegulatedSet& F);

/// Producer-optimal construction. Never throws on infeasible F: the
/// returned remainder is then nonzero and the scheme covers aggregate - remainder.
Construction ps_max_scheme(const Market& aggregate, const RegulatedSet& F,
                           const ConstructionOptions& opts = {});

bool is_feasible(const Market& aggregate, const RegulatedSet& F);

/// Consumer-optimal construction; keeps OptPrice(aggregate) optimal in every
/// residual. Throws InfeasibleSet.
Construction cs_max_scheme(const Market& aggregate, const RegulatedSet& F,
                           const ConstructionOptions& opts = {});

/// Throws InfeasibleSet.
SubFeasibleSpec compute_i0_eta0(const Market& aggregate, const RegulatedSet& F);

/// Welfare-minimal construction over the reduced set {v_i0..v_hi}; the
/// returned scheme is standardized over the full F. Throws InfeasibleSet.
Construction sw_min_scheme(const Market& aggregate, const RegulatedSet& F,
                           const ConstructionOptions& opts = {});
Construction sw_min_scheme(const Market& aggregate, const SubFeasibleSpec& spec,
                           const ConstructionOptions& opts = {});

/// eta0 * v_i0 + sum_{j > i0} x_j v_j - R_uniform(x). Throws InfeasibleSet.
Rational cs_p_min(const Market& aggregate, const RegulatedSet& F);
Rational cs_p_min(const Market& aggregate, const SubFeasibleSpec& spec);

}  // namespace segmarket
