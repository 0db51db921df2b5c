#pragma once

#include "segmarket/lp.hpp"
#include "segmarket/scheme.hpp"

namespace segmarket {

/// Standard-form encoding of all F-valid (passive) or F-instructed (active)
/// schemes: one segment per price in the window, variable x_{q,i} holding
/// the mass of value v_i assigned to the segment priced v_q.
struct StandardFormLP {
  lp::LinearProgram program;
  Model model = Model::Passive;
  RegulatedSet window;
  std::size_t grid_size = 0;
  std::vector<Rational> cs_objective;
  std::vector<Rational> ps_objective;

  std::size_t variable(Index price, Index value) const {
    return (price - window.lo) * grid_size + value;
  }

  /// Reads an assignment back as a standard-form scheme over the window.
  MarketScheme to_scheme(const Market& aggregate, const std::vector<Rational>& x) const;
};

/// Rows: segmentation equalities, then for each segment price v_q and each
/// comparison price v_j (all grid values when passive, F only when active)
/// R_{x_q}(v_q) >= R_{x_q}(v_j). Throws EmptyWindow if the window is not inside F.
StandardFormLP build_lp(const Market& aggregate, const RegulatedSet& F, Model model,
                        const RegulatedSet& window);

inline StandardFormLP build_lp(const Market& aggregate, const RegulatedSet& F, Model model) {
  return build_lp(aggregate, F, model, F);
}

struct OracleOptimum {
  Rational value;
  MarketScheme scheme;
};

bool oracle_feasible(const Market& aggregate, const RegulatedSet& F, Model model);

// The optimizing oracles throw InfeasibleSet when no admissible scheme exists.
OracleOptimum oracle_min_cs(const Market& aggregate, const RegulatedSet& F, Model model);
OracleOptimum oracle_max_ps(const Market& aggregate, const RegulatedSet& F, Model model);
OracleOptimum oracle_min_ps(const Market& aggregate, const RegulatedSet& F, Model model);

/// Minimum mass of value v_{i0} sold at price v_{i0} over passive schemes
/// priced in {v_{i0}, ..., v_hi}. Throws InfeasibleSet.
Rational oracle_eta0(const Market& aggregate, const RegulatedSet& F, Index i0);

}  // namespace segmarket
