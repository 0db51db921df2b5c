#include "segmarket/equal_revenue.hpp"

#include <algorithm>
#include <string>

#include "segmarket/error.hpp"

namespace segmarket {

Market equal_revenue_unit(const GridPtr& grid, const IndexSet& D) {
  if (D.empty()) throw Error(ErrorCode::EmptySupport, "equal-revenue market needs a support");
  if (!std::is_sorted(D.begin(), D.end()) ||
      std::adjacent_find(D.begin(), D.end()) != D.end()) {
    throw Error(ErrorCode::InvalidArgument, "support set must be sorted and duplicate-free");
  }
  if (D.back() >= grid->size()) {
    throw Error(ErrorCode::IndexOutOfRange, "support index off the grid");
  }
  const ValueGrid& v = *grid;
  const Rational& low = v[D.front()];
  std::vector<Rational> masses(v.size());
  for (std::size_t k = 0; k + 1 < D.size(); ++k) {
    masses[D[k]] = low * (Rational(1) / v[D[k]] - Rational(1) / v[D[k + 1]]);
  }
  masses[D.back()] = low / v[D.back()];
  return Market(grid, std::move(masses));
}

DominatedEqualRevenue max_dominated_er(const IndexSet& D, const Market& cap,
                                       const std::vector<Rational>& extra_bounds) {
  Market unit = equal_revenue_unit(cap.grid_ptr(), D);
  for (const auto& b : extra_bounds) {
    if (b < 0) throw Error(ErrorCode::NegativeBound, "extra bound " + to_string(b) + " < 0");
  }
  bool have = false;
  Rational gamma;
  auto tighten = [&](const Rational& bound) {
    if (!have || bound < gamma) {
      gamma = bound;
      have = true;
    }
  };
  for (Index i : D) tighten(cap[i] / unit[i]);
  for (const auto& b : extra_bounds) tighten(b);
  return {gamma, unit.scaled(gamma)};
}

}  // namespace segmarket
