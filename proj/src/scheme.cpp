#include "segmarket/scheme.hpp"

#include <algorithm>
#include <string>

#include "segmarket/error.hpp"

namespace segmarket {

Market MarketScheme::segment_sum() const {
  Market total = Market::zero(aggregate.grid_ptr());
  for (const auto& s : segments) total = total + s.market;
  return total;
}

Surplus segment_surplus(const Segment& s) {
  const Market& m = s.market;
  const Rational& p = m.grid().at(s.price);
  Surplus out;
  for (Index i = s.price; i < m.size(); ++i) {
    out.cs += (m.grid()[i] - p) * m[i];
    out.ps += p * m[i];
  }
  out.sw = out.cs + out.ps;
  return out;
}

Surplus scheme_surplus(const MarketScheme& z) {
  for (const auto& s : z.segments) {
    if (!s.market.same_grid(z.aggregate)) {
      throw Error(ErrorCode::SegmentationMismatch, "segment on a different grid");
    }
  }
  if (!(z.segment_sum() == z.aggregate)) {
    throw Error(ErrorCode::SegmentationMismatch, "segments do not sum to the aggregate market");
  }
  Surplus total;
  for (const auto& s : z.segments) {
    Surplus part = segment_surplus(s);
    total.cs += part.cs;
    total.ps += part.ps;
  }
  total.sw = total.cs + total.ps;
  return total;
}

MarketScheme standardize(const MarketScheme& z, const RegulatedSet& F) {
  F.check(z.aggregate.grid());
  std::vector<Segment> merged;
  merged.reserve(F.size());
  for (Index p = F.lo; p <= F.hi; ++p) merged.push_back({Market::zero(z.aggregate.grid_ptr()), p});
  for (const auto& s : z.segments) {
    if (!F.contains(s.price)) {
      throw Error(ErrorCode::PriceOutsideF,
                  "instructed price index " + std::to_string(s.price) + " lies outside F");
    }
    auto& slot = merged[s.price - F.lo];
    slot.market = slot.market + s.market;
  }
  return {z.aggregate, std::move(merged)};
}

ValidationReport validate_scheme(const MarketScheme& z, const RegulatedSet& F, Model model) {
  ValidationReport report;
  const ValueGrid& grid = z.aggregate.grid();
  F.check(grid);

  bool grids_ok = true;
  for (std::size_t q = 0; q < z.segments.size(); ++q) {
    if (!z.segments[q].market.same_grid(z.aggregate)) {
      grids_ok = false;
      report.violations.push_back(
          {Violation::Kind::GridMismatch, q, "segment is defined on a different value grid"});
    }
  }
  if (!grids_ok) return report;

  Market sum = z.segment_sum();
  for (Index i = 0; i < grid.size(); ++i) {
    if (sum[i] != z.aggregate[i]) {
      report.violations.push_back(
          {Violation::Kind::SegmentationMismatch, std::nullopt,
           "segments sum to " + to_string(sum[i]) + " at value " + to_string(grid[i]) +
               ", aggregate has " + to_string(z.aggregate[i])});
    }
  }

  for (std::size_t q = 0; q < z.segments.size(); ++q) {
    const Segment& s = z.segments[q];
    if (s.price >= grid.size()) {
      report.violations.push_back({Violation::Kind::PriceOutsideF, q,
                                   "price index " + std::to_string(s.price + 1) + " is off the grid"});
      continue;
    }
    if (!F.contains(s.price)) {
      report.violations.push_back({Violation::Kind::PriceOutsideF, q,
                                   "price " + to_string(grid[s.price]) + " is outside F"});
    }
    if (s.market.is_zero()) continue;
    IndexSet best = model == Model::Passive ? opt_prices(s.market)
                                            : opt_prices_restricted(s.market, F);
    if (!std::binary_search(best.begin(), best.end(), s.price)) {
      report.violations.push_back(
          {Violation::Kind::PriceNotOptimal, q,
           "price " + to_string(grid[s.price]) + " is not revenue-optimal" +
               (model == Model::Passive ? "" : " within F") + " (best is " +
               to_string(grid[best.front()]) + ")"});
    }
  }
  return report;
}

std::string_view model_name(Model model) {
  return model == Model::Passive ? "passive" : "active";
}

}  // namespace segmarket
