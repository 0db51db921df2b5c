#include "segmarket/active.hpp"

#include <algorithm>

#include "segmarket/error.hpp"

namespace segmarket {

ActiveBenchmarks active_benchmarks(const Market& aggregate, const RegulatedSet& F) {
  F.check(aggregate.grid());
  if (aggregate.is_zero()) throw Error(ErrorCode::ZeroMarket, "aggregate market has zero mass");
  const ValueGrid& v = aggregate.grid();
  ActiveBenchmarks out;
  out.r_uniform_F = revenue(aggregate, opt_prices_restricted(aggregate, F).front());
  for (Index i = F.hi + 1; i < aggregate.size(); ++i) out.cs_a_min += aggregate[i] * (v[i] - v[F.hi]);
  out.sw_max = sw_max(aggregate, F);
  return out;
}

MarketScheme ps_max_active(const Market& aggregate, const RegulatedSet& F) {
  F.check(aggregate.grid());
  if (aggregate.is_zero()) throw Error(ErrorCode::ZeroMarket, "aggregate market has zero mass");
  const std::size_t n = aggregate.size();
  MarketScheme z{aggregate, {}};
  for (Index q = F.lo; q <= F.hi; ++q) {
    std::vector<Rational> masses(n);
    for (Index i = 0; i < n; ++i) {
      bool take = i == q;
      if (q == F.lo && i <= F.lo) take = true;
      if (q == F.hi && i >= F.hi) take = true;
      if (take) masses[i] = aggregate[i];
    }
    z.segments.push_back({Market(aggregate.grid_ptr(), std::move(masses)), q});
  }
  return z;
}

Market modified_market(const Market& aggregate, const RegulatedSet& F) {
  F.check(aggregate.grid());
  std::vector<Rational> masses(aggregate.size());
  for (Index i = F.lo; i < F.hi; ++i) masses[i] = aggregate[i];
  masses[F.hi] = demand(aggregate, F.hi);
  Market out(aggregate.grid_ptr(), std::move(masses));
  if (out.is_zero()) {
    throw Error(ErrorCode::EmptyAboveFloor, "no mass at or above the floor of F");
  }
  return out;
}

ActiveSegmentation active_segmentation(const Market& aggregate, const RegulatedSet& F) {
  const Market modified = modified_market(aggregate, F);
  const Rational tail = demand(aggregate, F.hi);
  const IndexSet opt_in_f = opt_prices_restricted(aggregate, F);
  const std::size_t n = aggregate.size();

  Construction bbm = bbm_segment(modified);
  ActiveSegmentation out;
  for (std::size_t q = 0; q < bbm.scheme.segments.size(); ++q) {
    const Market& piece = bbm.scheme.segments[q].market;
    std::vector<Rational> masses(n);
    for (Index i = 0; i < n; ++i) {
      if (i < F.lo) {
        if (q == 0) masses[i] = aggregate[i];
      } else if (i < F.hi) {
        masses[i] = piece[i];
      } else if (tail > 0) {
        // a zero tail means nothing was relocated onto v_hi
        masses[i] = piece[F.hi] * aggregate[i] / tail;
      }
    }
    Market lifted(aggregate.grid_ptr(), std::move(masses));

    // Every price of the piece's support keeps the same revenue after lifting,
    // and the F-optimal prices of the aggregate are among them.
    IndexSet support = piece.support();
    const Rational level = revenue(lifted, support.front());
    for (Index i : support) {
      if (revenue(lifted, i) != level) {
        throw Error(ErrorCode::InternalError, "lifted segment is not equal-revenue on its F-support");
      }
    }
    if (!is_subset(opt_in_f, support)) {
      throw Error(ErrorCode::InternalError, "lifted segment misses an F-optimal price");
    }
    out.lifted.push_back(std::move(lifted));
    out.modified.push_back(piece);
  }
  return out;
}

namespace {

MarketScheme price_active(const Market& aggregate, const RegulatedSet& F, bool lowest) {
  ActiveSegmentation seg = active_segmentation(aggregate, F);
  MarketScheme z{aggregate, {}};
  for (std::size_t q = 0; q < seg.lifted.size(); ++q) {
    // the piece lives on F; its support is the lifted segment's F-support
    // with the whole tail represented at v_hi
    IndexSet support = seg.modified[q].support();
    z.segments.push_back({seg.lifted[q], lowest ? support.front() : support.back()});
  }
  return z;
}

}  // namespace

MarketScheme cs_max_active(const Market& aggregate, const RegulatedSet& F) {
  return price_active(aggregate, F, true);
}

MarketScheme sw_min_active(const Market& aggregate, const RegulatedSet& F) {
  return price_active(aggregate, F, false);
}

}  // namespace segmarket
