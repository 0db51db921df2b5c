#include "segmarket/passive.hpp"

#include <algorithm>
#include <string>

#include "segmarket/equal_revenue.hpp"
#include "segmarket/error.hpp"
#include "segmarket/oracle.hpp"

namespace segmarket {
namespace {

class LoopGuard {
 public:
  LoopGuard(const Market& m, const ConstructionOptions& opts, const char* who)
      : limit_(opts.max_iterations.value_or(2 * m.size() + 2)), who_(who) {}

  void tick() {
    if (++count_ > limit_) {
      throw Error(ErrorCode::NonTermination, std::string(who_) + " exceeded " +
                                                 std::to_string(limit_) + " iterations");
    }
  }

 private:
  std::size_t limit_;
  std::size_t count_ = 0;
  const char* who_;
};

void require_mass(const Market& m) {
  if (m.is_zero()) throw Error(ErrorCode::ZeroMarket, "aggregate market has zero mass");
}

void require_feasible(const Market& aggregate, const RegulatedSet& F) {
  if (!is_feasible(aggregate, F)) {
    throw Error(ErrorCode::InfeasibleSet, "regulated set admits no valid scheme");
  }
}

IndexSet with_index(IndexSet set, Index i) {
  auto it = std::lower_bound(set.begin(), set.end(), i);
  if (it == set.end() || *it != i) set.insert(it, i);
  return set;
}

/// Appends one extraction to the trace/segment list and returns the new residual.
Market extract(const Market& residual, const IndexSet& D, const DominatedEqualRevenue& er,
               Index price, std::vector<TraceStep>& trace, std::vector<Segment>& segments) {
  if (er.gamma <= 0) {
    throw Error(ErrorCode::InternalError, "construction extracted an empty segment");
  }
  trace.push_back({residual, opt_prices(residual), D, er.gamma, er.market, price});
  segments.push_back({er.market, price});
  return residual - er.market;
}

// Upper bounds on gamma that keep every price of `keep` revenue-optimal in
// residual - gamma * x^D: for i in keep and any other j,
// gamma * (R_u(i) - R_u(j)) <= R_res(i) - R_res(j).
std::vector<Rational> preservation_bounds(const Market& residual, const Market& unit,
                                          const IndexSet& keep) {
  std::vector<Rational> bounds;
  for (Index i : keep) {
    const Rational rev_res_i = revenue(residual, i);
    const Rational rev_unit_i = revenue(unit, i);
    for (Index j = 0; j < residual.size(); ++j) {
      if (j == i) continue;
      Rational slope = rev_unit_i - revenue(unit, j);
      if (slope <= 0) continue;
      bounds.push_back((rev_res_i - revenue(residual, j)) / slope);
    }
  }
  return bounds;
}

}  // namespace

Construction bbm_segment(const Market& aggregate, const ConstructionOptions& opts) {
  require_mass(aggregate);
  LoopGuard guard(aggregate, opts, "bbm_segment");
  Construction out{{aggregate, {}}, aggregate, {}};
  Market residual = aggregate;
  while (!residual.is_zero()) {
    guard.tick();
    IndexSet D = residual.support();
    DominatedEqualRevenue er = max_dominated_er(D, residual);
    residual = extract(residual, D, er, D.front(), out.trace, out.scheme.segments);
  }
  out.remainder = residual;
  return out;
}

IndexSet b_set(const Market& x, const RegulatedSet& F) {
  F.check(x.grid());
  IndexSet support = x.support();
  IndexSet inside = intersect(support, F);
  if (inside.empty()) {
    throw Error(ErrorCode::NoSupportInF, "market has no support inside F");
  }
  return with_index(set_difference(support, F), inside.back());
}

Construction ps_max_scheme(const Market& aggregate, const RegulatedSet& F,
                           const ConstructionOptions& opts) {
  require_mass(aggregate);
  F.check(aggregate.grid());
  LoopGuard guard(aggregate, opts, "ps_max_scheme");
  std::vector<Segment> raw;
  std::vector<TraceStep> trace;
  Market residual = aggregate;
  while (!intersect(residual.support(), F).empty()) {
    guard.tick();
    IndexSet D = b_set(residual, F);
    DominatedEqualRevenue er = max_dominated_er(D, residual);
    Index price = intersect(er.market.support(), F).front();
    residual = extract(residual, D, er, price, trace, raw);
  }
  MarketScheme covered{aggregate - residual, std::move(raw)};
  return {standardize(covered, F), residual, std::move(trace)};
}

bool is_feasible(const Market& aggregate, const RegulatedSet& F) {
  return ps_max_scheme(aggregate, F).complete();
}

Construction cs_max_scheme(const Market& aggregate, const RegulatedSet& F,
                           const ConstructionOptions& opts) {
  require_mass(aggregate);
  require_feasible(aggregate, F);
  LoopGuard guard(aggregate, opts, "cs_max_scheme");
  const IndexSet original_opt = opt_prices(aggregate);
  std::vector<Segment> raw;
  std::vector<TraceStep> trace;
  Market residual = aggregate;
  while (!intersect(residual.support(), F).empty()) {
    guard.tick();
    IndexSet opt = opt_prices(residual);
    IndexSet D;
    DominatedEqualRevenue er{Rational(0), residual};
    if (intersect(opt, F).empty()) {
      D = b_set(residual, F);
      Market unit = equal_revenue_unit(residual.grid_ptr(), D);
      er = max_dominated_er(D, residual, preservation_bounds(residual, unit, opt));
    } else {
      D = residual.support();
      er = max_dominated_er(D, residual);
    }
    Index price = intersect(er.market.support(), F).front();
    residual = extract(residual, D, er, price, trace, raw);
    if (!residual.is_zero() && !is_subset(original_opt, opt_prices(residual))) {
      throw Error(ErrorCode::InternalError,
                  "cs_max_scheme lost an optimal price of the aggregate market");
    }
  }
  if (!residual.is_zero()) {
    throw Error(ErrorCode::InternalError, "cs_max_scheme left mass outside F on a feasible set");
  }
  return {standardize({aggregate, std::move(raw)}, F), residual, std::move(trace)};
}

SubFeasibleSpec compute_i0_eta0(const Market& aggregate, const RegulatedSet& F) {
  require_mass(aggregate);
  require_feasible(aggregate, F);
  // feasibility of {v_i..v_hi} is monotone in i, so the first hit from the top is the max
  Index i0 = F.lo;
  for (Index i = F.hi + 1; i-- > F.lo;) {
    if (is_feasible(aggregate, RegulatedSet(i, F.hi))) {
      i0 = i;
      break;
    }
  }
  return {F, i0, oracle_eta0(aggregate, F, i0)};
}

Construction sw_min_scheme(const Market& aggregate, const RegulatedSet& F,
                           const ConstructionOptions& opts) {
  return sw_min_scheme(aggregate, compute_i0_eta0(aggregate, F), opts);
}

Construction sw_min_scheme(const Market& aggregate, const SubFeasibleSpec& spec,
                           const ConstructionOptions& opts) {
  require_mass(aggregate);
  const RegulatedSet& F = spec.F;
  F.check(aggregate.grid());
  const Index i0 = spec.i0;
  const Rational& eta0 = spec.eta0;
  if (!F.contains(i0) || eta0 < 0 || eta0 > aggregate[i0]) {
    throw Error(ErrorCode::InvalidArgument, "sub-feasible spec out of range");
  }
  const RegulatedSet reduced = spec.reduced();
  LoopGuard guard(aggregate, opts, "sw_min_scheme");
  std::vector<Segment> raw;
  std::vector<TraceStep> trace;
  Market residual = aggregate;
  for (;;) {
    IndexSet inside = intersect(residual.support(), reduced);
    if (inside.empty()) break;
    guard.tick();
    IndexSet D = b_set(residual, reduced);
    if (inside.back() > i0) {
      if (residual[i0] > eta0) D = with_index(std::move(D), i0);
      Market unit = equal_revenue_unit(residual.grid_ptr(), D);
      std::vector<Rational> bounds;
      // keep at least eta0 of value v_i0 for the segments priced v_i0
      if (unit[i0] > 0) bounds.push_back((residual[i0] - eta0) / unit[i0]);
      DominatedEqualRevenue er = max_dominated_er(D, residual, bounds);
      Index price = intersect(er.market.support(), RegulatedSet(i0 + 1, F.hi)).front();
      residual = extract(residual, D, er, price, trace, raw);
    } else {
      D = with_index(std::move(D), i0);
      DominatedEqualRevenue er = max_dominated_er(D, residual);
      residual = extract(residual, D, er, i0, trace, raw);
    }
  }
  if (!residual.is_zero()) {
    throw Error(ErrorCode::InternalError, "sw_min_scheme left mass outside the reduced set");
  }
  return {standardize({aggregate, std::move(raw)}, F), residual, std::move(trace)};
}

Rational cs_p_min(const Market& aggregate, const RegulatedSet& F) {
  return cs_p_min(aggregate, compute_i0_eta0(aggregate, F));
}

Rational cs_p_min(const Market& aggregate, const SubFeasibleSpec& spec) {
  const ValueGrid& v = aggregate.grid();
  Rational total = spec.eta0 * v[spec.i0];
  for (Index j = spec.i0 + 1; j < aggregate.size(); ++j) total += aggregate[j] * v[j];
  return total - r_uniform(aggregate);
}

}  // namespace segmarket
