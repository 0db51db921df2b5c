#include "segmarket/regulator.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "segmarket/error.hpp"
#include "segmarket/passive.hpp"

namespace segmarket {

bool sufficient_condition(const Market& aggregate, const RegulatedSet& F) {
  F.check(aggregate.grid());
  IndexSet opt = opt_prices(aggregate);
  if (opt.size() != 1 || F.contains(opt.front())) {
    throw Error(ErrorCode::HypothesisViolated,
                "needs a unique optimal uniform price lying outside F");
  }
  const ValueGrid& v = aggregate.grid();
  Rational lhs;
  for (Index j = F.lo; j <= F.hi; ++j) lhs += aggregate[j] * v[j];
  Rational above;
  for (Index j = F.hi + 1; j < aggregate.size(); ++j) above += aggregate[j];
  lhs += v[F.lo] * above;
  return lhs >= r_uniform(aggregate);
}

RegulatedSet design_f(const Market& aggregate) {
  if (aggregate.is_zero()) throw Error(ErrorCode::ZeroMarket, "aggregate market has zero mass");
  for (Index w = 0; w < aggregate.size(); ++w) {
    RegulatedSet F(0, w);
    if (is_feasible(aggregate, F)) return F;
  }
  throw Error(ErrorCode::InternalError, "the whole grid was reported infeasible");
}

Market uniform_market(long L, long R) {
  if (L < 1 || L > R) {
    throw Error(ErrorCode::BadRange,
                "need 1 <= L <= R, got L=" + std::to_string(L) + " R=" + std::to_string(R));
  }
  std::vector<Rational> values;
  for (long v = L; v <= R; ++v) values.emplace_back(v);
  const std::size_t n = values.size();
  return Market(make_grid(std::move(values)),
                std::vector<Rational>(n, Rational(1, static_cast<unsigned long>(n))));
}

SweepRow sweep_row(long L, long R) {
  const Market x = uniform_market(L, R);
  const IndexSet opt = opt_prices(x);
  SweepRow row;
  row.L = L;
  row.R = R;
  row.opt_price_tie = opt.size() > 1;
  const std::size_t n = x.size();
  for (Index lo = 0; lo < n; ++lo) {
    for (Index hi = lo; hi < n; ++hi) {
      RegulatedSet F(lo, hi);
      bool touches_opt = std::any_of(opt.begin(), opt.end(), [&](Index i) { return F.contains(i); });
      if (touches_opt) continue;
      ++row.n_sets;
      if (is_feasible(x, F)) ++row.n_feasible;
      if (!row.opt_price_tie && sufficient_condition(x, F)) ++row.n_sufficient;
    }
  }
  if (row.n_sets > 0) {
    const Rational total(static_cast<unsigned long>(row.n_sets));
    row.prop_feasible = Rational(static_cast<unsigned long>(row.n_feasible)) / total;
    row.prop_sufficient = Rational(static_cast<unsigned long>(row.n_sufficient)) / total;
  }
  return row;
}

std::vector<SweepRow> feasibility_sweep(long R, const std::vector<long>& L_values,
                                        unsigned workers) {
  if (R < 1) throw Error(ErrorCode::BadRange, "R must be >= 1");
  for (long L : L_values) {
    if (L < 1 || L > R) throw Error(ErrorCode::BadRange, "L out of range 1..R");
  }
  std::vector<SweepRow> rows(L_values.size());
  if (workers <= 1) {
    for (std::size_t k = 0; k < L_values.size(); ++k) rows[k] = sweep_row(L_values[k], R);
    return rows;
  }
  // strided assignment; each worker writes only its own slots
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t k = w; k < L_values.size(); k += workers) rows[k] = sweep_row(L_values[k], R);
    }));
  }
  for (auto& job : jobs) job.get();
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "L,R,n_sets,n_feasible,n_sufficient,prop_feasible,prop_sufficient,"
        "prop_feasible_decimal,prop_sufficient_decimal,opt_price_tie\n";
  auto exact = [](const std::optional<Rational>& p) { return p ? to_string(*p) : std::string("NA"); };
  auto dec = [](const std::optional<Rational>& p) { return p ? to_decimal(*p, 6) : std::string("NA"); };
  for (const auto& r : rows) {
    os << r.L << ',' << r.R << ',' << r.n_sets << ',' << r.n_feasible << ',' << r.n_sufficient
       << ',' << exact(r.prop_feasible) << ',' << exact(r.prop_sufficient) << ','
       << dec(r.prop_feasible) << ',' << dec(r.prop_sufficient) << ','
       << (r.opt_price_tie ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace segmarket
