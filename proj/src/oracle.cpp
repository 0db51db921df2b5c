#include "segmarket/oracle.hpp"

#include <string>

#include "segmarket/error.hpp"

namespace segmarket {

MarketScheme StandardFormLP::to_scheme(const Market& aggregate,
                                       const std::vector<Rational>& x) const {
  MarketScheme z{aggregate, {}};
  for (Index q = window.lo; q <= window.hi; ++q) {
    std::vector<Rational> masses(grid_size);
    for (Index i = 0; i < grid_size; ++i) masses[i] = x[variable(q, i)];
    z.segments.push_back({Market(aggregate.grid_ptr(), std::move(masses)), q});
  }
  return z;
}

StandardFormLP build_lp(const Market& aggregate, const RegulatedSet& F, Model model,
                        const RegulatedSet& window) {
  const ValueGrid& v = aggregate.grid();
  F.check(v);
  window.check(v);
  if (window.lo < F.lo || window.hi > F.hi) {
    throw Error(ErrorCode::EmptyWindow, "price window is not contained in F");
  }

  StandardFormLP out;
  out.model = model;
  out.window = window;
  out.grid_size = v.size();
  const std::size_t n = v.size();
  auto& program = out.program;

  for (Index q = window.lo; q <= window.hi; ++q) {
    for (Index i = 0; i < n; ++i) {
      program.variable_names.push_back("x_" + std::to_string(q + 1) + "_" + std::to_string(i + 1));
    }
  }
  const std::size_t vars = program.variable_names.size();
  program.objective.assign(vars, Rational(0));
  out.cs_objective.assign(vars, Rational(0));
  out.ps_objective.assign(vars, Rational(0));
  for (Index q = window.lo; q <= window.hi; ++q) {
    for (Index i = q; i < n; ++i) {
      out.cs_objective[out.variable(q, i)] = v[i] - v[q];
      out.ps_objective[out.variable(q, i)] = v[q];
    }
  }

  for (Index i = 0; i < n; ++i) {
    auto& row = program.add_row(lp::Sense::Equal, aggregate[i], "split_" + std::to_string(i + 1));
    for (Index q = window.lo; q <= window.hi; ++q) row.coeffs[out.variable(q, i)] = 1;
  }

  const Index cmp_lo = model == Model::Passive ? 0 : F.lo;
  const Index cmp_hi = model == Model::Passive ? n - 1 : F.hi;
  for (Index q = window.lo; q <= window.hi; ++q) {
    for (Index j = cmp_lo; j <= cmp_hi; ++j) {
      if (j == q) continue;
      auto& row = program.add_row(lp::Sense::GreaterEqual, Rational(0),
                                  "opt_" + std::to_string(q + 1) + "_vs_" + std::to_string(j + 1));
      // v_q * G_{x_q}(v_q) - v_j * G_{x_q}(v_j) >= 0
      for (Index i = q; i < n; ++i) row.coeffs[out.variable(q, i)] += v[q];
      for (Index i = j; i < n; ++i) row.coeffs[out.variable(q, i)] -= v[j];
    }
  }
  return out;
}

namespace {

OracleOptimum optimize(const Market& aggregate, const RegulatedSet& F, Model model,
                       bool use_cs, lp::Direction direction) {
  StandardFormLP slp = build_lp(aggregate, F, model);
  slp.program.objective = use_cs ? slp.cs_objective : slp.ps_objective;
  lp::Solution sol = lp::solve(slp.program, direction);
  if (sol.status == lp::Status::Infeasible) {
    throw Error(ErrorCode::InfeasibleSet, "no admissible scheme for this regulated set");
  }
  if (sol.status != lp::Status::Optimal) {
    throw Error(ErrorCode::InternalError, "standard-form LP reported unbounded");
  }
  return {sol.value, slp.to_scheme(aggregate, sol.assignment)};
}

}  // namespace

bool oracle_feasible(const Market& aggregate, const RegulatedSet& F, Model model) {
  StandardFormLP slp = build_lp(aggregate, F, model);
  return lp::solve(slp.program, lp::Direction::Minimize).status != lp::Status::Infeasible;
}

OracleOptimum oracle_min_cs(const Market& aggregate, const RegulatedSet& F, Model model) {
  return optimize(aggregate, F, model, true, lp::Direction::Minimize);
}

OracleOptimum oracle_max_ps(const Market& aggregate, const RegulatedSet& F, Model model) {
  return optimize(aggregate, F, model, false, lp::Direction::Maximize);
}

OracleOptimum oracle_min_ps(const Market& aggregate, const RegulatedSet& F, Model model) {
  return optimize(aggregate, F, model, false, lp::Direction::Minimize);
}

Rational oracle_eta0(const Market& aggregate, const RegulatedSet& F, Index i0) {
  F.check(aggregate.grid());
  if (!F.contains(i0)) {
    throw Error(ErrorCode::IndexOutOfRange, "i0 must lie inside F");
  }
  StandardFormLP slp = build_lp(aggregate, F, Model::Passive, RegulatedSet(i0, F.hi));
  slp.program.objective[slp.variable(i0, i0)] = 1;
  lp::Solution sol = lp::solve(slp.program, lp::Direction::Minimize);
  if (sol.status != lp::Status::Optimal) {
    throw Error(ErrorCode::InfeasibleSet, "prices {v_i0..v_hi} admit no valid scheme");
  }
  return sol.value;
}

}  // namespace segmarket
