#pragma once

#include <string>
#include <vector>

#include "segmarket/rational.hpp"

namespace segmarket::lp {

enum class Sense { LessEqual, GreaterEqual, Equal };

struct Constraint {
  std::vector<Rational> coeffs;  // dense, one entry per variable
  Sense sense = Sense::Equal;
  Rational rhs;
  std::string name;
};

/// Variables are implicitly nonnegative.
struct LinearProgram {
  std::vector<std::string> variable_names;
  std::vector<Constraint> rows;
  std::vector<Rational> objective;

  std::size_t num_variables() const { return variable_names.size(); }
  Constraint& add_row(Sense sense, Rational rhs, std::string name);
};

enum class Direction { Maximize, Minimize };
enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Rational value;
  std::vector<Rational> assignment;
};

/// Dense two-phase tableau simplex over exact rationals with Bland's rule,
/// so it always terminates. Phase 1 status alone answers feasibility.
Solution solve(const LinearProgram& program, Direction direction);

/// Exact check that x >= 0 satisfies every row.
bool satisfies(const LinearProgram& program, const std::vector<Rational>& x);

Rational evaluate(const std::vector<Rational>& objective, const std::vector<Rational>& x);

/// Plain-text equational dump, one row per line, coefficients as rational strings.
std::string dump(const LinearProgram& program);

std::string_view status_name(Status status);

}  // namespace segmarket::lp
