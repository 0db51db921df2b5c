#include "segmarket/lp.hpp"

#include <sstream>

#include "segmarket/error.hpp"

namespace segmarket::lp {

Constraint& LinearProgram::add_row(Sense sense, Rational rhs, std::string name) {
  rows.push_back({std::vector<Rational>(num_variables()), sense, std::move(rhs), std::move(name)});
  return rows.back();
}

namespace {

class Tableau {
 public:
  Tableau(const LinearProgram& program) : num_original_(program.num_variables()) {
    const std::size_t m = program.rows.size();
    std::size_t slack_count = 0;
    for (const auto& row : program.rows) {
      if (row.coeffs.size() != num_original_) {
        throw Error(ErrorCode::InvalidArgument, "constraint '" + row.name + "' has wrong width");
      }
      if (row.sense != Sense::Equal) ++slack_count;
    }
    first_artificial_ = num_original_ + slack_count;
    cols_ = first_artificial_ + m;
    rhs_col_ = cols_;
    cells_.assign(m, std::vector<Rational>(cols_ + 1));
    basis_.resize(m);

    std::size_t slack = num_original_;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& row = program.rows[i];
      auto& t = cells_[i];
      for (std::size_t j = 0; j < num_original_; ++j) t[j] = row.coeffs[j];
      if (row.sense == Sense::LessEqual) t[slack++] = 1;
      if (row.sense == Sense::GreaterEqual) t[slack++] = -1;
      t[rhs_col_] = row.rhs;
      if (row.rhs < 0) {
        for (auto& c : t) c = -c;
      }
      t[first_artificial_ + i] = 1;
      basis_[i] = first_artificial_ + i;
    }
  }

  Status phase_one() {
    std::vector<Rational> cost(cols_);
    for (std::size_t j = first_artificial_; j < cols_; ++j) cost[j] = 1;
    price_out(cost);
    if (iterate(cols_) == Status::Unbounded) {
      throw Error(ErrorCode::InternalError, "phase 1 reported unbounded");
    }
    if (-reduced_[rhs_col_] != 0) return Status::Infeasible;
    drive_out_artificials();
    return Status::Optimal;
  }

  Status phase_two(const std::vector<Rational>& objective, bool maximize) {
    std::vector<Rational> cost(cols_);
    for (std::size_t j = 0; j < num_original_; ++j) cost[j] = maximize ? Rational(-objective[j]) : objective[j];
    price_out(cost);
    return iterate(first_artificial_);
  }

  Rational objective_value() const { return -reduced_[rhs_col_]; }

  std::vector<Rational> assignment() const {
    std::vector<Rational> x(num_original_);
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (basis_[i] < num_original_) x[basis_[i]] = cells_[i][rhs_col_];
    }
    return x;
  }

 private:
  // reduced_[j] = cost_j - cost_B * column_j; reduced_[rhs] = -objective
  void price_out(const std::vector<Rational>& cost) {
    reduced_.assign(cols_ + 1, Rational(0));
    for (std::size_t j = 0; j < cols_; ++j) reduced_[j] = cost[j];
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (cells_[i][j] != 0) reduced_[j] -= cb * cells_[i][j];
      }
    }
  }

  // Minimizes; columns >= column_limit never enter.
  Status iterate(std::size_t column_limit) {
    for (;;) {
      std::size_t entering = column_limit;
      for (std::size_t j = 0; j < column_limit; ++j) {
        if (reduced_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (entering == column_limit) return Status::Optimal;

      std::size_t leaving = cells_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < cells_.size(); ++i) {
        const Rational& a = cells_[i][entering];
        if (a <= 0) continue;
        Rational ratio = cells_[i][rhs_col_] / a;
        if (leaving == cells_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving == cells_.size()) return Status::Unbounded;
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    auto& p = cells_[row];
    Rational inv = Rational(1) / p[col];
    for (auto& c : p) {
      if (c != 0) c *= inv;
    }
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (i == row || cells_[i][col] == 0) continue;
      Rational f = cells_[i][col];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (p[j] != 0) cells_[i][j] -= f * p[j];
      }
    }
    if (reduced_[col] != 0) {
      Rational f = reduced_[col];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (p[j] != 0) reduced_[j] -= f * p[j];
      }
    }
    basis_[row] = col;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < cells_.size();) {
      if (basis_[i] < first_artificial_) {
        ++i;
        continue;
      }
      std::size_t col = first_artificial_;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (cells_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col == first_artificial_) {
        // redundant row: every structural coefficient is zero
        cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      pivot(i, col);
      ++i;
    }
  }

  std::size_t num_original_;
  std::size_t first_artificial_ = 0;
  std::size_t cols_ = 0;
  std::size_t rhs_col_ = 0;
  std::vector<std::vector<Rational>> cells_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;
};

}  // namespace

Solution solve(const LinearProgram& program, Direction direction) {
  if (program.objective.size() != program.num_variables()) {
    throw Error(ErrorCode::InvalidArgument, "objective width does not match variable count");
  }
  Tableau tableau(program);
  Solution out;
  if (tableau.phase_one() == Status::Infeasible) {
    out.status = Status::Infeasible;
    return out;
  }
  const bool maximize = direction == Direction::Maximize;
  out.status = tableau.phase_two(program.objective, maximize);
  out.assignment = tableau.assignment();
  if (out.status == Status::Optimal) {
    out.value = evaluate(program.objective, out.assignment);
  }
  return out;
}

Rational evaluate(const std::vector<Rational>& objective, const std::vector<Rational>& x) {
  Rational total;
  for (std::size_t j = 0; j < objective.size(); ++j) total += objective[j] * x[j];
  return total;
}

bool satisfies(const LinearProgram& program, const std::vector<Rational>& x) {
  if (x.size() != program.num_variables()) return false;
  for (const auto& v : x) {
    if (v < 0) return false;
  }
  for (const auto& row : program.rows) {
    Rational lhs = evaluate(row.coeffs, x);
    switch (row.sense) {
      case Sense::LessEqual:
        if (lhs > row.rhs) return false;
        break;
      case Sense::GreaterEqual:
        if (lhs < row.rhs) return false;
        break;
      case Sense::Equal:
        if (lhs != row.rhs) return false;
        break;
    }
  }
  return true;
}

namespace {

void write_linear(std::ostream& os, const LinearProgram& program, const std::vector<Rational>& coeffs) {
  bool first = true;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    if (coeffs[j] < 0) {
      os << (first ? "-" : " - ");
    } else if (!first) {
      os << " + ";
    }
    Rational mag = abs(coeffs[j]);
    if (mag != 1) os << to_string(mag) << " ";
    os << program.variable_names[j];
    first = false;
  }
  if (first) os << "0";
}

}  // namespace

std::string dump(const LinearProgram& program) {
  std::ostringstream os;
  os << "variables " << program.num_variables() << "\n";
  for (const auto& name : program.variable_names) os << "  " << name << " >= 0\n";
  os << "objective: ";
  write_linear(os, program, program.objective);
  os << "\nconstraints " << program.rows.size() << "\n";
  for (const auto& row : program.rows) {
    os << "  " << row.name << ": ";
    write_linear(os, program, row.coeffs);
    switch (row.sense) {
      case Sense::LessEqual: os << " <= "; break;
      case Sense::GreaterEqual: os << " >= "; break;
      case Sense::Equal: os << " = "; break;
    }
    os << to_string(row.rhs) << "\n";
  }
  return os.str();
}

std::string_view status_name(Status status) {
  switch (status) {
    case Status::Optimal: return "optimal";
    case Status::Infeasible: return "infeasible";
    case Status::Unbounded: return "unbounded";
  }
  return "unknown";
}

}  // namespace segmarket::lp
