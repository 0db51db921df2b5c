#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "segmarket/rational.hpp"

namespace segmarket {

/// Zero-based position on the value grid. JSON and the CLI use 1-based indices.
using Index = std::size_t;

/// Sorted, duplicate-free set of grid indices.
using IndexSet = std::vector<Index>;

/// Strictly increasing list of positive buyer values v_1 < ... < v_n.
class ValueGrid {
 public:
  explicit ValueGrid(std::vector<Rational> values);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](Index i) const { return values_[i]; }
  const Rational& at(Index i) const;
  const std::vector<Rational>& values() const { return values_; }

  /// Index of an exact grid value, if present.
  std::optional<Index> find(const Rational& value) const;

  bool operator==(const ValueGrid& other) const { return values_ == other.values_; }

 private:
  std::vector<Rational> values_;
};

using GridPtr = std::shared_ptr<const ValueGrid>;

GridPtr make_grid(std::vector<Rational> values);

/// Nonnegative mass vector over a value grid. Total mass is not normalized.
class Market {
 public:
  Market(GridPtr grid, std::vector<Rational> masses);

  static Market zero(GridPtr grid);

  const ValueGrid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  std::size_t size() const { return masses_.size(); }
  const Rational& operator[](Index i) const { return masses_[i]; }
  const std::vector<Rational>& masses() const { return masses_; }

  Rational mass() const;
  IndexSet support() const;
  bool is_zero() const;

  /// Coordinate-wise arithmetic; subtraction throws if any coordinate turns negative.
  Market operator+(const Market& other) const;
  Market operator-(const Market& other) const;
  Market scaled(const Rational& factor) const;

  /// True when every coordinate is <= the other's.
  bool dominated_by(const Market& other) const;

  bool same_grid(const Market& other) const;
  bool operator==(const Market& other) const;

 private:
  GridPtr grid_;
  std::vector<Rational> masses_;
};

/// Contiguous window {v_lo, ..., v_hi} of the value grid (inclusive, zero-based).
struct RegulatedSet {
  Index lo = 0;
  Index hi = 0;

  RegulatedSet() = default;
  RegulatedSet(Index lo_, Index hi_);

  static RegulatedSet whole(const ValueGrid& grid) { return {0, grid.size() - 1}; }

  std::size_t size() const { return hi - lo + 1; }
  bool contains(Index i) const { return lo <= i && i <= hi; }
  IndexSet indices() const;

  /// Throws IndexOutOfRange if the window does not fit the grid.
  void check(const ValueGrid& grid) const;

  bool operator==(const RegulatedSet&) const = default;
};

// G_x(v_i): mass of buyers with value >= v_i.
Rational demand(const Market& m, Index i);

// R_x(v_i) = v_i * G_x(v_i).
Rational revenue(const Market& m, Index i);

/// Exact argmax of revenue over the whole grid, ties kept. Throws ZeroMarket.
IndexSet opt_prices(const Market& m);

/// Argmax of revenue over the indices of F only. Throws ZeroMarket.
IndexSet opt_prices_restricted(const Market& m, const RegulatedSet& F);

/// Best single-price revenue on the whole grid.
Rational r_uniform(const Market& m);

/// Sum of x_i * v_i over i >= F.lo: every buyer who could afford some price in F.
Rational sw_max(const Market& m, const RegulatedSet& F);

IndexSet intersect(const IndexSet& set, const RegulatedSet& F);
IndexSet set_difference(const IndexSet& set, const RegulatedSet& F);
bool is_subset(const IndexSet& small, const IndexSet& big);

}  // namespace segmarket
