#include "segmarket/market.hpp"

#include <algorithm>
#include <string>

#include "segmarket/error.hpp"

namespace segmarket {

ValueGrid::ValueGrid(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "value grid must be non-empty");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] <= 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "grid value " + to_string(values_[i]) + " is not positive");
    }
    if (i > 0 && values_[i - 1] >= values_[i]) {
      throw Error(ErrorCode::InvalidArgument, "grid values must be strictly increasing");
    }
  }
}

const Rational& ValueGrid::at(Index i) const {
  if (i >= values_.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "grid index " + std::to_string(i) + " >= " + std::to_string(values_.size()));
  }
  return values_[i];
}

std::optional<Index> ValueGrid::find(const Rational& value) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), value);
  if (it == values_.end() || *it != value) return std::nullopt;
  return static_cast<Index>(it - values_.begin());
}

GridPtr make_grid(std::vector<Rational> values) {
  return std::make_shared<const ValueGrid>(std::move(values));
}

Market::Market(GridPtr grid, std::vector<Rational> masses)
    : grid_(std::move(grid)), masses_(std::move(masses)) {
  if (!grid_) throw Error(ErrorCode::InvalidArgument, "market needs a value grid");
  if (masses_.size() != grid_->size()) {
    throw Error(ErrorCode::InvalidArgument,
                "market has " + std::to_string(masses_.size()) + " masses for a grid of " +
                    std::to_string(grid_->size()) + " values");
  }
  for (const auto& x : masses_) {
    if (x < 0) throw Error(ErrorCode::InvalidArgument, "negative mass " + to_string(x));
  }
}

Market Market::zero(GridPtr grid) {
  const std::size_t n = grid->size();
  return Market(std::move(grid), std::vector<Rational>(n));
}

Rational Market::mass() const {
  Rational total;
  for (const auto& x : masses_) total += x;
  return total;
}

IndexSet Market::support() const {
  IndexSet out;
  for (Index i = 0; i < masses_.size(); ++i) {
    if (masses_[i] > 0) out.push_back(i);
  }
  return out;
}

bool Market::is_zero() const {
  return std::all_of(masses_.begin(), masses_.end(), [](const Rational& x) { return x == 0; });
}

bool Market::same_grid(const Market& other) const {
  return grid_ == other.grid_ || *grid_ == *other.grid_;
}

Market Market::operator+(const Market& other) const {
  if (!same_grid(other)) throw Error(ErrorCode::InvalidArgument, "markets on different grids");
  std::vector<Rational> out(masses_.size());
  for (Index i = 0; i < out.size(); ++i) out[i] = masses_[i] + other.masses_[i];
  return Market(grid_, std::move(out));
}

Market Market::operator-(const Market& other) const {
  if (!same_grid(other)) throw Error(ErrorCode::InvalidArgument, "markets on different grids");
  std::vector<Rational> out(masses_.size());
  for (Index i = 0; i < out.size(); ++i) out[i] = masses_[i] - other.masses_[i];
  return Market(grid_, std::move(out));
}

Market Market::scaled(const Rational& factor) const {
  std::vector<Rational> out(masses_.size());
  for (Index i = 0; i < out.size(); ++i) out[i] = masses_[i] * factor;
  return Market(grid_, std::move(out));
}

bool Market::dominated_by(const Market& other) const {
  for (Index i = 0; i < masses_.size(); ++i) {
    if (masses_[i] > other.masses_[i]) return false;
  }
  return true;
}

bool Market::operator==(const Market& other) const {
  return same_grid(other) && masses_ == other.masses_;
}

RegulatedSet::RegulatedSet(Index lo_, Index hi_) : lo(lo_), hi(hi_) {
  if (lo > hi) {
    throw Error(ErrorCode::BadRange, "regulated set needs lo <= hi, got " + std::to_string(lo) +
                                         " > " + std::to_string(hi));
  }
}

IndexSet RegulatedSet::indices() const {
  IndexSet out;
  for (Index i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

void RegulatedSet::check(const ValueGrid& grid) const {
  if (lo > hi || hi >= grid.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "regulated set [" + std::to_string(lo) + ", " + std::to_string(hi) +
                    "] does not fit a grid of " + std::to_string(grid.size()) + " values");
  }
}

Rational demand(const Market& m, Index i) {
  if (i >= m.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "price index " + std::to_string(i) + " >= " + std::to_string(m.size()));
  }
  Rational g;
  for (Index j = i; j < m.size(); ++j) g += m[j];
  return g;
}

Rational revenue(const Market& m, Index i) { return m.grid().at(i) * demand(m, i); }

namespace {

IndexSet argmax_revenue(const Market& m, Index lo, Index hi) {
  if (m.is_zero()) throw Error(ErrorCode::ZeroMarket, "revenue argmax of the zero market");
  // suffix sums once, then one pass over the window
  std::vector<Rational> tail(m.size() + 1);
  for (Index j = m.size(); j-- > 0;) tail[j] = tail[j + 1] + m[j];
  IndexSet best;
  Rational best_rev;
  for (Index i = lo; i <= hi; ++i) {
    Rational r = m.grid()[i] * tail[i];
    if (best.empty() || r > best_rev) {
      best = {i};
      best_rev = r;
    } else if (r == best_rev) {
      best.push_back(i);
    }
  }
  return best;
}

}  // namespace

IndexSet opt_prices(const Market& m) { return argmax_revenue(m, 0, m.size() - 1); }

IndexSet opt_prices_restricted(const Market& m, const RegulatedSet& F) {
  F.check(m.grid());
  return argmax_revenue(m, F.lo, F.hi);
}

Rational r_uniform(const Market& m) {
  Rational best;
  Rational tail;
  for (Index j = m.size(); j-- > 0;) {
    tail += m[j];
    Rational r = m.grid()[j] * tail;
    if (r > best) best = r;
  }
  return best;
}

Rational sw_max(const Market& m, const RegulatedSet& F) {
  F.check(m.grid());
  Rational total;
  for (Index i = F.lo; i < m.size(); ++i) total += m[i] * m.grid()[i];
  return total;
}

IndexSet intersect(const IndexSet& set, const RegulatedSet& F) {
  IndexSet out;
  for (Index i : set) {
    if (F.contains(i)) out.push_back(i);
  }
  return out;
}

IndexSet set_difference(const IndexSet& set, const RegulatedSet& F) {
  IndexSet out;
  for (Index i : set) {
    if (!F.contains(i)) out.push_back(i);
  }
  return out;
}

bool is_subset(const IndexSet& small, const IndexSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace segmarket
