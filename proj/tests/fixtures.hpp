#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "segmarket/market.hpp"
#include "segmarket/scheme.hpp"

namespace segmarket::testing {

inline Rational R(const char* text) { return parse_rational(text); }

inline std::vector<Rational> rationals(std::initializer_list<const char*> items) {
  std::vector<Rational> out;
  for (const char* s : items) out.push_back(parse_rational(s));
  return out;
}

inline Market market_on(const GridPtr& grid, std::initializer_list<const char*> masses) {
  return Market(grid, rationals(masses));
}

inline GridPtr grid_1236() { return make_grid(rationals({"1", "2", "3", "6"})); }

/// The running example: V = {1,2,3,6}, x* = (0.36, 0.20, 0.18, 0.26).
inline Market m1() { return market_on(grid_1236(), {"0.36", "0.20", "0.18", "0.26"}); }

/// F = {2, 3} on the {1,2,3,6} grid.
inline RegulatedSet f23() { return {1, 2}; }

/// V = {1,2,3,4}, x* = (9,1,1,3): unique standard-form valid scheme for F = {2,3}.
inline Market uniqueness_market() {
  return market_on(make_grid(rationals({"1", "2", "3", "4"})), {"9", "1", "1", "3"});
}

/// V = {1,2,100}, x* = (100,50,2)/152.
inline Market deviate_market() {
  return market_on(make_grid(rationals({"1", "2", "100"})), {"100/152", "50/152", "2/152"});
}

/// Grid values of an index set, for readable comparisons.
inline std::vector<Rational> values_of(const Market& m, const IndexSet& set) {
  std::vector<Rational> out;
  for (Index i : set) out.push_back(m.grid()[i]);
  return out;
}

inline MarketScheme unregulated_scheme() {
  GridPtr g = grid_1236();
  Market agg = market_on(g, {"0.36", "0.20", "0.18", "0.26"});
  return {agg,
          {{market_on(g, {"0.36", "0.12", "0.12", "0.12"}), 0},
           {market_on(g, {"0", "0.06", "0.06", "0.06"}), 1},
           {market_on(g, {"0", "0.02", "0", "0.01"}), 1},
           {market_on(g, {"0", "0", "0", "0.07"}), 3}}};
}

/// Random small instance: n <= max_n values drawn from 1..max_value,
/// masses in {k/20 : 0 <= k <= 20}, nonzero total, random contiguous F.
struct RandomInstance {
  Market market;
  RegulatedSet F;
};

inline RandomInstance random_instance(std::mt19937_64& rng, std::size_t max_n = 5,
                                      long max_value = 12) {
  std::uniform_int_distribution<std::size_t> n_dist(1, max_n);
  const std::size_t n = n_dist(rng);
  std::vector<long> pool;
  for (long v = 1; v <= max_value; ++v) pool.push_back(v);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<long> picked(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
  std::sort(picked.begin(), picked.end());
  std::vector<Rational> values;
  for (long v : picked) values.emplace_back(v);

  std::uniform_int_distribution<int> k_dist(0, 20);
  std::vector<Rational> masses(n);
  bool any = false;
  while (!any) {
    for (auto& x : masses) {
      x = ratio(k_dist(rng), 20);
      if (x > 0) any = true;
    }
  }
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::size_t a = idx(rng), b = idx(rng);
  if (a > b) std::swap(a, b);
  return {Market(make_grid(std::move(values)), std::move(masses)), RegulatedSet(a, b)};
}

}  // namespace segmarket::testing
