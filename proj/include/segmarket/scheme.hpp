#pragma once

#include <optional>
#include <string>
#include <vector>

#include "segmarket/market.hpp"

namespace segmarket {

enum class Model { Passive, Active };

/// A sub-market paired with the price the intermediary instructs for it.
struct Segment {
  Market market;
  Index price;
};

/// Segmentation of an aggregate market. The sum identity is checked by
/// scheme_surplus / validate_scheme rather than on construction, so that
/// schemes read from disk can be reported on.
struct MarketScheme {
  Market aggregate;
  std::vector<Segment> segments;

  Market segment_sum() const;
};

struct Surplus {
  Rational cs;
  Rational ps;
  Rational sw;

  bool operator==(const Surplus&) const = default;
};

Surplus segment_surplus(const Segment& s);

/// Throws SegmentationMismatch if the segments do not add up to the aggregate.
Surplus scheme_surplus(const MarketScheme& z);

/// One (possibly zero) segment per price of F, in increasing price order.
/// Throws PriceOutsideF if some instructed price is not in F.
MarketScheme standardize(const MarketScheme& z, const RegulatedSet& F);

struct Violation {
  enum class Kind { GridMismatch, SegmentationMismatch, PriceOutsideF, PriceNotOptimal };
  Kind kind;
  std::optional<std::size_t> segment;  // empty for scheme-level violations
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
};

/// Passive: price in F and globally revenue-optimal for its segment.
/// Active: price in F and revenue-optimal among the prices of F.
/// Zero segments are exempt from the optimality check.
ValidationReport validate_scheme(const MarketScheme& z, const RegulatedSet& F, Model model);

std::string_view model_name(Model model);

}  // namespace segmarket
