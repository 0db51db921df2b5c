#pragma once

#include <json.hpp>
#include <string>

#include "segmarket/passive.hpp"
#include "segmarket/region.hpp"
#include "segmarket/scheme.hpp"

namespace segmarket::io {

using nlohmann::json;

// Rationals travel as strings: "p/q" or an exact decimal literal.
// Plain JSON integers are accepted on input.
Rational rational_from_json(const json& j);
json rational_to_json(const Rational& r);

/// {"values": [...], "masses": [...]}
Market market_from_json(const json& j);
json market_to_json(const Market& m);

/// {"aggregate": <market>, "segments": [{"masses": [...], "price_index": k}]}
/// with 1-based price indices. Segments share the aggregate's grid.
MarketScheme scheme_from_json(const json& j);
json scheme_to_json(const MarketScheme& z);

/// {"model": ..., "vertices": {"min": [cs, ps], "seller": [...], "buyer": [...]}}
json region_to_json(const SurplusRegion& region);

/// Ordered list of {support, gamma, segment, price, residual, opt_prices};
/// support / opt_prices / price are reported as grid values.
json trace_to_json(const std::vector<TraceStep>& trace);

json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);

}  // namespace segmarket::io
