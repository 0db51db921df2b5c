#include "segmarket/json_io.hpp"

#include <fstream>
#include <sstream>

#include "segmarket/error.hpp"

namespace segmarket::io {
namespace {

std::vector<Rational> rational_list(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw Error(ErrorCode::ParseError, std::string("missing array '") + key + "'");
  }
  std::vector<Rational> out;
  for (const auto& item : j.at(key)) out.push_back(rational_from_json(item));
  return out;
}

json masses_to_json(const Market& m) {
  json arr = json::array();
  for (const auto& x : m.masses()) arr.push_back(rational_to_json(x));
  return arr;
}

json values_to_json(const ValueGrid& grid, const IndexSet& set) {
  json arr = json::array();
  for (Index i : set) arr.push_back(rational_to_json(grid[i]));
  return arr;
}

json point_to_json(const SurplusPoint& p) {
  return json::array({rational_to_json(p.cs), rational_to_json(p.ps)});
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(j.dump());
  throw Error(ErrorCode::ParseError, "expected a rational string, got " + j.dump());
}

json rational_to_json(const Rational& r) { return to_string(r); }

Market market_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "market must be a JSON object");
  auto grid = make_grid(rational_list(j, "values"));
  return Market(std::move(grid), rational_list(j, "masses"));
}

json market_to_json(const Market& m) {
  json values = json::array();
  for (const auto& v : m.grid().values()) values.push_back(rational_to_json(v));
  return {{"values", values}, {"masses", masses_to_json(m)}};
}

MarketScheme scheme_from_json(const json& j) {
  if (!j.is_object() || !j.contains("aggregate") || !j.contains("segments")) {
    throw Error(ErrorCode::ParseError, "scheme needs 'aggregate' and 'segments'");
  }
  MarketScheme z{market_from_json(j.at("aggregate")), {}};
  for (const auto& s : j.at("segments")) {
    if (!s.contains("price_index") || !s.at("price_index").is_number_integer()) {
      throw Error(ErrorCode::ParseError, "segment needs an integer 'price_index'");
    }
    const long k = s.at("price_index").get<long>();
    if (k < 1 || static_cast<std::size_t>(k) > z.aggregate.size()) {
      throw Error(ErrorCode::ParseError, "price_index " + std::to_string(k) + " is off the grid");
    }
    z.segments.push_back(
        {Market(z.aggregate.grid_ptr(), rational_list(s, "masses")), static_cast<Index>(k - 1)});
  }
  return z;
}

json scheme_to_json(const MarketScheme& z) {
  json segments = json::array();
  for (const auto& s : z.segments) {
    segments.push_back({{"masses", masses_to_json(s.market)}, {"price_index", s.price + 1}});
  }
  return {{"aggregate", market_to_json(z.aggregate)}, {"segments", segments}};
}

json region_to_json(const SurplusRegion& region) {
  return {{"model", std::string(model_name(region.model))},
          {"vertices",
           {{"min", point_to_json(region.v_min)},
            {"seller", point_to_json(region.v_seller)},
            {"buyer", point_to_json(region.v_buyer)}}}};
}

json trace_to_json(const std::vector<TraceStep>& trace) {
  json out = json::array();
  for (const auto& step : trace) {
    const ValueGrid& grid = step.residual.grid();
    out.push_back({{"residual", masses_to_json(step.residual)},
                   {"opt_prices", values_to_json(grid, step.opt_prices)},
                   {"support", values_to_json(grid, step.support)},
                   {"gamma", rational_to_json(step.gamma)},
                   {"segment", masses_to_json(step.segment)},
                   {"price", rational_to_json(grid[step.price])}});
  }
  return out;
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace segmarket::io
