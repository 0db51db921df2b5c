// segmarket: command-line front end for the segmentation library.
//
// Exit codes: 0 ok / feasible / valid, 1 usage, IO or parse error,
// 2 infeasible set (or an invalid scheme under `validate`), 3 point outside region.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "segmarket/active.hpp"
#include "segmarket/error.hpp"
#include "segmarket/json_io.hpp"
#include "segmarket/oracle.hpp"
#include "segmarket/passive.hpp"
#include "segmarket/region.hpp"
#include "segmarket/regulator.hpp"

using namespace segmarket;
using segmarket::io::json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInfeasible = 2;
constexpr int kOutside = 3;

struct WindowArgs {
  std::string market_path;
  std::string flo;
  std::string fhi;
  std::string model = "passive";
};

void add_window_options(CLI::App* cmd, WindowArgs& args, bool with_model = true) {
  cmd->add_option("--market", args.market_path, "market JSON file")->required();
  cmd->add_option("--flo", args.flo, "lowest price of F: a grid value or #k (1-based)")->required();
  cmd->add_option("--fhi", args.fhi, "highest price of F: a grid value or #k (1-based)")->required();
  if (with_model) {
    cmd->add_option("--model", args.model, "passive or active")
        ->check(CLI::IsMember({"passive", "active"}));
  }
}

/// "#k" picks the k-th grid value; anything else must equal a grid value exactly.
Index resolve_price(const ValueGrid& grid, const std::string& text) {
  if (!text.empty() && text[0] == '#') {
    std::size_t pos = 0;
    long k = 0;
    try {
      k = std::stol(text.substr(1), &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos + 1 != text.size() || k < 1 || static_cast<std::size_t>(k) > grid.size()) {
      throw Error(ErrorCode::IndexOutOfRange, "bad grid index '" + text + "'");
    }
    return static_cast<Index>(k - 1);
  }
  Rational value = parse_rational(text);
  auto found = grid.find(value);
  if (!found) throw Error(ErrorCode::InvalidArgument, "'" + text + "' is not a grid value");
  return *found;
}

RegulatedSet resolve_window(const ValueGrid& grid, const std::string& lo, const std::string& hi) {
  Index a = resolve_price(grid, lo);
  Index b = resolve_price(grid, hi);
  if (a > b) throw Error(ErrorCode::BadRange, "--flo is above --fhi");
  return {a, b};
}

Model parse_model(const std::string& name) {
  return name == "active" ? Model::Active : Model::Passive;
}

ConstructionOptions construction_options() {
  ConstructionOptions opts;
  if (const char* env = std::getenv("SEGMARKET_MAX_ITERS")) {
    try {
      long n = std::stol(env);
      if (n <= 0) throw std::invalid_argument("non-positive");
      opts.max_iterations = static_cast<std::size_t>(n);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, std::string("SEGMARKET_MAX_ITERS='") + env +
                                                  "' is not a positive integer");
    }
  }
  return opts;
}

void print_surplus(const Surplus& s) {
  std::cout << "CS=" << to_string(s.cs) << " PS=" << to_string(s.ps) << " SW=" << to_string(s.sw)
            << '\n'
            << "CS=" << to_decimal(s.cs) << " PS=" << to_decimal(s.ps)
            << " SW=" << to_decimal(s.sw) << '\n';
}

void print_value(const std::string& name, const Rational& v) {
  std::cout << name << '=' << to_string(v) << '\n' << name << '=' << to_decimal(v) << '\n';
}

void emit(const std::string& path, const json& j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
  } else {
    io::write_file(path, j);
  }
}

// ---- segment ---------------------------------------------------------------

struct SegmentArgs {
  WindowArgs window;
  std::string objective;
  std::string trace_path;
  std::string out_path;
};

int run_segment(const SegmentArgs& args) {
  Market x = io::market_from_json(io::read_file(args.window.market_path));
  RegulatedSet F = resolve_window(x.grid(), args.window.flo, args.window.fhi);
  const Model model = parse_model(args.window.model);
  const ConstructionOptions opts = construction_options();

  MarketScheme scheme{x, {}};
  std::vector<TraceStep> trace;
  if (model == Model::Passive) {
    Construction c = args.objective == "ps-max"   ? ps_max_scheme(x, F, opts)
                     : args.objective == "cs-max" ? cs_max_scheme(x, F, opts)
                                                  : sw_min_scheme(x, F, opts);
    if (!c.complete()) {
      std::cerr << "infeasible: mass left outside F after the producer-optimal construction\n";
      return kInfeasible;
    }
    scheme = std::move(c.scheme);
    trace = std::move(c.trace);
  } else {
    scheme = args.objective == "ps-max"   ? ps_max_active(x, F)
             : args.objective == "cs-max" ? cs_max_active(x, F)
                                          : sw_min_active(x, F);
    if (!args.trace_path.empty()) trace = bbm_segment(modified_market(x, F), opts).trace;
  }

  print_surplus(scheme_surplus(scheme));
  if (!args.out_path.empty()) io::write_file(args.out_path, io::scheme_to_json(scheme));
  if (!args.trace_path.empty()) io::write_file(args.trace_path, io::trace_to_json(trace));
  return kOk;
}

// ---- region / point --------------------------------------------------------

int run_region(const WindowArgs& args, const std::string& out_path) {
  Market x = io::market_from_json(io::read_file(args.market_path));
  RegulatedSet F = resolve_window(x.grid(), args.flo, args.fhi);
  SurplusRegion r = region_for(x, F, parse_model(args.model));
  emit(out_path, io::region_to_json(r));
  return kOk;
}

struct PointArgs {
  WindowArgs window;
  std::string cs;
  std::string ps;
  bool merge = false;
  std::string out_path;
};

int run_point(const PointArgs& args) {
  Market x = io::market_from_json(io::read_file(args.window.market_path));
  RegulatedSet F = resolve_window(x.grid(), args.window.flo, args.window.fhi);
  SurplusPoint target{parse_rational(args.cs), parse_rational(args.ps)};
  MixedScheme mix = scheme_for_point(x, F, target, parse_model(args.window.model), args.merge);
  std::cout << "weights min=" << to_string(mix.w_min) << " seller=" << to_string(mix.w_seller)
            << " buyer=" << to_string(mix.w_buyer) << '\n';
  print_surplus(scheme_surplus(mix.scheme));
  json j = {{"weights",
             {{"min", io::rational_to_json(mix.w_min)},
              {"seller", io::rational_to_json(mix.w_seller)},
              {"buyer", io::rational_to_json(mix.w_buyer)}}},
            {"scheme", io::scheme_to_json(mix.scheme)}};
  if (!args.out_path.empty()) io::write_file(args.out_path, j);
  return kOk;
}

// ---- feasible / design-f ---------------------------------------------------

int run_feasible(const WindowArgs& args) {
  Market x = io::market_from_json(io::read_file(args.market_path));
  RegulatedSet F = resolve_window(x.grid(), args.flo, args.fhi);
  Construction c = ps_max_scheme(x, F, construction_options());
  if (c.complete()) {
    std::cout << "feasible\n";
    return kOk;
  }
  std::cout << "infeasible\nremainder " << io::market_to_json(c.remainder)["masses"].dump() << '\n';
  return kInfeasible;
}

int run_design_f(const std::string& market_path) {
  Market x = io::market_from_json(io::read_file(market_path));
  RegulatedSet F = design_f(x);
  std::cout << to_string(x.grid()[F.lo]) << ".." << to_string(x.grid()[F.hi]) << '\n'
            << "indices #" << F.lo + 1 << "..#" << F.hi + 1 << '\n';
  print_value("CS_min", cs_p_min(x, F));
  return kOk;
}

// ---- sweep -----------------------------------------------------------------

struct SweepArgs {
  long R = 9;
  std::vector<long> Ls;
  std::string out_path;
  unsigned workers = 1;
  bool large = false;
};

int run_sweep(const SweepArgs& args) {
  if (args.R > 49 && !args.large) {
    std::cerr << "R > 49 needs --large (runtime grows quickly with R)\n";
    return kUsage;
  }
  if (args.R > 49) std::cerr << "warning: R=" << args.R << " sweep may take a long time\n";
  std::vector<long> Ls = args.Ls;
  if (Ls.empty()) {
    for (long L = 1; L <= args.R; ++L) Ls.push_back(L);
  }
  std::cerr << "note: regulated sets are counted when disjoint from every optimal price;"
               " rows with tied optimal prices are flagged and have n_sufficient=0\n";
  std::string csv = sweep_csv(feasibility_sweep(args.R, Ls, std::max(1u, args.workers)));
  if (args.out_path.empty() || args.out_path == "-") {
    std::cout << csv;
  } else {
    std::ofstream out(args.out_path, std::ios::binary);
    if (!(out << csv)) throw Error(ErrorCode::InvalidArgument, "cannot write " + args.out_path);
  }
  return kOk;
}

// ---- validate --------------------------------------------------------------

struct ValidateArgs {
  std::string scheme_path;
  std::string flo;
  std::string fhi;
  std::string model = "passive";
};

std::string_view kind_name(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::GridMismatch: return "grid-mismatch";
    case Violation::Kind::SegmentationMismatch: return "segmentation-mismatch";
    case Violation::Kind::PriceOutsideF: return "price-outside-F";
    case Violation::Kind::PriceNotOptimal: return "price-not-optimal";
  }
  return "unknown";
}

int run_validate(const ValidateArgs& args) {
  MarketScheme z = io::scheme_from_json(io::read_file(args.scheme_path));
  RegulatedSet F = resolve_window(z.aggregate.grid(), args.flo, args.fhi);
  ValidationReport report = validate_scheme(z, F, parse_model(args.model));
  std::cout << "violations " << report.violations.size() << '\n';
  for (const auto& v : report.violations) {
    std::cout << kind_name(v.kind);
    if (v.segment) std::cout << " segment=" << *v.segment + 1;
    std::cout << ' ' << v.message << '\n';
  }
  return report.valid() ? kOk : kInfeasible;
}

// ---- oracle ----------------------------------------------------------------

struct OracleArgs {
  WindowArgs window;
  std::string objective;
  std::string i0;
  std::string dump_path;
};

int run_oracle(const OracleArgs& args) {
  Market x = io::market_from_json(io::read_file(args.window.market_path));
  RegulatedSet F = resolve_window(x.grid(), args.window.flo, args.window.fhi);
  const Model model = parse_model(args.window.model);

  if (!args.dump_path.empty()) {
    std::ofstream out(args.dump_path);
    if (!(out << lp::dump(build_lp(x, F, model).program))) {
      throw Error(ErrorCode::InvalidArgument, "cannot write " + args.dump_path);
    }
  }
  if (args.objective == "feasible") {
    bool ok = oracle_feasible(x, F, model);
    std::cout << (ok ? "feasible" : "infeasible") << '\n';
    return ok ? kOk : kInfeasible;
  }
  if (args.objective == "eta0") {
    if (args.i0.empty()) throw Error(ErrorCode::InvalidArgument, "--objective eta0 needs --i0");
    print_value("eta0", oracle_eta0(x, F, resolve_price(x.grid(), args.i0)));
    return kOk;
  }
  OracleOptimum best = args.objective == "min-cs"   ? oracle_min_cs(x, F, model)
                       : args.objective == "max-ps" ? oracle_max_ps(x, F, model)
                                                    : oracle_min_ps(x, F, model);
  print_value(args.objective, best.value);
  return kOk;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::InfeasibleSet: return kInfeasible;
    case ErrorCode::PointOutsideRegion: return kOutside;
    default: return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact market segmentation under a regulated price set"};
  app.require_subcommand(1);

  SegmentArgs seg;
  auto* segment = app.add_subcommand("segment", "build an extreme segmentation scheme");
  add_window_options(segment, seg.window);
  segment->add_option("--objective", seg.objective, "ps-max, cs-max or sw-min")
      ->required()
      ->check(CLI::IsMember({"ps-max", "cs-max", "sw-min"}));
  segment->add_option("--trace", seg.trace_path, "write the extraction trace JSON here");
  segment->add_option("--out", seg.out_path, "write the scheme JSON here");

  WindowArgs region_args;
  std::string region_out;
  auto* region = app.add_subcommand("region", "vertices of the achievable (CS, PS) triangle");
  add_window_options(region, region_args);
  region->add_option("--out", region_out, "write the region JSON here (default stdout)");

  PointArgs point_args;
  auto* point = app.add_subcommand("point", "mix the extreme schemes to hit a (CS, PS) target");
  add_window_options(point, point_args.window);
  point->add_option("--cs", point_args.cs, "target consumer surplus")->required();
  point->add_option("--ps", point_args.ps, "target producer surplus")->required();
  point->add_flag("--merge", point_args.merge, "standardize the mixed scheme over F");
  point->add_option("--out", point_args.out_path, "write weights and scheme JSON here");

  WindowArgs feasible_args;
  auto* feasible = app.add_subcommand("feasible", "exit 0 if F admits a valid scheme, 2 if not");
  add_window_options(feasible, feasible_args, false);

  std::string design_market;
  auto* design = app.add_subcommand("design-f", "smallest feasible prefix {v_1..v_w}");
  design->add_option("--market", design_market, "market JSON file")->required();

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "feasibility proportions on uniform markets L..R");
  sweep->add_option("--R", sweep_args.R, "top of the value range")->required()->check(CLI::PositiveNumber);
  sweep->add_option("--L", sweep_args.Ls, "L values (default 1..R)")->delimiter(',');
  sweep->add_option("--out", sweep_args.out_path, "CSV output (default stdout)");
  sweep->add_option("--workers", sweep_args.workers, "worker threads");
  sweep->add_flag("--large", sweep_args.large, "allow R > 49");

  ValidateArgs validate_args;
  auto* validate = app.add_subcommand("validate", "check a scheme JSON against F");
  validate->add_option("--scheme", validate_args.scheme_path, "scheme JSON file")->required();
  validate->add_option("--flo", validate_args.flo, "lowest price of F")->required();
  validate->add_option("--fhi", validate_args.fhi, "highest price of F")->required();
  validate->add_option("--model", validate_args.model, "passive or active")
      ->check(CLI::IsMember({"passive", "active"}));

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "solve the standard-form LP exactly");
  add_window_options(oracle, oracle_args.window);
  oracle->add_option("--objective", oracle_args.objective, "min-cs, max-ps, min-ps, eta0 or feasible")
      ->required()
      ->check(CLI::IsMember({"min-cs", "max-ps", "min-ps", "eta0", "feasible"}));
  oracle->add_option("--i0", oracle_args.i0, "price for eta0: grid value or #k");
  oracle->add_option("--dump-lp", oracle_args.dump_path, "write the LP in text form here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*segment) return run_segment(seg);
    if (*region) return run_region(region_args, region_out);
    if (*point) return run_point(point_args);
    if (*feasible) return run_feasible(feasible_args);
    if (*design) return run_design_f(design_market);
    if (*sweep) return run_sweep(sweep_args);
    if (*validate) return run_validate(validate_args);
    if (*oracle) return run_oracle(oracle_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
