#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "eur/bound_report.hpp"
#include "eur/generators.hpp"
#include "eur/io.hpp"
#include "eur/scan.hpp"
#include "eur/verifier.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification_failed = 1;
constexpr int exit_input_error = 2;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<eur::BoundName> parse_bound_list(const std::string& text) {
  std::vector<eur::BoundName> out;
  for (const auto& item : split(text, ',')) {
    auto name = eur::parse_bound_name(item);
    if (!name) throw eur::InvalidInput("unknown bound name '" + item + "'");
    out.push_back(*name);
  }
  if (out.empty()) throw eur::InvalidInput("--bounds needs at least one bound name");
  return out;
}

std::string order_text(const std::vector<std::size_t>& order) {
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) out += (i ? "," : "") + std::to_string(order[i] + 1);
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw eur::InvalidInput("cannot write '" + path + "'");
  out << text;
  if (!out) throw eur::InvalidInput("failed writing '" + path + "'");
}

struct BoundsArgs {
  std::string input, state, orders = "shannon", bounds;
  bool best_order = false;
};

int cmd_bounds(const BoundsArgs& args) {
  const auto set = eur::read_measurement_set(args.input);
  const auto chain = set.to_chain();
  eur::StateInput<double> state;
  if (!args.state.empty()) state = eur::read_state(args.state);
  std::vector<eur::BoundName> filter;
  if (!args.bounds.empty()) filter = parse_bound_list(args.bounds);

  const auto reports = eur::bound_reports<double>(
      chain, state, {.best_order = args.best_order, .min_entropy = args.orders == "min"});
  std::printf("# N = %zu, d = %ld, %s entropies%s\n", chain.size(), static_cast<long>(chain.dim()),
              args.orders == "min" ? "min" : "Shannon",
              std::holds_alternative<std::monostate>(state) ? ", state-dependent terms at S(rho) = 0" : "");
  for (const auto& r : reports) {
    if (!filter.empty() && std::find(filter.begin(), filter.end(), r.bound_name) == filter.end()) continue;
    std::printf("%-16s = %s", std::string(eur::to_string(r.bound_name)).c_str(),
                eur::format_number(r.value, 12).c_str());
    std::printf("  order=%s", order_text(r.chain_order).c_str());
    if (r.state_dependent) std::printf("  state-dependent");
    if (!r.note.empty()) std::printf("  (%s)", r.note.c_str());
    std::printf("\n");
  }
  return exit_ok;
}

struct ScanArgs {
  std::string family = "paper-d3", param = "a", range = "0:1", bounds, out;
  int steps = 101;
  double phi = 1.5707963267948966;
  double a = 0.5;
  bool input_order = false;
};

int cmd_scan(const ScanArgs& args) {
  if (args.family != "paper-d3") throw eur::InvalidInput("unknown family '" + args.family + "'");
  eur::ScanSpec spec;
  spec.parameter = args.param == "a" ? eur::ScanParameter::A : eur::ScanParameter::Phi;
  const auto colon = args.range.find(':');
  if (colon == std::string::npos) throw eur::InvalidInput("--range must be START:STOP");
  try {
    std::size_t used = 0;
    const std::string lo = args.range.substr(0, colon), hi = args.range.substr(colon + 1);
    spec.start = std::stod(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(lo);
    spec.stop = std::stod(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(hi);
  } catch (const std::logic_error&) {
    throw eur::InvalidInput("--range must be START:STOP with decimal numbers (got '" + args.range + "')");
  }
  spec.steps = args.steps;
  spec.fixed = spec.parameter == eur::ScanParameter::A ? args.phi : args.a;
  if (!args.bounds.empty()) spec.bounds = parse_bound_list(args.bounds);
  spec.best_order = !args.input_order;
  write_text(args.out, eur::scan_csv(spec, eur::run_scan(spec)));
  return exit_ok;
}

struct VerifyArgs {
  std::string input, mode = "state", orders = "shannon";
  long dim_b = 2;
  eur::MinimizationConfig config;
  int samples = 200;
};

void print_slacks(const std::map<std::string, double>& slacks) {
  for (const auto& [name, slack] : slacks)
    std::printf("  %-28s slack = %s%s\n", name.c_str(), eur::format_number(slack, 9).c_str(),
                slack < -eur::certification_tolerance ? "  VIOLATED" : "");
}

int cmd_verify(const VerifyArgs& args) {
  const auto chain = eur::read_measurement_set(args.input).to_chain();
  if (args.config.restarts < 1) throw eur::InvalidInput("--restarts must be >= 1");
  if (args.config.max_iterations < 1) throw eur::InvalidInput("--max-iterations must be >= 1");
  if (args.samples < 0) throw eur::InvalidInput("--samples must be >= 0");

  if (args.mode == "memory") {
    if (args.dim_b < 1) throw eur::InvalidInput("--dim-b must be >= 1");
    if (args.orders != "shannon") throw eur::InvalidInput("memory mode supports --orders shannon only");
  }
  const eur::RenyiOrder order = args.orders == "min" ? eur::RenyiOrder::infinity() : eur::RenyiOrder::shannon();
  const auto result =
      args.mode == "state"
          ? eur::minimize_entropy_sum(chain, std::span<const eur::RenyiOrder>(&order, 1), args.config)
          : eur::minimize_conditional_entropy_sum(chain, args.dim_b, args.config);
  std::printf("mode: %s, N = %zu, d = %ld\n", args.mode.c_str(), chain.size(), static_cast<long>(chain.dim()));
  std::printf("objective_min = %s  (%d converged restarts of %d)\n",
              eur::format_number(result.objective_min, 12).c_str(), result.converged_restarts,
              args.config.restarts);
  if (result.weighted_objective_min)
    std::printf("weighted_objective_min = %s\n", eur::format_number(*result.weighted_objective_min, 12).c_str());
  print_slacks(result.slack_per_bound);

  bool spot_ok = true;
  if (args.samples > 0) {
    const auto spot = eur::spot_check_inequalities(chain, args.samples, args.config.seed);
    std::printf("spot checks on %d random states:\n", spot.samples);
    print_slacks(spot.worst_slack);
    spot_ok = spot.all_ok();
  }
  const bool certified = result.certified && spot_ok;
  if (certified) {
    std::printf("CERTIFIED\n");
    return exit_ok;
  }
  std::printf("NOT CERTIFIED: worst slack = %s\n", eur::format_number(result.min_slack(), 12).c_str());
  return exit_verification_failed;
}

struct GenerateArgs {
  std::string kind, out;
  long dim = 2;
  long count = 0;
  double a = 0.5;
  double phi = 0.0;
  std::uint64_t seed = 0;
};

int cmd_generate(const GenerateArgs& args) {
  eur::MeasurementSet set;
  if (args.kind == "mub") {
    const long count = args.count > 0 ? args.count : args.dim + 1;
    set.bases = eur::mub_set<double>(args.dim, count);
  } else if (args.kind == "paper-d3") {
    const auto chain = eur::paper_d3_bases<double>({args.a, args.phi});
    set.bases = chain.bases();
  } else if (args.kind == "random") {
    if (args.dim < 1) throw eur::InvalidInput("--dim must be >= 1");
    const long count = args.count > 0 ? args.count : 3;
    eur::Rng rng(args.seed);
    for (long k = 0; k < count; ++k) {
      auto basis = eur::random_basis<double>(args.dim, rng);
      set.bases.emplace_back(basis.vectors(), "random-" + std::to_string(k));
    }
  } else {
    throw eur::InvalidInput("unknown kind '" + args.kind + "'");
  }
  set.dim = set.bases.front().dim();
  write_text(args.out, eur::serialize_measurement_set(set));
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropic uncertainty bounds for multiple measurements"};
  app.require_subcommand(1);

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Print every applicable bound for a measurement set");
  bounds_cmd->add_option("--input", bounds.input, "Measurement-set file")->required();
  bounds_cmd->add_option("--state", bounds.state, "State file (joint state if it has dim_b)");
  bounds_cmd->add_option("--orders", bounds.orders, "Entropy on the left-hand side")
      ->check(CLI::IsMember({"shannon", "min"}));
  bounds_cmd->add_flag("--best-order", bounds.best_order, "Maximize order-dependent bounds over orderings");
  bounds_cmd->add_option("--bounds", bounds.bounds, "Comma-separated bound names to print");

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Scan the d = 3 family and write CSV");
  scan_cmd->add_option("--family", scan.family, "Measurement family")->check(CLI::IsMember({"paper-d3"}));
  scan_cmd->add_option("--param", scan.param, "Scanned parameter")->check(CLI::IsMember({"a", "phi"}));
  scan_cmd->add_option("--range", scan.range, "START:STOP");
  scan_cmd->add_option("--steps", scan.steps, "Grid points (>= 2)");
  scan_cmd->add_option("--phi", scan.phi, "Fixed phi in radians when scanning a");
  scan_cmd->add_option("--a", scan.a, "Fixed a when scanning phi");
  scan_cmd->add_option("--bounds", scan.bounds, "Comma-separated bound names");
  scan_cmd->add_option("--out", scan.out, "Output CSV path (stdout if omitted)");
  scan_cmd->add_flag("--input-order", scan.input_order, "Use the input basis order instead of the best order");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Minimize entropy sums and certify every bound");
  verify_cmd->add_option("--input", verify.input, "Measurement-set file")->required();
  verify_cmd->add_option("--mode", verify.mode, "state or memory")->check(CLI::IsMember({"state", "memory"}));
  verify_cmd->add_option("--orders", verify.orders, "Entropy in state mode")->check(CLI::IsMember({"shannon", "min"}));
  verify_cmd->add_option("--dim-b", verify.dim_b, "Memory dimension in memory mode");
  verify_cmd->add_option("--restarts", verify.config.restarts, "Random starts");
  verify_cmd->add_option("--seed", verify.config.seed, "RNG seed");
  verify_cmd->add_option("--max-iterations", verify.config.max_iterations, "Iterations per start");
  verify_cmd->add_option("--samples", verify.samples, "Random states for spot checks (0 disables)");

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "Write a measurement-set file");
  gen_cmd->add_option("--kind", gen.kind, "mub, paper-d3 or random")
      ->required()
      ->check(CLI::IsMember({"mub", "paper-d3", "random"}));
  gen_cmd->add_option("--dim", gen.dim, "Dimension");
  gen_cmd->add_option("--count", gen.count, "Number of bases (mub: default d + 1, random: default 3)");
  gen_cmd->add_option("--a", gen.a, "paper-d3 parameter a in [0, 1]");
  gen_cmd->add_option("--phi", gen.phi, "paper-d3 phase in radians");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed for random");
  gen_cmd->add_option("--out", gen.out, "Output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input_error;
  }

  try {
    if (*bounds_cmd) return cmd_bounds(bounds);
    if (*scan_cmd) return cmd_scan(scan);
    if (*verify_cmd) return cmd_verify(verify);
    return cmd_generate(gen);
  } catch (const eur::InvalidInput& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_input_error;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_input_error;
  }
}
