// SPDX-License-Identifier: Apache-2.0
//
// renyi: Renyi information measures of finite-dimensional quantum channels.
//
// Subcommands: capacity, renyi-mi, cb-norm, exponent, curve, epsilon-bound,
// simulate, verify. Channels are given as JSON specs, inline (--channel) or
// from a file (--channel-file). Exit codes: 0 success, 2 validation error,
// 3 verification failure.

#include <CLI11.hpp>

#include "renyi/channel_info.hpp"
#include "renyi/channels.hpp"
#include "renyi/converse.hpp"
#include "renyi/parallel.hpp"
#include "renyi/verify.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using renyi::channels::CPMap;

struct CommonArgs {
  std::string channel_json;
  std::string channel_file;
  std::uint64_t seed = 0;
  std::vector<std::string> tolerance_overrides;
};

struct Overrides {
  renyi::channel_info::SolveOptions solve;
  renyi::converse::ExponentOptions exponent;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_channel = true) {
  if (needs_channel) {
    auto* inline_opt =
        cmd->add_option("--channel", args.channel_json, "channel spec as inline JSON");
    auto* file_opt =
        cmd->add_option("--channel-file", args.channel_file, "path to a JSON channel spec");
    inline_opt->excludes(file_opt);
  }
  cmd->add_option("--seed", args.seed, "seed for every randomized solver")->default_val(0);
  cmd->add_option("--tol", args.tolerance_overrides,
                  "tolerance override name=value (block-move, alpha-cap)");
}

CPMap load_channel(const CommonArgs& args) {
  if (!args.channel_json.empty()) {
    return renyi::channels::parse_channel_spec(args.channel_json);
  }
  if (!args.channel_file.empty()) {
    std::ifstream in(args.channel_file);
    if (!in) {
      throw std::invalid_argument("channel spec: cannot open file \"" + args.channel_file + "\"");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return renyi::channels::parse_channel_spec(buffer.str());
  }
  throw std::invalid_argument("channel spec: provide --channel or --channel-file");
}

Overrides parse_overrides(const CommonArgs& args) {
  Overrides o;
  o.solve.seed = args.seed;
  o.exponent.seed = args.seed;
  for (const std::string& entry : args.tolerance_overrides) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("tolerance override \"" + entry + "\" must look like name=value");
    }
    const std::string key = entry.substr(0, eq);
    double value = 0.0;
    try {
      size_t used = 0;
      value = std::stod(entry.substr(eq + 1), &used);
      if (used != entry.size() - eq - 1) throw std::invalid_argument("trailing junk");
    } catch (const std::exception&) {
      throw std::invalid_argument("tolerance override field \"" + key +
                                  "\" has a malformed numeric value");
    }
    if (!(value > 0.0)) {
      throw std::invalid_argument("tolerance override field \"" + key + "\" must be positive");
    }
    if (key == "block-move") {
      o.solve.block_move_tol = value;
    } else if (key == "alpha-cap") {
      o.exponent.alpha_cap = value;
    } else {
      throw std::invalid_argument("unknown tolerance override field \"" + key + "\"");
    }
  }
  return o;
}

void print_report_block(const char* name, const renyi::channel_info::ChannelMIReport& report) {
  std::printf("%s = %.6f bits\n", name, report.bits);
  std::printf("iterations = %d\n", report.iterations);
  std::printf("residual = %.6e\n", report.residual);
  std::printf("restart_spread = %.6e\n", report.restart_spread);
  if (report.minmax_bits.has_value()) {
    std::printf("minmax = %.6f bits, gap = %.6e\n", *report.minmax_bits, *report.gap);
  }
}

std::vector<double> parse_rate_grid(const std::string& text) {
  std::vector<double> rates;
  const auto parse_one = [](const std::string& s) {
    size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("rate grid entry \"" + s + "\" is not a number");
    return v;
  };
  if (text.find(':') != std::string::npos) {
    // lo:hi:step
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3) {
      throw std::invalid_argument("rate grid field \"rates\" must be lo:hi:step or a comma list");
    }
    const double lo = parse_one(parts[0]);
    const double hi = parse_one(parts[1]);
    const double step = parse_one(parts[2]);
    if (!(step > 0.0) || hi < lo) {
      throw std::invalid_argument("rate grid field \"rates\" must have step > 0 and hi >= lo");
    }
    for (double r = lo; r <= hi + 1e-12; r += step) rates.push_back(r);
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) rates.push_back(parse_one(item));
  }
  if (rates.empty()) throw std::invalid_argument("rate grid field \"rates\" is empty");
  for (size_t i = 0; i + 1 < rates.size(); ++i) {
    if (!(rates[i] < rates[i + 1])) {
      throw std::invalid_argument("rate grid field \"rates\" must be strictly ascending");
    }
  }
  return rates;
}

int run(int argc, char** argv) {
  CLI::App app{"Renyi information measures of finite-dimensional quantum channels"};
  app.require_subcommand(1);

  CommonArgs capacity_args;
  auto* capacity_cmd = app.add_subcommand("capacity", "entanglement-assisted capacity I(N)");
  add_common(capacity_cmd, capacity_args);

  CommonArgs mi_args;
  double mi_alpha = 2.0;
  std::string mi_family = "sandwiched";
  auto* mi_cmd = app.add_subcommand("renyi-mi", "Renyi channel mutual information");
  add_common(mi_cmd, mi_args);
  mi_cmd->add_option("--alpha", mi_alpha, "Renyi order (> 1)")->required();
  mi_cmd->add_option("--family", mi_family, "sandwiched | traditional")
      ->check(CLI::IsMember({"sandwiched", "traditional"}));

  CommonArgs cb_args;
  double cb_alpha = 2.0;
  auto* cb_cmd = app.add_subcommand("cb-norm", "completely bounded 1->alpha norm");
  add_common(cb_cmd, cb_args);
  cb_cmd->add_option("--alpha", cb_alpha, "norm order (>= 1)")->required();

  CommonArgs exp_args;
  double exp_rate = 0.0;
  auto* exp_cmd = app.add_subcommand("exponent", "strong-converse exponent E(R)");
  add_common(exp_cmd, exp_args);
  exp_cmd->add_option("--rate", exp_rate, "rate R in bits per channel use")->required();

  CommonArgs curve_args;
  std::string curve_rates;
  std::string curve_output;
  auto* curve_cmd = app.add_subcommand("curve", "E(R) over a rate grid, as CSV");
  add_common(curve_cmd, curve_args);
  curve_cmd->add_option("--rates", curve_rates, "grid as lo:hi:step or r1,r2,...")->required();
  curve_cmd->add_option("--output", curve_output, "CSV output path (default stdout)");

  CommonArgs eps_args;
  int eps_uses = 1;
  double eps_rate = 0.0;
  auto* eps_cmd = app.add_subcommand("epsilon-bound", "weak-converse error lower bound");
  add_common(eps_cmd, eps_args);
  eps_cmd->add_option("-n,--uses", eps_uses, "number of channel uses")->required();
  eps_cmd->add_option("--rate", eps_rate, "rate R in bits per channel use")->required();

  CommonArgs sim_args;
  int sim_uses = 1;
  int sim_messages = 4;
  auto* sim_cmd = app.add_subcommand("simulate", "exact superdense coding over a Pauli channel");
  add_common(sim_cmd, sim_args);
  sim_cmd->add_option("-n,--uses", sim_uses, "number of channel uses")->required();
  sim_cmd->add_option("--messages", sim_messages, "submessages per use (1..4)")->required();

  CommonArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "run all verification suites");
  add_common(verify_cmd, verify_args, /*needs_channel=*/false);

  CLI11_PARSE(app, argc, argv);

  if (capacity_cmd->parsed()) {
    const Overrides o = parse_overrides(capacity_args);
    const CPMap n = load_channel(capacity_args);
    const auto report = renyi::channel_info::ea_capacity(n, o.solve);
    print_report_block("capacity", report);
    return 0;
  }

  if (mi_cmd->parsed()) {
    const Overrides o = parse_overrides(mi_args);
    const CPMap n = load_channel(mi_args);
    const renyi::divergences::RenyiOrder order(mi_alpha);
    const auto report = mi_family == "traditional"
                            ? renyi::channel_info::renyi_channel_mi(n, order, o.solve)
                            : renyi::channel_info::sandwiched_channel_mi(n, order, o.solve);
    print_report_block(mi_family == "traditional" ? "renyi_mi" : "sandwiched_mi", report);
    return 0;
  }

  if (cb_cmd->parsed()) {
    parse_overrides(cb_args);
    const CPMap m = load_channel(cb_args);
    const auto report = renyi::channel_info::cb_norm_report(m, cb_alpha);
    std::printf("cb_norm = %.6f\n", report.value);
    std::printf("iterations = %d\n", report.iterations);
    std::printf("residual = %.6e\n", report.residual);
    return 0;
  }

  if (exp_cmd->parsed()) {
    const Overrides o = parse_overrides(exp_args);
    const CPMap n = load_channel(exp_args);
    renyi::converse::ExponentSolver solver(n, o.exponent);
    const auto point = solver.exponent(exp_rate);
    std::printf("E = %.6f bits at R = %.6f\n", point.exponent, point.rate);
    std::printf("alpha_star = %.6f\n", point.alpha_star);
    return 0;
  }

  if (curve_cmd->parsed()) {
    const Overrides o = parse_overrides(curve_args);
    const CPMap n = load_channel(curve_args);
    const std::vector<double> rates = parse_rate_grid(curve_rates);
    renyi::converse::ExponentSolver solver(n, o.exponent);
    std::vector<renyi::converse::ExponentPoint> points(rates.size());
    renyi::par::parallel_for(static_cast<int>(rates.size()), renyi::par::thread_cap(),
                             [&](int i) {
                               points[static_cast<size_t>(i)] =
                                   solver.exponent(rates[static_cast<size_t>(i)]);
                             });
    std::ostringstream csv;
    csv << "R,E,alpha_star\n";
    char line[160];
    for (const auto& p : points) {
      if (!std::isfinite(p.rate) || !std::isfinite(p.exponent) || !std::isfinite(p.alpha_star)) {
        throw std::runtime_error("curve: non-finite value reached the CSV writer");
      }
      std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g\n", p.rate, p.exponent, p.alpha_star);
      csv << line;
    }
    if (curve_output.empty()) {
      std::fputs(csv.str().c_str(), stdout);
    } else {
      std::ofstream out(curve_output);
      if (!out) {
        throw std::invalid_argument("curve: cannot open output path \"" + curve_output + "\"");
      }
      out << csv.str();
    }
    return 0;
  }

  if (eps_cmd->parsed()) {
    const Overrides o = parse_overrides(eps_args);
    const CPMap n = load_channel(eps_args);
    if (eps_uses < 1) throw std::invalid_argument("field \"uses\" must be a positive integer");
    renyi::converse::ExponentSolver solver(n, o.exponent);
    const double eps = solver.weak_converse_epsilon(eps_uses, eps_rate);
    std::printf("epsilon_min = %.6f\n", eps);
    std::printf("capacity = %.6f bits\n", solver.capacity());
    return 0;
  }

  if (sim_cmd->parsed()) {
    const Overrides o = parse_overrides(sim_args);
    const CPMap n = load_channel(sim_args);
    renyi::converse::ExponentSolver solver(n, o.exponent);
    const auto sim = renyi::converse::simulate_superdense(solver, sim_uses, sim_messages);
    std::printf("uses = %d, messages = %lld, rate = %.6f bits/use\n", sim.uses,
                static_cast<long long>(sim.message_count), sim.rate);
    std::printf("p_succ = %.6f\n", sim.p_succ);
    std::printf("bound = %.6f\n", sim.bound);
    return 0;
  }

  if (verify_cmd->parsed()) {
    parse_overrides(verify_args);
    const auto report = renyi::verify::run_all(verify_args.seed, renyi::par::thread_cap());
    std::fputs(renyi::verify::format_report(report, verify_args.seed).c_str(), stdout);
    return report.all_passed ? 0 : 3;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
}
