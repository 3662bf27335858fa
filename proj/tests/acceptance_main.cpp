// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one line per criterion, every tolerance pinned in code.
// Prints PASS/FAIL per criterion and exits with the number of failures.
// argv[1] is the path to the command-line binary (used by the determinism
// criterion).

#include "renyi/channel_info.hpp"
#include "renyi/channels.hpp"
#include "renyi/converse.hpp"
#include "renyi/divergences.hpp"
#include "renyi/linalg.hpp"
#include "renyi/random.hpp"

#include "oracles.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace renyi;
using channels::BipartiteState;
using channels::CPMap;
using channels::DensityOperator;
using divergences::RenyiOrder;
using linalg::Matrix;

namespace {

int g_failures = 0;

void report(int index, const char* name, bool passed, const std::string& detail,
            double seconds) {
  std::printf("[%2d] %s  %-28s %s  [%.1fs]\n", index, passed ? "PASS" : "FAIL", name,
              detail.c_str(), seconds);
  std::fflush(stdout);
  if (!passed) ++g_failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), pattern, a, b);
  return std::string(buf);
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

std::vector<std::pair<std::string, CPMap>> qubit_catalog() {
  return {
      {"identity", channels::identity_channel(2)},
      {"depolarizing(0.25)", channels::depolarizing(0.25, 2)},
      {"depolarizing(1.0)", channels::depolarizing(1.0, 2)},
      {"dephasing(0.5)", channels::dephasing(0.5)},
      {"dephasing(1.0)", channels::dephasing(1.0)},
      {"amplitude_damping(0.3)", channels::amplitude_damping(0.3)},
      {"amplitude_damping(0.7)", channels::amplitude_damping(0.7)},
  };
}

// 1. Sibson identity residual over 100 states x 10 sigma x alpha {1.3,2,3}.
void criterion_sibson() {
  Timer timer;
  const double tol = 1e-8;
  rng::Sampler sampler(7);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const BipartiteState state = sampler.bipartite(2, 2);
    const Matrix marginal = state.reduced_a();
    for (double alpha : {1.3, 2.0, 3.0}) {
      const RenyiOrder order(alpha);
      const DensityOperator star = divergences::sibson_sigma_star(state, order);
      const DensityOperator prod_star(linalg::kron(marginal, star.matrix()));
      const double at_star =
          divergences::traditional_renyi(state.state(), prod_star, order).value();
      for (int k = 0; k < 10; ++k) {
        const DensityOperator sigma = sampler.density(2);
        const DensityOperator prod(linalg::kron(marginal, sigma.matrix()));
        const double lhs = divergences::traditional_renyi(state.state(), prod, order).value();
        const double rhs =
            divergences::traditional_renyi(star, sigma, order).value() + at_star;
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
  }
  report(1, "sibson-identity", worst < tol, fmt("max residual %.2e (tol 1e-8)", worst),
         timer.seconds());
}

// 2. Closed-form Renyi MI matches a brute-force minimization over sigma_B.
void criterion_closed_form() {
  Timer timer;
  const double tol = 1e-6;
  rng::Sampler sampler(11);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const BipartiteState state = sampler.bipartite(2, 2);
    const Matrix marginal = state.reduced_a();
    for (double alpha : {1.5, 2.0}) {
      const double closed = divergences::renyi_mi_explicit(state, RenyiOrder(alpha));
      const double brute = oracles::brute_force_min_qubit([&](const Matrix& sigma) {
        return divergences::detail::traditional_raw(state.matrix(),
                                                    linalg::kron(marginal, sigma), alpha);
      });
      worst = std::max(worst, std::abs(closed - brute));
    }
  }
  report(2, "sibson-closed-form", worst < tol, fmt("max |closed - brute| %.2e (tol 1e-6)", worst),
         timer.seconds());
}

// 3. Minimax exchange gap for every catalog qubit channel at alpha {1.5, 2}.
void criterion_minimax() {
  Timer timer;
  const double tol = 1e-6;
  double worst = 0.0;
  channel_info::SolveOptions opts;
  opts.restarts = 2;
  for (const auto& [name, channel] : qubit_catalog()) {
    for (double alpha : {1.5, 2.0}) {
      worst = std::max(worst, channel_info::minimax_gap(channel, RenyiOrder(alpha), opts));
    }
  }
  report(3, "minimax-exchange", worst < tol, fmt("max gap %.2e (tol 1e-6)", worst),
         timer.seconds());
}

// 4. Additivity over 10 seeded random qubit channel pairs at alpha = 2.
void criterion_additivity() {
  Timer timer;
  const double tol = 1e-4;
  rng::Sampler sampler(13);
  const RenyiOrder two(2.0);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const CPMap n1 = sampler.channel(2, 2, 2);
    const CPMap n2 = sampler.channel(2, 2, 2);
    channel_info::SolveOptions opts;
    opts.seed = 17 + static_cast<std::uint64_t>(i);
    const double v1 = channel_info::sandwiched_channel_mi(n1, two, opts).bits;
    const double v2 = channel_info::sandwiched_channel_mi(n2, two, opts).bits;
    channel_info::SolveOptions tensor_opts;
    tensor_opts.seed = opts.seed;
    tensor_opts.restarts = 2;
    const double v12 =
        channel_info::sandwiched_channel_mi(channels::tensor(n1, n2), two, tensor_opts).bits;
    worst = std::max(worst, std::abs(v12 - v1 - v2));
  }
  report(4, "mi-additivity", worst < tol, fmt("max additivity defect %.2e (tol 1e-4)", worst),
         timer.seconds());
}

// 5. CB-norm multiplicativity on 20 random CP map pairs plus exact anchors.
void criterion_cb_multiplicativity() {
  Timer timer;
  rng::Sampler sampler(19);
  double worst_rel = 0.0;
  for (int i = 0; i < 20; ++i) {
    const CPMap m1 = sampler.cp_map(2, 2, 2);
    const CPMap m2 = sampler.cp_map(2, 2, 2);
    const CPMap m12 = channels::tensor(m1, m2);
    for (double alpha : {1.5, 2.0, 3.0}) {
      const double v1 = channel_info::cb_norm(m1, alpha);
      const double v2 = channel_info::cb_norm(m2, alpha);
      const double v12 = channel_info::cb_norm(m12, alpha);
      worst_rel = std::max(worst_rel, std::abs(v12 - v1 * v2) / (v1 * v2));
    }
  }
  const double id_err =
      std::abs(channel_info::cb_norm(channels::identity_channel(2), 2.0) - std::sqrt(2.0));
  const double dep_err =
      std::abs(channel_info::cb_norm(channels::depolarizing(1.0, 2), 2.0) - std::exp2(-0.5));
  const bool passed = worst_rel < 1e-5 && id_err < 1e-8 && dep_err < 1e-8;
  report(5, "cb-multiplicativity", passed,
         fmt("max rel defect %.2e (tol 1e-5), anchors %.1e (tol 1e-8)", worst_rel,
             std::max(id_err, dep_err)),
         timer.seconds());
}

// 6. Lieb-Thirring, sandwiched <= traditional, and data processing.
void criterion_inequalities() {
  Timer timer;
  rng::Sampler sampler(23);
  double worst_lt = 0.0;
  for (int i = 0; i < 500; ++i) {
    const Matrix b = sampler.psd(3);
    const Matrix c = sampler.ginibre(3, 3);
    const double alpha = 1.0 + 0.5 * (i % 5);
    const Matrix cbc = c * b * c.adjoint();
    const double lhs = linalg::fractional_power_psd(cbc, alpha).trace().real();
    const double rhs = (linalg::fractional_power_psd((c.adjoint() * c).eval(), alpha) *
                        linalg::fractional_power_psd(b, alpha))
                           .trace()
                           .real();
    worst_lt = std::max(worst_lt, (lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }
  double worst_order = 0.0;
  for (int i = 0; i < 500; ++i) {
    const DensityOperator rho = sampler.density(3);
    const DensityOperator sigma = sampler.density(3);
    const double alpha = 1.2 + 0.45 * (i % 7);
    const RenyiOrder order(alpha);
    const double sand = divergences::sandwiched_renyi(rho, sigma, order).value();
    const double trad = divergences::traditional_renyi(rho, sigma, order).value();
    worst_order = std::max(worst_order, sand - trad);
  }
  double worst_dp = 0.0;
  const double alphas[] = {1.2, 1.5, 2.0, 3.0};
  for (int i = 0; i < 200; ++i) {
    const CPMap channel = sampler.channel(2, 2, 2);
    const DensityOperator rho = sampler.density(2);
    const DensityOperator sigma = sampler.density(2);
    const RenyiOrder order(alphas[i % 4]);
    const double before = divergences::sandwiched_renyi(rho, sigma, order).value();
    const double after =
        divergences::sandwiched_renyi(channel.apply(rho), channel.apply(sigma), order).value();
    worst_dp = std::max(worst_dp, after - before);
  }
  const bool passed = worst_lt <= 1e-10 && worst_order <= 1e-10 && worst_dp <= 1e-8;
  report(6, "inequality-suite", passed,
         fmt("LT %.1e, ordering %.1e (tol 1e-10), ", worst_lt, worst_order) +
             fmt("data processing %.1e (tol 1e-8)", worst_dp),
         timer.seconds());
}

// 7. alpha -> 1 limits: channel MI to capacity; MI derivative to I(A;B).
void criterion_limits() {
  Timer timer;
  double worst_channel = 0.0;
  for (const auto& [name, channel] : qubit_catalog()) {
    const double cap = channel_info::ea_capacity(channel).bits;
    const double near_one = channel_info::sandwiched_mi_value(channel, 1.001, 1, 0);
    worst_channel = std::max(worst_channel, std::abs(near_one - cap));
  }
  rng::Sampler sampler(29);
  double worst_state = 0.0;
  const double h = 1e-4;
  for (int i = 0; i < 50; ++i) {
    const BipartiteState state = sampler.bipartite(2, 2);
    const auto f = [&](double alpha) {
      return (alpha - 1.0) / alpha * divergences::renyi_mi_explicit(state, RenyiOrder(alpha));
    };
    const double derivative = (f(1.0 + 1.5 * h) - f(1.0 + 0.5 * h)) / h;
    worst_state =
        std::max(worst_state, std::abs(derivative - divergences::mutual_information(state)));
  }
  const bool passed = worst_channel < 1e-2 && worst_state < 1e-3;
  report(7, "alpha-limits", passed,
         fmt("channel gap %.2e (tol 1e-2), derivative gap %.2e (tol 1e-3)", worst_channel,
             worst_state),
         timer.seconds());
}

// 8. Strong-converse exponent positivity/zero around capacity plus anchors.
void criterion_strong_converse() {
  Timer timer;
  bool passed = true;
  std::string note;
  const std::vector<std::pair<std::string, CPMap>> channels_under_test = {
      {"identity", channels::identity_channel(2)},
      {"depolarizing(0.2)", channels::depolarizing(0.2, 2)},
      {"dephasing(0.5)", channels::dephasing(0.5)},
      {"amplitude_damping(0.3)", channels::amplitude_damping(0.3)},
  };
  for (const auto& [name, channel] : channels_under_test) {
    converse::ExponentSolver solver(channel);
    const double cap = solver.capacity();
    const double above = solver.exponent(cap + 0.1).exponent;
    const double below = solver.exponent(std::max(cap - 0.1, 0.0)).exponent;
    if (!(above > 0.0) || below != 0.0) passed = false;
  }
  converse::ExponentSolver identity(channels::identity_channel(2));
  const double e3 = identity.exponent(3.0).exponent;
  if (std::abs(e3 - 1.0) > 1e-3) passed = false;
  double worst_mi = 0.0;
  for (double alpha : {1.5, 2.0, 3.0}) {
    const double mi =
        channel_info::sandwiched_channel_mi(channels::identity_channel(2), RenyiOrder(alpha))
            .bits;
    worst_mi = std::max(worst_mi, std::abs(mi - 2.0));
  }
  if (worst_mi > 1e-6) passed = false;
  report(8, "strong-converse", passed,
         fmt("E(3)=%.6f (1 +- 1e-3), max |MI(id)-2| %.1e (tol 1e-6)", e3, worst_mi),
         timer.seconds());
}

// 9. Superdense coding never exceeds the bound over the (p, n) sweep at R=2.
void criterion_superdense() {
  Timer timer;
  double worst = -1.0;
  for (int pi = 1; pi <= 10; ++pi) {
    const double p = 0.05 * pi;
    converse::ExponentSolver solver(channels::depolarizing(p, 2));
    for (int n = 1; n <= 10; ++n) {
      const auto sim = converse::simulate_superdense(solver, n, 4);
      worst = std::max(worst, sim.p_succ - sim.bound);
    }
  }
  report(9, "superdense-bound", worst <= 1e-12, fmt("max p_succ - bound %.2e (tol 1e-12)", worst),
         timer.seconds());
}

// 10. Byte-identical verification reports across two seeded runs.
void criterion_determinism(const std::string& cli_path) {
  Timer timer;
  const auto capture = [&]() {
    const std::string command = "'" + cli_path + "' verify --seed 7 2>&1";
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return std::pair<int, std::string>{-1, ""};
    std::array<char, 4096> buffer;
    size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
      output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    return std::pair<int, std::string>{WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
  };
  const auto first = capture();
  const auto second = capture();
  const bool passed =
      first.first == 0 && second.first == 0 && !first.second.empty() &&
      first.second == second.second;
  char codes[64];
  std::snprintf(codes, sizeof(codes), "exit %d/%d, ", first.first, second.first);
  report(10, "verify-determinism", passed,
         std::string(codes) +
             (first.second == second.second ? "byte-identical reports" : "REPORTS DIFFER"),
         timer.seconds());
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  std::printf("acceptance suite\n");
  criterion_sibson();
  criterion_closed_form();
  criterion_minimax();
  criterion_additivity();
  criterion_cb_multiplicativity();
  criterion_inequalities();
  criterion_limits();
  criterion_strong_converse();
  criterion_superdense();
  if (cli.empty()) {
    report(10, "verify-determinism", false, "no CLI path given on the command line", 0.0);
  } else {
    criterion_determinism(cli);
  }
  std::printf("%d of 10 criteria passed\n", 10 - g_failures);
  return g_failures;
}
