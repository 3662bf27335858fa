// SPDX-License-Identifier: Apache-2.0

#include "renyi/verify.hpp"

#include "renyi/channel_info.hpp"
#include "renyi/channels.hpp"
#include "renyi/converse.hpp"
#include "renyi/divergences.hpp"
#include "renyi/linalg.hpp"
#include "renyi/optim.hpp"
#include "renyi/parallel.hpp"
#include "renyi/random.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

namespace renyi::verify {

namespace {

using channels::CPMap;
using channels::DensityOperator;
using divergences::RenyiOrder;
using linalg::Index;
using linalg::Matrix;

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), pattern, a, b);
  return std::string(buf);
}

/// Tracks the worst deviation seen against one tolerance.
struct Accum {
  double worst = 0.0;
  double tol = 0.0;
  int cases = 0;

  explicit Accum(double tolerance) : tol(tolerance) {}
  void observe(double deviation) {
    worst = std::max(worst, deviation);
    ++cases;
  }
  bool ok() const { return worst <= tol; }
  std::string detail(const char* label) const {
    std::ostringstream os;
    os << label << " " << fmt("%.3e over %.0f cases", worst, static_cast<double>(cases))
       << fmt(" (tol %.0e)", tol);
    return os.str();
  }
};

std::vector<std::pair<std::string, CPMap>> qubit_catalog() {
  std::vector<std::pair<std::string, CPMap>> list;
  list.emplace_back("identity", channels::identity_channel(2));
  for (double p : {0.15, 0.4, 0.7}) {
    list.emplace_back("depolarizing", channels::depolarizing(p, 2));
  }
  for (double p : {0.3, 0.6, 1.0}) {
    list.emplace_back("dephasing", channels::dephasing(p));
  }
  for (double g : {0.2, 0.5, 0.8}) {
    list.emplace_back("amplitude_damping", channels::amplitude_damping(g));
  }
  return list;
}

/// ||Gamma^{1/2} (rho^{1/a} (x) sigma^{(1-a)/a}) Gamma^{1/2}||_alpha.
double lemma_norm_objective(const Matrix& gamma_half, double alpha, const Matrix& rho,
                            const Matrix& sigma) {
  const Matrix inner = linalg::kron(linalg::fractional_power_psd(rho, 1.0 / alpha),
                                    linalg::fractional_power_psd(sigma, (1.0 - alpha) / alpha));
  return linalg::schatten_norm(gamma_half * inner * gamma_half, alpha);
}

// ---- linalg ---------------------------------------------------------------

CheckResult check_dual_variational(std::uint64_t seed) {
  rng::Sampler sampler(seed);
  Accum acc(1e-9);
  for (int i = 0; i < 20; ++i) {
    const Matrix a = sampler.psd(3);
    for (double alpha : {1.5, 2.0, 3.0}) {
      const double norm = linalg::schatten_norm(a, alpha);
      Matrix y = linalg::fractional_power_psd(a, alpha);
      y /= y.trace().real();
      const Matrix yp = linalg::fractional_power_psd(y, (alpha - 1.0) / alpha);
      const double dual = (yp * a).trace().real();
      acc.observe(std::abs(norm - dual));
    }
  }
  return {"linalg/dual-variational-norm", acc.ok(), acc.detail("max |norm - dual|")};
}

CheckResult check_hoelder(std::uint64_t seed) {
  rng::Sampler sampler(seed);
  Accum acc(1e-10);
  for (int i = 0; i < 50; ++i) {
    const Matrix x = sampler.ginibre(3, 3);
    const Matrix y = sampler.ginibre(3, 3);
    for (double alpha : {1.5, 2.0, 4.0}) {
      const double conj = alpha / (alpha - 1.0);
      const double lhs = std::abs((x * y).trace());
      const double rhs = linalg::schatten_norm(x, alpha) * linalg::schatten_norm(y, conj);
      acc.observe(std::max(0.0, lhs - rhs));
    }
  }
  return {"linalg/hoelder-inequality", acc.ok(), acc.detail("max violation")};
}

CheckResult check_power_additivity(std::uint64_t seed) {
  rng::Sampler sampler(seed);
  Accum acc(1e-10);
  for (int i = 0; i < 20; ++i) {
    Matrix a = sampler.psd(4);
    if (i % 2 == 1) {
      // Make it singular: project out the smallest eigenvector.
      const auto eig = linalg::eig_hermitian(a);
      a -= eig.eigenvalues[0] * eig.eigenvectors.col(0) * eig.eigenvectors.col(0).adjoint();
      a = 0.5 * (a + a.adjoint());
    }
    const double t1 = 2.0 * sampler.uniform() - 1.0;
    const double t2 = 2.0 * sampler.uniform() - 1.0;
    const Matrix lhs = linalg::fractional_power_psd(a, t1 + t2);
    const Matrix rhs =
        linalg::fractional_power_psd(a, t1) * linalg::fractional_power_psd(a, t2);
    acc.observe(linalg::max_abs(lhs - rhs));
  }
  return {"linalg/power-additivity", acc.ok(), acc.detail("max |A^(s+t) - A^s A^t|")};
}

CheckResult check_kron_schatten(std::uint64_t seed) {
  rng::Sampler sampler(seed);
  Accum acc(1e-10);
  for (int i = 0; i < 20; ++i) {
    const Matrix a = sampler.ginibre(2, 2);
    const Matrix b = sampler.ginibre(3, 3);
    for (double alpha : {1.0, 1.7, 2.0, 3.0}) {
      const double lhs = linalg::schatten_norm(linalg::kron(a, b), alpha);
      const double rhs = linalg::schatten_norm(a, alpha) * linalg::schatten_norm(b, alpha);
      acc.observe(std::abs(lhs - rhs) / std::max(1.0, rhs));
    }
  }
  return {"linalg/kron-multiplicativity", acc.ok(), acc.detail("max relative gap")};
}

// ---- channels ---------------------------------------------------------------

CheckResult check_choi_positivity(std::uint64_t seed) {
  rng::Sampler sampler(seed);
  Accum acc(1e-10);
  std::vector<CPMap> maps;
  for (auto& [name, m] : qubit_catalog()) maps.push_back(m);
  for (int i = 0; i < 10; ++i) maps.push_back(sampler.channel(2, 2, 2));
  maps.push_back(sampler.channel(3, 2, 2));
  for (const CPMap& m : maps) {
    const auto eig = linalg::eig_hermitian(m.choi());
    acc.observe(std::max(0.0, -eig.eigenvalues.minCoeff()));
    if (m.trace_preserving()) {
      const Matrix reduced = linalg::partial_trace(m.choi(), m.input_dim(), m.output_dim(),
                                                   linalg::Subsystem::B);
      acc.observe(
          linalg::max_abs(reduced - Matrix::Identity(m.input_dim(), m.input_dim())));
    }
  }
  return {"channels/choi-positivity", acc.ok(), acc.detail("max eig/trace defect")};
}

CheckResult check_apply_choi(std::uint64_t seed) {
  rng::Sampler sampler(seed);
  Accum acc(1e-10);
  for (int i = 0; i < 20; ++i) {
    const CPMap m = sampler.channel(2, 2, (i % 3) + 1);
    const Matrix rho = sampler.density(2).matrix();
    const Matrix via_kraus = m.apply(rho);
    const Matrix lifted =
        linalg::kron(rho.transpose(), Matrix::Identity(2, 2)) * m.choi();
    const Matrix via_choi = linalg::partial_trace_a(lifted, 2, 2);
    acc.observe(linalg::max_abs(via_kraus - via_choi));
  }
  return {"channels/apply-choi-consistency", acc.ok(), acc.detail("max entry gap")};
}

CheckResult check_tensor_structure(std::uint64_t seed) {
  rng::Sampler sampler(seed);
  Accum acc(1e-10);
  for (int i = 0; i < 6; ++i) {
    const CPMap m1 = sampler.channel(2, 2, 2);
    const CPMap m2 = sampler.channel(2, 2, 2);
    const CPMap m3 = sampler.channel(2, 2, 1);
    // Choi of the pair equals the permuted Kronecker of the factor Chois.
    const Matrix direct = channels::tensor(m1, m2).choi();
    const Matrix permuted = linalg::permute_systems(
        linalg::kron(m1.choi(), m2.choi()), {2, 2, 2, 2}, {0, 2, 1, 3});
    acc.observe(linalg::max_abs(direct - permuted));
    const Matrix left = channels::tensor(channels::tensor(m1, m2), m3).choi();
    const Matrix right = channels::tensor(m1, channels::tensor(m2, m3)).choi();
    acc.observe(linalg::max_abs(left - right));
  }
  return {"channels/tensor-structure", acc.ok(), acc.detail("max entry gap")};
}

// ---- divergences -------------------------------------------------------------

CheckResult check_data_processing(std::uint64_t seed) {
  rng::Sampler sampler(seed);
  Accum acc(1e-8);
  for (int i = 0; i < 30; ++i) {
    const CPMap lambda = sampler.channel(2, 2, 2);
    const DensityOperator rho = sampler.density(2);
    const DensityOperator sigma = sampler.density(2);
    for (double alpha : {1.2, 1.5, 2.0, 3.0}) {
      const RenyiOrder order(alpha);
      const double before =
          divergences::sandwiched_renyi(rho, sigma, order).value();
      const double after =
          divergences::sandwiched_renyi(lambda.apply(rho), lambda.apply(sigma), order).value();
      acc.observe(std::max(0.0, after - before));
    }
  }
  return {"divergences/data-processing", acc.ok(), acc.detail("max increase")};
}

CheckResult check_lieb_thirring(std::uint64_t seed) {
  rng::Sampler sampler(seed);
  Accum acc(1e-10);
  for (int i = 0; i < 100; ++i) {
    const Matrix b = sampler.psd(3);
    const Matrix c = sampler.ginibre(3, 3);
    for (double alpha : {1.5, 2.0, 3.0}) {
      const Matrix cbc = c * b * c.adjoint();
      const double lhs =
          linalg::fractional_power_psd(cbc, alpha).trace().real();
      const double rhs = (linalg::fractional_power_psd((c.adjoint() * c).eval(), alpha) *
                          linalg::fractional_power_psd(b, alpha))
                             .trace()
                             .real();
      acc.observe(std::max(0.0, (lhs - rhs) / std::max(1.0, std::abs(rhs))));
    }
  }
  // Ordering consequence: sandwiched <= traditional.
  Accum ord(1e-10);
  for (int i = 0; i < 100; ++i) {
    const DensityOperator rho = sampler.density(3);
    const DensityOperator sigma = sampler.density(3);
    for (double alpha : {1.3, 2.0, 4.0}) {
      const RenyiOrder order(alpha);
      const double sand = divergences::sandwiched_renyi(rho, sigma, order).value();
      const double trad = divergences::traditional_renyi(rho, sigma, order).value();
      ord.observe(std::max(0.0, sand - trad));
    }
  }
  const bool ok = acc.ok() && ord.ok();
  return {"divergences/lieb-thirring-ordering", ok,
          acc.detail("max trace violation") + "; " + ord.detail("max order violation")};
}

CheckResult check_alpha_monotone(std::uint64_t seed) {
  rng::Sampler sampler(seed);
  Accum acc(1e-9);
  const double alphas[] = {1.1, 1.5, 2.0, 4.0, 10.0};
  for (int i = 0; i < 20; ++i) {
    const DensityOperator rho = sampler.density(3);
    const DensityOperator sigma = sampler.density(3);
    double prev = -1.0;
    for (double alpha : alphas) {
      const double v = divergences::sandwiched_renyi(rho, sigma, RenyiOrder(alpha)).value();
      if (prev >= 0.0) acc.observe(std::max(0.0, prev - v));
      prev = v;
    }
  }
  return {"divergences/alpha-monotonicity", acc.ok(), acc.detail("max decrease")};
}

CheckResult check_vn_limit(std::uint64_t seed) {
  rng::Sampler sampler(seed);
  Accum acc(1e-3);
  bool decreasing = true;
  for (int i = 0; i < 10; ++i) {
    const DensityOperator rho = sampler.density(3);
    const DensityOperator sigma = sampler.density(3);
    const double kl = divergences::relative_entropy(rho, sigma).value();
    double prev_gap = std::numeric_limits<double>::infinity();
    for (double h : {1e-2, 1e-3, 1e-4}) {
      const double gap =
          std::abs(divergences::sandwiched_renyi(rho, sigma, RenyiOrder(1.0 + h)).value() - kl);
      if (gap > prev_gap + 1e-12) decreasing = false;
      prev_gap = gap;
    }
    acc.observe(prev_gap);
  }
  return {"divergences/von-neumann-limit", acc.ok() && decreasing,
          acc.detail("final gap") + (decreasing ? "; gaps decreasing" : "; NOT decreasing")};
}

CheckResult check_mi_derivative(std::uint64_t seed) {
  rng::Sampler sampler(seed);
  Accum acc(1e-3);
  const double h = 1e-4;
  for (int i = 0; i < 20; ++i) {
    const channels::BipartiteState state = sampler.bipartite(2, 2);
    // F(alpha) = ((alpha-1)/alpha) * explicit MI is the generating function
    // whose derivative at 1 is the mutual information.
    const auto f = [&](double alpha) {
      return (alpha - 1.0) / alpha * divergences::renyi_mi_explicit(state, RenyiOrder(alpha));
    };
    const double derivative = (f(1.0 + 1.5 * h) - f(1.0 + 0.5 * h)) / h;
    acc.observe(std::abs(derivative - divergences::mutual_information(state)));
  }
  return {"divergences/mi-alpha-derivative", acc.ok(), acc.detail("max |dF - I(A;B)|")};
}

CheckResult check_sibson_identity(std::uint64_t seed) {
  rng::Sampler sampler(seed);
  Accum acc(1e-8);
  for (int i = 0; i < 30; ++i) {
    const channels::BipartiteState state = sampler.bipartite(2, 2);
    const DensityOperator rho_a = DensityOperator(state.reduced_a());
    for (double alpha : {1.3, 2.0, 3.0}) {
      const RenyiOrder order(alpha);
      const DensityOperator star = divergences::sibson_sigma_star(state, order);
      const DensityOperator product_star =
          DensityOperator(linalg::kron(rho_a.matrix(), star.matrix()));
      for (int k = 0; k < 5; ++k) {
        const DensityOperator sigma = sampler.density(2);
        const DensityOperator product =
            DensityOperator(linalg::kron(rho_a.matrix(), sigma.matrix()));
        const double lhs =
            divergences::traditional_renyi(state.state(), product, order).value();
        const double rhs =
            divergences::traditional_renyi(star, sigma, order).value() +
            divergences::traditional_renyi(state.state(), product_star, order).value();
        acc.observe(std::abs(lhs - rhs));
      }
    }
  }
  return {"divergences/sibson-identity", acc.ok(), acc.detail("max residual")};
}

CheckResult check_unitary_invariance(std::uint64_t seed) {
  rng::Sampler sampler(seed);
  Accum acc(1e-10);
  for (int i = 0; i < 20; ++i) {
    const DensityOperator rho = sampler.density(3);
    const DensityOperator sigma = sampler.density(3);
    const Matrix u = sampler.unitary(3);
    const DensityOperator rho_u = DensityOperator(u * rho.matrix() * u.adjoint());
    const DensityOperator sigma_u = DensityOperator(u * sigma.matrix() * u.adjoint());
    for (double alpha : {1.5, 2.0}) {
      const RenyiOrder order(alpha);
      acc.observe(std::abs(divergences::sandwiched_renyi(rho, sigma, order).value() -
                           divergences::sandwiched_renyi(rho_u, sigma_u, order).value()));
      acc.observe(std::abs(divergences::traditional_renyi(rho, sigma, order).value() -
                           divergences::traditional_renyi(rho_u, sigma_u, order).value()));
    }
  }
  return {"divergences/unitary-invariance", acc.ok(), acc.detail("max shift")};
}

CheckResult check_binary_values(std::uint64_t) {
  Accum acc(1e-12);
  using divergences::BinaryFamily;
  const double expected = std::log2(4.0 / 3.0);
  acc.observe(std::abs(
      divergences::binary_divergence(BinaryFamily::traditional(2.0), 0.5, 0.25).value() -
      expected));
  acc.observe(std::abs(
      divergences::binary_divergence(BinaryFamily::sandwiched(2.0), 0.5, 0.25).value() -
      expected));
  acc.observe(divergences::binary_divergence(BinaryFamily::kl(), 0.37, 0.37).value());
  // KL at p = 0 against q = 1 - 2^{-nR} equals nR.
  const double nr = 6.0;
  acc.observe(std::abs(
      divergences::binary_divergence(BinaryFamily::kl(), 0.0, 1.0 - std::exp2(-nr)).value() -
      nr));
  const bool inf_ok =
      divergences::binary_divergence(BinaryFamily::kl(), 0.5, 0.0).is_infinite() &&
      divergences::binary_divergence(BinaryFamily::sandwiched(2.0), 0.5, 1.0).is_infinite();
  return {"divergences/binary-values", acc.ok() && inf_ok,
          acc.detail("max deviation") + (inf_ok ? "; support cases infinite" : "; INF CASES WRONG")};
}

// ---- channel_info ------------------------------------------------------------

CheckResult check_minimax_gap(std::uint64_t seed) {
  Accum acc(1e-6);
  channel_info::SolveOptions opts;
  opts.seed = seed;
  opts.restarts = 2;
  const CPMap id2 = channels::identity_channel(2);
  const CPMap dep = channels::depolarizing(0.5, 2);
  for (double alpha : {1.5, 2.0}) {
    acc.observe(channel_info::minimax_gap(id2, RenyiOrder(alpha), opts));
    acc.observe(channel_info::minimax_gap(dep, RenyiOrder(alpha), opts));
  }
  return {"channel-info/minimax-gap", acc.ok(), acc.detail("max gap")};
}

CheckResult check_additivity(std::uint64_t seed) {
  rng::Sampler sampler(seed);
  Accum acc(1e-4);
  const double alphas[] = {1.3, 2.0, 3.0};
  for (int i = 0; i < 3; ++i) {
    const CPMap n1 = sampler.channel(2, 2, 2);
    const CPMap n2 = sampler.channel(2, 2, 2);
    const double alpha = alphas[i];
    const double v1 = channel_info::sandwiched_mi_value(n1, alpha, 2, seed);
    const double v2 = channel_info::sandwiched_mi_value(n2, alpha, 2, seed);
    const double v12 =
        channel_info::sandwiched_mi_value(channels::tensor(n1, n2), alpha, 1, seed);
    acc.observe(std::abs(v12 - v1 - v2));
  }
  return {"channel-info/additivity", acc.ok(), acc.detail("max |I(N1xN2)-I(N1)-I(N2)|")};
}

CheckResult check_cb_multiplicativity(std::uint64_t seed) {
  rng::Sampler sampler(seed);
  Accum acc(1e-5);
  for (int i = 0; i < 4; ++i) {
    const CPMap m1 = sampler.cp_map(2, 2, 2);
    const CPMap m2 = sampler.cp_map(2, 2, 2);
    for (double alpha : {1.5, 2.0}) {
      const double v1 = channel_info::cb_norm(m1, alpha);
      const double v2 = channel_info::cb_norm(m2, alpha);
      const double v12 = channel_info::cb_norm(channels::tensor(m1, m2), alpha);
      acc.observe(std::abs(v12 - v1 * v2) / (v1 * v2));
    }
  }
  Accum anchors(1e-8);
  anchors.observe(
      std::abs(channel_info::cb_norm(channels::identity_channel(2), 2.0) - std::sqrt(2.0)));
  anchors.observe(std::abs(channel_info::cb_norm(channels::depolarizing(1.0, 2), 2.0) -
                           std::exp2(-0.5)));
  const bool ok = acc.ok() && anchors.ok();
  return {"channel-info/cb-multiplicativity", ok,
          acc.detail("max relative gap") + "; " + anchors.detail("anchor error")};
}

CheckResult check_superadditivity(std::uint64_t seed) {
  rng::Sampler sampler(seed);
  Accum acc(1e-6);
  for (int i = 0; i < 2; ++i) {
    const CPMap n1 = sampler.channel(2, 2, 2);
    const CPMap n2 = sampler.channel(2, 2, 2);
    const RenyiOrder order(2.0);
    channel_info::SolveOptions opts;
    opts.seed = seed;
    opts.restarts = 1;
    const auto r1 = channel_info::sandwiched_channel_mi(n1, order, opts);
    const auto r2 = channel_info::sandwiched_channel_mi(n2, order, opts);
    // Early-stopped tensor solve seeded with the product maximizer must
    // already sit at (or above) the sum.
    channel_info::SolveOptions tensor_opts;
    tensor_opts.seed = seed;
    tensor_opts.restarts = 1;
    tensor_opts.max_rounds = 40;
    tensor_opts.initial_rho =
        linalg::kron(r1.maximizer_rho.matrix(), r2.maximizer_rho.matrix());
    const auto r12 =
        channel_info::sandwiched_channel_mi(channels::tensor(n1, n2), order, tensor_opts);
    acc.observe(std::max(0.0, (r1.bits + r2.bits) - r12.bits));
  }
  return {"channel-info/superadditivity-seeded", acc.ok(), acc.detail("max shortfall")};
}

CheckResult check_channel_alpha_monotone(std::uint64_t seed) {
  rng::Sampler sampler(seed);
  Accum acc(1e-7);
  std::vector<CPMap> maps;
  maps.push_back(channels::depolarizing(0.3, 2));
  maps.push_back(sampler.channel(2, 2, 2));
  for (const CPMap& n : maps) {
    double prev = -1.0;
    for (double alpha : {1.1, 1.5, 2.0, 4.0}) {
      const double v = channel_info::sandwiched_mi_value(n, alpha, 1, seed);
      if (prev >= 0.0) acc.observe(std::max(0.0, prev - v));
      prev = v;
    }
  }
  return {"channel-info/alpha-monotonicity", acc.ok(), acc.detail("max decrease")};
}

CheckResult check_capacity_limit(std::uint64_t seed) {
  Accum acc(1e-2);
  channel_info::SolveOptions opts;
  opts.seed = seed;
  opts.restarts = 2;
  std::vector<CPMap> maps;
  maps.push_back(channels::identity_channel(2));
  maps.push_back(channels::depolarizing(0.3, 2));
  maps.push_back(channels::dephasing(0.7));
  maps.push_back(channels::amplitude_damping(0.3));
  for (const CPMap& n : maps) {
    const double cap = channel_info::ea_capacity(n, opts).bits;
    const double near_one = channel_info::sandwiched_mi_value(n, 1.001, 1, seed);
    acc.observe(std::abs(near_one - cap));
  }
  return {"channel-info/capacity-limit", acc.ok(), acc.detail("max |I_1.001 - I|")};
}

CheckResult check_norm_identity(std::uint64_t seed) {
  rng::Sampler sampler(seed);
  Accum acc(1e-9);
  for (int i = 0; i < 15; ++i) {
    const CPMap n = sampler.channel(2, 2, 2);
    const Matrix gamma_half = linalg::fractional_power_psd(n.choi(), 0.5);
    const DensityOperator rho = sampler.density(2);
    const DensityOperator sigma = sampler.density(2);
    for (double alpha : {1.5, 2.0, 3.0}) {
      const Matrix omega = channel_info::detail::omega_of(n.choi(), 2, 2, rho.matrix());
      const DensityOperator omega_state(0.5 * (omega + omega.adjoint()));
      const DensityOperator product(linalg::kron(rho.matrix(), sigma.matrix()));
      const double direct =
          divergences::sandwiched_renyi(omega_state, product, RenyiOrder(alpha)).value();
      const double via_norm =
          alpha / (alpha - 1.0) *
          std::log2(lemma_norm_objective(gamma_half, alpha, rho.matrix(), sigma.matrix()));
      acc.observe(std::abs(direct - via_norm));
    }
  }
  return {"channel-info/norm-identity", acc.ok(), acc.detail("max |divergence - norm form|")};
}

CheckResult check_concavity_convexity(std::uint64_t seed) {
  rng::Sampler sampler(seed);
  Accum acc(1e-9);
  for (int i = 0; i < 15; ++i) {
    const CPMap n = sampler.channel(2, 2, 2);
    const Matrix gamma_half = linalg::fractional_power_psd(n.choi(), 0.5);
    const double alpha = (i % 2 == 0) ? 2.0 : 1.5;
    const double lam = sampler.uniform();
    const Matrix rho0 = sampler.density(2).matrix();
    const Matrix rho1 = sampler.density(2).matrix();
    const Matrix sigma0 = sampler.density(2).matrix();
    const Matrix sigma1 = sampler.density(2).matrix();
    const Matrix rho_mix = lam * rho0 + (1.0 - lam) * rho1;
    const Matrix sigma_mix = lam * sigma0 + (1.0 - lam) * sigma1;
    // Concave in rho at fixed sigma.
    const double mix_rho = lemma_norm_objective(gamma_half, alpha, rho_mix, sigma0);
    const double sum_rho = lam * lemma_norm_objective(gamma_half, alpha, rho0, sigma0) +
                           (1.0 - lam) * lemma_norm_objective(gamma_half, alpha, rho1, sigma0);
    acc.observe(std::max(0.0, sum_rho - mix_rho));
    // Convex in sigma at fixed rho.
    const double mix_sigma = lemma_norm_objective(gamma_half, alpha, rho0, sigma_mix);
    const double sum_sigma =
        lam * lemma_norm_objective(gamma_half, alpha, rho0, sigma0) +
        (1.0 - lam) * lemma_norm_objective(gamma_half, alpha, rho0, sigma1);
    acc.observe(std::max(0.0, mix_sigma - sum_sigma));
  }
  return {"channel-info/concavity-convexity", acc.ok(), acc.detail("max violation")};
}

// ---- converse ---------------------------------------------------------------

CheckResult check_exponent_positivity(std::uint64_t seed) {
  Accum zero_acc(1e-9);
  bool positive_ok = true;
  for (const auto& [name, n] : qubit_catalog()) {
    converse::ExponentOptions eopts;
    eopts.seed = seed;
    converse::ExponentSolver solver(n, eopts);
    const double cap = solver.capacity();
    const auto above = solver.exponent(cap + 0.05);
    if (!(above.exponent > 0.0)) positive_ok = false;
    const double below_rate = std::max(cap - 0.1, 0.0);
    zero_acc.observe(solver.exponent(below_rate).exponent);
  }
  {
    // Just past the positivity threshold the maximizer sits at tiny t.
    converse::ExponentSolver solver(channels::depolarizing(0.4, 2));
    if (!(solver.exponent(solver.capacity() + 2e-3).exponent > 0.0)) positive_ok = false;
  }
  return {"converse/exponent-positivity", positive_ok && zero_acc.ok(),
          std::string(positive_ok ? "E>0 above capacity; " : "E=0 ABOVE capacity; ") +
              zero_acc.detail("max E below capacity")};
}

CheckResult check_exponent_curve_shape(std::uint64_t seed) {
  bool ok = true;
  std::ostringstream note;
  converse::ExponentOptions eopts;
  eopts.seed = seed;
  {
    converse::ExponentSolver solver(channels::identity_channel(2), eopts);
    const std::vector<double> grid{1.0, 1.5, 2.0, 2.5, 3.0};
    const auto curve = converse::exponent_curve(solver, grid);
    for (size_t i = 0; i < curve.size(); ++i) {
      if (grid[i] <= 2.0 && std::abs(curve[i].exponent) > 1e-6) ok = false;
      if (i > 0 && curve[i].exponent < curve[i - 1].exponent - 1e-9) ok = false;
      if (i > 1) {
        const double left = curve[i - 1].exponent - curve[i - 2].exponent;
        const double right = curve[i].exponent - curve[i - 1].exponent;
        if (right < left - 1e-6) ok = false;
      }
    }
    note << fmt("identity E(3)=%.6f; ", curve.back().exponent);
  }
  {
    converse::ExponentSolver solver(channels::depolarizing(0.2, 2), eopts);
    const double cap = solver.capacity();
    const std::vector<double> grid{cap - 0.2, cap - 0.1, cap + 0.1, cap + 0.2};
    const auto curve = converse::exponent_curve(solver, grid);
    if (!(curve[0].exponent == 0.0 && curve[1].exponent == 0.0)) ok = false;
    if (!(curve[2].exponent > 0.0 && curve[3].exponent > curve[2].exponent)) ok = false;
    note << fmt("depolarizing sign change at capacity %.4f", cap);
  }
  return {"converse/exponent-curve-shape", ok, note.str()};
}

CheckResult check_decay_bound(std::uint64_t seed) {
  converse::ExponentOptions eopts;
  eopts.seed = seed;
  converse::ExponentSolver solver(channels::depolarizing(0.3, 2), eopts);
  const double cap = solver.capacity();
  const double rate = cap + 0.05 + 0.05;
  const double c = solver.exponent(rate).exponent;
  bool ok = c > 0.0;
  for (int n = 1; n <= 20; ++n) {
    const double bound = solver.success_prob_bound(n, rate);
    if (bound > std::exp2(-static_cast<double>(n) * c) + 1e-15) ok = false;
  }
  return {"converse/exponential-decay", ok, fmt("exponent at capacity+0.1: %.6f", c)};
}

CheckResult check_superdense_sweep(std::uint64_t seed) {
  Accum acc(1e-12);
  (void)seed;
  for (double p : {0.1, 0.2, 0.3, 0.4, 0.5}) {
    converse::ExponentSolver solver(channels::depolarizing(p, 2));
    for (int n : {1, 3, 5, 8, 10}) {
      const auto sim = converse::simulate_superdense(solver, n, 4);
      acc.observe(std::max(0.0, sim.p_succ - sim.bound));
    }
  }
  return {"converse/superdense-bound", acc.ok(), acc.detail("max bound violation")};
}

CheckResult check_epsilon_monotone(std::uint64_t seed) {
  converse::ExponentOptions eopts;
  eopts.seed = seed;
  converse::ExponentSolver solver(channels::identity_channel(2), eopts);
  bool ok = true;
  double prev = -1.0;
  for (int n : {1, 5, 20}) {
    const double eps = solver.weak_converse_epsilon(n, 3.0);
    if (eps < prev - 1e-12) ok = false;
    prev = eps;
  }
  const double eps_lo = solver.weak_converse_epsilon(4, 2.5);
  const double eps_hi = solver.weak_converse_epsilon(4, 3.0);
  if (eps_hi < eps_lo - 1e-12) ok = false;
  if (solver.weak_converse_epsilon(3, 1.5) != 0.0) ok = false;
  return {"converse/epsilon-monotonicity", ok, fmt("eps(n=20,R=3)=%.6f", prev)};
}

using CheckFn = CheckResult (*)(std::uint64_t);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> checks = {
      {"linalg/dual-variational-norm", &check_dual_variational},
      {"linalg/hoelder-inequality", &check_hoelder},
      {"linalg/power-additivity", &check_power_additivity},
      {"linalg/kron-multiplicativity", &check_kron_schatten},
      {"channels/choi-positivity", &check_choi_positivity},
      {"channels/apply-choi-consistency", &check_apply_choi},
      {"channels/tensor-structure", &check_tensor_structure},
      {"divergences/data-processing", &check_data_processing},
      {"divergences/lieb-thirring-ordering", &check_lieb_thirring},
      {"divergences/alpha-monotonicity", &check_alpha_monotone},
      {"divergences/von-neumann-limit", &check_vn_limit},
      {"divergences/mi-alpha-derivative", &check_mi_derivative},
      {"divergences/sibson-identity", &check_sibson_identity},
      {"divergences/unitary-invariance", &check_unitary_invariance},
      {"divergences/binary-values", &check_binary_values},
      {"channel-info/minimax-gap", &check_minimax_gap},
      {"channel-info/additivity", &check_additivity},
      {"channel-info/cb-multiplicativity", &check_cb_multiplicativity},
      {"channel-info/superadditivity-seeded", &check_superadditivity},
      {"channel-info/alpha-monotonicity", &check_channel_alpha_monotone},
      {"channel-info/capacity-limit", &check_capacity_limit},
      {"channel-info/norm-identity", &check_norm_identity},
      {"channel-info/concavity-convexity", &check_concavity_convexity},
      {"converse/exponent-positivity", &check_exponent_positivity},
      {"converse/exponent-curve-shape", &check_exponent_curve_shape},
      {"converse/exponential-decay", &check_decay_bound},
      {"converse/superdense-bound", &check_superdense_sweep},
      {"converse/epsilon-monotonicity", &check_epsilon_monotone},
  };
  return checks;
}

}  // namespace

std::vector<std::string> check_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

CheckResult run_check(const std::string& name, std::uint64_t seed) {
  const auto& checks = registry();
  for (size_t i = 0; i < checks.size(); ++i) {
    if (checks[i].first == name) {
      return checks[i].second(seed * 1000003ULL + i * 7919ULL + 1ULL);
    }
  }
  throw std::invalid_argument("unknown verification check: " + name);
}

SuiteReport run_all(std::uint64_t seed, int max_threads) {
  const auto& checks = registry();
  SuiteReport report;
  report.results.resize(checks.size());
  par::parallel_for(static_cast<int>(checks.size()), max_threads, [&](int i) {
    report.results[static_cast<size_t>(i)] =
        checks[static_cast<size_t>(i)].second(seed * 1000003ULL + static_cast<std::uint64_t>(i) * 7919ULL + 1ULL);
  });
  report.all_passed = true;
  for (const CheckResult& r : report.results) report.all_passed = report.all_passed && r.passed;
  return report;
}

std::string format_report(const SuiteReport& report, std::uint64_t seed) {
  std::ostringstream os;
  os << "verification suite (seed " << seed << ")\n";
  for (const CheckResult& r : report.results) {
    os << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
    for (size_t pad = r.name.size(); pad < 38; ++pad) os << ' ';
    os << ' ' << r.detail << '\n';
  }
  int failed = 0;
  for (const CheckResult& r : report.results) failed += r.passed ? 0 : 1;
  os << (failed == 0 ? "all checks passed" : "FAILURES: " + std::to_string(failed)) << " ("
     << report.results.size() << " checks)\n";
  return os.str();
}

}  // namespace renyi::verify
