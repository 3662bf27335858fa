// SPDX-License-Identifier: Apache-2.0

#include "renyi/divergences.hpp"

#include "renyi/optim.hpp"
#include "renyi/random.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace renyi::divergences {

using linalg::eig_hermitian;
using linalg::SpectralDecomposition;

RenyiOrder::RenyiOrder(double a) : alpha(a) {
  if (!(a >= 1.0) || !std::isfinite(a)) {
    std::ostringstream os;
    os << "RenyiOrder: alpha = " << a << " must be finite and >= 1";
    throw std::domain_error(os.str());
  }
}

static void require_alpha_above_one(const RenyiOrder& order, const char* what) {
  if (!(order.alpha > 1.0)) {
    std::ostringstream os;
    os << what << ": requires alpha > 1, got " << order.alpha;
    throw std::domain_error(os.str());
  }
}

static void require_same_dim(const DensityOperator& rho, const DensityOperator& sigma,
                             const char* what) {
  if (rho.dim() != sigma.dim()) {
    std::ostringstream os;
    os << what << ": dimension mismatch " << rho.dim() << " vs " << sigma.dim();
    throw std::invalid_argument(os.str());
  }
}

DivergenceValue DivergenceValue::infinite() {
  return DivergenceValue(std::numeric_limits<double>::infinity());
}

DivergenceValue DivergenceValue::bits(double value) {
  if (std::isnan(value)) {
    throw std::logic_error("DivergenceValue: NaN");
  }
  if (value < 0.0) {
    if (value < -1e-9) {
      std::ostringstream os;
      os << "DivergenceValue: negative value " << value;
      throw std::logic_error(os.str());
    }
    value = 0.0;  // round-off at rho == sigma
  }
  return DivergenceValue(value);
}

namespace detail {

double support_leak(const Matrix& rho, const SpectralDecomposition& sigma_eig) {
  const double cutoff = linalg::support_cutoff(sigma_eig.eigenvalues);
  double leak = 0.0;
  for (Index i = 0; i < sigma_eig.eigenvalues.size(); ++i) {
    if (sigma_eig.eigenvalues[i] <= cutoff) {
      const auto v = sigma_eig.eigenvectors.col(i);
      leak += (v.adjoint() * rho * v)(0, 0).real();
    }
  }
  return leak;
}

double sandwiched_raw(const Matrix& rho, const Matrix& sigma, double alpha) {
  const SpectralDecomposition sigma_eig = eig_hermitian(sigma);
  if (support_leak(rho, sigma_eig) > kSupportLeakTol) {
    return std::numeric_limits<double>::infinity();
  }
  const Matrix w = linalg::detail::power_from_eig(sigma_eig, (1.0 - alpha) / (2.0 * alpha));
  const Matrix x = w * rho * w;
  return linalg::detail::log2_trace_power(x, alpha) / (alpha - 1.0);
}

double traditional_raw(const Matrix& rho, const Matrix& sigma, double alpha) {
  const SpectralDecomposition sigma_eig = eig_hermitian(sigma);
  if (support_leak(rho, sigma_eig) > kSupportLeakTol) {
    return std::numeric_limits<double>::infinity();
  }
  const Matrix rho_a = linalg::detail::power_psd_clipped(rho, alpha);
  const Matrix sigma_1a = linalg::detail::power_from_eig(sigma_eig, 1.0 - alpha);
  const double trace = (rho_a * sigma_1a).trace().real();
  if (!(trace > 0.0)) {
    throw std::runtime_error("traditional_raw: nonpositive trace functional");
  }
  return std::log2(trace) / (alpha - 1.0);
}

double relative_entropy_raw(const Matrix& rho, const Matrix& sigma) {
  const SpectralDecomposition sigma_eig = eig_hermitian(sigma);
  if (support_leak(rho, sigma_eig) > kSupportLeakTol) {
    return std::numeric_limits<double>::infinity();
  }
  const SpectralDecomposition rho_eig = eig_hermitian(rho);
  const double rho_cut = linalg::support_cutoff(rho_eig.eigenvalues);
  double tr_rho_log_rho = 0.0;
  for (Index i = 0; i < rho_eig.eigenvalues.size(); ++i) {
    const double lambda = rho_eig.eigenvalues[i];
    if (lambda > rho_cut) tr_rho_log_rho += lambda * std::log2(lambda);
  }
  const double sigma_cut = linalg::support_cutoff(sigma_eig.eigenvalues);
  double tr_rho_log_sigma = 0.0;
  for (Index i = 0; i < sigma_eig.eigenvalues.size(); ++i) {
    const double mu = sigma_eig.eigenvalues[i];
    if (mu > sigma_cut) {
      const auto v = sigma_eig.eigenvectors.col(i);
      tr_rho_log_sigma += std::log2(mu) * (v.adjoint() * rho * v)(0, 0).real();
    }
  }
  return tr_rho_log_rho - tr_rho_log_sigma;
}

}  // namespace detail

DivergenceValue sandwiched_renyi(const DensityOperator& rho, const DensityOperator& sigma,
                                 RenyiOrder order) {
  require_alpha_above_one(order, "sandwiched_renyi");
  require_same_dim(rho, sigma, "sandwiched_renyi");
  const double value = detail::sandwiched_raw(rho.matrix(), sigma.matrix(), order.alpha);
  if (!std::isfinite(value)) return DivergenceValue::infinite();
  const DivergenceValue norm_form = sandwiched_renyi_norm_form(rho, sigma, order);
  if (norm_form.is_infinite() || std::abs(norm_form.value() - value) > 1e-9) {
    std::ostringstream os;
    os << "sandwiched_renyi: trace form " << value << " and norm form "
       << (norm_form.is_infinite() ? std::numeric_limits<double>::infinity() : norm_form.value())
       << " disagree beyond 1e-9";
    throw std::runtime_error(os.str());
  }
  return DivergenceValue::bits(value);
}

DivergenceValue sandwiched_renyi_norm_form(const DensityOperator& rho,
                                           const DensityOperator& sigma, RenyiOrder order) {
  require_alpha_above_one(order, "sandwiched_renyi_norm_form");
  require_same_dim(rho, sigma, "sandwiched_renyi_norm_form");
  const double alpha = order.alpha;
  const SpectralDecomposition sigma_eig = eig_hermitian(sigma.matrix());
  if (detail::support_leak(rho.matrix(), sigma_eig) > kSupportLeakTol) {
    return DivergenceValue::infinite();
  }
  const Matrix w = linalg::detail::power_from_eig(sigma_eig, (1.0 - alpha) / (2.0 * alpha));
  const double norm = linalg::schatten_norm(w * rho.matrix() * w, alpha);
  return DivergenceValue::bits(alpha / (alpha - 1.0) * std::log2(norm));
}

DivergenceValue traditional_renyi(const DensityOperator& rho, const DensityOperator& sigma,
                                  RenyiOrder order) {
  require_alpha_above_one(order, "traditional_renyi");
  require_same_dim(rho, sigma, "traditional_renyi");
  const double value = detail::traditional_raw(rho.matrix(), sigma.matrix(), order.alpha);
  if (!std::isfinite(value)) return DivergenceValue::infinite();
  return DivergenceValue::bits(value);
}

DivergenceValue relative_entropy(const DensityOperator& rho, const DensityOperator& sigma) {
  require_same_dim(rho, sigma, "relative_entropy");
  const double value = detail::relative_entropy_raw(rho.matrix(), sigma.matrix());
  if (!std::isfinite(value)) return DivergenceValue::infinite();
  return DivergenceValue::bits(value);
}

double mutual_information(const BipartiteState& rho_ab) {
  const Matrix product = linalg::kron(rho_ab.reduced_a(), rho_ab.reduced_b());
  const double value = detail::relative_entropy_raw(rho_ab.matrix(), product);
  if (!std::isfinite(value)) {
    // supp(rho_AB) is always inside supp(rho_A (x) rho_B); a leak here is
    // numerical failure, not a support violation.
    throw std::runtime_error("mutual_information: support leak against the marginal product");
  }
  return std::max(value, 0.0);
}

DensityOperator sibson_sigma_star(const BipartiteState& rho_ab, RenyiOrder order) {
  require_alpha_above_one(order, "sibson_sigma_star");
  const Index da = rho_ab.dim_a();
  const Index db = rho_ab.dim_b();
  const Matrix rho_a_half =
      linalg::detail::power_psd_clipped(rho_ab.reduced_a(), (1.0 - order.alpha) / 2.0);
  const Matrix rho_ab_alpha = linalg::detail::power_psd_clipped(rho_ab.matrix(), order.alpha);
  const Matrix sandwich = linalg::kron(rho_a_half, Matrix::Identity(db, db));
  const Matrix kernel = linalg::partial_trace_a(sandwich * rho_ab_alpha * sandwich, da, db);
  Matrix root = linalg::detail::power_psd_clipped(kernel, 1.0 / order.alpha);
  root /= root.trace().real();
  return DensityOperator(0.5 * (root + root.adjoint()));
}

double renyi_mi_explicit(const BipartiteState& rho_ab, RenyiOrder order) {
  require_alpha_above_one(order, "renyi_mi_explicit");
  const double alpha = order.alpha;
  const Index da = rho_ab.dim_a();
  const Index db = rho_ab.dim_b();
  const Matrix rho_a_half =
      linalg::detail::power_psd_clipped(rho_ab.reduced_a(), (1.0 - alpha) / 2.0);
  const Matrix rho_ab_alpha = linalg::detail::power_psd_clipped(rho_ab.matrix(), alpha);
  const Matrix sandwich = linalg::kron(rho_a_half, Matrix::Identity(db, db));
  const Matrix kernel = linalg::partial_trace_a(sandwich * rho_ab_alpha * sandwich, da, db);
  const double value =
      alpha / (alpha - 1.0) * linalg::detail::log2_trace_power(kernel, 1.0 / alpha);
  return std::max(value, 0.0);
}

StateMIResult sandwiched_mi_state(const BipartiteState& rho_ab, RenyiOrder order,
                                  std::uint64_t seed) {
  require_alpha_above_one(order, "sandwiched_mi_state");
  const double alpha = order.alpha;
  const Index db = rho_ab.dim_b();
  const Matrix& rho = rho_ab.matrix();
  const Matrix rho_a = rho_ab.reduced_a();
  const Matrix rho_b = rho_ab.reduced_b();

  // sigma = G^dag G / Tr, parametrized by the 2*db^2 real entries of G.
  const Index n_params = 2 * db * db;
  const auto sigma_of = [db](const Eigen::VectorXd& x) {
    Matrix g(db, db);
    for (Index i = 0; i < db; ++i) {
      for (Index j = 0; j < db; ++j) {
        const Index base = 2 * (i * db + j);
        g(i, j) = linalg::Complex(x[base], x[base + 1]);
      }
    }
    Matrix s = g.adjoint() * g;
    const double tr = s.trace().real();
    if (!(tr > 1e-300)) return Matrix(Matrix::Zero(db, db));
    s /= tr;
    return Matrix(0.5 * (s + s.adjoint()));
  };
  const auto objective = [&](const Eigen::VectorXd& x) {
    const Matrix sigma = sigma_of(x);
    if (sigma.size() == 0 || sigma.trace().real() < 0.5) {
      return std::numeric_limits<double>::infinity();
    }
    return detail::sandwiched_raw(rho, linalg::kron(rho_a, sigma), alpha);
  };

  // Start at rho_B (exact for product states), then seeded interior points.
  const Matrix rho_b_interior =
      0.99 * rho_b + 0.01 * Matrix::Identity(db, db) / static_cast<double>(db);
  std::vector<Eigen::VectorXd> starts;
  {
    const Matrix g0 = linalg::fractional_power_psd(rho_b_interior, 0.5);
    Eigen::VectorXd x0(n_params);
    for (Index i = 0; i < db; ++i) {
      for (Index j = 0; j < db; ++j) {
        const Index base = 2 * (i * db + j);
        x0[base] = g0(i, j).real();
        x0[base + 1] = g0(i, j).imag();
      }
    }
    starts.push_back(x0);
  }
  rng::Sampler sampler(seed * 0x9e3779b97f4a7c15ULL + 0x51ed2701ULL);
  for (int r = 1; r < 5; ++r) {
    Eigen::VectorXd x(n_params);
    for (Index i = 0; i < n_params; ++i) x[i] = sampler.normal();
    starts.push_back(x);
  }

  double best = std::numeric_limits<double>::infinity();
  double worst = -std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_x = starts.front();
  int iterations = 0;
  for (const Eigen::VectorXd& x0 : starts) {
    const optim::BfgsResult run = optim::minimize_bfgs(objective, x0);
    iterations += run.iterations;
    if (run.value < best) {
      best = run.value;
      best_x = run.x;
    }
    worst = std::max(worst, run.value);
  }
  if (!std::isfinite(best)) {
    throw std::runtime_error("sandwiched_mi_state: optimizer failed to find a finite value");
  }

  StateMIResult result{std::max(best, 0.0), DensityOperator(sigma_of(best_x)), iterations,
                       worst - best};
  return result;
}

DivergenceValue binary_divergence(BinaryFamily family, double p, double q) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("binary_divergence: p must be a probability");
  }
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("binary_divergence: q must be a probability");
  }
  const auto inf = DivergenceValue::infinite;
  if (family.kind == BinaryFamily::Kind::KL) {
    if (q == 0.0 && p > 0.0) return inf();
    if (q == 1.0 && p < 1.0) return inf();
    double d = 0.0;
    if (p > 0.0) d += p * std::log2(p / q);
    if (p < 1.0) d += (1.0 - p) * std::log2((1.0 - p) / (1.0 - q));
    return DivergenceValue::bits(d);
  }
  // Both Renyi families coincide with the classical formula on commuting
  // inputs: (1/(alpha-1)) log2 (p^a q^(1-a) + (1-p)^a (1-q)^(1-a)).
  const double alpha = RenyiOrder(family.alpha).alpha;
  if (!(alpha > 1.0)) {
    throw std::domain_error("binary_divergence: Renyi families require alpha > 1");
  }
  if (q == 0.0 && p > 0.0) return inf();
  if (q == 1.0 && p < 1.0) return inf();
  double sum = 0.0;
  if (p > 0.0) sum += std::pow(p, alpha) * std::pow(q, 1.0 - alpha);
  if (p < 1.0) sum += std::pow(1.0 - p, alpha) * std::pow(1.0 - q, 1.0 - alpha);
  return DivergenceValue::bits(std::log2(sum) / (alpha - 1.0));
}

}  // namespace renyi::divergences
