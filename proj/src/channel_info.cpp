// SPDX-License-Identifier: Apache-2.0

#include "renyi/channel_info.hpp"

#include "renyi/optim.hpp"
#include "renyi/random.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace renyi::channel_info {

using linalg::eig_hermitian;
using linalg::SpectralDecomposition;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_trace_preserving(const CPMap& n, const char* what) {
  if (!n.trace_preserving()) {
    std::ostringstream os;
    os << what << ": channel must be trace preserving";
    throw std::invalid_argument(os.str());
  }
}

double require_alpha_above_one(RenyiOrder order, const char* what) {
  if (!(order.alpha > 1.0)) {
    std::ostringstream os;
    os << what << ": requires alpha > 1, got " << order.alpha;
    throw std::domain_error(os.str());
  }
  return order.alpha;
}

// ---- sigma parametrization: sigma = G^dag G / Tr over the real entries of G

Matrix sigma_from_params(const Eigen::VectorXd& x, Index dim) {
  Matrix g(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) {
      const Index base = 2 * (i * dim + j);
      g(i, j) = linalg::Complex(x[base], x[base + 1]);
    }
  }
  Matrix s = g.adjoint() * g;
  const double tr = s.trace().real();
  if (!(tr > 1e-300)) return Matrix::Zero(dim, dim);
  s /= tr;
  return 0.5 * (s + s.adjoint());
}

Eigen::VectorXd params_from_sigma(const Matrix& sigma) {
  const Index dim = sigma.rows();
  const Matrix g = linalg::detail::power_psd_clipped(sigma, 0.5);
  Eigen::VectorXd x(2 * dim * dim);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) {
      const Index base = 2 * (i * dim + j);
      x[base] = g(i, j).real();
      x[base + 1] = g(i, j).imag();
    }
  }
  return x;
}

// ---- cached objective pieces ------------------------------------------

/// sigma block with rho held fixed. The minimizing sigma always lives on
/// the support of the output marginal omega_B (mass elsewhere only costs
/// normalization), so the minimization runs over r-dimensional densities
/// eta on that subspace: sigma = B eta B^dag with B an isometry onto
/// supp(omega_B). On the subspace the optimum is interior and the support
/// cutoff never bites.
struct SigmaObjective {
  Index da = 0, db = 0;
  Index r = 0;        // dim supp(omega_B)
  double alpha = 0.0;
  Matrix basis;       // db x r
  Matrix gamma_proj;  // (I (x) B)^dag Gamma (I (x) B)
  Matrix w_rho;       // rho^{1/(2 alpha)}
  Matrix omega_b;     // full output marginal, used for seeding

  double eval_eta(const Matrix& eta) const {
    if (eta.size() == 0) return kInf;
    const Matrix w_eta = linalg::detail::power_psd_clipped(eta, (1.0 - alpha) / (2.0 * alpha));
    const Matrix w = linalg::kron(w_rho, w_eta);
    const Matrix x = w * gamma_proj * w;
    return linalg::detail::log2_trace_power(x, alpha) / (alpha - 1.0);
  }

  Matrix sigma_from_eta(const Matrix& eta) const {
    const Matrix s = basis * eta * basis.adjoint();
    return 0.5 * (s + s.adjoint());
  }

  /// Compression of a db-dimensional sigma onto the subspace, renormalized;
  /// falls back to the compressed marginal for hints with no usable mass.
  Matrix eta_from_sigma(const Matrix& sigma) const {
    Matrix eta = basis.adjoint() * sigma * basis;
    eta = 0.5 * (eta + eta.adjoint());
    const double tr = eta.trace().real();
    if (!(tr > 1e-8)) {
      eta = basis.adjoint() * omega_b * basis;
      eta = 0.5 * (eta + eta.adjoint());
      return Matrix(eta / eta.trace().real());
    }
    return Matrix(eta / tr);
  }
};

SigmaObjective make_sigma_objective(const Matrix& gamma, Index da, Index db, double alpha,
                                    const Matrix& rho) {
  SigmaObjective obj;
  obj.da = da;
  obj.db = db;
  obj.alpha = alpha;
  const SpectralDecomposition rho_eig = eig_hermitian(rho);
  obj.w_rho = linalg::detail::power_from_eig(rho_eig, 1.0 / (2.0 * alpha));
  const Matrix rho_half = linalg::detail::power_from_eig(rho_eig, 0.5);
  const Matrix lift = linalg::kron(rho_half, Matrix::Identity(db, db));
  obj.omega_b = linalg::partial_trace_a(lift * gamma * lift, da, db);

  const SpectralDecomposition ob_eig = eig_hermitian(obj.omega_b);
  const double cutoff = linalg::support_cutoff(ob_eig.eigenvalues);
  Index r = 0;
  for (Index i = 0; i < ob_eig.eigenvalues.size(); ++i) {
    if (ob_eig.eigenvalues[i] > cutoff) ++r;
  }
  obj.r = std::max<Index>(r, 1);
  obj.basis = ob_eig.eigenvectors.rightCols(obj.r);  // ascending order
  const Matrix embed = linalg::kron(Matrix::Identity(da, da), obj.basis);
  obj.gamma_proj = embed.adjoint() * gamma * embed;
  return obj;
}

/// rho block with sigma held fixed: caches sigma^{(1-a)/(2a)} and sigma's
/// kernel projector for the leak guard (usually empty).
struct RhoObjective {
  const Matrix* gamma;
  Index da, db;
  double alpha;
  Matrix w_sigma;
  Matrix sigma_kernel;  // zero-size when sigma has full support
  bool check_leak = false;

  double eval(const Matrix& rho) const {
    const SpectralDecomposition rho_eig = eig_hermitian(rho);
    if (rho_eig.eigenvalues.minCoeff() < -1e-4) return -kInf;
    const Matrix w_rho = linalg::detail::power_from_eig(rho_eig, 1.0 / (2.0 * alpha));
    if (check_leak) {
      const Matrix rho_half = linalg::detail::power_from_eig(rho_eig, 0.5);
      const Matrix lift = linalg::kron(rho_half, Matrix::Identity(db, db));
      const Matrix omega_b = linalg::partial_trace_a(lift * (*gamma) * lift, da, db);
      const double leak = (sigma_kernel * omega_b).trace().real();
      if (leak > divergences::kSupportLeakTol) return -kInf;
    }
    const Matrix w = linalg::kron(w_rho, w_sigma);
    const Matrix x = w * (*gamma) * w;
    return linalg::detail::log2_trace_power(x, alpha) / (alpha - 1.0);
  }
};

RhoObjective make_rho_objective(const Matrix& gamma, Index da, Index db, double alpha,
                                const Matrix& sigma) {
  RhoObjective obj;
  obj.gamma = &gamma;
  obj.da = da;
  obj.db = db;
  obj.alpha = alpha;
  const SpectralDecomposition sig_eig = eig_hermitian(sigma);
  obj.w_sigma = linalg::detail::power_from_eig(sig_eig, (1.0 - alpha) / (2.0 * alpha));
  obj.sigma_kernel = linalg::detail::kernel_projector(sig_eig);
  obj.check_leak = linalg::max_abs(obj.sigma_kernel) > 0.5;
  return obj;
}

struct AlternatingRun {
  double value = 0.0;
  Matrix rho;
  Matrix sigma;
  int rounds = 0;
  double residual = 0.0;
};

struct SigmaSolve {
  double value = 0.0;
  Matrix sigma;  // db-dimensional minimizer
};

/// Exact inner minimization at fixed rho, over densities on the support of
/// the output marginal. Warm hints are compressed onto that subspace and
/// race a fresh blend of the marginal, so a stale hint can never pin the
/// solve.
SigmaSolve solve_sigma(const Matrix& gamma, Index da, Index db, double alpha, const Matrix& rho,
                       const Matrix& sigma_hint, int max_iterations, bool race_fresh) {
  const SigmaObjective sobj = make_sigma_objective(gamma, da, db, alpha, rho);
  const auto fn = [&](const Eigen::VectorXd& x) {
    return sobj.eval_eta(sigma_from_params(x, sobj.r));
  };
  optim::BfgsOptions opts;
  opts.max_iterations = max_iterations;

  const Matrix eta_hint = sobj.eta_from_sigma(sigma_hint);
  optim::BfgsResult best = optim::minimize_bfgs(fn, params_from_sigma(eta_hint), opts);
  if (race_fresh) {
    Matrix eta_fresh = sobj.basis.adjoint() * sobj.omega_b * sobj.basis;
    eta_fresh = 0.5 * (eta_fresh + eta_fresh.adjoint());
    eta_fresh /= eta_fresh.trace().real();
    eta_fresh = 0.95 * eta_fresh +
                0.05 * Matrix::Identity(sobj.r, sobj.r) / static_cast<double>(sobj.r);
    const optim::BfgsResult fresh = optim::minimize_bfgs(fn, params_from_sigma(eta_fresh), opts);
    if (!std::isfinite(best.value) || fresh.value < best.value) best = fresh;
  }
  const Matrix eta = optim::project_to_density(sigma_from_params(best.x, sobj.r));
  return {best.value, sobj.sigma_from_eta(eta)};
}

/// Max-min alternation. The sigma block is minimized exactly (warm-started
/// quasi-Newton); the rho block takes one projected gradient step per round
/// along the Danskin gradient of the value function g(rho) = min_sigma f,
/// accepted only when g itself improves. Monotone in g, so the concave
/// value function is ascended globally.
AlternatingRun run_alternating(const Matrix& gamma, Index da, Index db, double alpha,
                               const Matrix& rho0, const Matrix& sigma0,
                               const SolveOptions& opts) {
  Matrix rho = optim::project_to_density(rho0);

  SigmaSolve current = solve_sigma(gamma, da, db, alpha, rho, sigma0, 400, true);
  double step = 0.25;
  double residual = kInf;
  int round = 0;
  for (; round < opts.max_rounds; ++round) {
    const RhoObjective robj = make_rho_objective(gamma, da, db, alpha, current.sigma);
    const Matrix grad =
        optim::fd_matrix_gradient([&](const Matrix& h) { return robj.eval(h); }, rho, 1e-6);
    if (linalg::max_abs(grad) == 0.0) {
      residual = 0.0;
      ++round;
      break;
    }

    bool accepted = false;
    Matrix rho_new;
    SigmaSolve trial;
    double move = 0.0;
    for (int ls = 0; ls < 48; ++ls) {
      rho_new = optim::project_to_density(rho + step * grad);
      move = linalg::trace_distance(rho_new, rho);
      if (move < 1e-14) break;
      trial = solve_sigma(gamma, da, db, alpha, rho_new, current.sigma, 120, false);
      if (std::isfinite(trial.value) &&
          trial.value > current.value + 1e-13 * std::max(1.0, std::abs(current.value))) {
        accepted = true;
        break;
      }
      step *= 0.4;
    }
    if (!accepted) {
      // No improving step along the gradient: the mapping has collapsed.
      residual = move;
      ++round;
      break;
    }
    const double sigma_move = linalg::trace_distance(trial.sigma, current.sigma);
    rho = rho_new;
    // Keep the stored value honest with a warm exact refinement.
    current = solve_sigma(gamma, da, db, alpha, rho, trial.sigma, 400, false);
#ifdef RENYI_DEBUG_RUNS
    std::fprintf(stderr, "    round %d: g=%.9f trial=%.9f move=%.2e step=%.2e\n", round,
                 current.value, trial.value, move, step);
#endif
    step = std::min(step * 1.4, 8.0);
    residual = std::max(move, sigma_move);
    if (residual < opts.block_move_tol) {
      ++round;
      break;
    }
  }

  AlternatingRun out;
  out.value = std::max(current.value, 0.0);
  out.rho = rho;
  out.sigma = current.sigma;
  out.rounds = round;
  out.residual = residual;
  return out;
}

std::vector<Matrix> interior_starts(Index dim, int restarts, std::uint64_t seed,
                                    const std::optional<Matrix>& extra) {
  std::vector<Matrix> starts;
  // An explicit initial point takes over as the primary start; otherwise
  // the maximally mixed state leads.
  if (extra.has_value()) starts.push_back(optim::project_to_density(*extra));
  const Matrix mixed = Matrix::Identity(dim, dim) / static_cast<double>(dim);
  starts.push_back(mixed);
  rng::Sampler sampler(seed ^ 0xb5ad4eceda1ce2a9ULL);
  for (int r = 1; r < restarts; ++r) {
    Matrix p = sampler.psd(dim);
    p /= p.trace().real();
    starts.push_back(0.7 * mixed + 0.3 * p);
  }
  return starts;
}

}  // namespace

namespace detail {

Matrix omega_of(const Matrix& gamma, Index /*dim_a*/, Index dim_b, const Matrix& rho) {
  const Matrix rho_half = linalg::detail::power_psd_clipped(rho, 0.5);
  const Matrix lift = linalg::kron(rho_half, Matrix::Identity(dim_b, dim_b));
  return lift * gamma * lift;
}

double sandwiched_objective(const Matrix& gamma, Index dim_a, Index dim_b, double alpha,
                            const Matrix& rho, const Matrix& sigma) {
  const SigmaObjective obj = make_sigma_objective(gamma, dim_a, dim_b, alpha, rho);
  return obj.eval(sigma);
}

}  // namespace detail

// ---- CB norm ------------------------------------------------------------

namespace {

struct CbSolve {
  double norm = 0.0;
  Matrix rho;
  int iterations = 0;
  double residual = 0.0;
};

/// Exact block ascent on the dual form of the norm objective,
///   ||Gamma^{1/2} (rho^{1/a} (x) I) Gamma^{1/2}||_a
///     = max{ Tr[Y^{(a-1)/a} Gamma^{1/2} (rho^{1/a} (x) I) Gamma^{1/2}] :
///            Y >= 0, Tr Y <= 1 },
/// alternating the closed-form maximizers of the two blocks: Y from the
/// normalized alpha-th power of the current operator, rho from the Hoelder
/// equality condition rho ~ T^{a/(a-1)}. Monotone, and exact on boundary
/// maximizers where gradient steps crawl.
CbSolve cb_norm_ascent(const Matrix& gamma_half, Index da, Index db, double alpha, Matrix rho,
                       int max_iterations = 3000) {
  const Matrix eye_b = Matrix::Identity(db, db);
  CbSolve out;
  double prev = -kInf;
  int flat = 0;
  for (out.iterations = 0; out.iterations < max_iterations; ++out.iterations) {
    const Matrix z = gamma_half *
                     linalg::kron(linalg::detail::power_psd_clipped(rho, 1.0 / alpha), eye_b) *
                     gamma_half;
    const SpectralDecomposition z_eig = eig_hermitian(0.5 * (z + z.adjoint()));
    const linalg::RealVector z_clipped = z_eig.eigenvalues.cwiseMax(0.0);
    const double log2_tr = linalg::detail::log2_trace_power(z_clipped, alpha);
    out.norm = std::exp2(log2_tr / alpha);

    // Y^{(a-1)/a} with Y = Z^a / Tr Z^a, assembled from normalized
    // eigenvalue ratios so that huge orders neither overflow nor underflow.
    linalg::RealVector w_eigs(z_eig.eigenvalues.size());
    for (Index i = 0; i < z_eig.eigenvalues.size(); ++i) {
      const double lambda = std::max(z_eig.eigenvalues[i], 0.0);
      const double ratio = lambda / out.norm;  // norm = (Tr Z^a)^{1/a} >= lambda_max
      w_eigs[i] = ratio > 0.0 ? std::pow(ratio, alpha - 1.0) : 0.0;
    }
    const Matrix w = z_eig.eigenvectors * w_eigs.asDiagonal() * z_eig.eigenvectors.adjoint();
    const Matrix t = linalg::partial_trace_b(gamma_half * w * gamma_half, da, db);

    Matrix rho_next = linalg::detail::power_psd_clipped(0.5 * (t + t.adjoint()),
                                                        alpha / (alpha - 1.0));
    const double tr = rho_next.trace().real();
    if (!(tr > 0.0)) break;  // degenerate map: objective is flat
    rho_next /= tr;
    out.residual = linalg::max_abs(rho_next - rho);
    rho = std::move(rho_next);

    const double change = out.norm - prev;
    prev = out.norm;
    if (std::abs(change) < 1e-15 * std::max(1.0, out.norm) && out.residual < 1e-11) {
      if (++flat >= 2) break;
    } else {
      flat = 0;
    }
  }
  out.rho = 0.5 * (rho + rho.adjoint());
  return out;
}

}  // namespace

CbNormReport cb_norm_report(const CPMap& m, double alpha) {
  if (alpha < 1.0) {
    throw std::domain_error("cb_norm: alpha must be >= 1");
  }
  const Index da = m.input_dim();
  const Index db = m.output_dim();
  const Matrix& gamma = m.choi();

  if (alpha == 1.0) {
    // Limiting case: max_rho Tr{rho Tr_B Gamma}, attained on the top
    // eigenvector of the reduced Choi matrix.
    const Matrix reduced = linalg::partial_trace_b(gamma, da, db);
    const SpectralDecomposition eig = eig_hermitian(reduced);
    const Index top = eig.eigenvalues.size() - 1;
    const Matrix proj =
        eig.eigenvectors.col(top) * eig.eigenvectors.col(top).adjoint();
    CbNormReport report{eig.eigenvalues[top], DensityOperator(proj), 0, 0.0};
    return report;
  }

  const Matrix gamma_half = linalg::fractional_power_psd(gamma, 0.5);
  const CbSolve solve = cb_norm_ascent(gamma_half, da, db, alpha,
                                       Matrix::Identity(da, da) / static_cast<double>(da));
  return CbNormReport{solve.norm, DensityOperator(optim::project_to_density(solve.rho)),
                      solve.iterations, solve.residual};
}

double cb_norm(const CPMap& m, double alpha) { return cb_norm_report(m, alpha).value; }

namespace {

/// max_rho D(omega || rho (x) sigma) at fixed sigma, in bits: the CB-norm
/// ascent applied to the sandwich-composed Choi matrix
/// (I (x) sigma^{(1-a)/2a}) Gamma (I (x) sigma^{(1-a)/2a}). +inf when the
/// full output marginal leaks outside the support of sigma. warm_rho is
/// updated with the maximizer.
double max_over_rho_at_sigma(const Matrix& gamma, Index da, Index db, double alpha,
                             const Matrix& sigma, Matrix& warm_rho) {
  const SpectralDecomposition sig_eig = eig_hermitian(sigma);
  const Matrix kernel = linalg::detail::kernel_projector(sig_eig);
  if (linalg::max_abs(kernel) > 0.5) {
    const double leak =
        (kernel * linalg::partial_trace_a(gamma, da, db)).trace().real();
    if (leak > divergences::kSupportLeakTol) return kInf;
  }
  const Matrix lift = linalg::kron(
      Matrix::Identity(da, da),
      linalg::detail::power_from_eig(sig_eig, (1.0 - alpha) / (2.0 * alpha)));
  const Matrix gamma_sigma = lift * gamma * lift;
  const Matrix gamma_half =
      linalg::detail::power_psd_clipped(0.5 * (gamma_sigma + gamma_sigma.adjoint()), 0.5);
  const CbSolve solve = cb_norm_ascent(gamma_half, da, db, alpha, warm_rho);
  warm_rho = solve.rho;
  return alpha / (alpha - 1.0) * std::log2(solve.norm);
}

double max_over_rho_at_sigma(const Matrix& gamma, Index da, Index db, double alpha,
                             const Matrix& sigma, const Matrix* warm_hint) {
  Matrix warm = warm_hint != nullptr
                    ? *warm_hint
                    : Matrix(Matrix::Identity(da, da) / static_cast<double>(da));
  // Blend toward the interior so a boundary hint cannot pin the ascent.
  warm = 0.9 * warm + 0.1 * Matrix::Identity(da, da) / static_cast<double>(da);
  return max_over_rho_at_sigma(gamma, da, db, alpha, sigma, warm);
}

}  // namespace

// ---- sandwiched channel MI -----------------------------------------------

ChannelMIReport sandwiched_channel_mi(const CPMap& n, RenyiOrder order,
                                      const SolveOptions& options) {
  const double alpha = require_alpha_above_one(order, "sandwiched_channel_mi");
  require_trace_preserving(n, "sandwiched_channel_mi");
  const Index da = n.input_dim();
  const Index db = n.output_dim();
  const Matrix& gamma = n.choi();

  const std::vector<Matrix> starts =
      interior_starts(da, options.restarts, options.seed, options.initial_rho);

  std::vector<AlternatingRun> runs;
  Matrix sigma_hint;
  for (size_t s = 0; s < starts.size(); ++s) {
    Matrix sigma0;
    if (s == 0) {
      // The output marginal at the start is the exact minimizer for
      // product-like channels and a good interior seed otherwise.
      Matrix ob = make_sigma_objective(gamma, da, db, alpha, starts[s]).omega_b;
      const double tr = ob.trace().real();
      sigma0 = 0.95 * ob / tr + 0.05 * Matrix::Identity(db, db) / static_cast<double>(db);
    } else {
      // Keep warm hints interior; a converged sigma can be rank deficient.
      sigma0 = 0.99 * sigma_hint +
               0.01 * Matrix::Identity(db, db) / static_cast<double>(db);
    }
    runs.push_back(run_alternating(gamma, da, db, alpha, starts[s], sigma0, options));
    if (s == 0) sigma_hint = runs.front().sigma;
  }

  double lo = kInf, hi = -kInf;
  int iterations = 0;
  bool all_converged = true;
  for (const AlternatingRun& r : runs) {
    lo = std::min(lo, r.value);
    hi = std::max(hi, r.value);
    iterations += r.rounds;
    all_converged = all_converged && r.rounds < options.max_rounds;
  }
  const double spread = hi - lo;
  // The reproducibility contract applies to converged solves; a run that
  // was stopped early by a small round cap only reports its spread.
  if (spread > 1e-6 && all_converged) {
    std::ostringstream os;
    os << "sandwiched_channel_mi: seeded restarts disagree by " << spread
       << " (> 1e-6); solver did not converge reliably";
    throw std::runtime_error(os.str());
  }

  const AlternatingRun& main = runs.front();

  // Min-max certificate: maximize over rho at the converged sigma, through
  // the sandwich-composed Choi matrix.
  const double cert = max_over_rho_at_sigma(gamma, da, db, alpha, main.sigma, &main.rho);

  ChannelMIReport report{main.value,
                         DensityOperator(optim::project_to_density(main.rho)),
                         DensityOperator(main.sigma),
                         iterations,
                         main.residual,
                         spread,
                         std::max(cert, 0.0),
                         std::max(cert, 0.0) - main.value};
  return report;
}

double sandwiched_mi_value(const CPMap& n, double alpha, int restarts, std::uint64_t seed) {
  SolveOptions options;
  options.restarts = restarts;
  options.seed = seed;
  require_trace_preserving(n, "sandwiched_mi_value");
  const Index da = n.input_dim();
  const Index db = n.output_dim();
  const Matrix& gamma = n.choi();
  const std::vector<Matrix> starts = interior_starts(da, restarts, seed, std::nullopt);
  double best = -kInf;
  Matrix sigma_hint;
  for (size_t s = 0; s < starts.size(); ++s) {
    Matrix sigma0;
    if (s == 0) {
      Matrix ob = make_sigma_objective(gamma, da, db, alpha, starts[s]).omega_b;
      sigma0 = 0.95 * ob / ob.trace().real() +
               0.05 * Matrix::Identity(db, db) / static_cast<double>(db);
    } else {
      sigma0 = 0.99 * sigma_hint +
               0.01 * Matrix::Identity(db, db) / static_cast<double>(db);
    }
    const AlternatingRun run = run_alternating(gamma, da, db, alpha, starts[s], sigma0, options);
#ifdef RENYI_DEBUG_RUNS
    std::fprintf(stderr, "  value run %zu: v=%.9f rounds=%d\n", s, run.value, run.rounds);
#endif
    if (s == 0) sigma_hint = run.sigma;
    best = std::max(best, run.value);
  }
  return best;
}

// ---- traditional (Sibson closed form) channel MI --------------------------

namespace {

double renyi_explicit_objective(const Matrix& gamma, Index da, Index db, double alpha,
                                const Matrix& rho) {
  const SpectralDecomposition rho_eig = eig_hermitian(rho);
  if (rho_eig.eigenvalues.minCoeff() < -1e-4) return -kInf;
  const Matrix rho_half = linalg::detail::power_from_eig(rho_eig, 0.5);
  const Matrix lift = linalg::kron(rho_half, Matrix::Identity(db, db));
  const Matrix omega = lift * gamma * lift;
  const Matrix omega_alpha = linalg::detail::power_psd_clipped(omega, alpha);
  // omega_A equals rho for a trace-preserving channel.
  const Matrix s = linalg::kron(linalg::detail::power_from_eig(rho_eig, (1.0 - alpha) / 2.0),
                                Matrix::Identity(db, db));
  const Matrix kernel = linalg::partial_trace_a(s * omega_alpha * s, da, db);
  return alpha / (alpha - 1.0) * linalg::detail::log2_trace_power(kernel, 1.0 / alpha);
}

}  // namespace

ChannelMIReport renyi_channel_mi(const CPMap& n, RenyiOrder order, const SolveOptions& options) {
  const double alpha = require_alpha_above_one(order, "renyi_channel_mi");
  require_trace_preserving(n, "renyi_channel_mi");
  const Index da = n.input_dim();
  const Index db = n.output_dim();
  const Matrix& gamma = n.choi();

  // The closed-form objective carries rho^{(1-alpha)/2}; its maximizer can
  // sit arbitrarily close to a rank-deficient state, where ambient probes
  // cross the support cutoff. The square-root parametrization keeps every
  // probe inside the cone, so the quasi-Newton descent can ride the
  // boundary ridge.
  const auto objective = [&](const Eigen::VectorXd& x) {
    const Matrix rho = sigma_from_params(x, da);
    if (rho.size() == 0 || rho.trace().real() < 0.5) return kInf;
    return -renyi_explicit_objective(gamma, da, db, alpha, rho);
  };
  const std::vector<Matrix> starts =
      interior_starts(da, options.restarts, options.seed, options.initial_rho);

  double lo = kInf, hi = -kInf;
  optim::BfgsResult main;
  int iterations = 0;
  for (size_t s = 0; s < starts.size(); ++s) {
    const optim::BfgsResult res = optim::minimize_bfgs(objective, params_from_sigma(starts[s]));
    iterations += res.iterations;
    lo = std::min(lo, -res.value);
    hi = std::max(hi, -res.value);
    if (s == 0) main = res;
  }
  const double spread = hi - lo;
  if (spread > 1e-6) {
    std::ostringstream os;
    os << "renyi_channel_mi: seeded restarts disagree by " << spread << " (> 1e-6)";
    throw std::runtime_error(os.str());
  }

  const Matrix rho_star = optim::project_to_density(sigma_from_params(main.x, da));
  const Matrix omega = detail::omega_of(gamma, da, db, rho_star);
  const channels::BipartiteState omega_state(
      DensityOperator(0.5 * (omega + omega.adjoint())), da, db);
  ChannelMIReport report{std::max(-main.value, 0.0),
                         DensityOperator(rho_star),
                         divergences::sibson_sigma_star(omega_state, order),
                         iterations,
                         main.grad_norm,
                         spread,
                         std::nullopt,
                         std::nullopt};
  return report;
}

// ---- entanglement-assisted capacity ---------------------------------------

ChannelMIReport ea_capacity(const CPMap& n, const SolveOptions& options) {
  require_trace_preserving(n, "ea_capacity");
  const Index da = n.input_dim();
  const Index db = n.output_dim();
  const Matrix& gamma = n.choi();

  const auto objective = [&](const Matrix& rho) {
    const SpectralDecomposition rho_eig = eig_hermitian(rho);
    if (rho_eig.eigenvalues.minCoeff() < -1e-4) return -kInf;
    const Matrix rho_half = linalg::detail::power_from_eig(rho_eig, 0.5);
    const Matrix lift = linalg::kron(rho_half, Matrix::Identity(db, db));
    const Matrix omega = lift * gamma * lift;
    return linalg::detail::entropy_bits(linalg::partial_trace_b(omega, da, db)) +
           linalg::detail::entropy_bits(linalg::partial_trace_a(omega, da, db)) -
           linalg::detail::entropy_bits(omega);
  };
  const std::vector<Matrix> starts =
      interior_starts(da, options.restarts, options.seed, options.initial_rho);
  optim::AscentOptions ascent;
  ascent.max_iterations = 400;

  double lo = kInf, hi = -kInf;
  optim::AscentResult main;
  int iterations = 0;
  for (size_t s = 0; s < starts.size(); ++s) {
    const optim::AscentResult res = optim::maximize_over_densities(objective, starts[s], ascent);
    iterations += res.iterations;
    lo = std::min(lo, res.value);
    hi = std::max(hi, res.value);
    if (s == 0) main = res;
  }
  const double spread = hi - lo;
  if (spread > 1e-6) {
    std::ostringstream os;
    os << "ea_capacity: seeded restarts disagree by " << spread << " (> 1e-6)";
    throw std::runtime_error(os.str());
  }

  const Matrix rho_star = optim::project_to_density(main.rho);
  const Matrix omega = detail::omega_of(gamma, da, db, rho_star);
  Matrix sigma = linalg::partial_trace_a(omega, da, db);
  sigma /= sigma.trace().real();
  ChannelMIReport report{std::max(main.value, 0.0),
                         DensityOperator(rho_star),
                         DensityOperator(0.5 * (sigma + sigma.adjoint())),
                         iterations,
                         main.last_move,
                         spread,
                         std::nullopt,
                         std::nullopt};
  return report;
}

// ---- minimax gap -----------------------------------------------------------

double minimax_gap(const CPMap& n, RenyiOrder order, const SolveOptions& options) {
  const double alpha = require_alpha_above_one(order, "minimax_gap");
  require_trace_preserving(n, "minimax_gap");
  const Index da = n.input_dim();
  const Index db = n.output_dim();
  const Matrix& gamma = n.choi();

  const double maxmin = sandwiched_channel_mi(n, order, options).bits;

  // Independent min-max: outer convex descent over sigma, inner concave
  // ascent over rho warm-started across outer evaluations.
  Matrix warm_rho = Matrix::Identity(da, da) / static_cast<double>(da);
  const auto outer = [&](const Eigen::VectorXd& x) {
    const Matrix sigma = sigma_from_params(x, db);
    if (sigma.size() == 0 || sigma.trace().real() < 0.5) return kInf;
    return max_over_rho_at_sigma(gamma, da, db, alpha, sigma, warm_rho);
  };
  optim::BfgsOptions outer_opts;
  outer_opts.max_iterations = 200;
  const Eigen::VectorXd sigma0 =
      params_from_sigma(Matrix::Identity(db, db) / static_cast<double>(db));
  const optim::BfgsResult outer_res = optim::minimize_bfgs(outer, sigma0, outer_opts);
  const double minmax = std::max(outer_res.value, 0.0);

  return std::abs(maxmin - minmax);
}

}  // namespace renyi::channel_info
