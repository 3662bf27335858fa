// SPDX-License-Identifier: Apache-2.0

#include "renyi/converse.hpp"

#include "renyi/optim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace renyi::converse {

ExponentSolver::ExponentSolver(CPMap channel, ExponentOptions options)
    : channel_(std::move(channel)), options_(options) {
  if (!channel_.trace_preserving()) {
    throw std::invalid_argument("ExponentSolver: channel must be trace preserving");
  }
  if (!(options_.alpha_cap > 1.0)) {
    throw std::invalid_argument("ExponentSolver: alpha_cap must exceed 1");
  }
}

double ExponentSolver::mi_at(double t) {
  if (!(t > 0.0 && t < 1.0)) {
    throw std::domain_error("ExponentSolver::mi_at: t must lie in (0,1)");
  }
  {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto it = mi_cache_.find(t);
    if (it != mi_cache_.end()) return it->second;
  }
  const double alpha = 1.0 / (1.0 - t);
  const double value =
      channel_info::sandwiched_mi_value(channel_, alpha, options_.mi_restarts, options_.seed);
  std::lock_guard<std::mutex> lock(mutex_);
  return mi_cache_.emplace(t, value).first->second;
}

double ExponentSolver::capacity() {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (capacity_bits_ >= 0.0) return capacity_bits_;
  }
  channel_info::SolveOptions opts;
  opts.seed = options_.seed;
  const double value = channel_info::ea_capacity(channel_, opts).bits;
  std::lock_guard<std::mutex> lock(mutex_);
  capacity_bits_ = value;
  return capacity_bits_;
}

ExponentPoint ExponentSolver::exponent(double rate) {
  if (!(rate >= 0.0) || !std::isfinite(rate)) {
    throw std::invalid_argument("strong_converse_exponent: rate must be a finite nonnegative number");
  }
  const double t_max = 1.0 - 1.0 / options_.alpha_cap;
  const auto phi = [&](double t) { return t * (rate - mi_at(t)); };

  // Coarse pre-scan guards against unimodality violations; golden section
  // then refines the best bracket. A few log-spaced points below the first
  // linear node cover rates just above capacity, where the maximizer sits
  // at small t.
  const int n = options_.prescan_points;
  std::vector<double> grid;
  grid.reserve(static_cast<size_t>(n) + 4);
  for (double tiny : {1e-4, 1e-3, 1e-2}) {
    if (tiny < t_max / n) grid.push_back(tiny);
  }
  for (int i = 1; i <= n; ++i) {
    grid.push_back(t_max * static_cast<double>(i) / static_cast<double>(n));
  }
  size_t best_index = grid.size() - 1;
  double best_phi = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < grid.size(); ++i) {
    const double value = phi(grid[i]);
    if (value > best_phi) {
      best_phi = value;
      best_index = i;
    }
  }
  const double best_t = grid[best_index];
  const double lo = best_index > 0 ? grid[best_index - 1] : grid.front() / 16.0;
  const double hi = best_index + 1 < grid.size() ? grid[best_index + 1] : t_max;
  const optim::GoldenResult golden = optim::golden_section_max(phi, lo, hi,
                                                               options_.golden_iterations);
  double t_star = golden.x;
  double value = golden.value;
  // Endpoint refinement: the supremum may sit on the cap boundary.
  if (best_phi > value) {
    t_star = best_t;
    value = best_phi;
  }

  ExponentPoint point;
  point.rate = rate;
  // Clamp at the solver noise floor so rates at or below capacity report
  // an exact zero.
  if (value <= 1e-9) {
    point.exponent = 0.0;
    point.alpha_star = 1.0;
  } else {
    point.exponent = value;
    point.alpha_star = 1.0 / (1.0 - t_star);
    if (t_star >= t_max * (1.0 - 1e-12)) point.alpha_star = options_.alpha_cap;
  }
  return point;
}

double ExponentSolver::success_prob_bound(int uses, double rate) {
  if (uses < 1) {
    throw std::invalid_argument("success_prob_bound: n must be a positive integer");
  }
  const double e = exponent(rate).exponent;
  return std::exp2(-static_cast<double>(uses) * e);
}

double binary_kl_vs_near_one(double p, double n_times_rate) {
  // delta(p || q) with q = 1 - 2^{-nR}: the (1-p) log2((1-p)/(1-q)) term is
  // expanded so that nR enters exactly without forming 1-q.
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("binary_kl_vs_near_one: p must be a probability");
  }
  const double log2_q = std::log1p(-std::exp2(-n_times_rate)) / M_LN2;
  double d = (1.0 - p) * n_times_rate;
  if (p > 0.0) d += p * (std::log2(p) - log2_q);
  if (p < 1.0) d += (1.0 - p) * std::log2(1.0 - p);
  return d;
}

double ExponentSolver::weak_converse_epsilon(int uses, double rate) {
  if (uses < 1) {
    throw std::invalid_argument("weak_converse_epsilon: n must be a positive integer");
  }
  if (!(rate >= 0.0)) {
    throw std::invalid_argument("weak_converse_epsilon: rate must be nonnegative");
  }
  const double budget = static_cast<double>(uses) * capacity();
  const double nr = static_cast<double>(uses) * rate;
  // delta(. || 1-2^{-nR}) decreases from nR at eps = 0 to 0 at eps = 1-2^{-nR}.
  if (nr <= budget) return 0.0;
  double lo = 0.0;
  double hi = 1.0 - std::exp2(-nr);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (binary_kl_vs_near_one(mid, nr) > budget) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

ExponentPoint strong_converse_exponent(const CPMap& n, double rate) {
  ExponentSolver solver(n);
  return solver.exponent(rate);
}

double success_prob_bound(const CPMap& n, int uses, double rate) {
  ExponentSolver solver(n);
  return solver.success_prob_bound(uses, rate);
}

double weak_converse_epsilon(const CPMap& n, int uses, double rate) {
  ExponentSolver solver(n);
  return solver.weak_converse_epsilon(uses, rate);
}

std::vector<ExponentPoint> exponent_curve(ExponentSolver& solver,
                                          const std::vector<double>& rates) {
  for (size_t i = 0; i + 1 < rates.size(); ++i) {
    if (!(rates[i] < rates[i + 1])) {
      throw std::invalid_argument("exponent_curve: rate grid must be strictly ascending");
    }
  }
  std::vector<ExponentPoint> points(rates.size());
  for (size_t i = 0; i < rates.size(); ++i) {
    points[i] = solver.exponent(rates[i]);
  }
  return points;
}

std::vector<ExponentPoint> exponent_curve(const CPMap& n, const std::vector<double>& rates) {
  ExponentSolver solver(n);
  return exponent_curve(solver, rates);
}

std::array<double, 4> pauli_probabilities(const CPMap& n) {
  if (n.input_dim() != 2 || n.output_dim() != 2 || !n.trace_preserving()) {
    throw std::invalid_argument("pauli_probabilities: expected a trace-preserving qubit channel");
  }
  // Bell vectors (I (x) P)|Gamma>/sqrt(2) for P in {I, X, Y, Z}; the channel
  // is Pauli exactly when its Choi matrix is diagonal in this basis.
  Matrix paulis[4];
  paulis[0] = Matrix::Identity(2, 2);
  paulis[1] = Matrix{{0.0, 1.0}, {1.0, 0.0}};
  paulis[2] = Matrix{{0.0, linalg::Complex(0.0, -1.0)}, {linalg::Complex(0.0, 1.0), 0.0}};
  paulis[3] = Matrix{{1.0, 0.0}, {0.0, -1.0}};
  const Eigen::VectorXcd gamma_vec = channels::gamma_vector(2);
  Eigen::MatrixXcd bell(4, 4);
  for (int p = 0; p < 4; ++p) {
    bell.col(p) = linalg::kron(Matrix::Identity(2, 2), paulis[p]) * gamma_vec / std::sqrt(2.0);
  }
  const Matrix in_bell = bell.adjoint() * n.choi() * bell;
  std::array<double, 4> probs{};
  double off = 0.0;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (r == c) continue;
      off = std::max(off, std::abs(in_bell(r, c)));
    }
    probs[static_cast<size_t>(r)] = in_bell(r, r).real() / 2.0;
  }
  if (off > 1e-10) {
    std::ostringstream os;
    os << "simulate_superdense: channel is not Pauli (Bell-basis off-diagonal mass " << off
       << ")";
    throw std::invalid_argument(os.str());
  }
  return probs;
}

CodeSimResult simulate_superdense(ExponentSolver& solver, int uses, int submessages_per_use) {
  if (uses < 1) {
    throw std::invalid_argument("simulate_superdense: n must be a positive integer");
  }
  if (submessages_per_use < 1 || submessages_per_use > 4) {
    throw std::invalid_argument("simulate_superdense: submessages per use must be 1..4");
  }
  if (static_cast<double>(uses) * std::log2(static_cast<double>(submessages_per_use)) > 62.0) {
    throw std::invalid_argument("simulate_superdense: message count overflows 63 bits");
  }
  const std::array<double, 4> probs = pauli_probabilities(solver.channel());

  // A nonidentity Pauli moves every Bell state to a different Bell state,
  // so the per-use success probability is exactly p_I.
  const double per_use = std::clamp(probs[0], 0.0, 1.0);
  CodeSimResult result;
  result.uses = uses;
  result.message_count = 1;
  for (int i = 0; i < uses; ++i) result.message_count *= submessages_per_use;
  result.rate = std::log2(static_cast<double>(submessages_per_use));
  result.p_succ = std::pow(per_use, uses);
  result.bound = solver.success_prob_bound(uses, result.rate);
  if (result.p_succ > result.bound + 1e-12) {
    std::ostringstream os;
    os << "simulate_superdense: exact success probability " << result.p_succ
       << " exceeds the converse bound " << result.bound;
    throw std::runtime_error(os.str());
  }
  return result;
}

CodeSimResult simulate_superdense(const CPMap& n, int uses, int submessages_per_use) {
  ExponentSolver solver(n);
  return simulate_superdense(solver, uses, submessages_per_use);
}

}  // namespace renyi::converse
