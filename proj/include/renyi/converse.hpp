// SPDX-License-Identifier: Apache-2.0
//
// Strong-converse exponents E(R) = sup_{alpha>1} ((alpha-1)/alpha)(R - I_a(N)),
// the induced success-probability bound 2^{-n E(R)}, the weak-converse
// epsilon bound, and an exact superdense-coding simulator for Pauli
// channels that exercises the bound operationally.

#pragma once

#include "renyi/channel_info.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace renyi::converse {

using channels::CPMap;
using linalg::Index;
using linalg::Matrix;

struct ExponentPoint {
  double rate = 0.0;
  double exponent = 0.0;
  /// Maximizing alpha; the cap value when the boundary is active, 1 when
  /// the supremum is clamped to zero.
  double alpha_star = 1.0;
};

struct CodeSimResult {
  int uses = 0;
  std::int64_t message_count = 0;
  double rate = 0.0;
  double p_succ = 0.0;
  double bound = 0.0;
};

struct ExponentOptions {
  /// The supremum over alpha is taken on (1, alpha_cap]; in the variable
  /// t = (alpha-1)/alpha this is (0, 1 - 1/alpha_cap].
  double alpha_cap = 1e4;
  int prescan_points = 32;
  int golden_iterations = 48;
  /// Options for the inner channel-MI solves (single interior start by
  /// default; the objective is concave in rho).
  int mi_restarts = 1;
  std::uint64_t seed = 0;
};

/// Memoizes the sandwiched channel MI across exponent and curve sweeps for
/// one channel. Thread safe; cached values are deterministic.
class ExponentSolver {
 public:
  explicit ExponentSolver(CPMap channel, ExponentOptions options = {});

  const CPMap& channel() const { return channel_; }

  /// Sandwiched MI at alpha = 1/(1-t), memoized on t.
  double mi_at(double t);

  /// Entanglement-assisted capacity in bits, memoized.
  double capacity();

  ExponentPoint exponent(double rate);
  double success_prob_bound(int uses, double rate);
  double weak_converse_epsilon(int uses, double rate);

 private:
  CPMap channel_;
  ExponentOptions options_;
  std::map<double, double> mi_cache_;
  double capacity_bits_ = -1.0;
  std::mutex mutex_;
};

ExponentPoint strong_converse_exponent(const CPMap& n, double rate);
double success_prob_bound(const CPMap& n, int uses, double rate);

/// Smallest error probability admitted by the KL meta-converse bound
/// n I(N) >= delta_KL(eps || 1 - 2^{-nR}); zero when the rate is at or
/// below capacity. The single-letter n I(N) relies on the additivity of
/// the entanglement-assisted capacity (imported background).
double weak_converse_epsilon(const CPMap& n, int uses, double rate);

/// Sweeps strong_converse_exponent over an ascending rate grid, sharing
/// one MI cache; grid points may be solved in parallel.
std::vector<ExponentPoint> exponent_curve(const CPMap& n, const std::vector<double>& rates);
std::vector<ExponentPoint> exponent_curve(ExponentSolver& solver,
                                          const std::vector<double>& rates);

/// Pauli mixture probabilities (p_I, p_X, p_Y, p_Z) of a qubit channel
/// whose Choi matrix is diagonal in the Bell basis; throws otherwise.
std::array<double, 4> pauli_probabilities(const CPMap& n);

/// Exact superdense coding over n uses of a qubit Pauli channel: shared
/// Bell pairs, Pauli-product encodings of one of `submessages`^n messages
/// (1 to 4 per use), product Bell measurement. The per-use success
/// probability is the probability that the noise fixes the Bell state, so
/// p_succ is an exact product.
CodeSimResult simulate_superdense(const CPMap& n, int uses, int submessages_per_use);
CodeSimResult simulate_superdense(ExponentSolver& solver, int uses, int submessages_per_use);

/// delta_KL(p || 1 - 2^{-nr}) evaluated without forming 1 - 2^{-nr}.
double binary_kl_vs_near_one(double p, double n_times_rate);

}  // namespace renyi::converse
