// SPDX-License-Identifier: Apache-2.0
//
// Channel-level quantities: completely bounded 1->alpha norms, sandwiched
// and traditional Renyi channel mutual information via alternating minimax
// optimization, entanglement-assisted capacity, and the minimax-exchange
// check. All channel informations follow the recipe
//   omega_AB = rho_A^{1/2} Gamma^N_AB rho_A^{1/2},
//   I(N) = max_rho min_sigma D(omega_AB || rho_A (x) sigma_B)
// with the unnormalized Choi matrix convention from renyi::channels.

#pragma once

#include "renyi/channels.hpp"
#include "renyi/divergences.hpp"

#include <cstdint>
#include <optional>

namespace renyi::channel_info {

using channels::CPMap;
using channels::DensityOperator;
using divergences::RenyiOrder;
using linalg::Index;
using linalg::Matrix;

struct SolveOptions {
  std::uint64_t seed = 0;
  /// Interior starts: maximally mixed plus (restarts - 1) seeded
  /// perturbations.
  int restarts = 5;
  int max_rounds = 500;
  /// Outer loop stops when both blocks move less than this in trace
  /// distance.
  double block_move_tol = 1e-9;
  /// Optional starting input state taking over as the primary start
  /// (e.g. a product of factor maximizers when solving a tensor-product
  /// channel).
  std::optional<Matrix> initial_rho;
};

struct ChannelMIReport {
  double bits = 0.0;
  DensityOperator maximizer_rho;
  DensityOperator minimizer_sigma;
  int iterations = 0;
  /// Final trace-distance movement of the optimizer blocks.
  double residual = 0.0;
  /// Spread of the value across the seeded restarts (< 1e-6 by contract).
  double restart_spread = 0.0;
  /// For the sandwiched solve: the independently evaluated min-max value
  /// and its gap against the max-min value reported in `bits`.
  std::optional<double> minmax_bits;
  std::optional<double> gap;
};

struct CbNormReport {
  double value = 0.0;
  DensityOperator maximizer;
  int iterations = 0;
  double residual = 0.0;
};

/// Completely bounded 1->alpha norm
///   max_rho || (rho^(1/2a) (x) I) Gamma^M (rho^(1/2a) (x) I) ||_alpha
/// for alpha > 1; alpha = 1 returns the limiting trace-norm value
/// (the diamond-norm value of a CP map). alpha < 1 is a domain error.
double cb_norm(const CPMap& m, double alpha);
CbNormReport cb_norm_report(const CPMap& m, double alpha);

/// Sandwiched Renyi mutual information of a trace-preserving channel,
/// solved as a max-min by alternating concave ascent over rho with convex
/// descent over sigma; the report carries the min-max certificate.
ChannelMIReport sandwiched_channel_mi(const CPMap& n, RenyiOrder order,
                                      const SolveOptions& options = {});

/// Traditional Renyi mutual information: the inner minimization is replaced
/// by its closed form, leaving a single maximization over rho.
ChannelMIReport renyi_channel_mi(const CPMap& n, RenyiOrder order,
                                 const SolveOptions& options = {});

/// Entanglement-assisted capacity: max over rho of the quantum mutual
/// information of omega_AB.
ChannelMIReport ea_capacity(const CPMap& n, const SolveOptions& options = {});

/// |max-min - min-max| with the two orders computed independently.
double minimax_gap(const CPMap& n, RenyiOrder order, const SolveOptions& options = {});

/// Value-only fast path (default: single maximally-mixed start, justified
/// by concavity in rho). Used by the strong-converse sweeps.
double sandwiched_mi_value(const CPMap& n, double alpha, int restarts = 1,
                           std::uint64_t seed = 0);

namespace detail {

/// (alpha/(alpha-1)) log2 ||(rho^(1/2a) (x) sigma^((1-a)/2a)) Gamma (...)||_a,
/// the Schatten-norm form of D(omega || rho (x) sigma); +inf when the
/// output marginal of omega leaks outside the support of sigma.
double sandwiched_objective(const Matrix& gamma, Index dim_a, Index dim_b, double alpha,
                            const Matrix& rho, const Matrix& sigma);

/// omega_AB = (rho^{1/2} (x) I) Gamma (rho^{1/2} (x) I).
Matrix omega_of(const Matrix& gamma, Index dim_a, Index dim_b, const Matrix& rho);

}  // namespace detail

}  // namespace renyi::channel_info
