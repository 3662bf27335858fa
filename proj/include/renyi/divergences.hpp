// SPDX-License-Identifier: Apache-2.0
//
// Divergences and state-level mutual informations: sandwiched and
// traditional Renyi relative entropies, von Neumann relative entropy, the
// Sibson closed form, and the binary divergence. All values are in bits.
// A divergence is +infinity exactly when the numerical support of the first
// argument leaks outside the support of the second by more than 1e-9.

#pragma once

#include "renyi/channels.hpp"
#include "renyi/linalg.hpp"

#include <cstdint>
#include <limits>

namespace renyi::divergences {

using channels::BipartiteState;
using channels::DensityOperator;
using linalg::Index;
using linalg::Matrix;

/// Mass tolerated outside the support of the second argument before the
/// divergence is declared infinite.
inline constexpr double kSupportLeakTol = 1e-9;

/// Renyi order; operations require alpha > 1, with alpha = 1 as the
/// sentinel selecting the von Neumann quantity where documented.
struct RenyiOrder {
  double alpha;

  explicit RenyiOrder(double a);
  bool is_von_neumann() const { return alpha == 1.0; }
};

/// Nonnegative value in bits or the distinguished +infinity.
class DivergenceValue {
 public:
  static DivergenceValue infinite();
  static DivergenceValue bits(double value);

  bool is_infinite() const { return !std::isfinite(bits_); }
  /// Finite value in bits; +inf when infinite.
  double value() const { return bits_; }

 private:
  explicit DivergenceValue(double b) : bits_(b) {}
  double bits_;
};

/// (1/(alpha-1)) log2 Tr{(sigma^((1-a)/2a) rho sigma^((1-a)/2a))^alpha},
/// computed on the support of sigma; +infinity on support leak. Agreement
/// with the Schatten-norm form is asserted within 1e-9.
DivergenceValue sandwiched_renyi(const DensityOperator& rho, const DensityOperator& sigma,
                                 RenyiOrder order);

/// The equivalent (alpha/(alpha-1)) log2 || . ||_alpha form, via the
/// singular-value route.
DivergenceValue sandwiched_renyi_norm_form(const DensityOperator& rho,
                                           const DensityOperator& sigma, RenyiOrder order);

/// (1/(alpha-1)) log2 Tr{rho^alpha sigma^(1-alpha)}, same support rules.
DivergenceValue traditional_renyi(const DensityOperator& rho, const DensityOperator& sigma,
                                  RenyiOrder order);

/// Tr{rho (log2 rho - log2 sigma)}.
DivergenceValue relative_entropy(const DensityOperator& rho, const DensityOperator& sigma);

/// Quantum mutual information I(A;B) in bits: the KL divergence between the
/// state and the product of its marginals.
double mutual_information(const BipartiteState& rho_ab);

/// Minimizer sigma* of D_alpha(rho_AB || rho_A (x) sigma_B):
/// (Tr_A{rho_A^(1-alpha) rho_AB^alpha})^(1/alpha), normalized.
DensityOperator sibson_sigma_star(const BipartiteState& rho_ab, RenyiOrder order);

/// Closed form of the traditional Renyi mutual information:
/// (alpha/(alpha-1)) log2 Tr{(Tr_A{rho_A^(1-alpha) rho_AB^alpha})^(1/alpha)}.
double renyi_mi_explicit(const BipartiteState& rho_ab, RenyiOrder order);

struct StateMIResult {
  double bits = 0.0;
  DensityOperator minimizer;
  int iterations = 0;
  /// Spread of the value across the seeded restarts.
  double restart_spread = 0.0;
};

/// min over sigma_B of the sandwiched divergence from rho_AB to
/// rho_A (x) sigma_B, by quasi-Newton descent with finite-difference
/// gradients over a square-root parametrization, 5 seeded restarts.
StateMIResult sandwiched_mi_state(const BipartiteState& rho_ab, RenyiOrder order,
                                  std::uint64_t seed = 0);

struct BinaryFamily {
  enum class Kind { KL, Sandwiched, Traditional };
  Kind kind = Kind::KL;
  double alpha = 1.0;

  static BinaryFamily kl() { return {Kind::KL, 1.0}; }
  static BinaryFamily sandwiched(double alpha) { return {Kind::Sandwiched, alpha}; }
  static BinaryFamily traditional(double alpha) { return {Kind::Traditional, alpha}; }
};

/// The chosen divergence evaluated on diag(p, 1-p) vs diag(q, 1-q); for
/// commuting inputs every Renyi family reduces to the classical formula.
DivergenceValue binary_divergence(BinaryFamily family, double p, double q);

namespace detail {

/// Tr{P_ker(sigma) rho} where the kernel is taken at the support cutoff.
double support_leak(const Matrix& rho, const linalg::SpectralDecomposition& sigma_eig);

/// Unvalidated sandwiched divergence on raw PSD matrices; +inf on leak.
double sandwiched_raw(const Matrix& rho, const Matrix& sigma, double alpha);

/// Unvalidated traditional divergence on raw PSD matrices; +inf on leak.
double traditional_raw(const Matrix& rho, const Matrix& sigma, double alpha);

/// Unvalidated relative entropy on raw PSD matrices; +inf on leak.
double relative_entropy_raw(const Matrix& rho, const Matrix& sigma);

}  // namespace detail

}  // namespace renyi::divergences
