// SPDX-License-Identifier: Apache-2.0
//
// Quantum channels and CP maps: Kraus/Choi representations, a catalog of
// standard channels, channel application and tensor products. The
// maximally-entangled-like reference vector is UNNORMALIZED throughout,
// |Gamma> = sum_i |i>|i>, so the Choi matrix of a trace-preserving map has
// trace equal to the input dimension.

#pragma once

#include "renyi/linalg.hpp"

#include <string>
#include <vector>

namespace renyi::channels {

using linalg::Complex;
using linalg::Index;
using linalg::Matrix;

/// Positive semidefinite, unit trace. Validated at construction.
class DensityOperator {
 public:
  explicit DensityOperator(Matrix m);

  Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

/// Density operator with a declared (dim_a, dim_b) tensor factorization.
class BipartiteState {
 public:
  BipartiteState(Matrix m, Index dim_a, Index dim_b);
  BipartiteState(DensityOperator state, Index dim_a, Index dim_b);

  Index dim_a() const { return dim_a_; }
  Index dim_b() const { return dim_b_; }
  const DensityOperator& state() const { return state_; }
  const Matrix& matrix() const { return state_.matrix(); }

  Matrix reduced_a() const;  // Tr_B
  Matrix reduced_b() const;  // Tr_A

 private:
  DensityOperator state_;
  Index dim_a_;
  Index dim_b_;
};

/// Unnormalized |Gamma> = sum_i |i>|i> on C^dim (x) C^dim.
Eigen::VectorXcd gamma_vector(Index dim);

/// Completely positive map given by a Kraus list, with its Choi matrix
/// cached at construction. Immutable afterwards.
class CPMap {
 public:
  /// Validates the Kraus list; when trace_preserving is set, requires
  /// sum K^dag K = I within 1e-10.
  static CPMap from_kraus(std::vector<Matrix> kraus, bool trace_preserving);

  Index input_dim() const { return d_in_; }
  Index output_dim() const { return d_out_; }
  bool trace_preserving() const { return trace_preserving_; }
  const std::vector<Matrix>& kraus() const { return kraus_; }

  /// Choi matrix (id (x) M)(|Gamma><Gamma|), subsystem order A then B,
  /// dimension d_in * d_out.
  const Matrix& choi() const { return choi_; }

  /// sum K x K^dag. Accepts any operator of the input dimension.
  Matrix apply(const Matrix& x) const;
  DensityOperator apply(const DensityOperator& rho) const;

 private:
  CPMap(std::vector<Matrix> kraus, bool trace_preserving, Matrix choi, Index d_in, Index d_out);

  std::vector<Matrix> kraus_;
  Matrix choi_;
  Index d_in_;
  Index d_out_;
  bool trace_preserving_;
};

/// Spec-surface alias for the cached Choi matrix.
inline const Matrix& choi_of(const CPMap& m) { return m.choi(); }

/// Kraus set {K_i (x) L_j}; Choi equals the Kronecker product of the factor
/// Chois permuted to subsystem order A1 A2 B1 B2.
CPMap tensor(const CPMap& m1, const CPMap& m2);

/// outer after inner.
CPMap compose(const CPMap& outer, const CPMap& inner);

// Catalog channels. Parameters are validated: p in [0,1], gamma in [0,1].
CPMap identity_channel(Index dim);
CPMap depolarizing(double p, Index dim = 2);
CPMap dephasing(double p);
CPMap amplitude_damping(double gamma);

/// Theta_w(X) = w^{1/2} X w^{1/2} for PSD w (single Kraus operator w^{1/2}).
CPMap sandwich_map(const Matrix& weight);

/// Parses a JSON channel spec, e.g. {"kind":"depolarizing","p":0.25,"dim":2}
/// or {"kind":"kraus","d_in":2,"d_out":2,"matrices":[[[[re,im],...],...],...]}.
/// Throws std::invalid_argument naming the offending field.
CPMap parse_channel_spec(const std::string& json_text);

}  // namespace renyi::channels
