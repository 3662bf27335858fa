// SPDX-License-Identifier: Apache-2.0
//
// Dense complex Hermitian linear algebra: spectral decompositions,
// support-restricted fractional matrix powers, Schatten norms, Kronecker
// products and partial traces. Everything here is desk-scale (dims <= 64)
// and dense.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace renyi::linalg {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Hermiticity is checked entrywise against the conjugate transpose.
inline constexpr double kHermitianTol = 1e-12;
/// Eigenvalues above -kPsdEigTol count as nonnegative.
inline constexpr double kPsdEigTol = 1e-10;
/// Eigenvalues <= kSupportRelCutoff * max(lambda_max, 1) are treated as zero
/// when taking fractional or negative powers.
inline constexpr double kSupportRelCutoff = 1e-10;

/// Largest absolute entry of X (max-entry metric used by the invariants).
double max_abs(const Matrix& x);

bool is_hermitian(const Matrix& h, double tol = kHermitianTol);

/// Throws std::invalid_argument naming `what` if h is not square Hermitian.
void require_hermitian(const Matrix& h, const char* what, double tol = kHermitianTol);

struct SpectralDecomposition {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // unitary, columns matched to eigenvalues

  Matrix reconstruct() const;
};

/// Deterministic Hermitian eigendecomposition with ascending eigenvalues.
SpectralDecomposition eig_hermitian(const Matrix& h);

/// Scale-relative support cutoff: 1e-10 * max(lambda_max, 1).
double support_cutoff(const RealVector& eigenvalues);

/// A^t on the support of A. Eigenvalues at or below the support cutoff map
/// to zero for every t, including negative t. Eigenvalues below -1e-10 are
/// rejected.
Matrix fractional_power_psd(const Matrix& a, double t);

/// Schatten alpha-norm (Tr (sqrt(X^dag X))^alpha)^(1/alpha), alpha >= 1.
double schatten_norm(const Matrix& x, double alpha);

Matrix kron(const Matrix& a, const Matrix& b);

enum class Subsystem { A, B };

/// Traces out the named factor of a (dim_a*dim_b)-dimensional operator.
Matrix partial_trace(const Matrix& x, Index dim_a, Index dim_b, Subsystem traced);
Matrix partial_trace_a(const Matrix& x, Index dim_a, Index dim_b);
Matrix partial_trace_b(const Matrix& x, Index dim_a, Index dim_b);

/// Reorders tensor factors: factor k of the result is factor order[k] of the
/// input. dims lists the input factor dimensions in order.
Matrix permute_systems(const Matrix& x, const std::vector<Index>& dims,
                       const std::vector<int>& order);

/// (1/2)||A - B||_1 for Hermitian A, B.
double trace_distance(const Matrix& a, const Matrix& b);

namespace detail {

/// Power from a precomputed decomposition, zeroing the kernel.
Matrix power_from_eig(const SpectralDecomposition& eig, double t);

/// Like fractional_power_psd but tolerant of the slightly negative
/// eigenvalues produced by finite-difference probes inside the optimizers;
/// anything in [-1e-4, cutoff] is treated as zero.
Matrix power_psd_clipped(const Matrix& a, double t);

/// log2 Tr A^alpha for PSD A, evaluated in log space so that large alpha
/// (up to ~1e4) neither overflows nor underflows.
double log2_trace_power(const Matrix& a, double alpha);
double log2_trace_power(const RealVector& eigenvalues, double alpha);

/// von Neumann entropy in bits, -sum lambda log2 lambda over the support.
double entropy_bits(const Matrix& rho);

/// Projector onto the numerical kernel (eigenvalues <= support cutoff).
Matrix kernel_projector(const SpectralDecomposition& eig);

}  // namespace detail

}  // namespace renyi::linalg
