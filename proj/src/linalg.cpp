// SPDX-License-Identifier: Apache-2.0

#include "renyi/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace renyi::linalg {

double max_abs(const Matrix& x) {
  if (x.size() == 0) return 0.0;
  return x.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& h, double tol) {
  if (h.rows() != h.cols()) return false;
  return max_abs(h - h.adjoint()) <= tol;
}

void require_hermitian(const Matrix& h, const char* what, double tol) {
  if (h.rows() != h.cols()) {
    std::ostringstream os;
    os << what << ": matrix must be square, got " << h.rows() << "x" << h.cols();
    throw std::invalid_argument(os.str());
  }
  const double dev = max_abs(h - h.adjoint());
  // Scale-relative gate: operator products with large entries accumulate
  // asymmetry proportional to their magnitude.
  const double gate = tol * std::max(1.0, max_abs(h));
  if (dev > gate) {
    std::ostringstream os;
    os << what << ": matrix is not Hermitian (max deviation " << dev << ", tolerance " << gate
       << ")";
    throw std::invalid_argument(os.str());
  }
}

Matrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
}

SpectralDecomposition eig_hermitian(const Matrix& h) {
  require_hermitian(h, "eig_hermitian");
  // Symmetrize first so the solver sees exactly Hermitian input bits.
  const Matrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eig_hermitian: eigensolver failed to converge");
  }
  return SpectralDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

double support_cutoff(const RealVector& eigenvalues) {
  const double top = eigenvalues.size() > 0 ? eigenvalues.maxCoeff() : 0.0;
  return kSupportRelCutoff * std::max(top, 1.0);
}

namespace detail {

/// Ungated eigendecomposition for internal intermediates: symmetrizes and
/// solves, leaving the strict Hermiticity gate to the validated entry
/// points.
static SpectralDecomposition eig_symmetrized(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (h + h.adjoint()));
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eig_symmetrized: eigensolver failed to converge");
  }
  return SpectralDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

Matrix power_from_eig(const SpectralDecomposition& eig, double t) {
  const double cutoff = support_cutoff(eig.eigenvalues);
  RealVector powered(eig.eigenvalues.size());
  for (Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const double lambda = eig.eigenvalues[i];
    powered[i] = lambda > cutoff ? std::pow(lambda, t) : 0.0;
  }
  return eig.eigenvectors * powered.asDiagonal() * eig.eigenvectors.adjoint();
}

Matrix power_psd_clipped(const Matrix& a, double t) {
  SpectralDecomposition eig = eig_symmetrized(a);
  if (eig.eigenvalues.size() > 0 && eig.eigenvalues.minCoeff() < -1e-4) {
    throw std::invalid_argument("power_psd_clipped: matrix is far from positive semidefinite");
  }
  return power_from_eig(eig, t);
}

double log2_trace_power(const RealVector& eigenvalues, double alpha) {
  double top = 0.0;
  for (Index i = 0; i < eigenvalues.size(); ++i) top = std::max(top, eigenvalues[i]);
  if (top <= 0.0) {
    throw std::invalid_argument("log2_trace_power: operator has empty support");
  }
  double sum = 0.0;
  for (Index i = 0; i < eigenvalues.size(); ++i) {
    const double lambda = eigenvalues[i];
    if (lambda > 0.0) sum += std::pow(lambda / top, alpha);
  }
  return alpha * std::log2(top) + std::log2(sum);
}

double log2_trace_power(const Matrix& a, double alpha) {
  SpectralDecomposition eig = eig_symmetrized(a);
  RealVector clipped = eig.eigenvalues.cwiseMax(0.0);
  return log2_trace_power(clipped, alpha);
}

double entropy_bits(const Matrix& rho) {
  SpectralDecomposition eig = eig_symmetrized(rho);
  const double cutoff = support_cutoff(eig.eigenvalues);
  double s = 0.0;
  for (Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const double lambda = eig.eigenvalues[i];
    if (lambda > cutoff) s -= lambda * std::log2(lambda);
  }
  return s;
}

Matrix kernel_projector(const SpectralDecomposition& eig) {
  const double cutoff = support_cutoff(eig.eigenvalues);
  const Index n = eig.eigenvalues.size();
  Matrix proj = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    if (eig.eigenvalues[i] <= cutoff) {
      proj += eig.eigenvectors.col(i) * eig.eigenvectors.col(i).adjoint();
    }
  }
  return proj;
}

}  // namespace detail

Matrix fractional_power_psd(const Matrix& a, double t) {
  SpectralDecomposition eig = eig_hermitian(a);
  if (eig.eigenvalues.size() > 0 && eig.eigenvalues.minCoeff() < -kPsdEigTol) {
    std::ostringstream os;
    os << "fractional_power_psd: matrix is not positive semidefinite (min eigenvalue "
       << eig.eigenvalues.minCoeff() << ")";
    throw std::invalid_argument(os.str());
  }
  return detail::power_from_eig(eig, t);
}

double schatten_norm(const Matrix& x, double alpha) {
  if (alpha < 1.0) {
    throw std::domain_error("schatten_norm: alpha must be >= 1");
  }
  Eigen::JacobiSVD<Matrix> svd(x);
  const RealVector& sv = svd.singularValues();
  const double top = sv.size() > 0 ? sv.maxCoeff() : 0.0;
  if (top == 0.0) return 0.0;
  double sum = 0.0;
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > 0.0) sum += std::pow(sv[i] / top, alpha);
  }
  return top * std::pow(sum, 1.0 / alpha);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

static void check_bipartite_dims(const Matrix& x, Index dim_a, Index dim_b) {
  if (dim_a <= 0 || dim_b <= 0 || x.rows() != x.cols() || x.rows() != dim_a * dim_b) {
    std::ostringstream os;
    os << "partial_trace: operator of dimension " << x.rows() << "x" << x.cols()
       << " does not match declared factors " << dim_a << "x" << dim_b;
    throw std::invalid_argument(os.str());
  }
}

Matrix partial_trace_a(const Matrix& x, Index dim_a, Index dim_b) {
  check_bipartite_dims(x, dim_a, dim_b);
  Matrix out = Matrix::Zero(dim_b, dim_b);
  for (Index i = 0; i < dim_a; ++i) {
    out += x.block(i * dim_b, i * dim_b, dim_b, dim_b);
  }
  return out;
}

Matrix partial_trace_b(const Matrix& x, Index dim_a, Index dim_b) {
  check_bipartite_dims(x, dim_a, dim_b);
  Matrix out = Matrix::Zero(dim_a, dim_a);
  for (Index i = 0; i < dim_a; ++i) {
    for (Index j = 0; j < dim_a; ++j) {
      out(i, j) = x.block(i * dim_b, j * dim_b, dim_b, dim_b).trace();
    }
  }
  return out;
}

Matrix partial_trace(const Matrix& x, Index dim_a, Index dim_b, Subsystem traced) {
  return traced == Subsystem::A ? partial_trace_a(x, dim_a, dim_b)
                                : partial_trace_b(x, dim_a, dim_b);
}

Matrix permute_systems(const Matrix& x, const std::vector<Index>& dims,
                       const std::vector<int>& order) {
  const int n = static_cast<int>(dims.size());
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("permute_systems: order and dims must have equal length");
  }
  Index total = 1;
  for (Index d : dims) total *= d;
  if (x.rows() != total || x.cols() != total) {
    throw std::invalid_argument("permute_systems: dims do not match matrix size");
  }
  std::vector<bool> seen(n, false);
  for (int k : order) {
    if (k < 0 || k >= n || seen[k]) {
      throw std::invalid_argument("permute_systems: order is not a permutation");
    }
    seen[k] = true;
  }
  // Strides of each factor in the input and output index layouts.
  std::vector<Index> in_stride(n, 1), out_stride(n, 1);
  for (int k = n - 2; k >= 0; --k) in_stride[k] = in_stride[k + 1] * dims[k + 1];
  for (int k = n - 2; k >= 0; --k) out_stride[k] = out_stride[k + 1] * dims[order[k + 1]];

  std::vector<Index> map(total);
  std::vector<Index> digits(n);
  for (Index idx = 0; idx < total; ++idx) {
    Index rem = idx;
    for (int k = 0; k < n; ++k) {
      digits[k] = rem / in_stride[k];
      rem %= in_stride[k];
    }
    Index out = 0;
    for (int k = 0; k < n; ++k) out += digits[order[k]] * out_stride[k];
    map[idx] = out;
  }
  Matrix y(total, total);
  for (Index r = 0; r < total; ++r) {
    for (Index c = 0; c < total; ++c) {
      y(map[r], map[c]) = x(r, c);
    }
  }
  return y;
}

double trace_distance(const Matrix& a, const Matrix& b) {
  return 0.5 * schatten_norm(a - b, 1.0);
}

}  // namespace renyi::linalg
