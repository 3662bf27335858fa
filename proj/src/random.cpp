// SPDX-License-Identifier: Apache-2.0

#include "renyi/random.hpp"

#include <cmath>

namespace renyi::rng {

double Sampler::uniform() {
  // 53-bit mantissa from the top bits of the engine output.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Sampler::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Complex Sampler::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) / std::sqrt(2.0);
}

Matrix Sampler::ginibre(Index rows, Index cols) {
  Matrix g(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      g(i, j) = complex_normal();
    }
  }
  return g;
}

Matrix Sampler::hermitian(Index dim) {
  Matrix g = ginibre(dim, dim);
  return 0.5 * (g + g.adjoint());
}

Matrix Sampler::psd(Index dim) {
  Matrix g = ginibre(dim, dim);
  return g * g.adjoint();
}

Matrix Sampler::unitary(Index dim) {
  Matrix g = ginibre(dim, dim);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix phases so the distribution is Haar.
  for (Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= (a > 0.0 ? d / a : Complex(1.0, 0.0));
  }
  return q;
}

channels::DensityOperator Sampler::density(Index dim) {
  Matrix p = psd(dim);
  p /= p.trace().real();
  return channels::DensityOperator(0.5 * (p + p.adjoint()));
}

channels::BipartiteState Sampler::bipartite(Index dim_a, Index dim_b) {
  return channels::BipartiteState(density(dim_a * dim_b), dim_a, dim_b);
}

channels::CPMap Sampler::channel(Index d_in, Index d_out, Index kraus_rank) {
  // Haar isometry C^{d_in} -> C^{d_out * k}: orthonormalize a tall Ginibre
  // block, then slice Kraus operators off the rows.
  Matrix g = ginibre(d_out * kraus_rank, d_in);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(d_out * kraus_rank, d_in);
  std::vector<Matrix> kraus;
  kraus.reserve(static_cast<size_t>(kraus_rank));
  for (Index i = 0; i < kraus_rank; ++i) {
    kraus.push_back(q.block(i * d_out, 0, d_out, d_in));
  }
  return channels::CPMap::from_kraus(std::move(kraus), true);
}

channels::CPMap Sampler::cp_map(Index d_in, Index d_out, Index kraus_rank) {
  std::vector<Matrix> kraus;
  Matrix norm = Matrix::Zero(d_in, d_in);
  for (Index i = 0; i < kraus_rank; ++i) {
    kraus.push_back(ginibre(d_out, d_in));
    norm += kraus.back().adjoint() * kraus.back();
  }
  const double scale = std::sqrt(linalg::eig_hermitian(norm).eigenvalues.maxCoeff());
  for (Matrix& k : kraus) k /= scale;
  return channels::CPMap::from_kraus(std::move(kraus), false);
}

}  // namespace renyi::rng
