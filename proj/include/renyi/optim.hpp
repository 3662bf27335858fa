// SPDX-License-Identifier: Apache-2.0
//
// Internal optimization machinery shared by the divergence and channel
// solvers: quasi-Newton descent with finite-difference gradients, projected
// gradient ascent over the density-matrix simplex, and a guarded
// golden-section line maximizer.

#pragma once

#include "renyi/linalg.hpp"

#include <functional>

namespace renyi::optim {

using linalg::Index;
using linalg::Matrix;

using ScalarObjective = std::function<double(const Eigen::VectorXd&)>;

struct BfgsOptions {
  int max_iterations = 400;
  double grad_tol = 2e-8;    // infinity norm of the FD gradient
  double value_tol = 1e-13;  // relative objective decrease
  double fd_step = 1e-6;
  int max_line_search = 60;
};

struct BfgsResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
  double grad_norm = 0.0;
};

/// Minimizes f with BFGS; gradients from central finite differences. The
/// objective may return +inf outside its domain (treated as a rejected
/// step during line search).
BfgsResult minimize_bfgs(const ScalarObjective& f, Eigen::VectorXd x0,
                         const BfgsOptions& options = {});

Eigen::VectorXd fd_gradient(const ScalarObjective& f, const Eigen::VectorXd& x, double step);

/// Frobenius-nearest density matrix: eigenvalues projected onto the
/// probability simplex.
Matrix project_to_density(const Matrix& hermitian);

using MatrixObjective = std::function<double(const Matrix&)>;

struct AscentOptions {
  int max_iterations = 300;
  double value_tol = 1e-13;  // relative per-iteration improvement
  double move_tol = 1e-10;   // max-entry movement of the iterate
  double fd_step = 1e-6;
  double initial_step = 0.25;
};

struct AscentResult {
  Matrix rho;
  double value = 0.0;
  int iterations = 0;
  double last_move = 0.0;
};

/// Projected gradient ascent over density matrices. The objective must
/// tolerate Hermitian inputs a finite-difference step away from the
/// simplex. Monotone: steps are only accepted when they improve.
AscentResult maximize_over_densities(const MatrixObjective& f, Matrix rho0,
                                     const AscentOptions& options = {});

/// Central finite-difference gradient in an orthonormal Hermitian basis.
/// Probes returning non-finite values contribute nothing.
Matrix fd_matrix_gradient(const MatrixObjective& f, const Matrix& x, double step);

struct GoldenResult {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section maximizer on [lo, hi] for a unimodal objective.
GoldenResult golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                                int iterations);

}  // namespace renyi::optim
