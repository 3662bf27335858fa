// SPDX-License-Identifier: Apache-2.0

#include "renyi/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace renyi::optim {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Eigen::VectorXd fd_gradient(const ScalarObjective& f, const Eigen::VectorXd& x, double step) {
  Eigen::VectorXd g(x.size());
  Eigen::VectorXd probe = x;
  for (Index i = 0; i < x.size(); ++i) {
    const double h = step * std::max(1.0, std::abs(x[i]));
    probe[i] = x[i] + h;
    const double fp = f(probe);
    probe[i] = x[i] - h;
    const double fm = f(probe);
    probe[i] = x[i];
    // A probe outside the objective's domain contributes no information.
    g[i] = (std::isfinite(fp) && std::isfinite(fm)) ? (fp - fm) / (2.0 * h) : 0.0;
  }
  return g;
}

BfgsResult minimize_bfgs(const ScalarObjective& f, Eigen::VectorXd x0,
                         const BfgsOptions& options) {
  const Index n = x0.size();
  Eigen::VectorXd x = std::move(x0);
  double fx = f(x);
  Eigen::MatrixXd hinv = Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd g = fd_gradient(f, x, options.fd_step);

  BfgsResult result;
  int iter = 0;
  for (; iter < options.max_iterations; ++iter) {
    if (g.lpNorm<Eigen::Infinity>() < options.grad_tol) break;

    Eigen::VectorXd direction = -(hinv * g);
    double slope = g.dot(direction);
    if (!(slope < 0.0)) {
      hinv.setIdentity();
      direction = -g;
      slope = g.dot(direction);
      if (!(slope < 0.0)) break;  // gradient numerically zero
    }

    // Backtracking Armijo line search; +inf objective values reject the step.
    const auto line_search = [&](const Eigen::VectorXd& dir, double dir_slope,
                                 Eigen::VectorXd& x_out, double& f_out) {
      double t = 1.0;
      for (int ls = 0; ls < options.max_line_search; ++ls) {
        x_out = x + t * dir;
        f_out = f(x_out);
        if (std::isfinite(f_out) && f_out <= fx + 1e-4 * t * dir_slope) return true;
        t *= 0.5;
      }
      return false;
    };
    double f_new = kInf;
    Eigen::VectorXd x_new;
    bool accepted = line_search(direction, slope, x_new, f_new);
    if (!accepted && (hinv - Eigen::MatrixXd::Identity(n, n)).norm() > 0.0) {
      // A stale curvature model can point into a constraint wall; retry
      // once along the raw gradient before giving up.
      hinv.setIdentity();
      direction = -g;
      slope = g.dot(direction);
      if (slope < 0.0) accepted = line_search(direction, slope, x_new, f_new);
    }
    if (!accepted) break;

    Eigen::VectorXd g_new = fd_gradient(f, x_new, options.fd_step);
    const Eigen::VectorXd s = x_new - x;
    const Eigen::VectorXd y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      const Eigen::VectorXd hy = hinv * y;
      const double yhy = y.dot(hy);
      // BFGS inverse update.
      hinv += ((sy + yhy) / (sy * sy)) * (s * s.transpose()) -
              (hy * s.transpose() + s * hy.transpose()) / sy;
    }

    const double improvement = fx - f_new;
    x = std::move(x_new);
    g = std::move(g_new);
    const double prev = fx;
    fx = f_new;
    if (improvement <= options.value_tol * std::max(1.0, std::abs(prev))) {
      ++iter;
      break;
    }
  }
  result.x = std::move(x);
  result.value = fx;
  result.iterations = iter;
  result.grad_norm = g.lpNorm<Eigen::Infinity>();
  return result;
}

Matrix project_to_density(const Matrix& hermitian) {
  const auto eig = linalg::eig_hermitian(hermitian);
  // Project the eigenvalues onto the probability simplex (sorted threshold).
  std::vector<double> v(eig.eigenvalues.data(), eig.eigenvalues.data() + eig.eigenvalues.size());
  std::vector<double> sorted = v;
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  double cumulative = 0.0;
  double tau = 0.0;
  int support = 0;
  for (size_t k = 0; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0.0) {
      tau = candidate;
      support = static_cast<int>(k + 1);
    }
  }
  (void)support;
  linalg::RealVector projected(eig.eigenvalues.size());
  for (Index i = 0; i < eig.eigenvalues.size(); ++i) {
    projected[i] = std::max(eig.eigenvalues[i] - tau, 0.0);
  }
  return eig.eigenvectors * projected.asDiagonal() * eig.eigenvectors.adjoint();
}

namespace {

// Orthonormal Hermitian direction k of a d-dimensional matrix space,
// enumerated as: d diagonal units, then (re, im) pairs per off diagonal.
Matrix hermitian_direction(Index dim, Index k) {
  Matrix e = Matrix::Zero(dim, dim);
  if (k < dim) {
    e(k, k) = 1.0;
    return e;
  }
  Index rem = k - dim;
  const Index pair = rem / 2;
  const bool imaginary = (rem % 2) != 0;
  Index count = 0;
  for (Index i = 0; i < dim; ++i) {
    for (Index j = i + 1; j < dim; ++j) {
      if (count == pair) {
        const double w = 1.0 / std::sqrt(2.0);
        if (imaginary) {
          e(i, j) = linalg::Complex(0.0, -w);
          e(j, i) = linalg::Complex(0.0, w);
        } else {
          e(i, j) = w;
          e(j, i) = w;
        }
        return e;
      }
      ++count;
    }
  }
  throw std::logic_error("hermitian_direction: index out of range");
}

}  // namespace

Matrix fd_matrix_gradient(const MatrixObjective& f, const Matrix& x, double step) {
  const Index dim = x.rows();
  Matrix grad = Matrix::Zero(dim, dim);
  for (Index k = 0; k < dim * dim; ++k) {
    const Matrix dir = hermitian_direction(dim, k);
    const double fp = f(x + step * dir);
    const double fm = f(x - step * dir);
    if (std::isfinite(fp) && std::isfinite(fm)) {
      grad += ((fp - fm) / (2.0 * step)) * dir;
    }
  }
  return grad;
}

AscentResult maximize_over_densities(const MatrixObjective& f, Matrix rho0,
                                     const AscentOptions& options) {
  Matrix rho = project_to_density(rho0);
  double value = f(rho);
  double step = options.initial_step;

  AscentResult result;
  int iter = 0;
  double last_move = 0.0;
  for (; iter < options.max_iterations; ++iter) {
    const Matrix grad = fd_matrix_gradient(f, rho, options.fd_step);
    const double grad_scale = linalg::max_abs(grad);
    if (grad_scale == 0.0) break;

    bool accepted = false;
    Matrix rho_new;
    double value_new = 0.0;
    for (int ls = 0; ls < 40; ++ls) {
      rho_new = project_to_density(rho + step * grad);
      value_new = f(rho_new);
      if (std::isfinite(value_new) && value_new > value) {
        accepted = true;
        break;
      }
      step *= 0.5;
      if (step < 1e-14) break;
    }
    if (!accepted) break;

    last_move = linalg::max_abs(rho_new - rho);
    const double improvement = value_new - value;
    rho = std::move(rho_new);
    value = value_new;
    step = std::min(step * 1.6, 64.0);
    if (last_move < options.move_tol) {
      ++iter;
      break;
    }
    if (improvement <= options.value_tol * std::max(1.0, std::abs(value))) {
      ++iter;
      break;
    }
  }
  result.rho = std::move(rho);
  result.value = value;
  result.iterations = iter;
  result.last_move = last_move;
  return result;
}

GoldenResult golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                                int iterations) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a);
  double x2 = a + phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int i = 0; i < iterations; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    }
  }
  if (f1 >= f2) return {x1, f1};
  return {x2, f2};
}

}  // namespace renyi::optim
