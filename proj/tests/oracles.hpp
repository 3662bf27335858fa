// SPDX-License-Identifier: Apache-2.0
//
// Test-only oracles, kept independent of the library's optimizer paths:
// classical divergence sums, Bloch parametrizations, a small Nelder-Mead
// simplex minimizer for brute-force reference minima, and standard states.

#pragma once

#include "renyi/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace oracles {

using renyi::linalg::Complex;
using renyi::linalg::Matrix;

/// Classical Renyi divergence sum (1/(a-1)) log2 sum_i p_i^a q_i^(1-a).
inline double classical_renyi(const std::vector<double>& p, const std::vector<double>& q,
                              double alpha) {
  double sum = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) sum += std::pow(p[i], alpha) * std::pow(q[i], 1.0 - alpha);
  }
  return std::log2(sum) / (alpha - 1.0);
}

inline double classical_kl(const std::vector<double>& p, const std::vector<double>& q) {
  double sum = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) sum += p[i] * std::log2(p[i] / q[i]);
  }
  return sum;
}

/// Shannon entropy in bits of a spectrum.
inline double entropy_bits(const std::vector<double>& p) {
  double s = 0.0;
  for (double x : p) {
    if (x > 1e-14) s -= x * std::log2(x);
  }
  return s;
}

/// Qubit density operator from Bloch coordinates (|r| <= 1).
inline Matrix bloch_density(double x, double y, double z) {
  Matrix m(2, 2);
  m << Complex(1.0 + z, 0.0), Complex(x, -y), Complex(x, y), Complex(1.0 - z, 0.0);
  return 0.5 * m;
}

/// Maximally entangled qubit pair (|00> + |11>)/sqrt(2) as a density matrix.
inline Matrix bell_phi_plus() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  v[0] = v[3] = 1.0 / std::sqrt(2.0);
  return v * v.adjoint();
}

/// Uniform classically correlated bit pair.
inline Matrix correlated_bits() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 0.5;
  m(3, 3) = 0.5;
  return m;
}

/// Nelder-Mead simplex minimizer, for brute-force reference minima. The
/// objective may return +inf outside its domain.
inline std::pair<std::vector<double>, double> nelder_mead(
    const std::function<double(const std::vector<double>&)>& f, std::vector<double> start,
    double scale, int max_iterations) {
  const size_t n = start.size();
  std::vector<std::vector<double>> simplex(n + 1, start);
  std::vector<double> values(n + 1);
  for (size_t i = 0; i < n; ++i) simplex[i + 1][i] += scale;
  for (size_t i = 0; i <= n; ++i) values[i] = f(simplex[i]);

  const auto order = [&]() {
    std::vector<size_t> idx(n + 1);
    for (size_t i = 0; i <= n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return values[a] < values[b]; });
    std::vector<std::vector<double>> s2(n + 1);
    std::vector<double> v2(n + 1);
    for (size_t i = 0; i <= n; ++i) {
      s2[i] = simplex[idx[i]];
      v2[i] = values[idx[i]];
    }
    simplex = s2;
    values = v2;
  };

  for (int iter = 0; iter < max_iterations; ++iter) {
    order();
    if (std::abs(values[n] - values[0]) < 1e-14 * std::max(1.0, std::abs(values[0]))) break;
    std::vector<double> centroid(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j] / static_cast<double>(n);
    }
    const auto blend = [&](double t) {
      std::vector<double> p(n);
      for (size_t j = 0; j < n; ++j) p[j] = centroid[j] + t * (simplex[n][j] - centroid[j]);
      return p;
    };
    const std::vector<double> reflected = blend(-1.0);
    const double fr = f(reflected);
    if (fr < values[0]) {
      const std::vector<double> expanded = blend(-2.0);
      const double fe = f(expanded);
      if (fe < fr) {
        simplex[n] = expanded;
        values[n] = fe;
      } else {
        simplex[n] = reflected;
        values[n] = fr;
      }
    } else if (fr < values[n - 1]) {
      simplex[n] = reflected;
      values[n] = fr;
    } else {
      const std::vector<double> contracted = blend(0.5);
      const double fc = f(contracted);
      if (fc < values[n]) {
        simplex[n] = contracted;
        values[n] = fc;
      } else {
        for (size_t i = 1; i <= n; ++i) {
          for (size_t j = 0; j < n; ++j) {
            simplex[i][j] = 0.5 * (simplex[i][j] + simplex[0][j]);
          }
          values[i] = f(simplex[i]);
        }
      }
    }
  }
  order();
  return {simplex[0], values[0]};
}

/// Brute-force minimum of f over qubit density operators, via Nelder-Mead
/// on an unconstrained chart of the open Bloch ball, r = u / sqrt(1+|u|^2),
/// so that boundary-hugging optima stay reachable.
inline double brute_force_min_qubit(const std::function<double(const Matrix&)>& f) {
  const auto objective = [&](const std::vector<double>& u) {
    const double n2 = u[0] * u[0] + u[1] * u[1] + u[2] * u[2];
    const double scale = 1.0 / std::sqrt(1.0 + n2);
    return f(bloch_density(u[0] * scale, u[1] * scale, u[2] * scale));
  };
  double best = std::numeric_limits<double>::infinity();
  const std::vector<std::vector<double>> starts = {
      {0.0, 0.0, 0.0},   {0.5, 0.0, 0.0},  {0.0, 0.5, 0.0},  {0.0, 0.0, 0.5},
      {-0.4, 0.4, -0.4}, {0.7, -0.3, 0.2}, {-0.2, -0.5, 0.4}};
  for (const auto& s : starts) {
    best = std::min(best, nelder_mead(objective, s, 0.5, 6000).second);
  }
  return best;
}

/// Brute-force maximum of f over qubit density operators.
inline double brute_force_max_qubit(const std::function<double(const Matrix&)>& f) {
  return -brute_force_min_qubit([&](const Matrix& rho) { return -f(rho); });
}

}  // namespace oracles
