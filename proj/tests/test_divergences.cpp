// SPDX-License-Identifier: Apache-2.0

#include "renyi/divergences.hpp"

#include "oracles.hpp"
#include "renyi/random.hpp"

#include <doctest.h>

#include <cmath>

using namespace renyi;
using channels::BipartiteState;
using channels::DensityOperator;
using divergences::BinaryFamily;
using divergences::RenyiOrder;
using linalg::Matrix;

namespace {

const double kLog2FourThirds = oracles::classical_renyi({0.5, 0.5}, {0.25, 0.75}, 2.0);

DensityOperator diag_state(double p) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = p;
  m(1, 1) = 1.0 - p;
  return DensityOperator(m);
}

}  // namespace

TEST_CASE("sandwiched_renyi: identity, commuting oracle, support violation") {
  rng::Sampler sampler(101);
  const DensityOperator rho = sampler.density(3);
  for (double alpha : {1.5, 2.0, 5.0}) {
    CHECK(divergences::sandwiched_renyi(rho, rho, RenyiOrder(alpha)).value() ==
          doctest::Approx(0.0).epsilon(1e-10));
  }

  CHECK(divergences::sandwiched_renyi(diag_state(0.5), diag_state(0.25), RenyiOrder(2.0)).value() ==
        doctest::Approx(kLog2FourThirds).epsilon(1e-12));
  CHECK(kLog2FourThirds == doctest::Approx(std::log2(4.0 / 3.0)));

  // Projector orthogonal to the support of sigma.
  Matrix p0 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  Matrix p1 = Matrix::Zero(2, 2);
  p1(1, 1) = 1.0;
  CHECK(divergences::sandwiched_renyi(DensityOperator(p0), DensityOperator(p1), RenyiOrder(2.0))
            .is_infinite());
}

TEST_CASE("sandwiched_renyi: norm form agrees and domain errors fire") {
  rng::Sampler sampler(103);
  const DensityOperator rho = sampler.density(3);
  const DensityOperator sigma = sampler.density(3);
  for (double alpha : {1.2, 2.0, 10.0, 1e4}) {
    const RenyiOrder order(alpha);
    const double direct = divergences::sandwiched_renyi(rho, sigma, order).value();
    const double norm_form = divergences::sandwiched_renyi_norm_form(rho, sigma, order).value();
    CHECK(std::abs(direct - norm_form) < 1e-9);
  }
  CHECK_THROWS_AS(divergences::sandwiched_renyi(rho, sigma, RenyiOrder(1.0)), std::domain_error);
  CHECK_THROWS_AS(RenyiOrder(0.5), std::domain_error);
  CHECK_THROWS_AS(
      divergences::sandwiched_renyi(rho, sampler.density(2), RenyiOrder(2.0)),
      std::invalid_argument);
}

TEST_CASE("traditional_renyi: identity, commuting case, ordering") {
  rng::Sampler sampler(105);
  const DensityOperator rho = sampler.density(3);
  CHECK(divergences::traditional_renyi(rho, rho, RenyiOrder(2.0)).value() ==
        doctest::Approx(0.0).epsilon(1e-10));
  CHECK(
      divergences::traditional_renyi(diag_state(0.5), diag_state(0.25), RenyiOrder(2.0)).value() ==
      doctest::Approx(kLog2FourThirds).epsilon(1e-12));

  for (int i = 0; i < 20; ++i) {
    const DensityOperator a = sampler.density(3);
    const DensityOperator b = sampler.density(3);
    const double sand = divergences::sandwiched_renyi(a, b, RenyiOrder(2.0)).value();
    const double trad = divergences::traditional_renyi(a, b, RenyiOrder(2.0)).value();
    CHECK(trad >= sand - 1e-10);
  }
}

TEST_CASE("relative_entropy and mutual_information anchors") {
  rng::Sampler sampler(107);
  const DensityOperator rho = sampler.density(2);
  const DensityOperator sigma = sampler.density(3);
  const BipartiteState product(linalg::kron(rho.matrix(), sigma.matrix()), 2, 3);
  CHECK(divergences::mutual_information(product) == doctest::Approx(0.0).epsilon(1e-10));

  // Maximally entangled pair: I = 2 bits. Oracle: S(A) + S(B) - S(AB) from
  // the spectra (1/2, 1/2) and a pure joint state.
  const BipartiteState bell(oracles::bell_phi_plus(), 2, 2);
  const double oracle_bell = oracles::entropy_bits({0.5, 0.5}) * 2 - oracles::entropy_bits({1.0});
  CHECK(divergences::mutual_information(bell) == doctest::Approx(oracle_bell).epsilon(1e-9));
  CHECK(oracle_bell == doctest::Approx(2.0));

  // Perfectly correlated uniform bits: I = 1 bit by the classical oracle.
  const BipartiteState corr(oracles::correlated_bits(), 2, 2);
  const double oracle_corr =
      oracles::classical_kl({0.5, 0.0, 0.0, 0.5}, {0.25, 0.25, 0.25, 0.25});
  CHECK(divergences::mutual_information(corr) == doctest::Approx(oracle_corr).epsilon(1e-9));
  CHECK(oracle_corr == doctest::Approx(1.0));

  // Support violation is infinite.
  Matrix p0 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  Matrix p1 = Matrix::Zero(2, 2);
  p1(1, 1) = 1.0;
  CHECK(divergences::relative_entropy(DensityOperator(p0), DensityOperator(p1)).is_infinite());
}

TEST_CASE("sibson_sigma_star: product, identity residual, symmetry") {
  rng::Sampler sampler(109);
  const DensityOperator rho_a = sampler.density(2);
  const DensityOperator rho_b = sampler.density(2);
  const BipartiteState product(linalg::kron(rho_a.matrix(), rho_b.matrix()), 2, 2);
  for (double alpha : {1.5, 2.0}) {
    const DensityOperator star = divergences::sibson_sigma_star(product, RenyiOrder(alpha));
    CHECK(linalg::max_abs(star.matrix() - rho_b.matrix()) < 1e-9);
  }

  // Identity residual on random states.
  for (int i = 0; i < 10; ++i) {
    const BipartiteState state = sampler.bipartite(2, 2);
    const Matrix marginal = state.reduced_a();
    const RenyiOrder order(2.0);
    const DensityOperator star = divergences::sibson_sigma_star(state, order);
    const DensityOperator prod_star(linalg::kron(marginal, star.matrix()));
    for (int k = 0; k < 20; ++k) {
      const DensityOperator sigma = sampler.density(2);
      const DensityOperator prod(linalg::kron(marginal, sigma.matrix()));
      const double lhs = divergences::traditional_renyi(state.state(), prod, order).value();
      const double rhs =
          divergences::traditional_renyi(star, sigma, order).value() +
          divergences::traditional_renyi(state.state(), prod_star, order).value();
      CHECK(std::abs(lhs - rhs) < 1e-8);
    }
  }

  const BipartiteState bell(oracles::bell_phi_plus(), 2, 2);
  const DensityOperator star = divergences::sibson_sigma_star(bell, RenyiOrder(2.0));
  CHECK(linalg::max_abs(star.matrix() - 0.5 * Matrix::Identity(2, 2)) < 1e-10);
}

TEST_CASE("renyi_mi_explicit: anchors and brute-force minimum") {
  rng::Sampler sampler(111);
  const BipartiteState product(
      linalg::kron(sampler.density(2).matrix(), sampler.density(2).matrix()), 2, 2);
  CHECK(divergences::renyi_mi_explicit(product, RenyiOrder(2.0)) ==
        doctest::Approx(0.0).epsilon(1e-9));

  const BipartiteState bell(oracles::bell_phi_plus(), 2, 2);
  CHECK(divergences::renyi_mi_explicit(bell, RenyiOrder(2.0)) == doctest::Approx(2.0));

  for (int i = 0; i < 5; ++i) {
    const BipartiteState state = sampler.bipartite(2, 2);
    const Matrix marginal = state.reduced_a();
    const RenyiOrder order(1.5);
    const double closed = divergences::renyi_mi_explicit(state, order);
    const double brute = oracles::brute_force_min_qubit([&](const Matrix& sigma) {
      return divergences::detail::traditional_raw(state.matrix(),
                                                  linalg::kron(marginal, sigma), 1.5);
    });
    CHECK(std::abs(closed - brute) < 1e-6);
  }
}

TEST_CASE("sandwiched_mi_state: product, pure state, ordering, restarts") {
  rng::Sampler sampler(113);
  const DensityOperator rho_b = sampler.density(2);
  const BipartiteState product(linalg::kron(sampler.density(2).matrix(), rho_b.matrix()), 2, 2);
  const auto product_result = divergences::sandwiched_mi_state(product, RenyiOrder(2.0), 1);
  CHECK(product_result.bits == doctest::Approx(0.0).epsilon(1e-8));
  CHECK(linalg::trace_distance(product_result.minimizer.matrix(), rho_b.matrix()) < 1e-4);

  // Pure maximally entangled input: 2 bits at every alpha; grid confirmation.
  const BipartiteState bell(oracles::bell_phi_plus(), 2, 2);
  for (double alpha : {1.5, 2.0, 3.0}) {
    const auto result = divergences::sandwiched_mi_state(bell, RenyiOrder(alpha), 2);
    CHECK(result.bits == doctest::Approx(2.0).epsilon(1e-7));
    CHECK(result.restart_spread < 1e-7);
  }
  const double grid_min = oracles::brute_force_min_qubit([&](const Matrix& sigma) {
    return divergences::detail::sandwiched_raw(
        bell.matrix(), linalg::kron(0.5 * Matrix::Identity(2, 2), sigma), 2.0);
  });
  CHECK(grid_min == doctest::Approx(2.0).epsilon(1e-6));

  for (int i = 0; i < 3; ++i) {
    const BipartiteState state = sampler.bipartite(2, 2);
    const RenyiOrder order(2.0);
    const auto result = divergences::sandwiched_mi_state(state, order, 7);
    CHECK(result.bits <= divergences::renyi_mi_explicit(state, order) + 1e-8);
    CHECK(result.restart_spread < 1e-7);
  }
}

TEST_CASE("sandwiched_mi_state handles unequal factor dimensions") {
  rng::Sampler sampler(119);
  const channels::BipartiteState state = sampler.bipartite(2, 3);
  const auto result = divergences::sandwiched_mi_state(state, RenyiOrder(2.0), 5);
  CHECK(result.bits >= 0.0);
  CHECK(result.minimizer.dim() == 3);
  CHECK(result.restart_spread < 1e-7);
  CHECK(result.bits <= divergences::renyi_mi_explicit(state, RenyiOrder(2.0)) + 1e-8);
}

TEST_CASE("binary_divergence: trivial and derived values") {
  CHECK(divergences::binary_divergence(BinaryFamily::kl(), 0.3, 0.3).value() ==
        doctest::Approx(0.0));
  CHECK(divergences::binary_divergence(BinaryFamily::sandwiched(2.0), 0.3, 0.3).value() ==
        doctest::Approx(0.0));

  const double nr = 8.0;
  CHECK(divergences::binary_divergence(BinaryFamily::kl(), 0.0, 1.0 - std::exp2(-nr)).value() ==
        doctest::Approx(nr).epsilon(1e-12));

  CHECK(divergences::binary_divergence(BinaryFamily::traditional(2.0), 0.5, 0.25).value() ==
        doctest::Approx(kLog2FourThirds).epsilon(1e-12));

  CHECK(divergences::binary_divergence(BinaryFamily::kl(), 0.5, 0.0).is_infinite());
  CHECK(divergences::binary_divergence(BinaryFamily::kl(), 0.5, 1.0).is_infinite());
  CHECK(divergences::binary_divergence(BinaryFamily::traditional(3.0), 0.0, 0.0).value() ==
        doctest::Approx(0.0));
  CHECK_THROWS_AS(divergences::binary_divergence(BinaryFamily::kl(), -0.1, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(divergences::binary_divergence(BinaryFamily::traditional(1.0), 0.5, 0.5),
                  std::domain_error);
}

TEST_CASE("divergence properties: data processing, alpha monotone, limit") {
  rng::Sampler sampler(115);
  for (int i = 0; i < 10; ++i) {
    const auto channel = sampler.channel(2, 2, 2);
    const DensityOperator rho = sampler.density(2);
    const DensityOperator sigma = sampler.density(2);
    for (double alpha : {1.2, 1.5, 2.0, 3.0}) {
      const RenyiOrder order(alpha);
      CHECK(divergences::sandwiched_renyi(channel.apply(rho), channel.apply(sigma), order)
                .value() <=
            divergences::sandwiched_renyi(rho, sigma, order).value() + 1e-8);
    }
    double prev = -1.0;
    for (double alpha : {1.1, 1.5, 2.0, 4.0, 10.0}) {
      const double v = divergences::sandwiched_renyi(rho, sigma, RenyiOrder(alpha)).value();
      CHECK(v >= prev - 1e-9);
      prev = v;
    }
    const double kl = divergences::relative_entropy(rho, sigma).value();
    CHECK(std::abs(divergences::sandwiched_renyi(rho, sigma, RenyiOrder(1.0 + 1e-4)).value() -
                   kl) < 1e-3);
  }
}

TEST_CASE("unitary invariance of both Renyi divergences") {
  rng::Sampler sampler(117);
  const DensityOperator rho = sampler.density(3);
  const DensityOperator sigma = sampler.density(3);
  const Matrix u = sampler.unitary(3);
  const DensityOperator rho_u(u * rho.matrix() * u.adjoint());
  const DensityOperator sigma_u(u * sigma.matrix() * u.adjoint());
  const RenyiOrder order(2.5);
  CHECK(std::abs(divergences::sandwiched_renyi(rho, sigma, order).value() -
                 divergences::sandwiched_renyi(rho_u, sigma_u, order).value()) < 1e-10);
  CHECK(std::abs(divergences::traditional_renyi(rho, sigma, order).value() -
                 divergences::traditional_renyi(rho_u, sigma_u, order).value()) < 1e-10);
}
