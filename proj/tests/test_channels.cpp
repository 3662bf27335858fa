// SPDX-License-Identifier: Apache-2.0

#include "renyi/channels.hpp"
#include "renyi/random.hpp"

#include <doctest.h>

#include <cmath>
#include <iomanip>
#include <sstream>

using namespace renyi;
using channels::CPMap;
using linalg::Matrix;

TEST_CASE("DensityOperator validation") {
  CHECK_THROWS_AS(channels::DensityOperator(Matrix::Identity(2, 2)), std::invalid_argument);
  Matrix neg(2, 2);
  neg << 1.5, 0.0, 0.0, -0.5;
  CHECK_THROWS_AS(channels::DensityOperator{neg}, std::invalid_argument);
  CHECK_NOTHROW(channels::DensityOperator(0.5 * Matrix::Identity(2, 2)));
}

TEST_CASE("BipartiteState dimension bookkeeping") {
  rng::Sampler sampler(1);
  CHECK_THROWS_AS(channels::BipartiteState(sampler.density(4), 2, 3), std::invalid_argument);
  const auto state = sampler.bipartite(2, 3);
  CHECK(state.reduced_a().rows() == 2);
  CHECK(state.reduced_b().rows() == 3);
  CHECK(std::abs(state.reduced_a().trace().real() - 1.0) < 1e-12);
}

TEST_CASE("choi: identity channel gives |Gamma><Gamma| with trace d") {
  const CPMap id2 = channels::identity_channel(2);
  const Eigen::VectorXcd gamma = channels::gamma_vector(2);
  CHECK(linalg::max_abs(id2.choi() - gamma * gamma.adjoint()) < 1e-12);
  CHECK(std::abs(id2.choi().trace().real() - 2.0) < 1e-12);
}

TEST_CASE("choi: completely depolarizing qubit is I (x) I/2") {
  const CPMap dep = channels::depolarizing(1.0, 2);
  // Oracle: expand sum_ij |i><j| (x) N(|i><j|) entry by entry.
  Matrix expected = Matrix::Zero(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Matrix unit = Matrix::Zero(2, 2);
      unit(i, j) = 1.0;
      Matrix image = 0.5 * Matrix::Identity(2, 2) * unit.trace();
      Matrix cell = Matrix::Zero(2, 2);
      cell(i, j) = 1.0;
      expected += linalg::kron(cell, image);
    }
  }
  CHECK(linalg::max_abs(dep.choi() - expected) < 1e-12);
  CHECK(linalg::max_abs(dep.choi() - linalg::kron(Matrix::Identity(2, 2),
                                                  0.5 * Matrix::Identity(2, 2))) < 1e-12);
}

TEST_CASE("choi: trace-preserving maps reduce to the identity") {
  rng::Sampler sampler(2);
  for (int i = 0; i < 5; ++i) {
    const CPMap n = sampler.channel(3, 2, 2);
    const Matrix reduced = linalg::partial_trace(n.choi(), 3, 2, linalg::Subsystem::B);
    CHECK(linalg::max_abs(reduced - Matrix::Identity(3, 3)) < 1e-10);
    CHECK(linalg::eig_hermitian(n.choi()).eigenvalues.minCoeff() > -1e-10);
  }
}

TEST_CASE("apply: catalog actions match their closed forms") {
  rng::Sampler sampler(3);
  const Matrix rho = sampler.density(2).matrix();

  const double p = 0.3;
  const Matrix dep = channels::depolarizing(p, 2).apply(rho);
  CHECK(linalg::max_abs(dep - ((1.0 - p) * rho + p * 0.5 * Matrix::Identity(2, 2))) < 1e-12);

  // Theta_sigma with sigma = I/2 halves the input.
  const CPMap theta = channels::sandwich_map(0.5 * Matrix::Identity(2, 2));
  CHECK(linalg::max_abs(theta.apply(rho) - 0.5 * rho) < 1e-12);
  CHECK_FALSE(theta.trace_preserving());

  CHECK(linalg::max_abs(channels::identity_channel(2).apply(rho) - rho) < 1e-14);

  Matrix plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  CHECK(linalg::max_abs(channels::dephasing(1.0).apply(plus) - 0.5 * Matrix::Identity(2, 2)) <
        1e-12);

  Matrix ground = Matrix::Zero(2, 2);
  ground(0, 0) = 1.0;
  CHECK(linalg::max_abs(channels::amplitude_damping(1.0).apply(rho) - ground) < 1e-12);

  CHECK_THROWS_AS(channels::identity_channel(3).apply(rho), std::invalid_argument);
}

TEST_CASE("depolarizing generalizes to qutrits") {
  const CPMap dep3 = channels::depolarizing(1.0, 3);
  CHECK(linalg::max_abs(dep3.choi() - linalg::kron(Matrix::Identity(3, 3),
                                                   Matrix::Identity(3, 3) / 3.0)) < 1e-12);
  rng::Sampler sampler(4);
  const Matrix rho = sampler.density(3).matrix();
  const double p = 0.4;
  CHECK(linalg::max_abs(channels::depolarizing(p, 3).apply(rho) -
                        ((1.0 - p) * rho + p * Matrix::Identity(3, 3) / 3.0)) < 1e-12);
}

TEST_CASE("erasure-like channel from a direct Kraus list") {
  const double p = 0.3;
  Matrix keep = Matrix::Zero(3, 2);
  keep(0, 0) = keep(1, 1) = std::sqrt(1.0 - p);
  Matrix flag0 = Matrix::Zero(3, 2);
  flag0(2, 0) = std::sqrt(p);
  Matrix flag1 = Matrix::Zero(3, 2);
  flag1(2, 1) = std::sqrt(p);
  const CPMap erasure = channels::CPMap::from_kraus({keep, flag0, flag1}, true);
  CHECK(erasure.input_dim() == 2);
  CHECK(erasure.output_dim() == 3);
  rng::Sampler sampler(6);
  const Matrix rho = sampler.density(2).matrix();
  const Matrix out = erasure.apply(rho);
  CHECK(out(2, 2).real() == doctest::Approx(p));
  CHECK(std::abs(out.trace().real() - 1.0) < 1e-12);
  const Matrix reduced = linalg::partial_trace(erasure.choi(), 2, 3, linalg::Subsystem::B);
  CHECK(linalg::max_abs(reduced - Matrix::Identity(2, 2)) < 1e-10);
}

TEST_CASE("catalog: parameter validation and depolarizing(0) == identity") {
  CHECK_THROWS_AS(channels::depolarizing(1.5, 2), std::invalid_argument);
  CHECK_THROWS_AS(channels::dephasing(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(channels::amplitude_damping(2.0), std::invalid_argument);
  CHECK(linalg::max_abs(channels::depolarizing(0.0, 2).choi() -
                        channels::identity_channel(2).choi()) < 1e-12);
}

TEST_CASE("tensor: identity factors and product action") {
  const CPMap id4 = channels::tensor(channels::identity_channel(2), channels::identity_channel(2));
  CHECK(id4.input_dim() == 4);
  rng::Sampler sampler(5);
  const Matrix rho1 = sampler.density(2).matrix();
  const Matrix rho2 = sampler.density(2).matrix();
  const Matrix joint = linalg::kron(rho1, rho2);
  CHECK(linalg::max_abs(id4.apply(joint) - joint) < 1e-12);

  const CPMap dep_id = channels::tensor(channels::depolarizing(0.4, 2),
                                        channels::identity_channel(2));
  const Matrix expected = linalg::kron(channels::depolarizing(0.4, 2).apply(rho1), rho2);
  CHECK(linalg::max_abs(dep_id.apply(joint) - expected) < 1e-12);
}

TEST_CASE("tensor: Choi equals permuted Kronecker of factor Chois") {
  rng::Sampler sampler(7);
  for (int i = 0; i < 5; ++i) {
    const CPMap n1 = sampler.channel(2, 2, 2);
    const CPMap n2 = sampler.channel(2, 2, 2);
    // Oracle: direct definition sum_{ijkl} |ij><kl| (x) (N1 (x) N2)(|ij><kl|).
    Matrix direct = Matrix::Zero(16, 16);
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        Matrix unit = Matrix::Zero(4, 4);
        unit(a, b) = 1.0;
        Matrix cell = Matrix::Zero(4, 4);
        cell(a, b) = 1.0;
        direct += linalg::kron(cell, channels::tensor(n1, n2).apply(unit));
      }
    }
    CHECK(linalg::max_abs(channels::tensor(n1, n2).choi() - direct) < 1e-10);
    const Matrix permuted = linalg::permute_systems(linalg::kron(n1.choi(), n2.choi()),
                                                    {2, 2, 2, 2}, {0, 2, 1, 3});
    CHECK(linalg::max_abs(channels::tensor(n1, n2).choi() - permuted) < 1e-10);
  }
}

TEST_CASE("apply via Kraus equals apply via Choi contraction") {
  rng::Sampler sampler(9);
  for (int i = 0; i < 10; ++i) {
    const CPMap n = sampler.channel(2, 3, 2);
    const Matrix rho = sampler.density(2).matrix();
    const Matrix via_choi = linalg::partial_trace_a(
        linalg::kron(rho.transpose(), Matrix::Identity(3, 3)) * n.choi(), 2, 3);
    CHECK(linalg::max_abs(n.apply(rho) - via_choi) < 1e-10);
  }
}

TEST_CASE("channel spec JSON round trips") {
  const CPMap dep = channels::parse_channel_spec(R"({"kind":"depolarizing","p":0.25,"dim":2})");
  CHECK(linalg::max_abs(dep.choi() - channels::depolarizing(0.25, 2).choi()) < 1e-12);

  const CPMap id3 = channels::parse_channel_spec(R"({"kind":"identity","dim":3})");
  CHECK(id3.input_dim() == 3);

  const CPMap ad = channels::parse_channel_spec(R"({"kind":"amplitude_damping","gamma":0.5})");
  CHECK(ad.trace_preserving());

  // Custom Kraus list: the dephasing map written out explicitly.
  const double w0 = std::sqrt(0.5);
  std::ostringstream spec;
  spec.precision(17);
  spec << R"({"kind":"kraus","d_in":2,"d_out":2,"matrices":[)"
       << "[[[" << w0 << ",0],[0,0]],[[0,0],[" << w0 << ",0]]],"
       << "[[[" << w0 << ",0],[0,0]],[[0,0],[" << -w0 << ",0]]]"
       << "]}";
  const CPMap kraus = channels::parse_channel_spec(spec.str());
  CHECK(kraus.trace_preserving());
  CHECK(linalg::max_abs(kraus.choi() - channels::dephasing(1.0).choi()) < 1e-12);
}

TEST_CASE("channel spec errors name the offending field") {
  CHECK_THROWS_WITH_AS(channels::parse_channel_spec("{}"),
                       doctest::Contains("kind"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(channels::parse_channel_spec(R"({"kind":"depolarizing"})"),
                       doctest::Contains("\"p\""), std::invalid_argument);
  CHECK_THROWS_WITH_AS(channels::parse_channel_spec(R"({"kind":"depolarizing","p":1.7})"),
                       doctest::Contains("\"p\""), std::invalid_argument);
  CHECK_THROWS_WITH_AS(channels::parse_channel_spec(R"({"kind":"identity","dim":0})"),
                       doctest::Contains("dim"), std::invalid_argument);
  CHECK_THROWS_AS(channels::parse_channel_spec("not json"), std::invalid_argument);
}

TEST_CASE("random channels are reproducible by seed") {
  rng::Sampler s1(42);
  rng::Sampler s2(42);
  CHECK(linalg::max_abs(s1.channel(2, 2, 2).choi() - s2.channel(2, 2, 2).choi()) == 0.0);
}
