// SPDX-License-Identifier: Apache-2.0
//
// Seeded generators for test fixtures: Ginibre matrices, Haar unitaries,
// random densities and random channels via Haar isometries of a declared
// Kraus rank. All draws are fully determined by the seed.

#pragma once

#include "renyi/channels.hpp"
#include "renyi/linalg.hpp"

#include <cstdint>
#include <random>

namespace renyi::rng {

using linalg::Complex;
using linalg::Index;
using linalg::Matrix;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform();
  /// Standard normal via Box-Muller (no library-internal state).
  double normal();

  Complex complex_normal();
  Matrix ginibre(Index rows, Index cols);
  Matrix hermitian(Index dim);
  Matrix psd(Index dim);
  Matrix unitary(Index dim);

  channels::DensityOperator density(Index dim);
  channels::BipartiteState bipartite(Index dim_a, Index dim_b);

  /// Trace-preserving channel from a Haar-random isometry of the given
  /// Kraus rank.
  channels::CPMap channel(Index d_in, Index d_out, Index kraus_rank);

  /// General CP map: Ginibre Kraus operators rescaled so that
  /// sum K^dag K <= I (bounded but not trace preserving).
  channels::CPMap cp_map(Index d_in, Index d_out, Index kraus_rank);

 private:
  std::mt19937_64 engine_;
};

}  // namespace renyi::rng
