// SPDX-License-Identifier: Apache-2.0

#include "renyi/channels.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace renyi::channels {

using linalg::eig_hermitian;
using linalg::kPsdEigTol;
using linalg::max_abs;

DensityOperator::DensityOperator(Matrix m) : m_(std::move(m)) {
  linalg::require_hermitian(m_, "DensityOperator");
  const auto eig = eig_hermitian(m_);
  if (eig.eigenvalues.size() == 0) {
    throw std::invalid_argument("DensityOperator: empty matrix");
  }
  if (eig.eigenvalues.minCoeff() < -kPsdEigTol) {
    std::ostringstream os;
    os << "DensityOperator: not positive semidefinite (min eigenvalue "
       << eig.eigenvalues.minCoeff() << ")";
    throw std::invalid_argument(os.str());
  }
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > 1e-10) {
    std::ostringstream os;
    os << "DensityOperator: trace " << tr << " is not 1 within 1e-10";
    throw std::invalid_argument(os.str());
  }
}

BipartiteState::BipartiteState(Matrix m, Index dim_a, Index dim_b)
    : BipartiteState(DensityOperator(std::move(m)), dim_a, dim_b) {}

BipartiteState::BipartiteState(DensityOperator state, Index dim_a, Index dim_b)
    : state_(std::move(state)), dim_a_(dim_a), dim_b_(dim_b) {
  if (dim_a_ <= 0 || dim_b_ <= 0 || state_.dim() != dim_a_ * dim_b_) {
    std::ostringstream os;
    os << "BipartiteState: declared dims (" << dim_a_ << "," << dim_b_
       << ") do not multiply to the matrix dimension " << state_.dim();
    throw std::invalid_argument(os.str());
  }
}

Matrix BipartiteState::reduced_a() const {
  return linalg::partial_trace_b(matrix(), dim_a_, dim_b_);
}

Matrix BipartiteState::reduced_b() const {
  return linalg::partial_trace_a(matrix(), dim_a_, dim_b_);
}

Eigen::VectorXcd gamma_vector(Index dim) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim * dim);
  for (Index i = 0; i < dim; ++i) v[i * dim + i] = 1.0;
  return v;
}

CPMap::CPMap(std::vector<Matrix> kraus, bool trace_preserving, Matrix choi, Index d_in,
             Index d_out)
    : kraus_(std::move(kraus)),
      choi_(std::move(choi)),
      d_in_(d_in),
      d_out_(d_out),
      trace_preserving_(trace_preserving) {}

CPMap CPMap::from_kraus(std::vector<Matrix> kraus, bool trace_preserving) {
  if (kraus.empty()) {
    throw std::invalid_argument("CPMap: Kraus list must be nonempty");
  }
  const Index d_out = kraus.front().rows();
  const Index d_in = kraus.front().cols();
  if (d_in <= 0 || d_out <= 0) {
    throw std::invalid_argument("CPMap: Kraus operators must be nonempty matrices");
  }
  for (const Matrix& k : kraus) {
    if (k.rows() != d_out || k.cols() != d_in) {
      throw std::invalid_argument("CPMap: Kraus operators must share one shape");
    }
  }
  Matrix normalization = Matrix::Zero(d_in, d_in);
  for (const Matrix& k : kraus) normalization += k.adjoint() * k;
  if (trace_preserving) {
    const double dev = max_abs(normalization - Matrix::Identity(d_in, d_in));
    if (dev > 1e-10) {
      std::ostringstream os;
      os << "CPMap: sum K^dag K deviates from identity by " << dev
         << "; not trace preserving within 1e-10";
      throw std::invalid_argument(os.str());
    }
  }
  // Choi = sum_k (I (x) K_k) |Gamma><Gamma| (I (x) K_k)^dag.
  const Eigen::VectorXcd gamma = gamma_vector(d_in);
  Matrix choi = Matrix::Zero(d_in * d_out, d_in * d_out);
  for (const Matrix& k : kraus) {
    Eigen::VectorXcd v = linalg::kron(Matrix::Identity(d_in, d_in), k) * gamma;
    choi += v * v.adjoint();
  }
  return CPMap(std::move(kraus), trace_preserving, std::move(choi), d_in, d_out);
}

Matrix CPMap::apply(const Matrix& x) const {
  if (x.rows() != d_in_ || x.cols() != d_in_) {
    std::ostringstream os;
    os << "CPMap::apply: input dimension " << x.rows() << "x" << x.cols()
       << " does not match channel input dimension " << d_in_;
    throw std::invalid_argument(os.str());
  }
  Matrix out = Matrix::Zero(d_out_, d_out_);
  for (const Matrix& k : kraus_) out += k * x * k.adjoint();
  return out;
}

DensityOperator CPMap::apply(const DensityOperator& rho) const {
  if (!trace_preserving_) {
    throw std::invalid_argument(
        "CPMap::apply(DensityOperator): map is not trace preserving; apply it to a raw matrix");
  }
  return DensityOperator(apply(rho.matrix()));
}

CPMap tensor(const CPMap& m1, const CPMap& m2) {
  std::vector<Matrix> kraus;
  kraus.reserve(m1.kraus().size() * m2.kraus().size());
  for (const Matrix& k : m1.kraus()) {
    for (const Matrix& l : m2.kraus()) {
      kraus.push_back(linalg::kron(k, l));
    }
  }
  return CPMap::from_kraus(std::move(kraus), m1.trace_preserving() && m2.trace_preserving());
}

CPMap compose(const CPMap& outer, const CPMap& inner) {
  if (outer.input_dim() != inner.output_dim()) {
    throw std::invalid_argument("compose: inner output dimension must match outer input");
  }
  std::vector<Matrix> kraus;
  kraus.reserve(outer.kraus().size() * inner.kraus().size());
  for (const Matrix& a : outer.kraus()) {
    for (const Matrix& b : inner.kraus()) {
      kraus.push_back(a * b);
    }
  }
  return CPMap::from_kraus(std::move(kraus),
                           outer.trace_preserving() && inner.trace_preserving());
}

static void check_unit_interval(double value, const char* field) {
  if (!(value >= 0.0 && value <= 1.0)) {
    std::ostringstream os;
    os << "channel parameter \"" << field << "\" = " << value << " is outside [0,1]";
    throw std::invalid_argument(os.str());
  }
}

CPMap identity_channel(Index dim) {
  if (dim <= 0) throw std::invalid_argument("identity_channel: field \"dim\" must be positive");
  return CPMap::from_kraus({Matrix::Identity(dim, dim)}, true);
}

CPMap depolarizing(double p, Index dim) {
  check_unit_interval(p, "p");
  if (dim <= 0) throw std::invalid_argument("depolarizing: field \"dim\" must be positive");
  const double d = static_cast<double>(dim);
  // Weyl shift/clock unitaries; the uniform mixture over all d^2 of them is
  // the completely depolarizing map.
  Matrix shift = Matrix::Zero(dim, dim);
  Matrix clock = Matrix::Zero(dim, dim);
  const Complex omega = std::exp(Complex(0.0, 2.0 * M_PI / d));
  for (Index j = 0; j < dim; ++j) {
    shift((j + 1) % dim, j) = 1.0;
    clock(j, j) = std::pow(omega, static_cast<double>(j));
  }
  std::vector<Matrix> kraus;
  kraus.reserve(static_cast<size_t>(dim * dim));
  Matrix xa = Matrix::Identity(dim, dim);
  for (Index a = 0; a < dim; ++a) {
    Matrix w = xa;
    for (Index b = 0; b < dim; ++b) {
      double weight = p / (d * d);
      if (a == 0 && b == 0) weight += 1.0 - p;
      if (weight > 0.0) kraus.push_back(std::sqrt(weight) * w);
      w = w * clock;
    }
    xa = shift * xa;
  }
  return CPMap::from_kraus(std::move(kraus), true);
}

CPMap dephasing(double p) {
  check_unit_interval(p, "p");
  Matrix z(2, 2);
  z << 1.0, 0.0, 0.0, -1.0;
  std::vector<Matrix> kraus;
  kraus.push_back(std::sqrt(1.0 - p / 2.0) * Matrix::Identity(2, 2));
  if (p > 0.0) kraus.push_back(std::sqrt(p / 2.0) * z);
  return CPMap::from_kraus(std::move(kraus), true);
}

CPMap amplitude_damping(double gamma) {
  check_unit_interval(gamma, "gamma");
  Matrix k0 = Matrix::Zero(2, 2);
  Matrix k1 = Matrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - gamma);
  k1(0, 1) = std::sqrt(gamma);
  std::vector<Matrix> kraus{k0};
  if (gamma > 0.0) kraus.push_back(k1);
  return CPMap::from_kraus(std::move(kraus), true);
}

CPMap sandwich_map(const Matrix& weight) {
  return CPMap::from_kraus({linalg::fractional_power_psd(weight, 0.5)}, false);
}

namespace {

using nlohmann::json;

double require_number(const json& spec, const char* field) {
  if (!spec.contains(field)) {
    throw std::invalid_argument(std::string("channel spec: missing field \"") + field + "\"");
  }
  if (!spec[field].is_number()) {
    throw std::invalid_argument(std::string("channel spec: field \"") + field +
                                "\" must be a number");
  }
  return spec[field].get<double>();
}

Index require_dim(const json& spec, const char* field) {
  const double v = require_number(spec, field);
  if (v < 1.0 || v != std::floor(v)) {
    throw std::invalid_argument(std::string("channel spec: field \"") + field +
                                "\" must be a positive integer");
  }
  return static_cast<Index>(v);
}

Matrix parse_matrix(const json& rows, Index d_out, Index d_in) {
  if (!rows.is_array() || static_cast<Index>(rows.size()) != d_out) {
    throw std::invalid_argument(
        "channel spec: field \"matrices\" entries must have d_out rows");
  }
  Matrix k(d_out, d_in);
  for (Index r = 0; r < d_out; ++r) {
    const json& row = rows[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != d_in) {
      throw std::invalid_argument(
          "channel spec: field \"matrices\" rows must have d_in entries");
    }
    for (Index c = 0; c < d_in; ++c) {
      const json& entry = row[static_cast<size_t>(c)];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        throw std::invalid_argument(
            "channel spec: field \"matrices\" entries must be [re,im] pairs");
      }
      k(r, c) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return k;
}

}  // namespace

CPMap parse_channel_spec(const std::string& json_text) {
  json spec;
  try {
    spec = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("channel spec: invalid JSON: ") + e.what());
  }
  if (!spec.is_object()) {
    throw std::invalid_argument("channel spec: expected a JSON object");
  }
  if (!spec.contains("kind") || !spec["kind"].is_string()) {
    throw std::invalid_argument("channel spec: missing string field \"kind\"");
  }
  const std::string kind = spec["kind"].get<std::string>();
  if (kind == "identity") {
    return identity_channel(require_dim(spec, "dim"));
  }
  if (kind == "depolarizing") {
    const double p = require_number(spec, "p");
    const Index dim = spec.contains("dim") ? require_dim(spec, "dim") : 2;
    return depolarizing(p, dim);
  }
  if (kind == "dephasing") {
    return dephasing(require_number(spec, "p"));
  }
  if (kind == "amplitude_damping") {
    return amplitude_damping(require_number(spec, "gamma"));
  }
  if (kind == "kraus") {
    const Index d_in = require_dim(spec, "d_in");
    const Index d_out = require_dim(spec, "d_out");
    if (!spec.contains("matrices") || !spec["matrices"].is_array() || spec["matrices"].empty()) {
      throw std::invalid_argument(
          "channel spec: field \"matrices\" must be a nonempty array");
    }
    std::vector<Matrix> kraus;
    for (const json& rows : spec["matrices"]) {
      kraus.push_back(parse_matrix(rows, d_out, d_in));
    }
    // A custom Kraus list is accepted as trace preserving when it happens to
    // satisfy the normalization; otherwise it is kept as a general CP map.
    Matrix norm = Matrix::Zero(d_in, d_in);
    for (const Matrix& k : kraus) norm += k.adjoint() * k;
    const bool tp = max_abs(norm - Matrix::Identity(d_in, d_in)) <= 1e-10;
    return CPMap::from_kraus(std::move(kraus), tp);
  }
  throw std::invalid_argument("channel spec: unknown field \"kind\" value \"" + kind + "\"");
}

}  // namespace renyi::channels
