#include "pushsum/operator.hpp"

#include <cmath>
#include <utility>

#include "pushsum/error.hpp"

namespace pushsum {

namespace {

void check_operands(const RowStochastic& p, double q, const Matrix& x) {
  if (x.rows() != x.cols() || static_cast<std::size_t>(x.rows()) != p.n()) {
    throw Error(ErrorKind::DimensionMismatch, "operand is " + std::to_string(x.rows()) + "x" +
                                                  std::to_string(x.cols()) + ", P is " +
                                                  std::to_string(p.n()) + "x" + std::to_string(p.n()));
  }
  if (!(q >= 0.0 && q <= 1.0)) throw Error(ErrorKind::InvalidParameters, "q must lie in [0, 1]");
}

}  // namespace

Vector diag_of(const Matrix& x) { return x.diagonal(); }

Matrix diag_matrix(const Vector& v) { return v.asDiagonal(); }

Matrix phi_apply(const RowStochastic& p, double q, const Matrix& x) {
  check_operands(p, q, x);
  const Matrix& pm = p.matrix();
  const Matrix pq = p.lazy(q);
  // Psi(P X P^T)_i = sum_{j,l} p_ij x_jl p_il
  const Vector pxp_diag = ((pm * x).array() * pm.array()).rowwise().sum();
  const Vector correction = pm * diag_of(x) - pxp_diag;
  Matrix out = pq * x * pq.transpose();
  out.diagonal() += q * q * correction;
  return out;
}

Matrix phi_star_apply(const RowStochastic& p, double q, const Matrix& y) {
  check_operands(p, q, y);
  const Matrix& pm = p.matrix();
  const Matrix pq = p.lazy(q);
  const Vector ydiag = diag_of(y);
  Matrix out = pq.transpose() * y * pq;
  out -= q * q * (pm.transpose() * ydiag.asDiagonal() * pm);
  out.diagonal() += q * q * (pm.transpose() * ydiag);
  return out;
}

std::vector<double> expected_contraction_trace(const RowStochastic& p, double q, int steps) {
  if (steps < 0) throw Error(ErrorKind::InvalidParameters, "steps must be non-negative");
  const auto n = static_cast<Eigen::Index>(p.n());
  Matrix x = Matrix::Identity(n, n) - averaging_projector(p.n());
  std::vector<double> traces;
  traces.reserve(static_cast<std::size_t>(steps) + 1);
  traces.push_back(x.trace());
  for (int s = 0; s < steps; ++s) {
    x = phi_star_apply(p, q, x);
    traces.push_back(x.trace());
  }
  return traces;
}

namespace {

// lambda_{q,i}^2 and b_i = 1 - lambda_i^2. The leading eigenvalue is pinned to
// exactly 1 (its mu stays 0), and b is clamped at 0 against eigensolver
// round-off at |lambda| = 1.
std::pair<Vector, Vector> recursion_coefficients(const Spectrum& spec, double q) {
  Vector decay = spec.lazy(q).array().square();
  Vector b = (1.0 - spec.lambdas().array().square()).cwiseMax(0.0);
  if (spec.size() > 0 && std::abs(spec[0] - 1.0) <= 1e-10) {
    decay[0] = 1.0;
    b[0] = 0.0;
  }
  return {decay, b};
}

}  // namespace

std::vector<MuTrajectory> mu_recursion(const Spectrum& spec, double q, int steps) {
  if (steps < 0) throw Error(ErrorKind::InvalidParameters, "steps must be non-negative");
  const Eigen::Index n = spec.lambdas().size();
  const auto [decay, b] = recursion_coefficients(spec, q);
  const Vector gain = q * q * b;

  std::vector<MuTrajectory> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  Vector mu = Vector::Ones(n);
  if (n > 0) mu[0] = 0.0;
  for (int t = 0; t <= steps; ++t) {
    const double r = n > 0 ? mu.mean() : 0.0;
    out.push_back({t, mu, r});
    mu = decay.cwiseProduct(mu) + r * gain;
  }
  return out;
}

Matrix mu_recursion_matrix(const Spectrum& spec, double q) {
  const Eigen::Index n = spec.lambdas().size();
  const auto [decay, b] = recursion_coefficients(spec, q);
  Matrix m = (q * q / static_cast<double>(n)) * b * Vector::Ones(n).transpose();
  m.diagonal() += decay;
  return m;
}

Matrix expected_kron_update(const RowStochastic& p, double q, std::size_t cap) {
  if (!(q >= 0.0 && q <= 1.0)) throw Error(ErrorKind::InvalidParameters, "q must lie in [0, 1]");
  const std::size_t n = p.n();
  if (n * n > cap) {
    throw Error(ErrorKind::TooLarge, "E[K (x) K] dimension " + std::to_string(n * n) +
                                         " exceeds cap " + std::to_string(cap));
  }
  const Matrix& pm = p.matrix();
  const auto dim = static_cast<Eigen::Index>(n);
  const Matrix eye = Matrix::Identity(dim, dim);

  Matrix e = (1.0 - q) * (1.0 - q) * Matrix::Identity(dim * dim, dim * dim);
  e += q * (1.0 - q) * (kron(eye, pm, cap) + kron(pm, eye, cap));
  e += q * q * kron(pm, pm, cap);
  // A node's own message goes to one recipient, so on the diagonal blocks
  // (i, i) the product measure p_ij p_ij' is replaced by p_ij on j = j'.
  const double q2 = q * q;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Eigen::Index row = i * dim + i;
    for (Eigen::Index j = 0; j < dim; ++j) {
      const double pij = pm(i, j);
      if (pij == 0.0) continue;
      e(row, j * dim + j) += q2 * pij;
      for (Eigen::Index jj = 0; jj < dim; ++jj) {
        e(row, j * dim + jj) -= q2 * pij * pm(i, jj);
      }
    }
  }
  return e;
}

}  // namespace pushsum
