#include "pushsum/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pushsum/error.hpp"

namespace pushsum {

namespace {

void require_finite(const Matrix& m) {
  if (!m.allFinite()) throw Error(ErrorKind::InvalidInput, "matrix has non-finite entries");
}

void require_square(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
}

}  // namespace

Spectrum::Spectrum(Vector descending) : lambdas_(std::move(descending)) {}

Vector Spectrum::lazy(double q) const {
  return ((1.0 - q) + q * lambdas_.array()).matrix();
}

bool is_symmetric(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return m.size() == 0 || (m - m.transpose()).cwiseAbs().maxCoeff() <= tol;
}

Spectrum sym_eigenvalues(const Matrix& m) {
  require_square(m);
  require_finite(m);
  if (!is_symmetric(m)) throw Error(ErrorKind::InvalidInput, "matrix is not symmetric");
  const Matrix sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::NumericalFailure, "symmetric eigensolver did not converge");
  }
  // Eigen returns ascending order; a stable sort keeps ties in solver order.
  const Vector& ascending = solver.eigenvalues();
  std::vector<double> values(ascending.data(), ascending.data() + ascending.size());
  std::stable_sort(values.begin(), values.end(), std::greater<>());
  return Spectrum(Eigen::Map<Vector>(values.data(), static_cast<Eigen::Index>(values.size())));
}

double spectral_radius(const Matrix& m) {
  require_square(m);
  require_finite(m);
  if (m.size() == 0) return 0.0;
  if (is_symmetric(m)) {
    const Spectrum s = sym_eigenvalues(m);
    return std::max(std::abs(s[0]), std::abs(s[s.size() - 1]));
  }
  Eigen::EigenSolver<Matrix> solver;
  // RealSchur caps iterations at (max_iterations * n); 10 n^2 sweeps total.
  solver.setMaxIterations(10 * static_cast<Eigen::Index>(m.rows()));
  solver.compute(m, false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::NumericalFailure, "real Schur iteration did not converge");
  }
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

Matrix averaging_projector(std::size_t n) {
  const auto dim = static_cast<Eigen::Index>(n);
  return Matrix::Constant(dim, dim, 1.0 / static_cast<double>(n));
}

Matrix center(const Matrix& m) {
  require_square(m);
  // (I - J) M (I - J) = M - row means - column means + grand mean.
  const Vector row_mean = m.rowwise().mean();
  const Eigen::RowVectorXd col_mean = m.colwise().mean();
  const double grand = m.mean();
  Matrix out = m;
  out.colwise() -= row_mean;
  out.rowwise() -= col_mean;
  out.array() += grand;
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b, std::size_t cap) {
  require_square(a);
  require_square(b);
  const auto na = static_cast<std::size_t>(a.rows());
  const auto nb = static_cast<std::size_t>(b.rows());
  if (na * nb > cap) {
    throw Error(ErrorKind::TooLarge, "Kronecker dimension " + std::to_string(na * nb) +
                                         " exceeds cap " + std::to_string(cap));
  }
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace pushsum
