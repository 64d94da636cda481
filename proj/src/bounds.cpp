#include "pushsum/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pushsum/error.hpp"
#include "pushsum/operator.hpp"

namespace pushsum {

namespace {

constexpr double kNonContractiveSlack = 1e-12;
constexpr double kUnitEigenvalueTolerance = 1e-10;

void check_q(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw Error(ErrorKind::InvalidParameters, "q must lie in [0, 1]");
}

}  // namespace

const char* to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::General: return "general";
    case BoundKind::Symmetric: return "symmetric";
    case BoundKind::Transitive: return "transitive";
    case BoundKind::CompleteClosedForm: return "complete_closed_form";
    case BoundKind::Eta: return "eta";
  }
  return "unknown";
}

RateBound rate_from_log_argument(BoundKind kind, double argument) {
  RateBound b;
  b.kind = kind;
  if (std::isnan(argument)) throw Error(ErrorKind::NumericalFailure, "bound argument is NaN");
  if (argument <= 0.0) {
    b.value = -std::numeric_limits<double>::infinity();
    return b;
  }
  b.value = 0.5 * std::log(argument);
  if (argument >= 1.0 - kNonContractiveSlack) {
    b.applicable = false;
    b.reason = "non-contractive";
  }
  return b;
}

Matrix contraction_matrix(const RowStochastic& p, double q) {
  check_q(q);
  const Matrix& pm = p.matrix();
  const Matrix pq = p.lazy(q);
  Matrix b = pq.transpose() * pq - q * q * (pm.transpose() * pm);
  b.diagonal() += q * q * gamma_diag(p);
  return 0.5 * (b + b.transpose());
}

RateBound bound_general(const RowStochastic& p, double q) {
  const Matrix centered = center(contraction_matrix(p, q));
  return rate_from_log_argument(BoundKind::General, spectral_radius(0.5 * (centered + centered.transpose())));
}

RateBound bound_symmetric(double lambda2, double q) {
  check_q(q);
  if (!(lambda2 >= -1.0 - kUnitEigenvalueTolerance && lambda2 <= 1.0 + kUnitEigenvalueTolerance)) {
    throw Error(ErrorKind::InvalidParameters, "lambda2 must lie in [-1, 1]");
  }
  const double arg = (1.0 - q) * (1.0 - q) + 2.0 * q * (1.0 - q) * lambda2 + q * q;
  return rate_from_log_argument(BoundKind::Symmetric, arg);
}

double transitive_root(const Spectrum& spec, double q) {
  check_q(q);
  const std::size_t n = spec.size();
  if (n < 2) throw Error(ErrorKind::InvalidSpectrum, "spectrum needs at least two eigenvalues");
  if (std::abs(spec[0] - 1.0) > kUnitEigenvalueTolerance) {
    throw Error(ErrorKind::InvalidSpectrum, "leading eigenvalue is " + std::to_string(spec[0]) + ", not 1");
  }
  const Vector lazy = spec.lazy(q);
  const double c = q * q / static_cast<double>(n);

  // e_1 is a left eigenvector (eigenvalue 1) of D + c b 1^T, so {y_1 = 0} is
  // invariant and the remaining roots are the eigenvalues of the trailing
  // block D' + c b' 1^T. Rows with b_i = 0 contribute a_i directly; on the
  // rest, diag(sqrt b)^{-1} (D + c b 1^T) diag(sqrt b) = D + c sqrt(b) sqrt(b)^T.
  double best = -std::numeric_limits<double>::infinity();
  std::vector<double> a_active;
  std::vector<double> sqrt_b;
  for (std::size_t i = 1; i < n; ++i) {
    const double a = lazy[static_cast<Eigen::Index>(i)] * lazy[static_cast<Eigen::Index>(i)];
    const double b = std::max(0.0, 1.0 - spec[i] * spec[i]);
    if (b == 0.0 || c == 0.0) {
      best = std::max(best, a);
    } else {
      a_active.push_back(a);
      sqrt_b.push_back(std::sqrt(b));
    }
  }
  if (!a_active.empty()) {
    const auto m = static_cast<Eigen::Index>(a_active.size());
    const Eigen::Map<const Vector> a(a_active.data(), m);
    const Eigen::Map<const Vector> s(sqrt_b.data(), m);
    Matrix update = c * s * s.transpose();
    update.diagonal() += a;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(update, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw Error(ErrorKind::NumericalFailure, "rank-one update eigensolve did not converge");
    }
    best = std::max(best, solver.eigenvalues()[m - 1]);
  }
  return best;
}

RateBound bound_transitive(const Spectrum& spec, double q) {
  return rate_from_log_argument(BoundKind::Transitive, transitive_root(spec, q));
}

RateBound bound_complete(std::size_t n, double q) {
  check_q(q);
  if (n < 2) throw Error(ErrorKind::InvalidParameters, "complete graph needs n >= 2");
  const double arg = (1.0 - q) * (1.0 - q) + q * q * (1.0 - 1.0 / static_cast<double>(n));
  return rate_from_log_argument(BoundKind::CompleteClosedForm, arg);
}

RateBound bound_eta(const RowStochastic& p, double q, std::size_t cap) {
  Matrix m = expected_kron_update(p, q, cap);
  const auto n = static_cast<Eigen::Index>(p.n());
  // Left-multiplying by (I - J) (x) (I - J) centers every column viewed as an
  // n x n matrix (the reshape is transposed, which centering commutes with).
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    Eigen::Map<Matrix> block(m.col(col).data(), n, n);
    block = center(block);
  }
  const double rho = spectral_radius(m);
  // Round-off floor of the Schur decomposition; a nilpotent product would
  // otherwise show up as a tiny positive radius.
  const double floor = 1e-13 * std::max(1.0, m.cwiseAbs().rowwise().sum().maxCoeff());
  return rate_from_log_argument(BoundKind::Eta, rho <= floor ? 0.0 : rho);
}

}  // namespace pushsum
