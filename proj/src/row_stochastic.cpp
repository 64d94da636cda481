#include "pushsum/row_stochastic.hpp"

#include <cmath>

#include "pushsum/error.hpp"

namespace pushsum {

RowStochastic::RowStochastic(Matrix p) : p_(std::move(p)) {
  if (p_.rows() != p_.cols() || p_.rows() == 0) {
    throw Error(ErrorKind::InvalidInput, "transition matrix must be square and non-empty");
  }
  for (Eigen::Index i = 0; i < p_.rows(); ++i) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < p_.cols(); ++j) {
      const double v = p_(i, j);
      if (!std::isfinite(v) || v < 0.0) {
        throw Error(ErrorKind::InvalidInput, "transition matrix entry (" + std::to_string(i) +
                                                 ", " + std::to_string(j) + ") is not a probability");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance) {
      throw Error(ErrorKind::InvalidInput, "row " + std::to_string(i) + " sums to " + std::to_string(sum));
    }
  }
}

Matrix RowStochastic::lazy(double q) const {
  return (1.0 - q) * Matrix::Identity(p_.rows(), p_.cols()) + q * p_;
}

bool RowStochastic::is_symmetric(double tol) const {
  return (p_ - p_.transpose()).cwiseAbs().maxCoeff() <= tol;
}

bool RowStochastic::has_positive_diagonal() const {
  return (p_.diagonal().array() > 0.0).all();
}

bool RowStochastic::supported_on(const Graph& g) const {
  if (g.n() != n()) return false;
  for (Eigen::Index i = 0; i < p_.rows(); ++i) {
    for (Eigen::Index j = 0; j < p_.cols(); ++j) {
      if (p_(i, j) > 0.0 && !g.has_edge(static_cast<int>(i), static_cast<int>(j))) return false;
    }
  }
  return true;
}

RowStochastic uniform_transition(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.n());
  Matrix p = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < g.n(); ++i) {
    const auto& nbrs = g.neighbors(i);
    if (nbrs.empty()) {
      throw Error(ErrorKind::InvalidGraph, "vertex " + std::to_string(i) + " has no out-neighbour");
    }
    const double w = 1.0 / static_cast<double>(nbrs.size());
    for (int j : nbrs) p(static_cast<Eigen::Index>(i), j) = w;
  }
  return RowStochastic(std::move(p));
}

Vector gamma_diag(const RowStochastic& p) {
  return p.matrix().colwise().sum().transpose();
}

}  // namespace pushsum
