#pragma once

#include "pushsum/graph.hpp"
#include "pushsum/linalg.hpp"

namespace pushsum {

/// Message-recipient probability matrix P: entry (i, j) is the probability
/// that node i sends its message to node j.
class RowStochastic {
 public:
  static constexpr double kRowSumTolerance = 1e-12;

  // Throws Error(InvalidInput) if the matrix is not square, has negative or
  // non-finite entries, or a row sum differs from 1 by more than the tolerance.
  explicit RowStochastic(Matrix p);

  std::size_t n() const noexcept { return static_cast<std::size_t>(p_.rows()); }
  const Matrix& matrix() const noexcept { return p_; }
  double operator()(std::size_t i, std::size_t j) const { return p_(i, j); }

  /// (1 - q) I + q P
  Matrix lazy(double q) const;

  bool is_symmetric(double tol = 1e-12) const;
  bool has_positive_diagonal() const;

  // Every positive entry corresponds to an edge of g.
  bool supported_on(const Graph& g) const;

 private:
  Matrix p_;
};

/// D^{-1} A: each vertex picks a recipient uniformly among its out-neighbours.
/// Throws Error(InvalidGraph) on a vertex without out-neighbours.
RowStochastic uniform_transition(const Graph& g);

/// Column sums of P, the diagonal of Gamma.
Vector gamma_diag(const RowStochastic& p);

}  // namespace pushsum
