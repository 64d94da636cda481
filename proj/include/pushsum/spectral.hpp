#pragma once

#include <cstddef>

#include "pushsum/linalg.hpp"

namespace pushsum {

inline constexpr double kSymmetryTolerance = 1e-10;
inline constexpr double kDecompositionResidual = 1e-8;
inline constexpr std::size_t kKronDimensionCap = 250 * 250;

/// Real spectrum of a symmetric matrix, sorted descending.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(Vector descending);

  std::size_t size() const noexcept { return static_cast<std::size_t>(lambdas_.size()); }
  const Vector& lambdas() const noexcept { return lambdas_; }
  double operator[](std::size_t i) const { return lambdas_[static_cast<Eigen::Index>(i)]; }

  /// Eigenvalues of P_q: (1 - q) + q * lambda_i, same order.
  Vector lazy(double q) const;

 private:
  Vector lambdas_;
};

// Symmetrizes (M + M^T) / 2 before decomposing. Throws InvalidInput on
// non-finite entries or asymmetry above kSymmetryTolerance.
Spectrum sym_eigenvalues(const Matrix& m);

// Largest eigenvalue modulus. Symmetric inputs go through the symmetric
// solver, everything else through a real Schur decomposition.
double spectral_radius(const Matrix& m);

bool is_symmetric(const Matrix& m, double tol = kSymmetryTolerance);

/// J = 11^T / n
Matrix averaging_projector(std::size_t n);

/// (I - J) M (I - J)
Matrix center(const Matrix& m);

// Block (i, j) of the result is a_ij * B. Throws TooLarge when the result
// dimension exceeds cap.
Matrix kron(const Matrix& a, const Matrix& b, std::size_t cap = kKronDimensionCap);

}  // namespace pushsum
