#pragma once

#include <vector>

#include "pushsum/row_stochastic.hpp"
#include "pushsum/spectral.hpp"

namespace pushsum {

// Second-moment operator calculus of the synchronous gossip update
// K = (1 - q) I + q L, L = sum_i e_i e_{beta_i}^T:
//   Phi(X)  = E[K X K^T]
//   Phi*(Y) = adjoint of Phi under <A, B> = Tr(A B^T)
// Both are evaluated from their closed forms.

/// Psi: diagonal of a square matrix.
Vector diag_of(const Matrix& x);
/// Psi^-: diagonal matrix from a vector.
Matrix diag_matrix(const Vector& v);

// Phi(X) = P_q X P_q^T + q^2 { Psi^-[P Psi(X)] - Psi^- Psi(P X P^T) }
Matrix phi_apply(const RowStochastic& p, double q, const Matrix& x);

// Phi*(Y) = P_q^T Y P_q + q^2 { Psi^-[P^T Psi(Y)] - P^T (Psi^- Psi Y) P }
Matrix phi_star_apply(const RowStochastic& p, double q, const Matrix& y);

// Entry s is Tr (Phi*)^s (I - J) = E ||(I - J) H(s)||_F^2, s = 0..steps.
std::vector<double> expected_contraction_trace(const RowStochastic& p, double q, int steps);

/// Eigenvalues mu of X_t = (Phi*)^t (I - J) for symmetric transitive P,
/// indexed like the spectrum. r is the common diagonal entry of X_t.
struct MuTrajectory {
  int t = 0;
  Vector mu;
  double r = 0.0;
};

// mu_0 = (0, 1, ..., 1); mu_{t+1,i} = lambda_{q,i}^2 mu_{t,i} + q^2 r_t (1 - lambda_i^2).
// Returns steps + 1 entries.
std::vector<MuTrajectory> mu_recursion(const Spectrum& spec, double q, int steps);

// D + (q^2 / N) b 1^T with D = diag(lambda_{q,i}^2), b_i = 1 - lambda_i^2.
Matrix mu_recursion_matrix(const Spectrum& spec, double q);

// E[K (x) K] as an N^2 x N^2 matrix acting on row-major vec(X), i.e. the
// matrix of Phi. Throws TooLarge when N^2 exceeds cap.
Matrix expected_kron_update(const RowStochastic& p, double q, std::size_t cap = kKronDimensionCap);

}  // namespace pushsum
