#pragma once

#include <string>

#include "pushsum/row_stochastic.hpp"
#include "pushsum/spectral.hpp"

namespace pushsum {

enum class BoundKind { General, Symmetric, Transitive, CompleteClosedForm, Eta };

const char* to_string(BoundKind kind);

// Upper bound on the almost-sure rate, natural log per step. A log argument
// of 1 or more means the bound says nothing; such values are kept but marked
// applicable = false with reason "non-contractive". A zero argument maps to
// -infinity.
struct RateBound {
  BoundKind kind = BoundKind::General;
  double value = 0.0;
  bool applicable = true;
  std::string reason;
};

// Builds a RateBound from the quantity under the square-root-of-log.
RateBound rate_from_log_argument(BoundKind kind, double argument);

// B_q = P_q^T P_q + q^2 (Gamma - P^T P)
Matrix contraction_matrix(const RowStochastic& p, double q);

// 1/2 log rho((I - J) B_q (I - J))
RateBound bound_general(const RowStochastic& p, double q);

// 1/2 log((1 - q)^2 + 2 q (1 - q) lambda2 + q^2)
RateBound bound_symmetric(double lambda2, double q);

// Largest root xi_1 of the reduced characteristic polynomial of the
// mu-recursion. Computed as an eigenvalue of the recursion matrix restricted
// to the invariant subspace {y_1 = 0}; that restriction is a diagonal plus
// rank-one matrix which is symmetrized by diag(sqrt(b)) before decomposing.
// Throws InvalidSpectrum if lambda_1 differs from 1 by more than 1e-10.
double transitive_root(const Spectrum& spec, double q);

// 1/2 log xi_1
RateBound bound_transitive(const Spectrum& spec, double q);

// 1/2 log((1 - q)^2 + q^2 (1 - 1/n)), the transitive bound for P = J.
RateBound bound_complete(std::size_t n, double q);

// 1/2 log rho((I - J)^{(x)2} E[K^{(x)2}]); N^2-dimensional, non-symmetric.
RateBound bound_eta(const RowStochastic& p, double q, std::size_t cap = kKronDimensionCap);

}  // namespace pushsum
