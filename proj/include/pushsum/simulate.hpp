#pragma once

#include <optional>
#include <vector>

#include "pushsum/linalg.hpp"
#include "pushsum/rng.hpp"
#include "pushsum/row_stochastic.hpp"

namespace pushsum {

/// One realization of K = (1 - q) I + q sum_i e_i e_{beta_i}^T, stored as the
/// recipient vector beta.
struct UpdateMatrix {
  double q = 0.0;
  std::vector<int> targets;

  std::size_t n() const noexcept { return targets.size(); }
  Matrix dense() const;
};

// Inverse-CDF sampler over the support of each row of P.
class RecipientSampler {
 public:
  explicit RecipientSampler(const RowStochastic& p);

  std::size_t n() const noexcept { return support_.size(); }
  UpdateMatrix sample(double q, Rng& rng) const;

 private:
  std::vector<std::vector<int>> support_;
  std::vector<std::vector<double>> cumulative_;
};

UpdateMatrix sample_update(const RowStochastic& p, double q, Rng& rng);

inline constexpr int kRenormalizeEvery = 50;
inline constexpr double kWeightFloor = 1e-300;

// x, w and a tracked product Y = Y_0 H(t). The stored y is scaled: the true
// tracked matrix is y * exp(log_scale). Rescaling is by powers of two, so it
// never perturbs the mantissas.
struct PushSumState {
  Vector x;
  Vector w;
  Matrix y;
  double log_scale = 0.0;
  int t = 0;

  // x(0) = x0, w(0) = 1, Y(0) = y0. Rows of y0 must be orthogonal to 1
  // (InvalidInput otherwise); advance() re-centers them after every step.
  static PushSumState start(const Vector& x0, const Matrix& y0);
  // Y(0) = I - J.
  static PushSumState start(const Vector& x0);

  // ||Y(t)||_F^2 on the true scale.
  double tracked_frobenius_sq() const;
};

// x^T <- x^T K, w^T <- w^T K, Y <- Y K (I - J), t <- t + 1 in O(N) per row.
// The exact Y K already has centered rows; the projection only strips rounding.
void advance(PushSumState& state, const UpdateMatrix& k);
PushSumState step(PushSumState state, const UpdateMatrix& k);

// Pulls a power of two out of y into log_scale.
void renormalize(PushSumState& state);

// max_i |x_i / w_i - xbar|. Throws WeightUnderflow when some w_i <= 1e-300.
double consensus_error(const PushSumState& state, double xbar);

// log max_i |x_i / w_i - xbar| computed through the tracked product instead of
// x, which stays accurate far below machine epsilon. Requires Y(0) = I - J.
double log_consensus_error(const PushSumState& state, const Vector& x0);

// Runs steps from y0 and returns
//   (1/t) log || (1/sqrt(rows)) Y(t) diag(w(t))^{-1} ||_F.
double empirical_rate_from(const RowStochastic& p, double q, int steps, const Matrix& y0, Rng& rng);

// Y(0) = I - J.
double empirical_rate_full(const RowStochastic& p, double q, int steps, Rng& rng);

// M uniform random unit rows in the orthogonal complement of 1.
Matrix random_centered_rows(std::size_t m, std::size_t n, Rng& rng);

// Y(0) = random_centered_rows(M, N); M defaults to floor(sqrt(N)).
double empirical_rate_reduced(const RowStochastic& p, double q, int steps,
                              std::optional<std::size_t> m_rows, Rng& rng);

std::size_t default_row_count(std::size_t n);
int default_steps(std::size_t n);

}  // namespace pushsum
