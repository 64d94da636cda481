#include "pushsum/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "pushsum/error.hpp"
#include "pushsum/spectral.hpp"

namespace pushsum {

Matrix UpdateMatrix::dense() const {
  const auto n = static_cast<Eigen::Index>(targets.size());
  Matrix k = (1.0 - q) * Matrix::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) k(i, targets[static_cast<std::size_t>(i)]) += q;
  return k;
}

RecipientSampler::RecipientSampler(const RowStochastic& p) : support_(p.n()), cumulative_(p.n()) {
  const Matrix& pm = p.matrix();
  for (Eigen::Index i = 0; i < pm.rows(); ++i) {
    double acc = 0.0;
    auto& sup = support_[static_cast<std::size_t>(i)];
    auto& cum = cumulative_[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < pm.cols(); ++j) {
      if (pm(i, j) > 0.0) {
        acc += pm(i, j);
        sup.push_back(static_cast<int>(j));
        cum.push_back(acc);
      }
    }
  }
}

UpdateMatrix RecipientSampler::sample(double q, Rng& rng) const {
  UpdateMatrix k;
  k.q = q;
  k.targets.resize(support_.size());
  for (std::size_t i = 0; i < support_.size(); ++i) {
    const auto& cum = cumulative_[i];
    const double u = rng.uniform() * cum.back();
    auto it = std::upper_bound(cum.begin(), cum.end(), u);
    if (it == cum.end()) --it;  // u can only reach cum.back() through rounding
    k.targets[i] = support_[i][static_cast<std::size_t>(it - cum.begin())];
  }
  return k;
}

UpdateMatrix sample_update(const RowStochastic& p, double q, Rng& rng) {
  return RecipientSampler(p).sample(q, rng);
}

PushSumState PushSumState::start(const Vector& x0, const Matrix& y0) {
  if (y0.cols() != x0.size()) throw Error(ErrorKind::DimensionMismatch, "Y(0) must have N columns");
  if (y0.size() > 0 && (y0.rowwise().sum().cwiseAbs().array() > 1e-9 * std::max(1.0, y0.norm())).any()) {
    throw Error(ErrorKind::InvalidInput, "rows of Y(0) must be orthogonal to 1");
  }
  PushSumState s;
  s.x = x0;
  s.w = Vector::Ones(x0.size());
  s.y = y0;
  return s;
}

PushSumState PushSumState::start(const Vector& x0) {
  const auto n = x0.size();
  return start(x0, Matrix::Identity(n, n) - averaging_projector(static_cast<std::size_t>(n)));
}

double PushSumState::tracked_frobenius_sq() const {
  return y.squaredNorm() * std::exp(2.0 * log_scale);
}

void renormalize(PushSumState& state) {
  const double peak = state.y.cwiseAbs().maxCoeff();
  if (peak == 0.0 || !std::isfinite(peak)) return;
  int exponent = 0;
  std::frexp(peak, &exponent);
  state.y *= std::ldexp(1.0, -exponent);
  state.log_scale += exponent * std::log(2.0);
}

void advance(PushSumState& state, const UpdateMatrix& k) {
  const auto n = static_cast<Eigen::Index>(k.n());
  if (state.x.size() != n || state.w.size() != n || state.y.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch, "state and update have different sizes");
  }
  const double stay = 1.0 - k.q;
  Vector x = stay * state.x;
  Vector w = stay * state.w;
  Matrix y = stay * state.y;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index j = k.targets[static_cast<std::size_t>(i)];
    x[j] += k.q * state.x[i];
    w[j] += k.q * state.w[i];
    y.col(j) += k.q * state.y.col(i);
  }
  // Y 1 is conserved by K, so rounding error along 1 never decays while the
  // rest of Y does; left alone it takes over after a few renormalizations.
  y.colwise() -= y.rowwise().mean();
  state.x.swap(x);
  state.w.swap(w);
  state.y.swap(y);
  ++state.t;
  if (state.t % kRenormalizeEvery == 0) renormalize(state);
}

PushSumState step(PushSumState state, const UpdateMatrix& k) {
  advance(state, k);
  return state;
}

namespace {

void require_weights(const PushSumState& state) {
  if (state.w.size() > 0 && state.w.minCoeff() <= kWeightFloor) {
    throw Error(ErrorKind::WeightUnderflow, "weight fell to " + std::to_string(state.w.minCoeff()) +
                                                " at t = " + std::to_string(state.t));
  }
}

}  // namespace

double consensus_error(const PushSumState& state, double xbar) {
  require_weights(state);
  return (state.x.array() / state.w.array() - xbar).abs().maxCoeff();
}

double log_consensus_error(const PushSumState& state, const Vector& x0) {
  require_weights(state);
  // x(t)^T - xbar w(t)^T = x0^T (I - J) H(t)
  const Vector deviation = state.y.transpose() * x0;
  const double peak = (deviation.array() / state.w.array()).abs().maxCoeff();
  return std::log(peak) + state.log_scale;
}

double empirical_rate_from(const RowStochastic& p, double q, int steps, const Matrix& y0, Rng& rng) {
  if (steps < 1) throw Error(ErrorKind::InvalidParameters, "rate estimation needs t >= 1");
  const bool lazy_ok = q > 0.0 && q < 1.0;
  if (!(lazy_ok || (q == 1.0 && p.has_positive_diagonal()))) {
    throw Error(ErrorKind::InvalidParameters,
                "rate estimation needs q in (0, 1), or q = 1 with a positive diagonal of P");
  }
  if (static_cast<std::size_t>(y0.cols()) != p.n() || y0.rows() == 0) {
    throw Error(ErrorKind::DimensionMismatch, "Y(0) must be M x N with M >= 1");
  }
  const RecipientSampler sampler(p);
  PushSumState state = PushSumState::start(Vector::Zero(y0.cols()), y0);
  for (int s = 0; s < steps; ++s) {
    advance(state, sampler.sample(q, rng));
    if (state.t % kRenormalizeEvery == 0) require_weights(state);
  }
  require_weights(state);
  const Matrix weighted = state.y.array().rowwise() / state.w.transpose().array();
  const double log_norm = std::log(weighted.norm()) - 0.5 * std::log(static_cast<double>(y0.rows()));
  return (log_norm + state.log_scale) / static_cast<double>(steps);
}

double empirical_rate_full(const RowStochastic& p, double q, int steps, Rng& rng) {
  const auto n = static_cast<Eigen::Index>(p.n());
  return empirical_rate_from(p, q, steps, Matrix::Identity(n, n) - averaging_projector(p.n()), rng);
}

Matrix random_centered_rows(std::size_t m, std::size_t n, Rng& rng) {
  if (n < 2) throw Error(ErrorKind::InvalidParameters, "need N >= 2 for a non-trivial 1-orthogonal row");
  Matrix rows(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  for (Eigen::Index r = 0; r < rows.rows(); ++r) {
    double norm = 0.0;
    do {
      for (Eigen::Index c = 0; c < rows.cols(); ++c) rows(r, c) = rng.normal();
      rows.row(r).array() -= rows.row(r).mean();
      norm = rows.row(r).norm();
    } while (norm == 0.0);
    rows.row(r) /= norm;
  }
  return rows;
}

double empirical_rate_reduced(const RowStochastic& p, double q, int steps,
                              std::optional<std::size_t> m_rows, Rng& rng) {
  const std::size_t m = m_rows.value_or(default_row_count(p.n()));
  if (m < 1 || m > p.n()) throw Error(ErrorKind::InvalidParameters, "row count must satisfy 1 <= M <= N");
  const Matrix y0 = random_centered_rows(m, p.n(), rng);
  return empirical_rate_from(p, q, steps, y0, rng);
}

std::size_t default_row_count(std::size_t n) {
  auto m = static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(n))));
  while ((m + 1) * (m + 1) <= n) ++m;
  while (m * m > n) --m;
  return std::max<std::size_t>(m, 1);
}

int default_steps(std::size_t n) { return n <= 120 ? 500 : 1000; }

}  // namespace pushsum
