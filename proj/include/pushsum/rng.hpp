#pragma once

#include <cstdint>
#include <random>

namespace pushsum {

// Deterministic generator addressed by (seed, stream). Independent runs use
// distinct streams so results do not depend on scheduling.
class Rng {
 public:
  using result_type = std::mt19937_64::result_type;

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  double normal();

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

}  // namespace pushsum
