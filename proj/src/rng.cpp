#include "pushsum/rng.hpp"

namespace pushsum {

namespace {

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream) {
  // seed_seq's mixing is fully specified by the standard, so a given
  // (seed, stream) yields the same engine state everywhere.
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x70757368u};
  return std::mt19937_64(seq);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : engine_(seeded_engine(seed, stream)) {}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection keeps the result unbiased.
  const std::uint64_t limit = max() - (max() % bound);
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return r % bound;
}

double Rng::normal() { return normal_(engine_); }

}  // namespace pushsum
