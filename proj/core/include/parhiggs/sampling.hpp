#pragma once

#include <cstdint>
#include <random>

#include "parhiggs/gaussian_rational.hpp"
#include "parhiggs/parabolic.hpp"

namespace parhiggs {

// Portable pseudorandom source: x <- 6364136223846793005 x + 1442695040888963407 (mod 2^64),
// output the high 32 bits. Integer draws use rejection, so sequences are identical on every platform.
class Sampler {
 public:
  using Engine = std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0>;

  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::uint32_t next() { return static_cast<std::uint32_t>(engine_() >> 32); }
  // Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return uniform(0, 1) == 1; }

  // num/den with den in [1, max_den] and |num/den| <= height.
  Rational rational(int height, int max_den);
  GaussianRational gaussian(int height, int max_den);
  // Entry of (0, 1/2) with denominator in [3, max_den].
  Rational weight(int max_den);
  WeightVector weights(int max_den);
  // Redraws until no wall vanishes.
  WeightVector generic_weights(int max_den);

 private:
  Engine engine_;
};

}  // namespace parhiggs
