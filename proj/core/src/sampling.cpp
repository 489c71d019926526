#include "parhiggs/sampling.hpp"

#include "parhiggs/chambers.hpp"
#include "parhiggs/errors.hpp"

namespace parhiggs {

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InvalidInput("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span > (1ULL << 32)) throw InvalidInput("sampling range exceeds 32 bits");
  const std::uint64_t limit = (1ULL << 32) - (1ULL << 32) % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

Rational Sampler::rational(int height, int max_den) {
  std::int64_t den = uniform(1, max_den);
  std::int64_t num = uniform(-height * den, height * den);
  return Rational(num, den);
}

GaussianRational Sampler::gaussian(int height, int max_den) {
  Rational re = rational(height, max_den);
  return {re, rational(height, max_den)};
}

Rational Sampler::weight(int max_den) {
  if (max_den < 3) throw InvalidInput("weights need denominators of at least 3");
  std::int64_t den = uniform(3, max_den);
  return Rational(uniform(1, (den - 1) / 2), den);
}

WeightVector Sampler::weights(int max_den) {
  Rational a = weight(max_den);
  Rational b = weight(max_den);
  Rational c = weight(max_den);
  return WeightVector({a, b, c, weight(max_den)});
}

WeightVector Sampler::generic_weights(int max_den) {
  for (;;) {
    WeightVector alpha = weights(max_den);
    if (is_generic(alpha)) return alpha;
  }
}

}  // namespace parhiggs
