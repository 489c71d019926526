#pragma once

#include <optional>

#include "parhiggs/lambda_connection.hpp"
#include "parhiggs/sampling.hpp"

namespace parhiggs::testing {

// (a, -4 - a) with a in [-2, -2 + max_gap], so a >= b.
SplitType random_split(Sampler& rng, int max_gap);

// Flags are an axis with probability 1/4 each, otherwise a small random ratio.
ParabolicRank2Bundle random_bundle(Sampler& rng, SplitType split, const WeightVector& alpha,
                                   const MarkedDivisor& divisor = MarkedDivisor::standard());

struct ConnectionOptions {
  int height = 3;
  int max_den = 3;
  // Forces N A21 = 1, as for the Hitchin section of the twisted bundle.
  bool unit_lower = false;
  // Forces A12 = 0, making the second summand invariant.
  bool upper_zero = false;
  // Forces N A11 = 0 (with λ = 0 and upper_zero this gives a nilpotent field).
  bool diagonal_zero = false;
};

// Uniform random member of the affine space of λ-connections on `bundle` with the given options;
// empty when the constraints are inconsistent.
std::optional<LambdaConnection> random_connection(Sampler& rng, const GaussianRational& lambda,
                                                  const ParabolicRank2Bundle& bundle,
                                                  const ConnectionOptions& options = {});

}  // namespace parhiggs::testing
