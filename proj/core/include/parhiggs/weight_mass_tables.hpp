#pragma once

#include <array>

#include "parhiggs/gaussian_rational.hpp"
#include "parhiggs/parabolic.hpp"

namespace parhiggs {

struct WeightMassPair {
  std::array<Rational, kPointCount> alpha;
  std::array<GaussianRational, kPointCount> mu;

  friend bool operator==(const WeightMassPair&, const WeightMassPair&) = default;
};

// Transformed pair with weights moved into [0, 1); carry[i] = floor of the raw weight,
// the shift of the underlying bundle degree.
struct TransformedPair {
  WeightMassPair pair;
  std::array<Integer, kPointCount> carry;

  friend bool operator==(const TransformedPair&, const TransformedPair&) = default;
};

// β = α - 2 Re(μ̄), ν = α + μ - μ̄
TransformedPair nah_transform(const WeightMassPair& in);
// β = α - 2 Re(λ μ̄), ν = λ α + μ - λ μ̄
TransformedPair lambda_transform(const WeightMassPair& in, const GaussianRational& lambda);
// β = α - Re(ħ R² μ̄), ν = ħ α + μ - ħ R² μ̄.
// The weight shift has no factor 2 here, unlike lambda_transform at λ = ħR²; kept as tabulated.
TransformedPair cl_family_transform(const WeightMassPair& in, const GaussianRational& hbar, const Rational& r);
// β = α, ν = ħ α + μ
TransformedPair cl_transform(const WeightMassPair& in, const GaussianRational& hbar);

}  // namespace parhiggs
