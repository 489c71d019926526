#include "parhiggs/cone_geometry.hpp"

#include "parhiggs/errors.hpp"

namespace parhiggs {

ConeAngleProfile cone_angles(const WeightVector& alpha, PointSubset subset) {
  ConeAngleProfile out;
  for (std::size_t i = 0; i < kPointCount; ++i) {
    out.marked[i] = subset.contains(i) ? Rational(2) * (1 - 2 * alpha[i]) : Rational(4) * alpha[i];
  }
  if (subset.size() % 2 == 1) out.unmarked.push_back(Rational(4));
  return out;
}

Rational hyperbolic_area(const ConeAngleProfile& profile) {
  Rational deficit = 0;
  for (const auto& theta : profile.marked) deficit += 2 - theta;
  for (const auto& theta : profile.unmarked) deficit += 2 - theta;
  Rational area = (deficit - 4) / 4;
  if (area <= 0) {
    throw NegativeArea("cone deficits sum to " + to_string(deficit) + "π, need more than 4π");
  }
  return area;
}

std::vector<Rational> gamma_weights(const WeightVector& alpha, PointSubset subset) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < kPointCount; ++i) {
    out.push_back(subset.contains(i) ? 2 * alpha[i] : 1 - 2 * alpha[i]);
  }
  return out;
}

ParabolicLineBundle k_gamma(const WeightVector& alpha, PointSubset subset) {
  return {-2, gamma_weights(alpha, subset)};
}

Rational k_gamma_half_par_degree(const WeightVector& alpha, PointSubset subset) {
  Rational out = -1;
  for (const auto& g : gamma_weights(alpha, subset)) out += g / 2;
  return out;
}

}  // namespace parhiggs
