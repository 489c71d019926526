#pragma once

#include <array>
#include <vector>

#include "parhiggs/parabolic.hpp"

namespace parhiggs {

// Cone angles of a curvature -4 metric, stored as rational multiples of π.
struct ConeAngleProfile {
  std::array<Rational, kPointCount> marked;  // in (0, 2)
  // Unmarked cone points: the simple zero of φ0 when |I| is odd contributes angle 4π.
  std::vector<Rational> unmarked;
  static constexpr int kCurvature = -4;
};

// 2π(1 - 2α_i) on I, 4πα_i off I.
ConeAngleProfile cone_angles(const WeightVector& alpha, PointSubset subset);

// (Σ(2π - θ) - 4π) / 4 as a multiple of π. Throws NegativeArea when not positive.
Rational hyperbolic_area(const ConeAngleProfile& profile);

// γ = 2α on I, 1 - 2α off I.
std::vector<Rational> gamma_weights(const WeightVector& alpha, PointSubset subset);
// K(γ) = O(-2)(γ).
ParabolicLineBundle k_gamma(const WeightVector& alpha, PointSubset subset);
// Parabolic degree of K(γ)^{1/2} = O(-1)(γ/2).
Rational k_gamma_half_par_degree(const WeightVector& alpha, PointSubset subset);

}  // namespace parhiggs
