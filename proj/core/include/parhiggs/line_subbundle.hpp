#pragma once

#include <compare>

#include "parhiggs/parabolic.hpp"

namespace parhiggs {

// Saturated line subbundle O(d) -> O(a) ⊕ O(b), z ↦ (u, v) with gcd(u, v) = 1,
// deg u <= a - d, deg v <= b - d and equality in at least one slot.
class LineSubbundle {
 public:
  // Saturation of the direction (x, y), with x, y rational functions not both zero.
  static LineSubbundle saturate(const RationalFunction& x, const RationalFunction& y, SplitType split);
  static LineSubbundle first_summand(SplitType split);
  static LineSubbundle second_summand(SplitType split);

  int degree() const { return degree_; }
  const Polynomial& u() const { return u_; }
  const Polynomial& v() const { return v_; }

  ProjectivePoint fiber(const GaussianRational& p) const;
  bool passes_through(const ParabolicRank2Bundle& bundle, std::size_t i) const;

  friend bool operator==(const LineSubbundle&, const LineSubbundle&) = default;

 private:
  LineSubbundle(int degree, Polynomial u, Polynomial v) : degree_(degree), u_(std::move(u)), v_(std::move(v)) {}
  int degree_ = 0;
  Polynomial u_;
  Polynomial v_;
};

// Larger degree first, then lexicographic coefficients.
std::strong_ordering certificate_order(const LineSubbundle& a, const LineSubbundle& b);

Rational induced_sub_weight(const ParabolicRank2Bundle& bundle, const LineSubbundle& line, std::size_t i);
ParabolicLineBundle induced_sub_bundle(const ParabolicRank2Bundle& bundle, const LineSubbundle& line);
ParabolicLineBundle induced_quotient_bundle(const ParabolicRank2Bundle& bundle, const LineSubbundle& line);

// Coefficient vector layout [u_0..u_{a-d}, v_0..v_{b-d}] for sections of O(a-d) ⊕ O(b-d).
struct SectionSpace {
  SplitType split;
  int degree;
  int u_terms() const { return split.a - degree + 1 > 0 ? split.a - degree + 1 : 0; }
  int v_terms() const { return split.b - degree + 1 > 0 ? split.b - degree + 1 : 0; }
  int dimension() const { return u_terms() + v_terms(); }
};

std::pair<Polynomial, Polynomial> unpack_section(const SectionSpace& space, std::span<const GaussianRational> coeffs);

}  // namespace parhiggs
