#include "parhiggs/weight_mass_tables.hpp"

namespace parhiggs {
namespace {

// β = α - s Re(w μ̄), ν = a α + μ - b μ̄ for (w, s, a, b) = the four factor arguments.
TransformedPair apply(const WeightMassPair& in, const GaussianRational& weight_factor, const Rational& weight_scale,
                      const GaussianRational& alpha_factor, const GaussianRational& conj_factor) {
  TransformedPair out;
  for (std::size_t i = 0; i < kPointCount; ++i) {
    const GaussianRational mu_bar = in.mu[i].conj();
    Rational beta = in.alpha[i] - weight_scale * (weight_factor * mu_bar).re();
    out.carry[i] = floor(beta);
    out.pair.alpha[i] = beta - Rational(out.carry[i]);
    out.pair.mu[i] = alpha_factor * GaussianRational(in.alpha[i]) + in.mu[i] - conj_factor * mu_bar;
  }
  return out;
}

}  // namespace

TransformedPair nah_transform(const WeightMassPair& in) {
  return apply(in, GaussianRational(1), Rational(2), GaussianRational(1), GaussianRational(1));
}

TransformedPair lambda_transform(const WeightMassPair& in, const GaussianRational& lambda) {
  return apply(in, lambda, Rational(2), lambda, lambda);
}

TransformedPair cl_family_transform(const WeightMassPair& in, const GaussianRational& hbar, const Rational& r) {
  GaussianRational h_r2 = hbar * GaussianRational(r * r);
  return apply(in, h_r2, Rational(1), hbar, h_r2);
}

TransformedPair cl_transform(const WeightMassPair& in, const GaussianRational& hbar) {
  return apply(in, GaussianRational(0), Rational(0), hbar, GaussianRational(0));
}

}  // namespace parhiggs
