#include "parhiggs/line_subbundle.hpp"

#include <algorithm>

#include "parhiggs/errors.hpp"

namespace parhiggs {

LineSubbundle LineSubbundle::saturate(const RationalFunction& x, const RationalFunction& y, SplitType split) {
  if (x.is_zero() && y.is_zero()) throw InvalidInput("cannot saturate the zero vector");
  // Clear denominators, then strip the common polynomial factor.
  Polynomial l = x.denominator() * exact_quotient(y.denominator(), gcd(x.denominator(), y.denominator()));
  Polynomial u = x.numerator() * exact_quotient(l, x.denominator());
  Polynomial v = y.numerator() * exact_quotient(l, y.denominator());
  Polynomial g = gcd(u, v);
  u = exact_quotient(u, g);
  v = exact_quotient(v, g);
  GaussianRational lead = u.is_zero() ? v.leading() : u.leading();
  GaussianRational inv = GaussianRational(1) / lead;
  u *= inv;
  v *= inv;
  int d = INT_MAX;
  if (!u.is_zero()) d = std::min(d, split.a - u.degree());
  if (!v.is_zero()) d = std::min(d, split.b - v.degree());
  return LineSubbundle(d, std::move(u), std::move(v));
}

LineSubbundle LineSubbundle::first_summand(SplitType split) {
  return LineSubbundle(split.a, Polynomial(GaussianRational(1)), Polynomial());
}

LineSubbundle LineSubbundle::second_summand(SplitType split) {
  return LineSubbundle(split.b, Polynomial(), Polynomial(GaussianRational(1)));
}

ProjectivePoint LineSubbundle::fiber(const GaussianRational& p) const { return {u_(p), v_(p)}; }

bool LineSubbundle::passes_through(const ParabolicRank2Bundle& bundle, std::size_t i) const {
  return fiber(bundle.divisor().point(i)) == bundle.flag(i);
}

std::strong_ordering certificate_order(const LineSubbundle& a, const LineSubbundle& b) {
  if (a.degree() != b.degree()) return b.degree() <=> a.degree();
  auto c = lex_compare(a.u(), b.u());
  if (c != std::strong_ordering::equal) return c;
  return lex_compare(a.v(), b.v());
}

Rational induced_sub_weight(const ParabolicRank2Bundle& bundle, const LineSubbundle& line, std::size_t i) {
  return induced_sub_weight(bundle.alpha(), i, line.passes_through(bundle, i));
}

ParabolicLineBundle induced_sub_bundle(const ParabolicRank2Bundle& bundle, const LineSubbundle& line) {
  ParabolicLineBundle out{line.degree(), {}};
  for (std::size_t i = 0; i < kPointCount; ++i) out.weights.push_back(induced_sub_weight(bundle, line, i));
  return out;
}

ParabolicLineBundle induced_quotient_bundle(const ParabolicRank2Bundle& bundle, const LineSubbundle& line) {
  ParabolicLineBundle out{bundle.split().a + bundle.split().b - line.degree(), {}};
  for (std::size_t i = 0; i < kPointCount; ++i) {
    out.weights.push_back(induced_sub_weight(bundle.alpha(), i, !line.passes_through(bundle, i)));
  }
  return out;
}

std::pair<Polynomial, Polynomial> unpack_section(const SectionSpace& space, std::span<const GaussianRational> coeffs) {
  auto nu = static_cast<std::size_t>(space.u_terms());
  auto nv = static_cast<std::size_t>(space.v_terms());
  if (coeffs.size() != nu + nv) throw InvalidInput("section coefficient vector has the wrong length");
  Polynomial u(std::vector<GaussianRational>(coeffs.begin(), coeffs.begin() + static_cast<long>(nu)));
  Polynomial v(std::vector<GaussianRational>(coeffs.begin() + static_cast<long>(nu), coeffs.end()));
  return {u, v};
}

}  // namespace parhiggs
