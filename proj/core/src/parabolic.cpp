#include "parhiggs/parabolic.hpp"

#include <bit>

#include "parhiggs/errors.hpp"

namespace parhiggs {

PointSubset PointSubset::of(std::initializer_list<std::size_t> zero_based) {
  unsigned mask = 0;
  for (auto i : zero_based) {
    if (i >= kPointCount) throw InvalidInput("point index out of range");
    mask |= 1u << i;
  }
  return PointSubset(mask);
}

int PointSubset::size() const { return std::popcount(mask_); }

std::vector<std::size_t> PointSubset::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kPointCount; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string PointSubset::label() const {
  std::string out = "{";
  for (auto i : indices()) {
    if (out.size() > 1) out += ",";
    out += std::to_string(i + 1);
  }
  return out + "}";
}

MarkedDivisor::MarkedDivisor(std::array<GaussianRational, kPointCount> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < kPointCount; ++i) {
    for (std::size_t j = i + 1; j < kPointCount; ++j) {
      if (points_[i] == points_[j]) throw InvalidInput("marked points must be distinct");
    }
  }
  product_ = Polynomial::from_roots(points_);
  Polynomial dn = product_.derivative();
  for (std::size_t i = 0; i < kPointCount; ++i) product_derivative_[i] = dn(points_[i]);
}

MarkedDivisor MarkedDivisor::standard() { return MarkedDivisor({0, 1, 2, 3}); }

std::optional<std::size_t> MarkedDivisor::index_of(const GaussianRational& p) const {
  for (std::size_t i = 0; i < kPointCount; ++i) {
    if (points_[i] == p) return i;
  }
  return std::nullopt;
}

Polynomial MarkedDivisor::partial_product(PointSubset s) const {
  Polynomial out(GaussianRational(1));
  for (auto i : s.indices()) out *= Polynomial::linear(points_[i]);
  return out;
}

WeightVector::WeightVector(std::array<Rational, kPointCount> alpha) : alpha_(std::move(alpha)) {
  for (const auto& a : alpha_) {
    if (a <= 0 || a * 2 >= 1) throw InvalidInput("weights must lie in (0, 1/2), got " + to_string(a));
  }
}

Rational WeightVector::sum() const {
  Rational s = 0;
  for (const auto& a : alpha_) s += a;
  return s;
}

ProjectivePoint::ProjectivePoint(const GaussianRational& x, const GaussianRational& y) {
  if (x.is_zero() && y.is_zero()) throw InvalidInput("projective point (0, 0)");
  if (x.is_zero()) {
    x_ = GaussianRational(0);
    y_ = GaussianRational(1);
  } else {
    x_ = GaussianRational(1);
    y_ = y / x;
  }
}

std::optional<GaussianRational> ProjectivePoint::ratio() const {
  if (x_.is_zero()) return std::nullopt;
  return y_;
}

ParabolicRank2Bundle::ParabolicRank2Bundle(SplitType split, MarkedDivisor divisor,
                                           std::array<ProjectivePoint, kPointCount> flags, WeightVector alpha)
    : split_(split), divisor_(std::move(divisor)), flags_(std::move(flags)), alpha_(std::move(alpha)) {
  if (split_.a + split_.b != -4) {
    throw InvalidInput("split type must satisfy a + b = -4 for a parabolically trivial determinant");
  }
}

void validate(const ParabolicLineBundle& line) {
  if (line.weights.size() != kPointCount) throw InvalidInput("parabolic line bundle needs one weight per point");
  for (const auto& w : line.weights) {
    if (w < 0 || w >= 1) throw InvalidInput("line bundle weights must lie in [0, 1)");
  }
}

Rational par_degree(const ParabolicLineBundle& line) {
  Rational out = line.degree;
  for (const auto& w : line.weights) out += w;
  return out;
}

Rational par_degree(const ParabolicRank2Bundle& bundle) {
  Rational out = bundle.split().a + bundle.split().b;
  for (std::size_t i = 0; i < kPointCount; ++i) out += bundle.alpha()[i] + (1 - bundle.alpha()[i]);
  return out;
}

WeightNormalization det_weight_normalize(std::span<const Rational> weights) {
  Rational total = 0;
  for (const auto& w : weights) total += w;
  Integer twist = floor(total);
  return {twist, total - Rational(twist)};
}

Rational induced_sub_weight(const WeightVector& alpha, std::size_t i, bool through_flag) {
  return through_flag ? Rational(1 - alpha[i]) : alpha[i];
}

namespace {

template <typename Cmp>
bool map_respects(std::span<const GaussianRational> values, const ParabolicLineBundle& source,
                  const ParabolicLineBundle& target, Cmp needs_vanishing) {
  if (values.size() != source.weights.size() || values.size() != target.weights.size()) {
    throw InvalidInput("map values and weights must cover the same points");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (needs_vanishing(source.weights[i], target.weights[i]) && !values[i].is_zero()) return false;
  }
  return true;
}

std::vector<GaussianRational> residues_at_points(const RationalFunction& f, const MarkedDivisor& divisor) {
  std::vector<GaussianRational> out;
  for (const auto& p : divisor.points()) out.push_back(residue_at(f, p));
  return out;
}

}  // namespace

bool is_parabolic_map(std::span<const GaussianRational> values, const ParabolicLineBundle& source,
                      const ParabolicLineBundle& target) {
  return map_respects(values, source, target, [](const Rational& s, const Rational& t) { return s > t; });
}

bool is_strongly_parabolic_map(std::span<const GaussianRational> values, const ParabolicLineBundle& source,
                               const ParabolicLineBundle& target) {
  return map_respects(values, source, target, [](const Rational& s, const Rational& t) { return s >= t; });
}

bool is_parabolic_map(const RationalFunction& f, const MarkedDivisor& divisor, const ParabolicLineBundle& source,
                      const ParabolicLineBundle& target) {
  return is_parabolic_map(residues_at_points(f, divisor), source, target);
}

bool is_strongly_parabolic_map(const RationalFunction& f, const MarkedDivisor& divisor,
                               const ParabolicLineBundle& source, const ParabolicLineBundle& target) {
  return is_strongly_parabolic_map(residues_at_points(f, divisor), source, target);
}

}  // namespace parhiggs
