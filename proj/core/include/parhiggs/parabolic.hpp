#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "parhiggs/polynomial.hpp"
#include "parhiggs/rational_function.hpp"

namespace parhiggs {

inline constexpr std::size_t kPointCount = 4;

// Subset of the marked points, bit k for p_{k+1}.
class PointSubset {
 public:
  constexpr PointSubset() = default;
  constexpr explicit PointSubset(unsigned mask) : mask_(mask & 0xFu) {}
  static PointSubset of(std::initializer_list<std::size_t> zero_based);
  static constexpr PointSubset all() { return PointSubset(0xFu); }

  constexpr unsigned mask() const { return mask_; }
  constexpr bool contains(std::size_t i) const { return (mask_ >> i) & 1u; }
  int size() const;
  constexpr PointSubset complement() const { return PointSubset(~mask_ & 0xFu); }
  std::vector<std::size_t> indices() const;
  // One-based label, e.g. "{1,4}".
  std::string label() const;

  friend constexpr bool operator==(PointSubset a, PointSubset b) { return a.mask_ == b.mask_; }
  friend constexpr auto operator<=>(PointSubset a, PointSubset b) { return a.mask_ <=> b.mask_; }

 private:
  unsigned mask_ = 0;
};

// Four distinct affine points p_1..p_4.
class MarkedDivisor {
 public:
  explicit MarkedDivisor(std::array<GaussianRational, kPointCount> points);
  static MarkedDivisor standard();  // 0, 1, 2, 3

  const GaussianRational& point(std::size_t i) const { return points_[i]; }
  const std::array<GaussianRational, kPointCount>& points() const { return points_; }
  std::vector<GaussianRational> point_list() const { return {points_.begin(), points_.end()}; }
  std::optional<std::size_t> index_of(const GaussianRational& p) const;

  // N(z) = prod (z - p_i) and N'(p_i).
  const Polynomial& product() const { return product_; }
  const GaussianRational& product_derivative(std::size_t i) const { return product_derivative_[i]; }
  Polynomial partial_product(PointSubset s) const;

  friend bool operator==(const MarkedDivisor& a, const MarkedDivisor& b) { return a.points_ == b.points_; }

 private:
  std::array<GaussianRational, kPointCount> points_;
  Polynomial product_;
  std::array<GaussianRational, kPointCount> product_derivative_;
};

class WeightVector {
 public:
  // Each entry must lie in (0, 1/2).
  explicit WeightVector(std::array<Rational, kPointCount> alpha);

  const Rational& operator[](std::size_t i) const { return alpha_[i]; }
  const std::array<Rational, kPointCount>& values() const { return alpha_; }
  Rational sum() const;

  friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.alpha_ == b.alpha_; }

 private:
  std::array<Rational, kPointCount> alpha_;
};

// A point of P^1 of the fiber, normalized to (1, r) or (0, 1).
class ProjectivePoint {
 public:
  ProjectivePoint(const GaussianRational& x, const GaussianRational& y);
  static ProjectivePoint from_ratio(const GaussianRational& r) { return {GaussianRational(1), r}; }
  static ProjectivePoint first_axis() { return {GaussianRational(1), GaussianRational(0)}; }
  static ProjectivePoint second_axis() { return {GaussianRational(0), GaussianRational(1)}; }

  const GaussianRational& x() const { return x_; }
  const GaussianRational& y() const { return y_; }
  // y/x, empty for the second axis.
  std::optional<GaussianRational> ratio() const;

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.x_ == b.x_ && a.y_ == b.y_; }

 private:
  GaussianRational x_;
  GaussianRational y_;
};

struct SplitType {
  int a = 0;
  int b = 0;
  friend bool operator==(const SplitType&, const SplitType&) = default;
};

// O(a) ⊕ O(b) with a + b = -4, a flag line per point carrying weight 1 - α_i and the fiber weight α_i.
class ParabolicRank2Bundle {
 public:
  ParabolicRank2Bundle(SplitType split, MarkedDivisor divisor, std::array<ProjectivePoint, kPointCount> flags,
                       WeightVector alpha);

  const SplitType& split() const { return split_; }
  const MarkedDivisor& divisor() const { return divisor_; }
  const ProjectivePoint& flag(std::size_t i) const { return flags_[i]; }
  const std::array<ProjectivePoint, kPointCount>& flags() const { return flags_; }
  const WeightVector& alpha() const { return alpha_; }

  friend bool operator==(const ParabolicRank2Bundle&, const ParabolicRank2Bundle&) = default;

 private:
  SplitType split_;
  MarkedDivisor divisor_;
  std::array<ProjectivePoint, kPointCount> flags_;
  WeightVector alpha_;
};

struct ParabolicLineBundle {
  int degree = 0;
  std::vector<Rational> weights;  // one per marked point, each in [0, 1)

  friend bool operator==(const ParabolicLineBundle&, const ParabolicLineBundle&) = default;
};

// Throws InvalidInput unless every weight lies in [0, 1).
void validate(const ParabolicLineBundle& line);

Rational par_degree(const ParabolicLineBundle& line);
Rational par_degree(const ParabolicRank2Bundle& bundle);

struct WeightNormalization {
  Integer twist;
  Rational weight;
};

// (floor(sum), sum - floor(sum)) of the weights at one point.
WeightNormalization det_weight_normalize(std::span<const Rational> weights);

// Weight on a sub-line: 1 - α_i through the flag, α_i otherwise.
Rational induced_sub_weight(const WeightVector& alpha, std::size_t i, bool through_flag);

// values[i] is the value at p_i of the map in the trivialization of the twisted Hom line.
bool is_parabolic_map(std::span<const GaussianRational> values, const ParabolicLineBundle& source,
                      const ParabolicLineBundle& target);
bool is_strongly_parabolic_map(std::span<const GaussianRational> values, const ParabolicLineBundle& source,
                               const ParabolicLineBundle& target);

// f is the affine coefficient of a K(D)-valued map; its value at p_i is Res_{p_i} f.
bool is_parabolic_map(const RationalFunction& f, const MarkedDivisor& divisor, const ParabolicLineBundle& source,
                      const ParabolicLineBundle& target);
bool is_strongly_parabolic_map(const RationalFunction& f, const MarkedDivisor& divisor,
                               const ParabolicLineBundle& source, const ParabolicLineBundle& target);

}  // namespace parhiggs
