#include <gtest/gtest.h>

#include "parhiggs/dimensions.hpp"
#include "parhiggs/errors.hpp"
#include "parhiggs/line_subbundle.hpp"
#include "parhiggs/parabolic.hpp"
#include "parhiggs/sampling.hpp"

using namespace parhiggs;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

WeightVector quarters() { return WeightVector({q(1, 4), q(1, 4), q(1, 4), q(1, 4)}); }

ParabolicRank2Bundle bundle(SplitType split, std::array<ProjectivePoint, kPointCount> flags,
                            const WeightVector& alpha = quarters()) {
  return ParabolicRank2Bundle(split, MarkedDivisor::standard(), flags, alpha);
}

const ProjectivePoint e1 = ProjectivePoint::first_axis();
const ProjectivePoint e2 = ProjectivePoint::second_axis();

}  // namespace

TEST(PointSubset, Labels) {
  PointSubset s = PointSubset::of({0, 3});
  EXPECT_EQ(s.label(), "{1,4}");
  EXPECT_EQ(s.size(), 2);
  EXPECT_EQ(s.complement(), PointSubset::of({1, 2}));
  EXPECT_EQ(PointSubset().label(), "{}");
  EXPECT_THROW(PointSubset::of({4}), InvalidInput);
}

TEST(MarkedDivisor, Product) {
  MarkedDivisor d = MarkedDivisor::standard();
  EXPECT_EQ(d.product().degree(), 4);
  EXPECT_EQ(d.product_derivative(0), GaussianRational(-6));
  EXPECT_EQ(d.product_derivative(3), GaussianRational(6));
  EXPECT_EQ(d.partial_product(PointSubset::of({1})), Polynomial::linear(1));
  EXPECT_EQ(d.index_of(2), std::optional<std::size_t>(2));
  EXPECT_FALSE(d.index_of(5).has_value());
  EXPECT_THROW(MarkedDivisor({0, 1, 1, 3}), InvalidInput);
}

TEST(WeightVector, Range) {
  EXPECT_THROW(WeightVector({q(0), q(1, 4), q(1, 4), q(1, 4)}), InvalidInput);
  EXPECT_THROW(WeightVector({q(1, 2), q(1, 4), q(1, 4), q(1, 4)}), InvalidInput);
  EXPECT_EQ(quarters().sum(), q(1));
}

TEST(ParDegree, LineBundles) {
  EXPECT_EQ(par_degree(ParabolicLineBundle{-1, {q(1, 4), q(1, 4), q(1, 4), q(1, 4)}}), q(0));
  EXPECT_EQ(par_degree(ParabolicLineBundle{-2, {q(3, 4), q(3, 4), q(0), q(0)}}), q(-1, 2));
  EXPECT_THROW(validate(ParabolicLineBundle{0, {q(1), q(0), q(0), q(0)}}), InvalidInput);
  EXPECT_THROW(validate(ParabolicLineBundle{0, {q(0)}}), InvalidInput);
}

TEST(ParDegree, Rank2IsZero) {
  EXPECT_EQ(par_degree(bundle({-1, -3}, {e1, e1, e1, e1})), q(0));
  Sampler rng(3);
  for (int n = 0; n < 50; ++n) {
    WeightVector alpha = rng.weights(20);
    auto b = bundle({-2, -2}, {e1, e2, e1, e2}, alpha);
    EXPECT_EQ(par_degree(b), q(0));
  }
  EXPECT_THROW(bundle({-1, -2}, {e1, e1, e1, e1}), InvalidInput);
}

TEST(DetWeightNormalize, Examples) {
  std::vector<Rational> a{q(1, 4), q(3, 4)};
  auto n = det_weight_normalize(a);
  EXPECT_EQ(n.twist, 1);
  EXPECT_EQ(n.weight, q(0));
  std::vector<Rational> b{q(1, 3), q(1, 3)};
  n = det_weight_normalize(b);
  EXPECT_EQ(n.twist, 0);
  EXPECT_EQ(n.weight, q(2, 3));
  std::vector<Rational> c{q(1, 2), q(5, 6), q(2, 3)};
  n = det_weight_normalize(c);
  EXPECT_EQ(n.twist, 2);
  EXPECT_EQ(n.weight, q(0));
}

TEST(InducedSubWeight, ThroughAndAvoidingFlag) {
  EXPECT_EQ(induced_sub_weight(quarters(), 0, true), q(3, 4));
  EXPECT_EQ(induced_sub_weight(quarters(), 0, false), q(1, 4));
  auto b = bundle({-1, -3}, {e1, e1, e1, e1});
  LineSubbundle first = LineSubbundle::first_summand(b.split());
  for (std::size_t i = 0; i < kPointCount; ++i) EXPECT_EQ(induced_sub_weight(b, first, i), q(3, 4));
  ParabolicLineBundle sub = induced_sub_bundle(b, first);
  EXPECT_EQ(sub.degree, -1);
  EXPECT_EQ(par_degree(sub), q(2));
  ParabolicLineBundle quot = induced_quotient_bundle(b, first);
  EXPECT_EQ(quot.degree, -3);
  EXPECT_EQ(par_degree(sub) + par_degree(quot), q(0));
}

TEST(ParabolicMap, WeightComparison) {
  ParabolicLineBundle high{0, {q(3, 4), q(0), q(0), q(0)}};
  ParabolicLineBundle low{0, {q(1, 4), q(0), q(0), q(0)}};
  std::vector<GaussianRational> nonzero{1, 1, 1, 1};
  std::vector<GaussianRational> vanishing{0, 1, 1, 1};
  EXPECT_FALSE(is_parabolic_map(nonzero, high, low));
  EXPECT_TRUE(is_parabolic_map(vanishing, high, low));
  EXPECT_TRUE(is_parabolic_map(nonzero, low, high));
  EXPECT_TRUE(is_parabolic_map(nonzero, low, low));
  EXPECT_FALSE(is_strongly_parabolic_map(nonzero, low, low));
  EXPECT_TRUE(is_strongly_parabolic_map(std::vector<GaussianRational>{0, 0, 0, 0}, low, low));
}

TEST(ParabolicMap, StrongImpliesParabolic) {
  Sampler rng(29);
  for (int n = 0; n < 500; ++n) {
    ParabolicLineBundle s{0, {}};
    ParabolicLineBundle t{0, {}};
    std::vector<GaussianRational> values;
    for (std::size_t i = 0; i < kPointCount; ++i) {
      s.weights.push_back(q(rng.uniform(0, 3), 4));
      t.weights.push_back(q(rng.uniform(0, 3), 4));
      values.push_back(rng.coin() ? GaussianRational(0) : rng.gaussian(2, 2));
    }
    if (is_strongly_parabolic_map(values, s, t)) {
      EXPECT_TRUE(is_parabolic_map(values, s, t));
    }
  }
}

TEST(ParabolicMap, ResidueForm) {
  MarkedDivisor d = MarkedDivisor::standard();
  ParabolicLineBundle src{0, {q(3, 4), q(3, 4), q(3, 4), q(3, 4)}};
  ParabolicLineBundle tgt{0, {q(1, 4), q(1, 4), q(1, 4), q(1, 4)}};
  EXPECT_FALSE(is_parabolic_map(RationalFunction(Polynomial(GaussianRational(1)), d.product()), d, src, tgt));
  EXPECT_TRUE(is_parabolic_map(RationalFunction(), d, src, tgt));
}

TEST(ModuliDimensions, FourPuncturedSphere) {
  ModuliDimensions m = moduli_dimensions(2, 0, 4);
  EXPECT_EQ(m.dim_P0, 6);
  EXPECT_EQ(m.dim_N, 1);
  EXPECT_EQ(m.dim_SP0, 2);
  EXPECT_EQ(m.sum_dim_L, 4);
  EXPECT_EQ(m.dim_P0 - m.dim_SP0, 4);
  EXPECT_THROW(moduli_dimensions(2, 0, 2), InvalidInput);
}

TEST(ModuliDimensions, Relations) {
  for (int n = 2; n <= 4; ++n) {
    for (int g = 0; g <= 3; ++g) {
      for (int d = 0; d <= 6; ++d) {
        if (2 * g - 2 + d <= 0) continue;
        ModuliDimensions m = moduli_dimensions(n, g, d);
        long long casimir = static_cast<long long>(n) * n - 1;
        EXPECT_EQ(m.dim_P0, casimir * (2 * g - 2 + d));
        EXPECT_EQ(m.dim_P0, m.dim_SP0 + m.sum_dim_L);
        EXPECT_EQ(m.dim_SP0, 2 * m.dim_N);
        EXPECT_EQ(m.sum_dim_L, static_cast<long long>(d) * (n - 1));
        EXPECT_EQ(2 * m.dim_BB_spar, m.dim_SP0);
      }
    }
  }
}

TEST(LineSubbundle, Saturation) {
  SplitType split{-2, -2};
  Polynomial z = Polynomial::z();
  Polynomial zm1 = Polynomial::linear(1);
  LineSubbundle l = LineSubbundle::saturate(RationalFunction(z * zm1), RationalFunction(zm1), split);
  EXPECT_EQ(l.degree(), -3);
  EXPECT_EQ(l.fiber(0), ProjectivePoint::second_axis());
  EXPECT_EQ(l.fiber(1), ProjectivePoint::from_ratio(1));
  LineSubbundle same = LineSubbundle::saturate(RationalFunction(GaussianRational(2) * z), RationalFunction(2), split);
  EXPECT_EQ(l.degree(), same.degree());
  EXPECT_EQ(l.fiber(5), same.fiber(5));
  EXPECT_EQ(LineSubbundle::first_summand({-1, -3}).degree(), -1);
  EXPECT_EQ(LineSubbundle::second_summand({-1, -3}).degree(), -3);
  EXPECT_THROW(LineSubbundle::saturate(RationalFunction(), RationalFunction(), split), InvalidInput);
}

TEST(LineSubbundle, Incidence) {
  auto b = bundle({-2, -2}, {e1, e2, ProjectivePoint::from_ratio(2), e1});
  SplitType split = b.split();
  LineSubbundle l = LineSubbundle::saturate(RationalFunction(GaussianRational(1)), RationalFunction::z(), split);
  EXPECT_TRUE(l.passes_through(b, 0));
  EXPECT_FALSE(l.passes_through(b, 1));
  EXPECT_TRUE(l.passes_through(b, 2));
  EXPECT_FALSE(l.passes_through(b, 3));
  ParabolicLineBundle sub = induced_sub_bundle(b, l);
  EXPECT_EQ(sub.degree, -3);
  EXPECT_EQ(par_degree(sub), q(-3) + q(3, 4) + q(1, 4) + q(3, 4) + q(1, 4));
  EXPECT_EQ(certificate_order(LineSubbundle::first_summand(split), l), std::strong_ordering::less);
}
